#pragma once

// Static registry of anchor strings: the formula text each claim checks, kept
// literal so report rows can be found by grep.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ekr {

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 70> kAnchors{{
    {"f_claim", R"(\binom{2i+r}{i}\frac{r+1}{r+i+1})"},
    {"easy.g_def", R"(f(t,s,\frac1{t+1})=:g(s,t))"},
    {"easy.h_def", R"(f(2t,s',\frac1{t+1}):=h(s',t))"},
    {"easy.ratio", R"(\frac{(t+1)^2(s+1)(s+t+2)}{t(2s+t+2)(2s+t+1)}>1)"},
    {"easy.poly", R"(s^2(t-1)^2+s(t^3+t^2+t+3)+(t^2+3t+2)>0)"},
    {"easy.second_term", R"(\frac 1p+4p>4+\frac 1s)"},
    {"easy.eps", R"(0.99(1+\epsilon)^2< 0.992)"},
    {"easy.g3h1", R"(g(3,14)h(1,14)<0.87)"},
    {"easy.g2", R"(g(2,14)\cdot 1 < 0.96)"},
    {"easy.f13f15", R"(f(13,2,\frac1{15})f(15,1,\frac1{15})<0.68)"},
    {"easy.f14sq", R"(f(14,2,\frac1{15})^2<0.46)"},
    {"basic.weight", R"(q^{-t}\leq\(1+\frac{1}{t}\)^t< e)"},
    {"basic.uniform", R"(\frac n{n-k}\leq\frac {t+1}t)"},
    {"global.e8", R"(\frac{e^{2+1/t}}{t+1} <_t 1)"},
    {"global.e15", R"(\frac{e^{2+1/t}}{t+1}<_t \frac12)"},
    {"global.pow14", R"(\left(1+\frac1t\right)^{2t+1}\frac1{t+1}<\frac12)"},
    {"global.hA_empty", R"(2\alpha^{2t+1}<_t p^{2t})"},
    {"global.binom_half", R"(\binom n{k-t}\binom n{k-t-1} \binom{n-t}{k-t}^{-2}<_t \frac12)"},
    {"case1.g", R"(=: p^{2t} \(g(t)+4\epsilon\))"},
    {"case1.g7", R"(g(7)<0.999)"},
    {"case1.sweep", R"(g(t)<_t 1)"},
    {"case1.derivative", R"(\frac{d}{dt}g(t)<0)"},
    {"case1.uniform", R"(\left(\frac n{n-k}\right)^t\frac n{n-k}\bfrac kn^2)"},
    {"case2.g13", R"(g(13)<1)"},
    {"case2.g2", R"(e=:g_2(t))"},
    {"case2.helper", R"((1-\alpha)(tq-(t-1)q^3))"},
    {"case2.first_term", R"(t(1-2p)-(t-1)(1-p)^2(1-2p)=(1-\alpha)(tq-(t-1)q^3))"},
    {"case2.g19", R"(g(19)+\frac{2e}{19+1}<1)"},
    {"case2.g20", R"(g_2(t)+\frac{2e}{t+1})"},
    {"case2.n0", R"(\lfloor n_0(14)\rfloor =1023)"},
    {"case2.finite", R"(n_0(t):=\frac{2t}{1-g(t)}(1+\frac1t)^t)"},
    {"case3.h", R"(h(13)<0.96)"},
    {"case3.hdef", R"(=: p^{2t}\(h(t)+e\epsilon\))"},
    {"case3.helper", R"((1-\alpha)(1-q^2))"},
    {"case3.margin", R"(0.97 p^{2t})"},
    {"ucase3.exact", R"(\left(1+\frac1t\right)^t\frac{1+t}{t^2})"},
    {"ucase3.eform", R"(e \left(\frac{e)"},
    {"ext.f", R"(\frac{t-2}{t}e^{-\frac{t+2+i}{t-1}}t^i >_t 1)"},
    {"ext.f81", R"(f(8,1)>1.2)"},
    {"ext.chain", R"({t \choose s}p^{s-1}q^{t+s+2}(q-p)>_t 1)"},
    {"ext.q2p", R"(q^2/p>1)"},
    {"keasy.h_def", R"(\binom{u+2s}{s} \bfrac{1}{t+1}^s =: h(t,u,s))"},
    {"keasy.quad", R"(s^2(t-3) + s(tu + 2t -3u -4) + (tu - u^2 + t -2u -1) > 0)"},
    {"keasy.quad2", R"(3tu+9t-u^2-8u-21>0)"},
    {"keasy.h14_14_2", R"(h(14,14,2)=0.68)"},
    {"keasy.h14_14_3", R"(h(14,14,3)<0.34)"},
    {"keasy.h14_28_2", R"(h(14,28,2)<2.21)"},
    {"keasy.h14_16_1", R"(h(14,16,1)=1.2)"},
    {"keasy.b2_s2", R"(b_2 < 1.14)"},
    {"keasy.product_s2", R"(0.038 + 0.195\cdot 1.14 + 0.68\cdot 0.224 + 0.47 < 0.89)"},
    {"keasy.product_s3", R"(0.038+0.195\cdot 2.21+0.34\cdot 0.528+0.12<0.77)"},
    {"keasy.a1", R"(\frac e{14}<0.195)"},
    {"keasy.b1", R"(\frac{e^2}{14}<0.528)"},
    {"keasy.b1_s2", R"(\frac{e^{\frac{16}{14}}}{14})"},
    {"keasy.a1b1", R"(\frac{e^2}{14^2}<0.038)"},
    {"keasy.a2b2_s2", R"(a_2b_2 <0.47)"},
    {"keasy.a2b2_s3", R"(a_2b_2 < 0.12)"},
    {"keasy.lemma", R"((a_1 + a_2)(b_1 + b_2) < 0.89)"},
    {"stab.g", R"((t+2)p(1-p)+p^2)"},
    {"stab.f1f0", R"(\frac{k-t}{(n-t)(n-t-1)}\big((t+2)(n-k)-(k-t-1)\big))"},
    {"stab.poly", R"(n^2-(t+2)n+t(t+1)>0)"},
    {"decomp", R"(f=a_0+f_a$, $a=a_0+a_f$, and $a_1=a_f+f_a)"},
    {"walk.hit", R"(\binom{x_0+y_0}{y_0-c})"},
    {"measure.frankl", R"(\sum_{j\geq t+i}\binom{t+2i}{j}p^jq^{t+2i-j})"},
    {"measure.event", R"(tp^tq)"},
    {"measure.G", R"(p^t-p^tq^{n-t}+tp^{n-1}q)"},
    {"search.uniform", R"(|\mathcal A||\mathcal B|\leq\binom{n-t}{k-t}^2)"},
    {"search.weight", R"(\mu_p(\mathcal A)\mu_p(\mathcal B)\leq p^{2t})"},
    {"search.seq", R"(|\mathcal A||\mathcal B|\leq m^{2(n-t)})"},
    {"graph.kneser", R"(K(n,k)\times K(n,k))"},
}};

inline std::string anchor(std::string_view key)
{
    for (const auto& [k, text] : kAnchors)
        if (k == key) return std::string(text);
    throw std::out_of_range("no anchor registered for '" + std::string(key) + "'");
}

} // namespace ekr
