#pragma once

// Scalar bound functions from the weighted and uniform proofs, and the suites
// that check every numeric constant attached to them.

#include "ekr/measure.hpp"
#include "ekr/parallel.hpp"
#include "ekr/report.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace ekr::bounds {

using nlohmann::json;

inline RationalInterval E(int terms) { return e_enclosure(terms); }
inline RationalInterval R(const Rational& x) { return RationalInterval(x); }
inline Rational inv(long t) { return rat(1, t); }

// ---------------------------------------------------------------------------
// Easy cases (s >= 2)

inline Rational f_claim(int r, int i, const Rational& p)
{
    if (r < 1 || i < 0) throw std::invalid_argument("f(r,i,p) needs r >= 1 and i >= 0");
    if (p <= 0 || p * 2 >= 1) throw std::invalid_argument("f(r,i,p) needs 0 < p < 1/2");
    const Rational q = 1 - p;
    return p / ipow(q, r + 1) + Rational(binom(2 * i + r, i)) * rat(r + 1, r + i + 1) * (1 - p / q) * ipow(p * q, i);
}

inline Rational g_easy(int s, int t) { return f_claim(t, s, inv(t + 1)); }
inline Rational h_easy(int s, int t) { return f_claim(2 * t, s, inv(t + 1)); }

/// Numerator of (ratio of consecutive second terms of g) - 1, cleared of denominators.
inline BigInt easy_ratio_numerator(long s, long t)
{
    return BigInt((t + 1) * (t + 1)) * (s + 1) * (s + t + 2) - BigInt(t) * (2 * s + t + 2) * (2 * s + t + 1);
}

inline BigInt easy_poly(long s, long t)
{
    return BigInt(s * s) * (t - 1) * (t - 1) + BigInt(s) * (t * t * t + t * t + t + 3) + (t * t + 3 * t + 2);
}

// ---------------------------------------------------------------------------
// The (s,s') = (1,0) case, weighted

inline RationalInterval g_case1(int t, int terms)
{
    const auto e = E(terms);
    const auto a = e * R(rat(1, long(t) * (t + 1))) + R(inv(t + 1)) + R(rat(long(t) * t, long(t + 1) * (t + 1)));
    const auto b = e * R(rat(t + 1, long(t) * t * t)) + R(1);
    return a * b;
}

inline Rational g_case2(int t)
{
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const Rational c = ipow(1 + inv(t), t);
    return (c + rat(long(t) * (t - 1) * (3 * t + 1), long(t + 1) * (t + 1) * (t + 1))) * c / t;
}

inline RationalInterval g2_case2(int t, int terms)
{
    const auto e = E(terms);
    return (e * R(inv(t)) + R(rat(long(t - 1) * (3 * t + 1), long(t + 1) * (t + 1) * (t + 1)))) * e;
}

inline RationalInterval h_case3(int t, int terms)
{
    const auto e = E(terms);
    return e * e * R(rat(t + 1, long(t) * t)) + e * R(rat(long(t - 1) * (2 * t + 1), long(t) * (t + 1) * (t + 1)));
}

/// (1-α)(tq-(t-1)q^3)
inline Rational case2_helper(int t, const Rational& p)
{
    const Rational q = 1 - p;
    return (1 - p / q) * (t * q - (t - 1) * ipow(q, 3));
}

/// (1-α)(1-q^2)
inline Rational case3_helper(const Rational& p)
{
    const Rational q = 1 - p;
    return (1 - p / q) * (1 - q * q);
}

// ---------------------------------------------------------------------------
// Global prefactors

inline RationalInterval e_prefactor(int t, int terms)
{
    return exp_enclosure(2 + inv(t), terms) * R(inv(t + 1));
}

inline Rational pow_prefactor(int t) { return ipow(1 + inv(t), 2 * t + 1) / (t + 1); }

/// 2α^(2t+1) / p^(2t) at p = 1/(t+1)
inline Rational empty_hat_ratio(int t)
{
    const Rational p = inv(t + 1), q = 1 - p;
    return 2 * ipow(p / q, 2 * t + 1) / ipow(p, 2 * t);
}

inline Rational binom_half_ratio(long n, long k, long t)
{
    return rat(binom(n, k - t) * binom(n, k - t - 1), binom(n - t, k - t) * binom(n - t, k - t));
}

// ---------------------------------------------------------------------------
// Extremal cases

inline RationalInterval extremal_f(int t, int i, int terms)
{
    if (t < 2) throw std::invalid_argument("f(t,i) needs t >= 2");
    auto ex = exp_enclosure(-rat(t + 2 + i, t - 1), terms);
    return R(rat(t - 2, t)) * ex * R(ipow(Rational(t), i));
}

inline Rational ratio_chain(int t, int s, const Rational& p)
{
    const Rational q = 1 - p;
    return Rational(binom(t, s)) * ipow(p, s - 1) * ipow(q, t + s + 2) * (q - p);
}

// ---------------------------------------------------------------------------
// Uniform easy cases

struct KEasyBounds {
    Rational a1, a2, b1, b2;
};

inline KEasyBounds k_easycase_bounds(long n, long k, long t, long u, long v, long s, long sp)
{
    std::vector<std::string> bad;
    if (t < 1) bad.push_back("t >= 1");
    if (u < 0 || v < 0 || s < 0 || sp < 0) bad.push_back("u, v, s, s' >= 0");
    if (u + v != 2 * t) bad.push_back("u + v = 2t");
    if (u + 2 * s != v + 2 * sp) bad.push_back("s - s' = (v-u)/2");
    if (k < u + s || k < v + sp) bad.push_back("k >= u+s and k >= v+s'");
    if (n < k + v) bad.push_back("n >= k + v");
    if (!bad.empty()) {
        std::string msg = "inconsistent parameters:";
        for (auto& b : bad) msg += " [" + b + "]";
        throw std::invalid_argument(msg);
    }
    auto f = [&](long w) { return rat(binom(n, k - w - 1), binom(n - w, k - w)); };
    auto g = [&](long w, long x) { return rat(binom(w + 2 * x, x) * binom(n - w - 2 * x, k - w - x), binom(n - w, k - w)); };
    return {f(u), g(u, s), f(v), g(v, sp)};
}

inline Rational h_k(long t, long u, long s) { return Rational(binom(u + 2 * s, s)) * ipow(inv(t + 1), s); }

inline BigInt keasy_quadratic(long t, long u, long s)
{
    return BigInt(s * s) * (t - 3) + BigInt(s) * (t * u + 2 * t - 3 * u - 4) + (t * u - u * u + t - 2 * u - 1);
}

// ---------------------------------------------------------------------------
// Uniform (s,s') = (1,0) case

/// Right-hand side of the finite-check inequality divided by C(n-t,k-t)^2.
inline Rational case2_cell_ratio(long n, long k, long t)
{
    BigInt brace = binom(n, k - t) + t * (binom(n - t - 1, k - t) - binom(n - t - 1, k - t - 1)) -
                   (t - 1) * (binom(n - t - 3, k - t) - binom(n - t - 3, k - t - 1));
    BigInt d = binom(n - t, k - t);
    return rat(brace * binom(n, k - t - 1), d * d);
}

inline Rational n0(int t) { return 2 * Rational(t) / (1 - g_case2(t)) * ipow(1 + inv(t), t); }

inline Rational ucase1_expression(long n, long k, long t)
{
    const Rational r = rat(n, n - k), x = rat(k, n);
    const Rational rt = ipow(r, t);
    return (rt * r * x * x + x + t * rat(k * (n - k), n * n)) * (rt * ipow(r, 3) * x * x + 1);
}

inline Rational ucase3_exact(int t)
{
    const Rational c = 1 + inv(t);
    return ipow(c, t - 1) * (ipow(c, t) * rat(1 + t, long(t) * t) + rat(3 * t + 1, long(t + 1) * (t + 1)));
}

inline RationalInterval ucase3_eform(int t, int terms)
{
    const auto e = E(terms);
    return e * (e * R(rat(t + 1, long(t) * t)) + R(rat(3 * t + 1, long(t + 1) * (t + 1))));
}

// ---------------------------------------------------------------------------
// Stability

inline Rational stability_ratio(int t, const Rational& p) { return (t + 2) * p * (1 - p) + p * p; }

inline Rational uniform_stability_ratio(long n, long k, long t)
{
    BigInt f1 = (t + 2) * binom(n - t - 2, k - t - 1) + binom(n - t - 2, k - t - 2);
    return rat(f1, binom(n - t, k - t));
}

inline Rational uniform_stability_closed(long n, long k, long t)
{
    return rat(k - t, (n - t) * (n - t - 1)) * ((t + 2) * (n - k) + (k - t - 1));
}

/// Variant with -(k-t-1) in place of +(k-t-1); it undercounts the members of F_1 containing [t+2].
inline Rational uniform_stability_displayed(long n, long k, long t)
{
    return rat(k - t, (n - t) * (n - t - 1)) * ((t + 2) * (n - k) - (k - t - 1));
}

inline Rational stability_poly(long n, long t, const Rational& p)
{
    return ((t + 2) - p * (t + 1)) * n * n - (t + 1) * (t + 2) * n + t * (t + 1) * (t + 1);
}

// ---------------------------------------------------------------------------
// Decomposition around a reference family

struct DecompositionStats {
    Rational f, a, a0, a1, af, fa, b, b0, b1, bf, fb;
    Rational xi_a, xi_b;
    bool identities_hold = false;
    bool amgm_holds = false;         // a0 b0 <= (1 - ξ/2)^2 f^2
    bool geometric_mean_below = false; // ab < f^2
};

/// Weight mode when p is given, counting mode otherwise.
inline DecompositionStats decomposition_check(const Family& a, const Family& b, const Family& ref,
                                              std::optional<Rational> p = std::nullopt)
{
    require_same_ground(a, ref);
    require_same_ground(b, ref);
    auto size = [&](const std::vector<Mask>& ms) {
        if (!p) return Rational(static_cast<long>(ms.size()));
        return measure::mu(Family(ref.ground(), ms), measure::WeightParams(ref.ground(), *p));
    };
    auto split = [&](const Family& x, Rational& whole, Rational& common, Rational& sym, Rational& only_x,
                     Rational& only_ref) {
        std::vector<Mask> c, ox, oref, sd;
        std::set_intersection(x.masks().begin(), x.masks().end(), ref.masks().begin(), ref.masks().end(),
                              std::back_inserter(c));
        std::set_difference(x.masks().begin(), x.masks().end(), ref.masks().begin(), ref.masks().end(),
                            std::back_inserter(ox));
        std::set_difference(ref.masks().begin(), ref.masks().end(), x.masks().begin(), x.masks().end(),
                            std::back_inserter(oref));
        std::set_symmetric_difference(x.masks().begin(), x.masks().end(), ref.masks().begin(), ref.masks().end(),
                                      std::back_inserter(sd));
        whole = size(x.masks());
        common = size(c);
        sym = size(sd);
        only_x = size(ox);
        only_ref = size(oref);
    };
    DecompositionStats d;
    d.f = size(ref.masks());
    split(a, d.a, d.a0, d.a1, d.af, d.fa);
    split(b, d.b, d.b0, d.b1, d.bf, d.fb);
    if (d.f != 0) {
        d.xi_a = d.fa / d.f;
        d.xi_b = d.fb / d.f;
    }
    d.identities_hold = d.f == d.a0 + d.fa && d.a == d.a0 + d.af && d.a1 == d.af + d.fa && d.f == d.b0 + d.fb &&
                        d.b == d.b0 + d.bf && d.b1 == d.bf + d.fb;
    const Rational half = (d.xi_a + d.xi_b) / 2;
    d.amgm_holds = d.a0 * d.b0 <= (1 - half) * (1 - half) * d.f * d.f;
    d.geometric_mean_below = d.a * d.b < d.f * d.f;
    return d;
}

// ---------------------------------------------------------------------------
// Report plumbing

/// Collapses grid points into one report: first refutation wins, then inconclusive.
inline VerificationReport fold(std::string id, std::string_view key, const std::vector<VerificationReport>& parts,
                               std::string note = {})
{
    if (parts.empty()) return make_report(std::move(id), key, Status::skipped, {}, {}, std::nullopt, "empty grid");
    const VerificationReport* pick = &parts.back();
    Status st = Status::verified;
    for (const auto& p : parts) {
        if (p.status == Status::refuted) {
            pick = &p;
            st = Status::refuted;
            break;
        }
        if (p.status == Status::inconclusive && st == Status::verified) {
            pick = &p;
            st = Status::inconclusive;
        }
    }
    std::string n = std::to_string(parts.size()) + " points";
    if (!note.empty()) n += "; " + note;
    auto r = make_report(std::move(id), key, st, pick->lhs, pick->rhs,
                         st == Status::verified ? std::nullopt : pick->witness, std::move(n));
    return r;
}

inline json tj(int t) { return json{{"t", t}}; }

inline Enclosed diff(Enclosed a, Enclosed b)
{
    return [a = std::move(a), b = std::move(b)](int n) { return a(n) - b(n); };
}

inline Enclosed point(Rational x)
{
    return [x = std::move(x)](int) { return RationalInterval(x); };
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<VerificationReport> easy_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    const Rational p15 = rat(1, 15);
    out.push_back(timed([] { return check_less("easy.g3h1", "easy.g3h1", g_easy(3, 14) * h_easy(1, 14), rat(87, 100)); }));
    out.push_back(timed([] { return check_less("easy.g2", "easy.g2", g_easy(2, 14), rat(96, 100)); }));
    out.push_back(timed([&] {
        return check_less("easy.f13f15", "easy.f13f15", f_claim(13, 2, p15) * f_claim(15, 1, p15), rat(68, 100));
    }));
    out.push_back(timed([&] {
        return check_less("easy.f14sq", "easy.f14sq", ipow(f_claim(14, 2, p15), 2), rat(46, 100));
    }));
    out.push_back(timed([] {
        return check_less("easy.eps", "easy.eps", rat(99, 100) * ipow(rat(1001, 1000), 2), rat(992, 1000));
    }));
    out.push_back(timed([] {
        Rational worst = std::max({Rational(rat(87, 100)), Rational(rat(96, 100)), Rational(rat(68, 100)),
                                   Rational(rat(46, 100))});
        return check_less("easy.core_below_0.99", "easy.eps", worst, rat(99, 100));
    }));

    // f(v,0,p) tends to 1 from above as p -> 0, so the s'=0 branch is bounded with h(0,t) instead of 1.
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int v = 1; v <= 28; ++v)
            for (int j = 15; j <= 200; j += 5)
                parts.push_back(check_greater("", "easy.g2", f_claim(v, 0, rat(1, j)), 1, json{{"v", v}, {"p", to_string(rat(1, j))}}));
        return fold("easy.f_v0_above_one", "easy.g2", parts, "f(v,0,p) > 1 for p > 0; the factor 1 is a limit, not a bound");
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t)
            parts.push_back(check_less("", "easy.g2", g_easy(2, t) * h_easy(0, t), rat(96, 100), tj(t)));
        return fold("easy.g2_with_h0", "easy.g2", parts, "g(2,t)h(0,t) with h(0,t) the supremum of f(v,0,p)");
    }));

    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t <= t_max; ++t)
            for (int s = 0; s <= 12; ++s) {
                json w{{"t", t}, {"s", s}};
                if (easy_poly(s, t) != easy_ratio_numerator(s, t))
                    parts.push_back(make_report("", "easy.poly", Status::refuted, Rational(easy_poly(s, t)),
                                                Rational(easy_ratio_numerator(s, t)), w, "rearrangement mismatch"));
                else
                    parts.push_back(check_greater("", "easy.poly", Rational(easy_poly(s, t)), 0, w));
            }
        return fold("easy.poly", "easy.poly", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 2; t <= std::min(t_max, 60); ++t)
            for (int s = 0; s <= 10; ++s)
                parts.push_back(check_greater("", "easy.g_def", g_easy(s, t), g_easy(s + 1, t), json{{"t", t}, {"s", s}}));
        return fold("easy.g_decreasing", "easy.g_def", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 2; t <= std::min(t_max, 60); ++t)
            for (int s = 1; s <= 10; ++s)
                parts.push_back(check_greater("", "easy.h_def", h_easy(s, t), h_easy(s + 1, t), json{{"t", t}, {"s'", s}}));
        return fold("easy.h_decreasing", "easy.h_def", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= std::min(t_max, 40); ++t)
            for (int s = 0; s <= 6; ++s)
                for (int r = 1; r < 2 * t; ++r)
                    parts.push_back(check_less("", "f_claim", f_claim(r, s, inv(t + 1)), f_claim(r + 1, s, inv(t + 1)),
                                               json{{"t", t}, {"s", s}, {"r", r}}));
        return fold("easy.f_increasing_in_r", "f_claim", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t)
            for (int s = 1; s <= 10; ++s) {
                const Rational p = inv(t + 1);
                parts.push_back(check_greater("", "easy.second_term", 1 / p + 4 * p, 4 + inv(s), json{{"t", t}, {"s", s}}));
            }
        return fold("easy.second_term", "easy.second_term", parts);
    }));
    out.push_back(timed([&] {
        // second term of f(t,s,p) on the grid p = j/1500 up to 1/15
        std::vector<VerificationReport> parts;
        for (int t : {14, 20, 40})
            for (int s = 1; s <= 6; ++s)
                for (int j = 1; j < 100; ++j) {
                    auto second = [&](const Rational& p) { return f_claim(t, s, p) - p / ipow(1 - p, t + 1); };
                    parts.push_back(check_less("", "easy.second_term", second(rat(j, 1500)), second(rat(j + 1, 1500)),
                                               json{{"t", t}, {"s", s}, {"j", j}}));
                }
        return fold("easy.second_term_increasing", "easy.second_term", parts);
    }));
    return out;
}

inline std::vector<VerificationReport> case1_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    auto g = [](int t) -> Enclosed { return [t](int n) { return g_case1(t, n); }; };
    out.push_back(timed([&] { return check_less("case1.g7", "case1.g7", g(7), rat(999, 1000), tj(7)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 7; t <= t_max; ++t) parts.push_back(check_less("", "case1.sweep", g(t), 1, tj(t)));
        return fold("case1.sweep", "case1.sweep", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 2; t <= 13; ++t) parts.push_back(check_greater("", "case1.derivative", diff(g(t), g(t + 1)), 0, tj(t)));
        return fold("case1.decreasing_to_14", "case1.derivative", parts, "g(t) > g(t+1) for t <= 13");
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t < t_max; ++t) parts.push_back(check_less("", "case1.derivative", diff(g(t), g(t + 1)), 0, tj(t)));
        return fold("case1.increasing_from_14", "case1.derivative", parts, "g(t) < g(t+1) for t >= 14");
    }));
    return out;
}

inline std::vector<VerificationReport> case2_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    auto g2 = [](int t) -> Enclosed { return [t](int n) { return g2_case2(t, n); }; };
    out.push_back(timed([] { return check_less("case2.g13", "case2.g13", g_case2(13), 1, tj(13)); }));
    out.push_back(timed([&] { return check_less("case2.g2_14", "case2.g2", g2(14), 1, tj(14)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t < t_max; ++t) parts.push_back(check_greater("", "case2.g2", diff(g2(t), g2(t + 1)), 0, tj(t)));
        return fold("case2.g2_decreasing", "case2.g2", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t)
            parts.push_back(check_greater("", "case2.g2", diff(g2(t), point(g_case2(t))), 0, tj(t)));
        return fold("case2.g_below_g2", "case2.g2", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t <= t_max; ++t)
            parts.push_back(check_equal("", "case2.helper", case2_helper(t, inv(t + 1)),
                                        rat(long(t) * (t - 1) * (3 * t + 1), long(t + 1) * (t + 1) * (t + 1)), tj(t)));
        return fold("case2.helper_at_threshold", "case2.helper", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 5; t <= std::min(t_max, 40); ++t)
            for (int j = 0; j < 100; ++j) {
                const long den = 100L * (t + 1);
                parts.push_back(check_less("", "case2.helper", case2_helper(t, rat(j, den)), case2_helper(t, rat(j + 1, den)),
                                           json{{"t", t}, {"p", to_string(rat(j, den))}}));
            }
        return fold("case2.helper_increasing", "case2.helper", parts, "t >= 5; for t <= 4 the helper is not monotone on [0, 1/(t+1)]");
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t : {14L, 20L, 40L})
            for (long k = t; k <= 3 * t; k += 3)
                for (long n = (t + 1) * k; n <= (t + 1) * k + 200; n += 25) {
                    const Rational p = rat(k, n);
                    const Rational first = t * (1 - 2 * p) - (t - 1) * (1 - p) * (1 - p) * (1 - 2 * p);
                    parts.push_back(check_equal("", "case2.first_term", first, case2_helper(t, p),
                                                json{{"t", t}, {"k", k}, {"n", n}}));
                }
        return fold("case2.first_term_identity", "case2.first_term", parts);
    }));
    out.push_back(timed([] {
        Enclosed lhs = [](int n) { return R(g_case2(19)) + E(n) * R(rat(2, 20)); };
        return check_less("case2.g19", "case2.g19", lhs, 1, tj(19));
    }));
    out.push_back(timed([&] {
        auto rhs = [](int t) -> Enclosed { return [t](int n) { return g2_case2(t, n) + E(n) * R(rat(2, t + 1)); }; };
        std::vector<VerificationReport> parts;
        parts.push_back(check_less("", "case2.g20", rhs(20), 1, tj(20)));
        for (int t = 1; t < t_max; ++t) parts.push_back(check_greater("", "case2.g20", diff(rhs(t), rhs(t + 1)), 0, tj(t)));
        return fold("case2.g20", "case2.g20", parts, "below 1 at t=20 and decreasing");
    }));
    out.push_back(timed([] {
        const BigInt fl = floor(n0(14));
        return check_equal("case2.n0_14", "case2.n0", Rational(fl), 1023, json{{"t", 14}, {"n0", to_string(n0(14))}});
    }));
    return out;
}

inline std::vector<VerificationReport> case3_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    auto h = [](int t) -> Enclosed { return [t](int n) { return h_case3(t, n); }; };
    out.push_back(timed([&] { return check_less("case3.h13", "case3.h", h(13), rat(96, 100), tj(13)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 13; t < t_max; ++t) parts.push_back(check_greater("", "case3.hdef", diff(h(t), h(t + 1)), 0, tj(t)));
        return fold("case3.h_decreasing", "case3.hdef", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int j = 0; j < 274; ++j)
            parts.push_back(check_less("", "case3.helper", case3_helper(rat(j, 1000)), case3_helper(rat(j + 1, 1000)),
                                       json{{"p", to_string(rat(j, 1000))}}));
        return fold("case3.helper_increasing", "case3.helper", parts, "p grid step 1/1000 up to 0.274");
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t <= t_max; ++t)
            parts.push_back(check_equal("", "case3.helper", case3_helper(inv(t + 1)),
                                        rat(long(t - 1) * (2 * t + 1), long(t) * (t + 1) * (t + 1)), tj(t)));
        return fold("case3.helper_at_threshold", "case3.helper", parts);
    }));
    out.push_back(timed([] {
        Enclosed lhs = [](int n) { return R(rat(96, 100)) + E(n) * R(rat(1, 1000)); };
        return check_less("case3.margin", "case3.margin", lhs, rat(97, 100));
    }));
    return out;
}

inline std::vector<VerificationReport> global_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    auto pre = [](int t) -> Enclosed { return [t](int n) { return e_prefactor(t, n); }; };
    out.push_back(timed([&] { return check_less("global.e8_at_8", "global.e8", pre(8), 1, tj(8)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 8; t <= t_max; ++t) parts.push_back(check_less("", "global.e8", pre(t), 1, tj(t)));
        return fold("global.e8", "global.e8", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 15; t <= t_max; ++t) parts.push_back(check_less("", "global.e15", pre(t), rat(1, 2), tj(t)));
        return fold("global.e15", "global.e15", parts);
    }));
    out.push_back(timed([] { return check_less("global.pow14", "global.pow14", pow_prefactor(14), rat(1, 2), tj(14)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t) parts.push_back(check_less("", "global.pow14", pow_prefactor(t), rat(1, 2), tj(t)));
        return fold("global.pow_sweep", "global.pow14", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t) parts.push_back(check_less("", "global.hA_empty", empty_hat_ratio(t), 1, tj(t)));
        return fold("global.hA_empty", "global.hA_empty", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 14; t <= std::min(t_max, 30); ++t)
            for (long k = t; k <= 3 * t; ++k)
                for (long n : {(t + 1) * k, (t + 1) * k + 1, (t + 2) * k, 2 * (t + 1) * k})
                    parts.push_back(check_less("", "global.binom_half", binom_half_ratio(n, k, t), rat(1, 2),
                                               json{{"t", t}, {"k", k}, {"n", n}}));
        return fold("global.binom_half", "global.binom_half", parts);
    }));
    return out;
}

inline std::vector<VerificationReport> basic_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t) {
            for (int j = 1; j <= 4; ++j) {
                // p = 1/(t+1), and a few smaller values
                const Rational p = rat(1, long(j) * (t + 1)), q = 1 - p;
                json w{{"t", t}, {"p", to_string(p)}};
                bool ok = q >= rat(t, t + 1) && p / q <= inv(t) && p * q <= rat(t, long(t + 1) * (t + 1)) &&
                          ipow(q, -t) <= ipow(1 + inv(t), t);
                parts.push_back(make_report("", "basic.weight", ok ? Status::verified : Status::refuted, p, {}, w));
            }
            const Rational c = ipow(1 + inv(t), t);
            parts.push_back(check_greater("", "basic.weight", diff([](int n) { return E(n); }, point(c)), 0, tj(t)));
        }
        return fold("basic.weight", "basic.weight", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 14; t <= t_max; ++t)
            for (long k : {t, t + 1, 2 * t, 5 * t})
                for (long n : {(t + 1) * k, (t + 1) * k + 7, 3 * (t + 1) * k}) {
                    const Rational x = rat(k, n);
                    json w{{"t", t}, {"k", k}, {"n", n}};
                    bool ok = x <= inv(t + 1) && rat(n - k, n) >= rat(t, t + 1) && rat(n, n - k) <= rat(t + 1, t) &&
                              ipow(rat(n, n - k), t) <= ipow(1 + inv(t), t) && rat(k, n - k) <= inv(t) &&
                              rat(k * (n - k), n * n) <= rat(t, (t + 1) * (t + 1));
                    parts.push_back(make_report("", "basic.uniform", ok ? Status::verified : Status::refuted, x, {}, w));
                }
        return fold("basic.uniform", "basic.uniform", parts);
    }));
    return out;
}

inline std::vector<VerificationReport> extremal_suite(int t_max = 100, int i_max_grid = 10)
{
    std::vector<VerificationReport> out;
    auto f = [](int t, int i) -> Enclosed { return [t, i](int n) { return extremal_f(t, i, n); }; };
    out.push_back(timed([&] { return check_greater("ext.f81", "ext.f81", f(8, 1), rat(6, 5), json{{"t", 8}, {"i", 1}}); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 8; t <= t_max; ++t)
            for (int i = 1; i <= i_max_grid; ++i) parts.push_back(check_greater("", "ext.f", f(t, i), 1, json{{"t", t}, {"i", i}}));
        return fold("ext.f_grid", "ext.f", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 8; t < t_max; ++t)
            for (int i = 1; i <= i_max_grid; ++i)
                parts.push_back(check_greater("", "ext.f", diff(f(t + 1, i), f(t, i)), 0, json{{"t", t}, {"i", i}}));
        for (int i = 1; i < i_max_grid; ++i)
            parts.push_back(check_greater("", "ext.f", diff(f(8, i + 1), f(8, i)), 0, json{{"t", 8}, {"i", i}}));
        return fold("ext.f_monotone", "ext.f", parts, "increasing in t, and in i at t=8");
    }));
    out.push_back(timed([] {
        return make_report("ext.f_i0", "ext.f", Status::skipped, {}, {}, std::nullopt, "i = 0 lies outside the claimed range i >= 1");
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 5; t <= t_max; ++t) parts.push_back(check_greater("", "ext.chain", ratio_chain(t, 0, inv(t + 1)), 1, json{{"t", t}, {"s", 0}}));
        for (int t = 6; t <= t_max; ++t) parts.push_back(check_greater("", "ext.chain", ratio_chain(t, 1, inv(t + 1)), 1, json{{"t", t}, {"s", 1}}));
        return fold("ext.chain", "ext.chain", parts);
    }));
    out.push_back(timed([] { return check_greater("ext.chain_6_1", "ext.chain", ratio_chain(6, 1, rat(1, 7)), 1, json{{"t", 6}, {"s", 1}}); }));
    out.push_back(timed([] {
        std::vector<VerificationReport> parts;
        for (int j = 1; j < 380; ++j) {
            const Rational p = rat(j, 1000), q = 1 - p;
            parts.push_back(check_greater("", "ext.q2p", q * q / p, 1, json{{"p", to_string(p)}}));
        }
        return fold("ext.q2p", "ext.q2p", parts, "p grid step 1/1000 below 0.38");
    }));
    return out;
}

inline std::vector<VerificationReport> keasy_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    out.push_back(timed([] { return check_equal("keasy.h14_14_2", "keasy.h14_14_2", h_k(14, 14, 2), rat(153, 225)); }));
    out.push_back(timed([] { return check_less("keasy.h14_14_3", "keasy.h14_14_3", h_k(14, 14, 3), rat(34, 100)); }));
    out.push_back(timed([] { return check_less("keasy.h14_28_2", "keasy.h14_28_2", h_k(14, 28, 2), rat(221, 100)); }));
    out.push_back(timed([] { return check_equal("keasy.h14_16_1", "keasy.h14_16_1", h_k(14, 16, 1), rat(6, 5)); }));
    auto e_over = [](Rational x, long den) -> Enclosed {
        return [x = std::move(x), den](int n) { return exp_enclosure(x, n) * R(rat(1, den)); };
    };
    out.push_back(timed([&] { return check_less("keasy.a1", "keasy.a1", e_over(1, 14), rat(195, 1000)); }));
    out.push_back(timed([&] { return check_less("keasy.b1", "keasy.b1", e_over(2, 14), rat(528, 1000)); }));
    out.push_back(timed([&] { return check_less("keasy.b1_s2", "keasy.b1_s2", e_over(rat(16, 14), 14), rat(224, 1000)); }));
    out.push_back(timed([&] { return check_less("keasy.a1b1", "keasy.a1b1", e_over(2, 196), rat(38, 1000)); }));
    out.push_back(timed([] { return check_less("keasy.a2b2_s2", "keasy.a2b2_s2", ipow(h_k(14, 14, 2), 2), rat(47, 100)); }));
    out.push_back(timed([] { return check_less("keasy.a2b2_s3", "keasy.a2b2_s3", ipow(h_k(14, 14, 3), 2), rat(12, 100)); }));

    // s = 2: v = t + 2 - s', so b2 <= max over s' of h(t, t+2-s', s').
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 14; t <= t_max; ++t) {
            Rational best = 0;
            for (int sp = 0; sp <= 2; ++sp) best = std::max(best, h_k(t, t + 2 - sp, sp));
            parts.push_back(check_less("", "keasy.b2_s2", best, rat(114, 100), tj(t)));
        }
        return fold("keasy.b2_s2", "keasy.b2_s2", parts, "maximum at s'=1 is (t+3)/(t+1), 17/15 at t=14");
    }));
    const Rational p_s2 = rat(38, 1000) + rat(195, 1000) * rat(114, 100) + rat(68, 100) * rat(224, 1000) + rat(47, 100);
    out.push_back(timed([&] { return check_less("keasy.product_s2", "keasy.product_s2", p_s2, rat(89, 100)); }));
    out.push_back(timed([] {
        const Rational with12 = rat(38, 1000) + rat(195, 1000) * rat(6, 5) + rat(68, 100) * rat(224, 1000) + rat(47, 100);
        auto r = check_greater("keasy.product_s2_with_1.2", "keasy.h14_16_1", with12, rat(89, 100));
        r.note = "with b2 < 1.2 the s=2 product is not below 0.89; only the b2 < 1.14 reading closes the bound";
        return r;
    }));
    out.push_back(timed([] {
        const Rational p = rat(38, 1000) + rat(195, 1000) * rat(221, 100) + rat(34, 100) * rat(528, 1000) + rat(12, 100);
        return check_less("keasy.product_s3", "keasy.product_s3", p, rat(77, 100));
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 4; t <= std::min(t_max, 60); ++t)
            for (long u = 0; u <= 2 * t; ++u)
                for (long s = 0; s <= 8; ++s) {
                    json w{{"t", t}, {"u", u}, {"s", s}};
                    const BigInt exact = (t + 1) * (s + 1) * (u + s + 1) - (u + 2 * s + 2) * (u + 2 * s + 1);
                    const bool decreasing = h_k(t, u, s) > h_k(t, u, s + 1);
                    const bool ok = keasy_quadratic(t, u, s) == exact && (decreasing == (exact > 0));
                    parts.push_back(make_report("", "keasy.quad", ok ? Status::verified : Status::refuted,
                                                Rational(keasy_quadratic(t, u, s)), Rational(exact), w));
                }
        return fold("keasy.quad_equivalence", "keasy.quad", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 14; t <= t_max; ++t)
            for (long u = 0; u <= t; ++u) {
                json w{{"t", t}, {"u", u}};
                const BigInt q2 = BigInt(3 * t * u + 9 * t) - (u * u + 8 * u + 21);
                const bool ok = q2 == keasy_quadratic(t, u, 2) && q2 > 0;
                parts.push_back(make_report("", "keasy.quad2", ok ? Status::verified : Status::refuted, Rational(q2), 0, w));
            }
        return fold("keasy.quad2", "keasy.quad2", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 14; t < t_max; ++t) {
            parts.push_back(check_greater("", "keasy.h_def", h_k(t, t, 3), h_k(t + 1, t + 1, 3), tj(t)));
            for (long u = 0; u < t; ++u)
                parts.push_back(check_less("", "keasy.h_def", h_k(t, u, 3), h_k(t, u + 1, 3), json{{"t", t}, {"u", u}}));
            for (long sp = 2; sp <= 8; ++sp)
                parts.push_back(check_greater("", "keasy.h_def", h_k(t, 2 * t, sp), h_k(t + 1, 2 * t + 2, sp),
                                              json{{"t", t}, {"s'", sp}}));
        }
        for (long sp = 2; sp <= 20; ++sp)
            parts.push_back(check_greater("", "keasy.h_def", h_k(14, 28, sp), h_k(14, 28, sp + 1), json{{"s'", sp}}));
        return fold("keasy.h_monotone", "keasy.h_def", parts);
    }));
    out.push_back(timed([&] {
        // exact a1,a2,b1,b2 on sampled admissible parameters against the a/b bounds
        std::vector<VerificationReport> parts;
        for (long t : {14L, 15L, 20L})
            for (long s = 2; s <= 4; ++s)
                for (long sp = 0; sp <= s; ++sp) {
                    const long u = t - (s - sp), v = t + (s - sp);
                    for (long k : {t + s, t + s + 3, 2 * t + s})
                        for (long n : {(t + 1) * k, (t + 1) * k + 11, 2 * (t + 1) * k}) {
                            auto kb = k_easycase_bounds(n, k, t, u, v, s, sp);
                            json w{{"t", t}, {"s", s}, {"s'", sp}, {"k", k}, {"n", n}};
                            const Rational bound = s == 2 ? rat(89, 100) : rat(77, 100);
                            bool ok = kb.a1 < ipow(rat(t + 1, t), u) / t && kb.b1 < ipow(rat(t + 1, t), v) / t &&
                                      kb.a2 <= h_k(t, u, s) && kb.b2 <= h_k(t, v, sp);
                            const Rational prod = (kb.a1 + kb.a2) * (kb.b1 + kb.b2);
                            parts.push_back(make_report("", "keasy.lemma", ok && prod < bound ? Status::verified : Status::refuted,
                                                        prod, bound, w));
                        }
                }
        return fold("keasy.sampled", "keasy.lemma", parts);
    }));
    return out;
}

inline std::vector<VerificationReport> uniform_case13_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    auto g = [](int t) -> Enclosed { return [t](int n) { return g_case1(t, n); }; };
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 7; t <= t_max; ++t) parts.push_back(check_less("", "case1.uniform", g(t), 1, tj(t)));
        return fold("ucase1.g_sweep", "case1.uniform", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t : {7L, 10L, 14L, 20L, 50L})
            for (long k = t; k <= 3 * t; k += 2)
                for (long n : {(t + 1) * k, (t + 1) * k + 5, 2 * (t + 1) * k}) {
                    const Rational x = ucase1_expression(n, k, t);
                    parts.push_back(check_greater("", "case1.uniform", diff(g(t), point(x)), 0,
                                                  json{{"t", t}, {"k", k}, {"n", n}}));
                }
        return fold("ucase1.expression_below_g", "case1.uniform", parts);
    }));
    out.push_back(timed([] { return check_less("ucase3.exact_14", "ucase3.exact", ucase3_exact(14), 1, tj(14)); }));
    out.push_back(timed([] { return check_less("ucase3.exact_15", "ucase3.exact", ucase3_exact(15), 1, tj(15)); }));
    auto ef = [](int t) -> Enclosed { return [t](int n) { return ucase3_eform(t, n); }; };
    out.push_back(timed([&] { return check_less("ucase3.eform_16", "ucase3.eform", ef(16), 1, tj(16)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t < t_max; ++t) parts.push_back(check_greater("", "ucase3.eform", diff(ef(t), ef(t + 1)), 0, tj(t)));
        return fold("ucase3.eform_decreasing", "ucase3.eform", parts);
    }));
    return out;
}

inline std::vector<VerificationReport> stability_suite(int t_max = 100)
{
    std::vector<VerificationReport> out;
    out.push_back(timed([] { return check_equal("stab.g_threshold_14", "stab.g", stability_ratio(14, rat(1, 15)), 1, tj(14)); }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t <= t_max; ++t) parts.push_back(check_equal("", "stab.g", stability_ratio(t, inv(t + 1)), 1, tj(t)));
        return fold("stab.g_threshold", "stab.g", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (int t = 1; t <= std::min(t_max, 40); ++t) {
            const Rational top = rat(t + 2, 2L * (t + 1));
            for (int j = 0; j < 200; ++j)
                parts.push_back(check_less("", "stab.g", stability_ratio(t, top * j / 200), stability_ratio(t, top * (j + 1) / 200),
                                           json{{"t", t}, {"j", j}}));
        }
        return fold("stab.g_increasing", "stab.g", parts, "p grid up to (t+2)/(2(t+1))");
    }));
    out.push_back(timed([] {
        return check_less("stab.g_14_ordered", "stab.g", stability_ratio(14, rat(1, 30)), stability_ratio(14, rat(1, 20)));
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 2; t <= std::min(t_max, 30); ++t)
            for (long k = t + 1; k <= t + 12; ++k)
                for (long n : {(t + 1) * k, (t + 1) * k + 1, (t + 1) * k + 9, 3 * (t + 1) * k}) {
                    json w{{"t", t}, {"k", k}, {"n", n}};
                    const Rational r = uniform_stability_ratio(n, k, t);
                    if (r != uniform_stability_closed(n, k, t)) {
                        parts.push_back(make_report("", "stab.f1f0", Status::refuted, r, uniform_stability_closed(n, k, t), w,
                                                    "closed form mismatch"));
                        continue;
                    }
                    parts.push_back(check_less("", "stab.f1f0", r, stability_ratio(t, rat(k, n)), w));
                }
        return fold("stab.f1f0", "stab.f1f0", parts);
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 2; t <= std::min(t_max, 30); ++t)
            for (long k = t + 2; k <= t + 12; ++k)
                for (long n : {(t + 1) * k, (t + 1) * k + 9}) {
                    json w{{"t", t}, {"k", k}, {"n", n}};
                    // p = k/n: the displayed form is exactly what the f(p) > 0 rearrangement certifies
                    const Rational p = rat(k, n);
                    const bool f_matches = (stability_poly(n, t, p) > 0) == (uniform_stability_displayed(n, k, t) < stability_ratio(t, p));
                    const bool below = uniform_stability_displayed(n, k, t) < uniform_stability_ratio(n, k, t);
                    parts.push_back(make_report("", "stab.f1f0", f_matches && below ? Status::verified : Status::refuted,
                                                uniform_stability_displayed(n, k, t), uniform_stability_ratio(n, k, t), w));
                }
        return fold("stab.displayed_form_undercounts", "stab.f1f0", parts,
                    "the displayed closed form carries -(k-t-1) where the count gives +(k-t-1); the direct ratio still stays below g(k/n)");
    }));
    out.push_back(timed([] {
        return check_less("stab.f1f0_225_15_14", "stab.f1f0", uniform_stability_ratio(225, 15, 14), stability_ratio(14, rat(15, 225)));
    }));
    out.push_back(timed([&] {
        std::vector<VerificationReport> parts;
        for (long t = 2; t <= t_max; ++t)
            for (long n = t * (t + 1); n <= t * (t + 1) + 50; ++n) {
                json w{{"t", t}, {"n", n}};
                const Rational poly = Rational(n * n - (t + 2) * n + t * (t + 1));
                if (stability_poly(n, t, inv(t + 1)) != (t + 1) * poly) {
                    parts.push_back(make_report("", "stab.poly", Status::refuted, stability_poly(n, t, inv(t + 1)), (t + 1) * poly, w));
                    continue;
                }
                parts.push_back(check_greater("", "stab.poly", poly, 0, w));
            }
        return fold("stab.poly", "stab.poly", parts);
    }));
    return out;
}

// ---------------------------------------------------------------------------
// Finite check over (k,n) cells

struct Case2Row {
    int k = 0;
    long cells = 0;
    Rational max_ratio = 0;
    long argmax_n = 0;
    std::optional<long> first_failure_n;
};

inline json row_to_json(const Case2Row& r)
{
    json j{{"k", r.k}, {"cells", r.cells}, {"max_ratio", to_string(r.max_ratio)}, {"argmax_n", r.argmax_n}};
    j["first_failure_n"] = r.first_failure_n ? json(*r.first_failure_n) : json(nullptr);
    return j;
}

inline Case2Row row_from_json(const json& j)
{
    Case2Row r;
    r.k = j.at("k").get<int>();
    r.cells = j.at("cells").get<long>();
    r.max_ratio = parse_rational(j.at("max_ratio").get<std::string>());
    r.argmax_n = j.at("argmax_n").get<long>();
    if (!j.at("first_failure_n").is_null()) r.first_failure_n = j.at("first_failure_n").get<long>();
    return r;
}

struct Case2Options {
    int workers = 1;
    std::function<void(const Case2Row&)> on_row; // called once per finished row, serialized
    std::map<int, Case2Row> completed;           // rows to take as done (resume)
};

struct Case2Result {
    int t = 0;
    Rational n0;
    BigInt n0_floor;
    long cells = 0;
    Rational max_ratio = 0;
    int argmax_k = 0;
    long argmax_n = 0;
    std::vector<Case2Row> rows; // ascending k
    std::optional<std::pair<int, long>> first_failure;
};

inline Case2Row case2_row(int t, int k, long n_hi)
{
    Case2Row row;
    row.k = k;
    for (long n = long(t + 1) * k; n <= n_hi; ++n) {
        Rational r = case2_cell_ratio(n, k, t);
        ++row.cells;
        if (row.cells == 1 || r > row.max_ratio) {
            row.max_ratio = r;
            row.argmax_n = n;
        }
        if (r >= 1 && !row.first_failure_n) row.first_failure_n = n;
    }
    return row;
}

inline Case2Result case2_finite(int t, const Case2Options& opt = {})
{
    if (t < 14 || t > 18) throw std::invalid_argument("case2-finite covers t in 14..18");
    Case2Result res;
    res.t = t;
    res.n0 = n0(t);
    res.n0_floor = floor(res.n0);
    const long n_hi = res.n0_floor.convert_to<long>();
    std::vector<int> ks;
    for (int k = t; long(t + 1) * k <= n_hi; ++k) ks.push_back(k);
    std::vector<Case2Row> rows(ks.size());
    std::vector<int> todo;
    for (std::size_t idx = 0; idx < ks.size(); ++idx) {
        auto it = opt.completed.find(ks[idx]);
        if (it != opt.completed.end()) rows[idx] = it->second;
        else todo.push_back(static_cast<int>(idx));
    }
    std::mutex cb;
    parallel_for(todo.size(), opt.workers, [&](std::size_t j) {
        const int idx = todo[j];
        rows[idx] = case2_row(t, ks[idx], n_hi);
        if (opt.on_row) {
            std::lock_guard lock(cb);
            opt.on_row(rows[idx]);
        }
    });
    for (const auto& r : rows) {
        res.cells += r.cells;
        if (r.cells && (res.argmax_k == 0 || r.max_ratio > res.max_ratio)) {
            res.max_ratio = r.max_ratio;
            res.argmax_k = r.k;
            res.argmax_n = r.argmax_n;
        }
        if (r.first_failure_n && !res.first_failure) res.first_failure = {{r.k, *r.first_failure_n}};
    }
    res.rows = std::move(rows);
    return res;
}

inline std::vector<VerificationReport> verify_case2_finite(int t, const Case2Options& opt = {})
{
    std::vector<VerificationReport> out;
    const auto start = std::chrono::steady_clock::now();
    Case2Result res = case2_finite(t, opt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string id = "case2.finite_t" + std::to_string(t);
    if (t == 14)
        out.push_back(check_equal("case2.n0_14", "case2.n0", Rational(res.n0_floor), 1023, json{{"n0", to_string(res.n0)}}));
    json w{{"t", t},
           {"n0_floor", to_string(res.n0_floor)},
           {"cells", res.cells},
           {"argmax", {{"k", res.argmax_k}, {"n", res.argmax_n}}},
           {"max_ratio_approx", to_double(res.max_ratio)}};
    VerificationReport r;
    if (res.first_failure) {
        w["failing_cell"] = {{"k", res.first_failure->first}, {"n", res.first_failure->second}};
        r = make_report(id, "case2.finite", Status::refuted, res.max_ratio, 1, w);
    } else {
        r = make_report(id, "case2.finite", Status::verified, res.max_ratio, 1, w);
    }
    r.note = std::to_string(res.cells) + " cells; lhs is the largest ratio";
    r.elapsed_ms = ms;
    out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<VerificationReport> bounds_all(int t_max = 100)
{
    if (t_max < 20) throw std::invalid_argument("bounds-all needs t_max >= 20");
    std::vector<VerificationReport> out;
    for (auto suite : {easy_suite, case1_suite, case2_suite, case3_suite, global_suite, basic_suite,
                       uniform_case13_suite, keasy_suite, stability_suite}) {
        auto part = suite(t_max);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    auto ext = extremal_suite(t_max);
    out.insert(out.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
    return out;
}

} // namespace ekr::bounds
