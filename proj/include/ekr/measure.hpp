#pragma once

#include "ekr/setfam.hpp"
#include "ekr/walks.hpp"

namespace ekr::measure {

class WeightParams {
public:
    WeightParams(int n, Rational p) : n_(n), p_(std::move(p))
    {
        check_ground(n);
        if (p_ <= 0 || p_ >= 1) throw std::invalid_argument("p must lie in (0,1)");
    }
    int n() const { return n_; }
    const Rational& p() const { return p_; }
    Rational q() const { return 1 - p_; }
    Rational alpha() const { return p_ / q(); }
    /// p <= 1/(t+1)
    bool admissible_for(int t) const { return p_ * (t + 1) <= 1; }

private:
    int n_;
    Rational p_;
};

/// p^j q^(n-j) for j = 0..n
inline std::vector<Rational> size_weights(const WeightParams& w)
{
    std::vector<Rational> out(w.n() + 1);
    const Rational p = w.p(), q = w.q();
    for (int j = 0; j <= w.n(); ++j) out[j] = ipow(p, j) * ipow(q, w.n() - j);
    return out;
}

inline Rational mu(const Subset& f, const WeightParams& w)
{
    if (f.ground() != w.n()) throw std::invalid_argument("ground-set mismatch");
    return ipow(w.p(), f.size()) * ipow(w.q(), w.n() - f.size());
}

inline Rational mu(const Family& f, const WeightParams& w)
{
    if (f.ground() != w.n()) throw std::invalid_argument("ground-set mismatch");
    std::vector<long> by_size(w.n() + 1, 0);
    for (Mask m : f.masks()) ++by_size[std::popcount(m)];
    auto sw = size_weights(w);
    Rational total = 0;
    for (int j = 0; j <= w.n(); ++j)
        if (by_size[j]) total += sw[j] * by_size[j];
    return total;
}

/// Binomial tail over the first t+2i coordinates.
inline Rational mu_frankl_closed(int n, int t, int i, const Rational& p)
{
    setfam::check_t(t);
    if (i < 0 || t + 2 * i > n) throw std::invalid_argument("F_i^t(n) needs i >= 0 and t+2i <= n");
    const Rational q = 1 - p;
    const int r = t + 2 * i;
    Rational s = 0;
    for (int j = t + i; j <= r; ++j) s += Rational(binom(r, j)) * ipow(p, j) * ipow(q, r - j);
    return s;
}

/// Walks hitting (1,t) but not (0,t).
inline Rational mu_hit_1t_not_0t_closed(int t, const Rational& p)
{
    return t * ipow(p, t) * (1 - p);
}

/// μ_p of (F_0^t(n) \ {[t]}) ∪ { [n]\{i} : i <= t }.
inline Rational mu_stability_family_closed(int n, int t, const Rational& p)
{
    const Rational q = 1 - p;
    return ipow(p, t) - ipow(p, t) * ipow(q, n - t) + t * ipow(p, n - 1) * q;
}

/// Probability that an n-step walk reaches y = x + t; height t is absorbing.
inline Rational hit_probability_exact(int n, int t, const Rational& p)
{
    setfam::check_t(t);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const Rational q = 1 - p;
    // prob[h + n] for heights -n..t-1, plus the absorbed mass
    std::vector<Rational> prob(n + t + 1, Rational(0));
    Rational absorbed = 0;
    prob[n] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<Rational> next(prob.size(), Rational(0));
        for (int idx = 0; idx < static_cast<int>(prob.size()); ++idx) {
            if (prob[idx] == 0) continue;
            const int h = idx - n;
            if (h + 1 >= t) absorbed += prob[idx] * p;
            else next[idx + 1] += prob[idx] * p;
            if (idx > 0) next[idx - 1] += prob[idx] * q;
        }
        prob = std::move(next);
    }
    return absorbed;
}

/// α^t for p < 1/2, else 1.
inline Rational hit_probability_limit(int t, const Rational& p)
{
    setfam::check_t(t);
    if (p * 2 >= 1) return 1;
    return ipow(p / (1 - p), t);
}

/// A ∪ { F ∪ {n+1} : F in A }, as a family over [n+1].
inline Family lift(const Family& a)
{
    const int n = a.ground();
    if (n >= kMaxGround) throw std::invalid_argument("lift would exceed 64 elements");
    std::vector<Mask> out(a.masks());
    for (Mask m : a.masks()) out.push_back(m | (Mask{1} << n));
    return Family(n + 1, std::move(out));
}

struct MonotoneCheck {
    Rational f_n, f_n1;
    bool monotone = false;
    bool lifting_preserves_weight = false;
};

// product_monotone_check needs the search module; it is defined in search.hpp.

} // namespace ekr::measure
