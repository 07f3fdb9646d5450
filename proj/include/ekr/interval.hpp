#pragma once

#include "ekr/rational.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace ekr {

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(const Rational& x) : lo_(x), hi_(x) {}
    RationalInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi)
    {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    /// Rounds the endpoints outward onto the grid 2^-bits; keeps denominators bounded.
    RationalInterval widened(unsigned bits) const
    {
        Rational scale(ipow(BigInt(2), bits));
        return {Rational(floor(lo_ * scale)) / scale, Rational(ceil(hi_ * scale)) / scale};
    }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
    {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b)
    {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b)
    {
        if (a.lo_ >= 0 && b.lo_ >= 0) return {a.lo_ * b.lo_, a.hi_ * b.hi_};
        std::array<Rational, 4> c{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        Rational lo = c[0], hi = c[0];
        for (const auto& x : c) {
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
        return {lo, hi};
    }
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b)
    {
        if (b.contains(0)) throw std::domain_error("interval division by an interval containing 0");
        return a * RationalInterval(1 / b.hi_, 1 / b.lo_);
    }

    RationalInterval pow(unsigned e) const
    {
        RationalInterval r(Rational(1));
        RationalInterval b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    Rational lo_, hi_;
};

inline constexpr int kMaxSeriesTerms = 64;
inline constexpr unsigned kWidenBits = 400;

/// Encloses e^x. `terms` is the Taylor order used on the reduced argument in [0,1].
inline RationalInterval exp_enclosure(const Rational& x, int terms)
{
    if (terms < 1) throw std::invalid_argument("exp_enclosure needs at least one term");
    if (x == 0) return RationalInterval(Rational(1));
    if (x < 0) {
        auto pos = exp_enclosure(-x, terms);
        return RationalInterval(1 / pos.hi(), 1 / pos.lo());
    }
    // x = y * 2^m with y in [0,1]; e^x = (e^y)^(2^m)
    unsigned m = 0;
    Rational y = x;
    while (y > 1) {
        y /= 2;
        ++m;
    }
    Rational sum = 0, term = 1;
    for (int j = 0; j <= terms; ++j) {
        sum += term;
        term = term * y / (j + 1);
    }
    // tail after order `terms` is at most y^(N+1)/(N+1)! * e^y <= 3 * term
    RationalInterval ey = RationalInterval(sum, sum + 3 * term).widened(kWidenBits);
    for (unsigned i = 0; i < m; ++i) ey = (ey * ey).widened(kWidenBits);
    return ey;
}

inline RationalInterval e_enclosure(int terms) { return exp_enclosure(Rational(1), terms); }

enum class Verdict { holds, fails, inconclusive };

struct Certificate {
    Verdict verdict = Verdict::inconclusive;
    RationalInterval value;
    int terms = 0;
};

/// An expression whose enclosure tightens as the series order grows.
using Enclosed = std::function<RationalInterval(int terms)>;

namespace detail {
template <class Decide>
Certificate certify(const Enclosed& expr, Decide decide)
{
    Certificate c;
    for (int terms : {8, 16, 24, 32, 48, kMaxSeriesTerms}) {
        c.value = expr(terms);
        c.terms = terms;
        c.verdict = decide(c.value);
        if (c.verdict != Verdict::inconclusive) break;
    }
    return c;
}
} // namespace detail

/// holds iff the enclosure lies strictly below `bound`.
inline Certificate certify_less(const Enclosed& expr, const Rational& bound)
{
    return detail::certify(expr, [&](const RationalInterval& v) {
        if (v.hi() < bound) return Verdict::holds;
        if (v.lo() >= bound) return Verdict::fails;
        return Verdict::inconclusive;
    });
}

/// holds iff the enclosure lies strictly above `bound`.
inline Certificate certify_greater(const Enclosed& expr, const Rational& bound)
{
    return detail::certify(expr, [&](const RationalInterval& v) {
        if (v.lo() > bound) return Verdict::holds;
        if (v.hi() <= bound) return Verdict::fails;
        return Verdict::inconclusive;
    });
}

} // namespace ekr
