#pragma once

// Exact integers and rationals on the GMP backend of Boost.Multiprecision.
// Expression templates are off so `auto` always names a value.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ekr {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational rat(long num, long den = 1)
{
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline Rational rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
}

/// C(n,k), zero outside 0 <= k <= n.
inline BigInt binom(long n, long k)
{
    BigInt r;
    if (n < 0 || k < 0 || k > n) return r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt ipow(const BigInt& b, unsigned e)
{
    BigInt r;
    mpz_pow_ui(r.backend().data(), b.backend().data(), e);
    return r;
}

inline Rational ipow(const Rational& b, long e)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (e < 0) {
        if (b == 0) throw std::domain_error("zero to a negative power");
        return Rational(ipow(denominator(b), static_cast<unsigned>(-e)),
                        ipow(numerator(b), static_cast<unsigned>(-e)));
    }
    return Rational(ipow(numerator(b), static_cast<unsigned>(e)),
                    ipow(denominator(b), static_cast<unsigned>(e)));
}

inline BigInt floor(const Rational& x)
{
    BigInt r;
    mpz_fdiv_q(r.backend().data(), mpq_numref(x.backend().data()), mpq_denref(x.backend().data()));
    return r;
}

inline BigInt ceil(const Rational& x)
{
    BigInt r;
    mpz_cdiv_q(r.backend().data(), mpq_numref(x.backend().data()), mpq_denref(x.backend().data()));
    return r;
}

/// "num/den", always with a denominator.
inline std::string to_string(const Rational& x)
{
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Accepts "a/b", "a" and finite decimals like "0.87".
inline Rational parse_rational(std::string_view s)
{
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
    auto parse_int = [&](std::string_view d) {
        if (d.empty()) throw bad();
        std::size_t i = (d[0] == '-' || d[0] == '+') ? 1 : 0;
        if (i == d.size()) throw bad();
        for (std::size_t j = i; j < d.size(); ++j)
            if (d[j] < '0' || d[j] > '9') throw bad();
        const bool neg = d[0] == '-';
        std::size_t first = i;
        while (first + 1 < d.size() && d[first] == '0') ++first; // "087" would be read as octal
        BigInt v(std::string(d.substr(first)));
        return neg ? BigInt(-v) : v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        return Rational(parse_int(s.substr(0, slash)), den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        if (s.substr(dot + 1).empty()) throw bad();
        return Rational(parse_int(digits), ipow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
    }
    return Rational(parse_int(s));
}

} // namespace ekr
