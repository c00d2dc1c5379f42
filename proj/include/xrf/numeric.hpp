// numeric.hpp - shared arithmetic aliases and small helpers
//
// BigInt/Rational are exact (boost.multiprecision, header-only backends).
// Real is an mpfr-backed float with ~133 bits of mantissa, used wherever a
// computation is irrational by nature (logs, exp, trig).  Anything feeding a
// pass/fail decision goes through interval.hpp instead.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xrf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline std::uint64_t ipow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base)
            throw std::overflow_error("ipow_u64: overflow");
        out *= base;
    }
    return out;
}

// floor of the integer square root
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

// smallest integer c with c^q >= base^p, i.e. ceil(base^(p/q)) for p/q >= 0.
// Used for fertility thresholds of the form r^gamma with rational gamma.
inline BigInt ceil_pow(std::uint64_t base, const Rational& expo) {
    if (expo < 0) throw std::domain_error("ceil_pow: negative exponent");
    const BigInt p = boost::multiprecision::numerator(expo);
    const BigInt q = boost::multiprecision::denominator(expo);
    if (p > 4096 || q > 4096)
        throw std::domain_error("ceil_pow: exponent out of supported range");
    const unsigned pu = p.convert_to<unsigned>();
    const unsigned qu = q.convert_to<unsigned>();
    const BigInt target = ipow(BigInt(base), pu);
    BigInt lo = 1, hi = 1;
    while (ipow(hi, qu) < target) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (ipow(mid, qu) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// exact test  count >= base^expo  with rational expo >= 0
inline bool count_at_least_pow(const BigInt& count, std::uint64_t base, const Rational& expo) {
    if (count < 0) return false;
    return count >= ceil_pow(base, expo);
}

// natural log of a positive big integer, safe far beyond double range
inline double log_big(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_big: positive input required");
    const auto bits = boost::multiprecision::msb(n);
    if (bits <= 900) return std::log(n.convert_to<double>());
    const BigInt top = n >> (bits - 52);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 52) * 0.69314718055994530942;
}

inline double slope_least_squares(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(xy.size());
    const double den = n * sxx - sx * sx;
    if (den == 0) return 0.0;
    return (n * sxy - sx * sy) / den;
}

}  // namespace xrf
