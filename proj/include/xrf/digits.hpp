// digits.hpp - exact base-r digit arithmetic on non-negative integers
//
// The two structure maps:
//   phi(n)  drops the least significant base-r digit (n -> floor(n/r))
//   psi(n)  drops the most significant base-r digit
// plus digit-word conversions and the exponent alignment n' (greatest k with
// s^k <= r^n).  Every comparison of powers is done with exact integers; no
// floating-point logarithm is ever consulted.

#pragma once

#include "xrf/numeric.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace xrf {

struct Radix {
    unsigned value;
    explicit Radix(unsigned r) : value(r) {
        if (r < 2) throw std::invalid_argument("Radix: need r >= 2");
    }
};

template <class Int>
inline Int phi(const Int& n, Radix r) {
    return n / r.value;
}

// k with r^k <= n < r^{k+1}; n = 0 is rejected (the paper only defines k for n >= 1)
template <class Int>
inline unsigned floor_log(const Int& n, Radix r) {
    if (n <= 0) throw std::domain_error("floor_log: n must be >= 1");
    unsigned k = 0;
    Int p = 1;
    // p <= n/r  <=>  p*r <= n  without overflow
    while (p <= n / r.value) {
        p *= r.value;
        ++k;
    }
    return k;
}

template <class Int>
inline Int psi(const Int& n, Radix r) {
    if (n < r.value) return Int(0);  // single digit (or 0): nothing below the top digit
    const unsigned k = floor_log(n, r);
    Int p = 1;
    for (unsigned i = 0; i < k; ++i) p *= r.value;
    return n - p * (n / p);
}

// greatest k with s^k <= r^n, by exact big-integer comparison
inline std::uint64_t n_prime(std::uint64_t n, Radix r, Radix s) {
    const BigInt rn = ipow(BigInt(r.value), static_cast<unsigned>(n));
    std::uint64_t k = 0;
    BigInt sk = 1;
    while (sk * s.value <= rn) {
        sk *= s.value;
        ++k;
    }
    return k;
}

// Digit sequence (w_0, w_1, ..., w_k), stored with w_0 first.
// Little-endian evaluation treats w_0 as the least significant digit;
// big_endian_value() treats w_0 as the most significant one.
struct DigitWord {
    std::vector<std::uint32_t> digits;
    Radix radix;

    DigitWord(std::vector<std::uint32_t> d, Radix r) : digits(std::move(d)), radix(r) {
        for (auto v : digits)
            if (v >= radix.value) throw std::invalid_argument("DigitWord: digit out of range");
    }

    std::size_t size() const { return digits.size(); }
};

// canonical word of n: least significant digit first, no top zero except for n = 0
template <class Int>
inline DigitWord to_digits(Int n, Radix r) {
    std::vector<std::uint32_t> d;
    if (n == 0) {
        d.push_back(0);
    } else {
        while (n > 0) {
            d.push_back(static_cast<std::uint32_t>(n % r.value));
            n /= r.value;
        }
    }
    return DigitWord(std::move(d), r);
}

template <class Int = BigInt>
inline Int from_digits(const DigitWord& w) {
    Int v = 0;
    for (std::size_t i = w.digits.size(); i-- > 0;) v = v * w.radix.value + w.digits[i];
    return v;
}

// (w)_r = w_0 r^{l-1} + ... + w_{l-1}
inline BigInt big_endian_value(const DigitWord& w) {
    BigInt v = 0;
    for (auto d : w.digits) v = v * w.radix.value + d;
    return v;
}

// true iff n = (w)_r * r^d + n_0 for some d >= 0 and 0 <= n_0 < r^d.
// Leading-zero words are taken literally: (w)_r = 0 matches every n.
template <class Int>
inline bool begins_with(const Int& n, const DigitWord& w, Radix r) {
    if (w.radix.value != r.value) throw std::invalid_argument("begins_with: radix mismatch");
    const BigInt W = big_endian_value(w);
    const BigInt N = BigInt(n);
    if (W == 0) return true;  // n_0 := n with d large enough
    BigInt lo = W;            // W * r^d, with lo / W = r^d
    while (lo <= N) {
        if (N < lo + lo / W) return true;  // N in [W*r^d, (W+1)*r^d)
        lo *= r.value;
    }
    return false;
}

}  // namespace xrf
