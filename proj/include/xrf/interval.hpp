// interval.hpp - directed-rounding enclosures on top of mpfr
//
// Ival carries [lo, hi] with lo rounded down and hi rounded up at every
// operation, so "definitely_ge(x, y)" proves x >= y and a passing check is
// sound.  Only the operations the tree/pipeline inequalities need are
// provided; all operands are assumed non-negative (contents, powers, counts).

#pragma once

#include "xrf/numeric.hpp"

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace xrf {

class Ival {
  public:
    explicit Ival(mpfr_prec_t prec = 192) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_ui(lo_, 0, MPFR_RNDD);
        mpfr_set_ui(hi_, 0, MPFR_RNDU);
    }
    Ival(const Ival& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Ival(Ival&& o) noexcept {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Ival& operator=(Ival o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Ival() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Ival exact_ui(unsigned long v, mpfr_prec_t prec = 192) {
        Ival x(prec);
        mpfr_set_ui(x.lo_, v, MPFR_RNDD);
        mpfr_set_ui(x.hi_, v, MPFR_RNDU);
        return x;
    }

    static Ival from_rational(const Rational& q, mpfr_prec_t prec = 192) {
        Ival x(prec);
        set_rational(x.lo_, q, MPFR_RNDD);
        set_rational(x.hi_, q, MPFR_RNDU);
        return x;
    }

    // base^expo for integer base >= 2 and rational exponent (any sign)
    static Ival pow_of(std::uint64_t base, const Rational& expo, mpfr_prec_t prec = 192) {
        if (base < 2) throw std::invalid_argument("Ival::pow_of: base >= 2 required");
        if (expo == 0) return exact_ui(1, prec);
        Ival x(prec);
        mpfr_t t;
        mpfr_init2(t, prec);
        // lo: round everything down; exp is monotone, log(base) > 0
        set_rational(t, expo, expo > 0 ? MPFR_RNDD : MPFR_RNDU);
        mpfr_t lb;
        mpfr_init2(lb, prec);
        mpfr_set_uj(lb, base, MPFR_RNDD);
        mpfr_log(lb, lb, expo > 0 ? MPFR_RNDD : MPFR_RNDU);
        mpfr_mul(t, t, lb, MPFR_RNDD);
        mpfr_exp(x.lo_, t, MPFR_RNDD);
        // hi: round up
        set_rational(t, expo, expo > 0 ? MPFR_RNDU : MPFR_RNDD);
        mpfr_set_uj(lb, base, MPFR_RNDU);
        mpfr_log(lb, lb, expo > 0 ? MPFR_RNDU : MPFR_RNDD);
        mpfr_mul(t, t, lb, MPFR_RNDU);
        mpfr_exp(x.hi_, t, MPFR_RNDU);
        mpfr_clear(lb);
        mpfr_clear(t);
        return x;
    }

    Ival operator+(const Ival& o) const {
        Ival x(prec());
        mpfr_add(x.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(x.hi_, hi_, o.hi_, MPFR_RNDU);
        return x;
    }
    Ival operator-(const Ival& o) const {
        Ival x(prec());
        mpfr_sub(x.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(x.hi_, hi_, o.lo_, MPFR_RNDU);
        return x;
    }
    // both operands non-negative
    Ival operator*(const Ival& o) const {
        Ival x(prec());
        mpfr_mul(x.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_mul(x.hi_, hi_, o.hi_, MPFR_RNDU);
        return x;
    }
    // divisor strictly positive
    Ival operator/(const Ival& o) const {
        if (mpfr_sgn(o.lo_) <= 0) throw std::domain_error("Ival: division needs positive divisor");
        Ival x(prec());
        mpfr_div(x.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_div(x.hi_, hi_, o.lo_, MPFR_RNDU);
        return x;
    }

    Ival mul_ui(unsigned long k) const {
        Ival x(prec());
        mpfr_mul_ui(x.lo_, lo_, k, MPFR_RNDD);
        mpfr_mul_ui(x.hi_, hi_, k, MPFR_RNDU);
        return x;
    }

    static Ival min(const Ival& a, const Ival& b) {
        Ival x(a.prec());
        mpfr_min(x.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_min(x.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return x;
    }

    // log(this) / log(base); this must be positive
    Ival log_base(std::uint64_t base) const {
        if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Ival::log_base: needs positive value");
        Ival x(prec());
        mpfr_t lb_lo, lb_hi, t;
        mpfr_init2(lb_lo, prec());
        mpfr_init2(lb_hi, prec());
        mpfr_init2(t, prec());
        mpfr_set_uj(lb_lo, base, MPFR_RNDD);
        mpfr_log(lb_lo, lb_lo, MPFR_RNDD);
        mpfr_set_uj(lb_hi, base, MPFR_RNDU);
        mpfr_log(lb_hi, lb_hi, MPFR_RNDU);
        // numerator may be negative: pick rounding per sign
        mpfr_log(t, lo_, MPFR_RNDD);
        mpfr_div(x.lo_, t, mpfr_sgn(t) >= 0 ? lb_hi : lb_lo, MPFR_RNDD);
        mpfr_log(t, hi_, MPFR_RNDU);
        mpfr_div(x.hi_, t, mpfr_sgn(t) >= 0 ? lb_lo : lb_hi, MPFR_RNDU);
        mpfr_clear(t);
        mpfr_clear(lb_hi);
        mpfr_clear(lb_lo);
        return x;
    }

    bool definitely_ge(const Ival& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
    bool definitely_gt(const Ival& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
    bool definitely_lt(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool possibly_ge(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) >= 0; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const { return 0.5 * (lo_d() + hi_d()); }
    double width() const { return hi_d() - lo_d(); }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  private:
    static void set_rational(mpfr_t out, const Rational& q, mpfr_rnd_t rnd) {
        const BigInt num = boost::multiprecision::numerator(q);
        const BigInt den = boost::multiprecision::denominator(q);
        mpfr_t n, d;
        mpfr_init2(n, mpfr_get_prec(out) + 64);
        mpfr_init2(d, mpfr_get_prec(out) + 64);
        mpfr_set_str(n, num.str().c_str(), 10, rnd);
        mpfr_set_str(d, den.str().c_str(), 10, rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD);
        mpfr_div(out, n, d, rnd);
        mpfr_clear(d);
        mpfr_clear(n);
    }

    mpfr_t lo_, hi_;
};

}  // namespace xrf
