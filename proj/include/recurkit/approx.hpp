#pragma once

#include <mpfr.h>

#include <string>

#include "recurkit/scalar.hpp"

namespace recurkit {

// Arbitrary-precision binary float (MPFR-backed). Binary operations carry
// the maximum of the two operand precisions; rounding is to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 53) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long v, mpfr_prec_t prec);
    static BigFloat of(const Rational& r, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal scientific form with the full working precision; deterministic.
    std::string str() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend BigFloat abs(const BigFloat& a);
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
    friend BigFloat exp(const BigFloat& a);
    friend void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& a);

    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

private:
    mpfr_t v_;
    mpfr_prec_t prec_;
};

// Complex number with BigFloat parts: the approximate scalar used by the
// contour-integral verifier.
struct ApproxScalar {
    BigFloat re;
    BigFloat im;

    explicit ApproxScalar(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
    ApproxScalar(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
    BigFloat magnitude() const { return hypot(re, im); }
    std::string str() const;
};

ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b);
ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b);
ApproxScalar operator-(const ApproxScalar& a);
ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b);
ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b);

ApproxScalar exp(const ApproxScalar& z);

// Round s to `bits` bits of mantissa per part; |result - s| <= 2^(1-bits)(1+|s|).
// Requires bits >= 24 (PrecisionTooLow otherwise).
ApproxScalar approximate(const ExactScalar& s, long bits);

}  // namespace recurkit
