#include "recurkit/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "recurkit/error.hpp"

namespace recurkit {

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, v, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::of(const Rational& r, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
}

std::string BigFloat::str() const {
    // ~0.30103 decimal digits per bit, plus slack so the value round-trips.
    int digits = static_cast<int>(static_cast<double>(prec_) * 0.30102999566398119521 + 3);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
    return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec_, b.prec_));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec_, b.prec_));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec_, b.prec_));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec_);
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec_, b.prec_));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& a) {
    BigFloat r(a.prec_);
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& a) {
    BigFloat rs(a.prec_), rc(a.prec_);
    mpfr_sin_cos(rs.raw(), rc.raw(), a.raw(), MPFR_RNDN);
    s = std::move(rs);
    c = std::move(rc);
}

std::string ApproxScalar::str() const { return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i"; }

ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b) {
    return {a.re + b.re, a.im + b.im};
}

ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b) {
    return {a.re - b.re, a.im - b.im};
}

ApproxScalar operator-(const ApproxScalar& a) { return {-a.re, -a.im}; }

ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    ApproxScalar num = a * ApproxScalar(b.re, -b.im);
    return {num.re / n, num.im / n};
}

ApproxScalar exp(const ApproxScalar& z) {
    BigFloat m = exp(z.re);
    BigFloat s(z.im.precision()), c(z.im.precision());
    sin_cos(s, c, z.im);
    return {m * c, m * s};
}

ApproxScalar approximate(const ExactScalar& s, long bits) {
    if (bits < 24) throw DomainError("PrecisionTooLow", "need at least 24 bits");
    auto prec = static_cast<mpfr_prec_t>(bits);
    return {BigFloat::of(s.re, prec), BigFloat::of(s.im, prec)};
}

}  // namespace recurkit
