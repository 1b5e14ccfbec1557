#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace recurkit {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (lowest terms, den > 0)

// Strict parse of "p" or "p/q" with decimal integer p and positive decimal
// q. No whitespace, no '+' sign, no radix prefixes. Throws FormatError.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& r);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Element of the Gaussian-rational field Q(i): the exact scalar field for
// the whole library. Immutable value type; all operations are pure.
struct ExactScalar {
    Rational re;
    Rational im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(int v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
    ExactScalar(long v) : re(v), im(0) {}         // NOLINT(google-explicit-constructor)
    ExactScalar(long long v) : re(static_cast<long>(v)), im(0) {}  // NOLINT
    ExactScalar(Rational r) : re(std::move(r)), im(0) {            // NOLINT
        re.canonicalize();
    }
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    ExactScalar conj() const { return ExactScalar(re, -im); }
    // |s|^2 = re^2 + im^2, an exact rational.
    Rational norm() const;

    bool operator==(const ExactScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
};

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
ExactScalar operator-(const ExactScalar& a);
ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);  // ZeroInverse if b = 0

ExactScalar& operator+=(ExactScalar& a, const ExactScalar& b);
ExactScalar& operator-=(ExactScalar& a, const ExactScalar& b);
ExactScalar& operator*=(ExactScalar& a, const ExactScalar& b);

// Field inverse; throws DomainError("ZeroInverse") when s = 0.
ExactScalar invert(const ExactScalar& s);

// s^e for any integer e (negative exponents use the exact inverse).
ExactScalar pow(const ExactScalar& s, long long e);

// Total order used only for canonical sorting: lexicographic on (re, im).
int cmp_lex(const ExactScalar& a, const ExactScalar& b);
inline bool lex_less(const ExactScalar& a, const ExactScalar& b) { return cmp_lex(a, b) < 0; }

// "0", "3/2", "i", "-2i", "1+2i", "1/2-3i", ...
std::string to_string(const ExactScalar& s);
std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace recurkit
