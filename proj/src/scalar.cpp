#include "recurkit/scalar.hpp"

#include <cctype>
#include <ostream>

#include "recurkit/error.hpp"

namespace recurkit {

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    if (pos >= s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    std::string num = s;
    std::string den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-')
        throw FormatError("bad rational string: \"" + s + "\"");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw FormatError("bad rational string: \"" + s + "\"");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw FormatError("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_str();  // mpq canonical form prints "p" or "p/q"
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational ExactScalar::norm() const {
    Rational n = re * re;
    n += im * im;
    return n;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.re + b.re, a.im + b.im);
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.re - b.re, a.im - b.im);
}

ExactScalar operator-(const ExactScalar& a) { return ExactScalar(-a.re, -a.im); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    Rational re = a.re * b.re;
    re -= a.im * b.im;
    Rational im = a.re * b.im;
    im += a.im * b.re;
    return ExactScalar(std::move(re), std::move(im));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * invert(b); }

ExactScalar& operator+=(ExactScalar& a, const ExactScalar& b) {
    a.re += b.re;
    a.im += b.im;
    return a;
}

ExactScalar& operator-=(ExactScalar& a, const ExactScalar& b) {
    a.re -= b.re;
    a.im -= b.im;
    return a;
}

ExactScalar& operator*=(ExactScalar& a, const ExactScalar& b) {
    a = a * b;
    return a;
}

ExactScalar invert(const ExactScalar& s) {
    if (s.is_zero()) throw DomainError("ZeroInverse", "cannot invert 0");
    Rational n = s.norm();
    return ExactScalar(s.re / n, -s.im / n);
}

ExactScalar pow(const ExactScalar& s, long long e) {
    if (e < 0) return pow(invert(s), -e);
    ExactScalar result(1);
    ExactScalar base = s;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ULL) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

int cmp_lex(const ExactScalar& a, const ExactScalar& b) {
    int c = mpq_cmp(a.re.get_mpq_t(), b.re.get_mpq_t());
    if (c != 0) return c;
    return mpq_cmp(a.im.get_mpq_t(), b.im.get_mpq_t());
}

std::string to_string(const ExactScalar& s) {
    if (s.im == 0) return format_rational(s.re);
    std::string imag;
    if (s.im == 1)
        imag = "i";
    else if (s.im == -1)
        imag = "-i";
    else
        imag = format_rational(s.im) + "i";
    if (s.re == 0) return imag;
    if (imag[0] != '-') return format_rational(s.re) + "+" + imag;
    return format_rational(s.re) + imag;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << to_string(s); }

}  // namespace recurkit
