#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recurkit/approx.hpp"
#include "recurkit/scalar.hpp"

namespace recurkit {

// Dense univariate polynomial over Q(i), coefficients ascending by degree,
// trailing zeros stripped (empty list = zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(ExactScalar(1)); }
    static Polynomial x();
    static Polynomial constant(const ExactScalar& v);
    // c0 + c1*z + ... from an initializer-style list.
    static Polynomial of(std::initializer_list<ExactScalar> coeffs);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<ExactScalar>& coeffs() const { return c_; }
    ExactScalar coeff(int k) const;
    const ExactScalar& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    ExactScalar eval(const ExactScalar& z) const;
    ApproxScalar eval(const ApproxScalar& z) const;

    Polynomial derivative() const;
    // p(z + c) by exact Taylor shift.
    Polynomial shifted(const ExactScalar& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void strip();
    std::vector<ExactScalar> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const ExactScalar& s, const Polynomial& a);

// Field division with remainder: a = q*b + r, deg r < deg b. b != 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Exact quotient; throws std::logic_error if the remainder is nonzero.
Polynomial div_exact(const Polynomial& a, const Polynomial& b);

// "T^2 - 2T + 1" style rendering for the text output mode.
std::string to_string(const Polynomial& p, const std::string& var = "T");
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct RootFactor {
    ExactScalar gamma;
    int multiplicity = 1;
    bool operator==(const RootFactor& o) const {
        return gamma == o.gamma && multiplicity == o.multiplicity;
    }
};

// prod (T - gamma_j)^{t_j}; monic of degree sum t_j. DuplicateRoot if two
// gamma values coincide.
Polynomial expand_root_factors(const std::vector<RootFactor>& roots);

// Monic gcd by the Euclidean algorithm. BothZero if both inputs are zero.
Polynomial monic_gcd(const Polynomial& p, const Polynomial& q);

// Largest t with (T - gamma)^t | p, by repeated exact division.
// ZeroPolynomial if p = 0.
int root_multiplicity(const Polynomial& p, const ExactScalar& gamma);

// Quotient of polynomials, kept reduced (gcd of num and den constant) with
// monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Exact evaluation; nullopt at a pole of the reduced form.
    std::optional<ExactScalar> eval(const ExactScalar& z) const;
    ApproxScalar eval(const ApproxScalar& z) const;
    RationalFunction derivative() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    Polynomial num_, den_;
};

// The truncation operator: the unique polynomial of degree < t with
// g - result vanishing to order >= t at z0. PoleAtNode if den(g)(z0) = 0.
Polynomial taylor_truncate(const RationalFunction& g, const ExactScalar& z0, int t);

// Complete linear-factor decomposition over Q(i) by bounded exhaustive
// candidate search (divisor enumeration on coefficient norms). Returns
// nullopt when p does not split within the search bound. p must be nonzero;
// roots are returned sorted, with multiplicities summing to deg p.
std::optional<std::vector<RootFactor>> gaussian_root_factors(const Polynomial& p);

}  // namespace recurkit
