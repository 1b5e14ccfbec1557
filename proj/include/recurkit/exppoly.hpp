#pragma once

#include <vector>

#include "recurkit/approx.hpp"
#include "recurkit/polynomial.hpp"

namespace recurkit {

struct ExpPolyTerm {
    Polynomial a;        // nonzero coefficient polynomial
    ExactScalar gamma;   // exponent factor; zero allowed (plain polynomial term)
    bool operator==(const ExpPolyTerm& o) const { return a == o.a && gamma == o.gamma; }
};

// F(z) = sum_j a_j(z) e^{gamma_j z} with distinct gamma_j and nonzero a_j.
// Each term contributes t_j = deg(a_j) + 1 to the dimension d.
class ExponentialPolynomialFunction {
public:
    ExponentialPolynomialFunction() = default;
    explicit ExponentialPolynomialFunction(std::vector<ExpPolyTerm> terms);

    const std::vector<ExpPolyTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int dimension() const;  // d = sum (deg a_j + 1)

    ApproxScalar eval(const ApproxScalar& z) const;
    // F'(z): termwise a_j -> a_j' + gamma_j a_j.
    ExponentialPolynomialFunction derivative() const;

    bool operator==(const ExponentialPolynomialFunction& o) const { return terms_ == o.terms_; }

private:
    std::vector<ExpPolyTerm> terms_;
};

// u(a) = d^a F / dz^a (0) for a = 0..count-1, by the falling-factorial
// expansion of the Taylor coefficients. Exact mode covers z0 = 0 only
// (NonzeroShiftUnsupported otherwise); shift the coefficient polynomials
// first to move the expansion point.
std::vector<ExactScalar> taylor_coefficient_sequence(const ExponentialPolynomialFunction& f,
                                                     const ExactScalar& z0, int count);

// Smallest a with u(a) != 0; the vanishing-order bound guarantees
// a <= d - 1, and the operation fails loudly if the scan violates it.
// IdenticallyZero when F has no terms. Requires cap >= d.
int vanishing_order(const ExponentialPolynomialFunction& f, const ExactScalar& z0, int cap);

// Builds the d x d matrix of derivatives (d/dz)^a (z^i e^{gamma_j z}) at 0
// and confirms its determinant is nonzero; cross-checked against the
// product formula prod_{i<j} (gamma_j - gamma_i)^{t_i t_j} scaled by the
// row factorials when all gamma_j are nonzero.
bool derivative_determinant_check(const std::vector<RootFactor>& system);

}  // namespace recurkit
