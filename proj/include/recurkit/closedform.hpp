#pragma once

#include <optional>
#include <vector>

#include "recurkit/polynomial.hpp"
#include "recurkit/recurrence.hpp"

namespace recurkit {

struct ClosedFormTerm {
    ExactScalar gamma;  // distinct, nonzero
    int t = 1;          // declared multiplicity; deg(p) < t
    Polynomial p;       // coefficient polynomial in the index a
    bool operator==(const ClosedFormTerm& o) const {
        return gamma == o.gamma && t == o.t && p == o.p;
    }
};

// Closed form u(a) = sum_j p_j(a) gamma_j^a. Canonical: terms sorted by
// gamma, zero coefficient polynomials dropped; equality is structural.
class ExponentialPolynomialSequence {
public:
    ExponentialPolynomialSequence() = default;
    explicit ExponentialPolynomialSequence(std::vector<ClosedFormTerm> terms);

    const std::vector<ClosedFormTerm>& terms() const { return terms_; }
    // d = sum of declared multiplicities.
    int order() const;
    bool is_zero() const { return terms_.empty(); }

    // Direct evaluation of the closed form at index a (a may be negative).
    ExactScalar eval(long long a) const;

    bool operator==(const ExponentialPolynomialSequence& o) const {
        return terms_ == o.terms_;
    }

private:
    std::vector<ClosedFormTerm> terms_;
};

// Recurrence of order d = sum t_j whose characteristic polynomial is
// prod (T - gamma_j)^{t_j}, with initial values taken from the closed form.
RecurrentSequence from_closed_form(const ExponentialPolynomialSequence& eps);

// Inverse: factor the characteristic polynomial (over Q(i), or verify the
// supplied roots) and solve the generalized Vandermonde system for the
// coefficient polynomials. RootsDontSplit / RootMismatch on failure.
ExponentialPolynomialSequence to_closed_form(
    const RecurrentSequence& seq,
    const std::optional<std::vector<RootFactor>>& roots = std::nullopt);

// U(z) = sum_{a>=0} u(a) z^a as a reduced rational function; the unreduced
// denominator is 1 - c_1 z - ... - c_d z^d = z^d P(1/z).
RationalFunction generating_function(const RecurrentSequence& seq);

struct PartialFractionTerm {
    ExactScalar gamma;
    std::vector<ExactScalar> q;  // q[i] is the coefficient of 1/(1 - gamma z)^{i+1}
};

// Decompose rf over the factored denominator prod (1 - gamma_j z)^{t_j};
// verified exactly by recombination. DenominatorMismatch / DegreeTooLarge.
std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& rf,
                                                   const std::vector<RootFactor>& den_roots);

// Termwise sum; characteristic polynomial P1 P2 / gcd(P1, P2).
RecurrentSequence seq_add(const RecurrentSequence& s1, const RecurrentSequence& s2);

// Termwise product; characteristic polynomial
// prod_{j,k} (T - gamma_j gamma'_k)^{t_j + t'_k - 1}, colliding products
// merged with the maximum exponent. Both inputs must split over Q(i)
// (or come with verified root lists).
RecurrentSequence seq_mul(const RecurrentSequence& s1, const RecurrentSequence& s2,
                          const std::optional<std::vector<RootFactor>>& roots1 = std::nullopt,
                          const std::optional<std::vector<RootFactor>>& roots2 = std::nullopt);

}  // namespace recurkit
