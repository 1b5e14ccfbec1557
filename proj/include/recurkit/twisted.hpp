#pragma once

#include <vector>

#include "recurkit/polynomial.hpp"
#include "recurkit/recurrence.hpp"

namespace recurkit {

// Family of twisted binary forms F_a(X, Y) = prod_i (X - alpha_i eps_i^a Y),
// written X^d - U_1(a) X^{d-1} Y + ... + (-1)^d U_d(a) Y^d.
class TwistedFamily {
public:
    TwistedFamily() = default;
    TwistedFamily(std::vector<ExactScalar> alpha, std::vector<ExactScalar> eps);

    const std::vector<ExactScalar>& alpha() const { return alpha_; }
    const std::vector<ExactScalar>& eps() const { return eps_; }
    int d() const { return static_cast<int>(alpha_.size()); }

private:
    std::vector<ExactScalar> alpha_;
    std::vector<ExactScalar> eps_;
};

// U_1(a)..U_d(a), computed both as elementary symmetric functions of the
// twisted roots alpha_i eps_i^a and as the explicit sum over index subsets;
// the two routes are compared exactly before returning.
std::vector<ExactScalar> form_coefficients(const TwistedFamily& fam, long long a);

struct CoefficientSpec {
    int h = 0;
    std::vector<ExactScalar> e_set;  // E_h, deduplicated, sorted
    int m = 0;                       // cardinality m_h
    Integer bound;                   // min{C(d,h), C(m1+h-1,h), C(m1+d-h-1,d-h)}
    Polynomial charpoly;             // prod_{eta in E_h} (T - eta)
};

// E_h with exact deduplication, the cardinality bound
// m_h = m_{d-h} <= min{C(d,h), C(m_1+h-1,h), C(m_1+d-h-1,d-h)}, and the
// order-m_h recurrence membership of U_h, all asserted before returning.
CoefficientSpec coefficient_spec(const TwistedFamily& fam, int h);

// Verifies that eta -> eps_1...eps_d / eta maps E_h bijectively onto
// E_{d-h}, and that the reciprocal-subset identity for U_h(a) holds at
// every a in the window. ZeroAlpha when some alpha_i = 0 (the identity
// divides by alpha products; the bijection half is still checked first).
bool duality_check(const TwistedFamily& fam, int h, IndexRange window);

// U_h packaged as a recurrent sequence of order m_h with initial values
// U_h(0..m_h-1).
RecurrentSequence uh_sequence(const TwistedFamily& fam, int h);

struct TwoBlockReport {
    TwistedFamily family;
    std::vector<ExactScalar> e1, e2, ed1, ed2;  // ed2 empty when d = 2
    Polynomial charpoly_u1, charpoly_u2, charpoly_ud1, charpoly_ud2;
    Polynomial charpoly_ud1_full;  // order-d annihilator with repetitions
    ExactScalar a_coeff;           // (T - eps^2)(T - eta^2) = T^2 - A T - B
    ExactScalar b_coeff;
    ExactScalar c_constant;        // U_2(a+2) = A U_2(a+1) + B U_2(a) + C (eps eta)^a
};

// The two-value twist family eps_1 = ... = eps_l = eps,
// eps_{l+1} = ... = eps_d = eta. Computes the E-sets and characteristic
// polynomials, checks them against their closed-form descriptions, solves
// for the constant C from a = 0 and verifies the relation on 0..10.
// EqualTwists when eps = eta.
TwoBlockReport two_block_family(const ExactScalar& eps, const ExactScalar& eta, int l, int d,
                                const std::vector<ExactScalar>& alpha);

}  // namespace recurkit
