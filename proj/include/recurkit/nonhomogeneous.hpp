#pragma once

#include <vector>

#include "recurkit/matrix.hpp"
#include "recurkit/polynomial.hpp"
#include "recurkit/recurrence.hpp"

namespace recurkit {

struct ForcingTerm {
    ExactScalar gamma;                  // distinct, nonzero
    int t = 1;                          // number of lambda coefficients
    std::vector<ExactScalar> lambda;    // lambda_{0..t-1}
    bool operator==(const ForcingTerm& o) const {
        return gamma == o.gamma && t == o.t && lambda == o.lambda;
    }
};

// Representation u(a+m) = b_1 u(a+m-1) + ... + b_m u(a)
//                         + sum_{j,i} lambda_ij a^i gamma_j^a,
// corresponding to the factorization P = Q R with R split into linear
// factors. Carries m head values u(0..m-1); m + sum t_j = d.
class NonHomogeneousForm {
public:
    NonHomogeneousForm() = default;
    NonHomogeneousForm(std::vector<ExactScalar> b, std::vector<ForcingTerm> forcing,
                       std::vector<ExactScalar> head);

    const std::vector<ExactScalar>& b() const { return b_; }
    const std::vector<ForcingTerm>& forcing() const { return forcing_; }
    const std::vector<ExactScalar>& head() const { return head_; }

    int m() const { return static_cast<int>(b_.size()); }
    int order() const;  // d = m + sum t_j
    // Q(T) = T^m - b_1 T^{m-1} - ... - b_m.
    Polynomial q_poly() const;
    // Forcing value sum_{j,i} lambda_ij a^i gamma_j^a.
    ExactScalar forcing_at(long long a) const;

    bool operator==(const NonHomogeneousForm& o) const {
        return b_ == o.b_ && forcing_ == o.forcing_ && head_ == o.head_;
    }

private:
    std::vector<ExactScalar> b_;
    std::vector<ForcingTerm> forcing_;
    std::vector<ExactScalar> head_;
};

// Run the relation forward to get the order-d homogeneous sequence with
// characteristic polynomial Q * prod (T - gamma_j)^{t_j}.
RecurrentSequence from_nonhomogeneous(const NonHomogeneousForm& form);

// Split seq along P = Q R: head = u(0..m-1) and lambda from solving the
// generalized Vandermonde system on the residual
// r(a) = u(a+m) - sum_i b_i u(a+m-i). FactorizationMismatch if Q times the
// expanded R is not the characteristic polynomial.
NonHomogeneousForm to_nonhomogeneous(const RecurrentSequence& seq, const Polynomial& q,
                                     const std::vector<RootFactor>& r_roots);

// Change-of-basis matrix between the d initial values and
// (head, lambda): block diagonal I_m plus the generalized Vandermonde
// matrix of the R roots.
ExactMatrix transition_matrix(const Polynomial& q, const std::vector<RootFactor>& r_roots);

}  // namespace recurkit
