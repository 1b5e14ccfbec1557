#include "recurkit/nonhomogeneous.hpp"

#include <stdexcept>

#include "recurkit/error.hpp"
#include "recurkit/interpolation.hpp"

namespace recurkit {

NonHomogeneousForm::NonHomogeneousForm(std::vector<ExactScalar> b,
                                       std::vector<ForcingTerm> forcing,
                                       std::vector<ExactScalar> head)
    : b_(std::move(b)), forcing_(std::move(forcing)), head_(std::move(head)) {
    for (std::size_t j = 0; j < forcing_.size(); ++j) {
        const auto& term = forcing_[j];
        if (term.gamma.is_zero())
            throw DomainError("InvalidForcing", "forcing gamma must be nonzero");
        if (term.t < 1 || static_cast<int>(term.lambda.size()) != term.t)
            throw DomainError("InvalidForcing", "need exactly t lambda coefficients");
        for (std::size_t k = j + 1; k < forcing_.size(); ++k)
            if (term.gamma == forcing_[k].gamma)
                throw DomainError("DuplicateRoot", "repeated forcing gamma");
    }
    if (head_.size() != b_.size())
        throw DomainError("InvalidRecurrence", "need exactly m head values");
    if (!b_.empty() && b_.back().is_zero())
        throw DomainError("InvalidRecurrence", "Q(0) = -b_m must be nonzero");
}

int NonHomogeneousForm::order() const {
    int d = m();
    for (const auto& term : forcing_) d += term.t;
    return d;
}

Polynomial NonHomogeneousForm::q_poly() const {
    int deg = m();
    std::vector<ExactScalar> coeffs(static_cast<std::size_t>(deg) + 1, ExactScalar(0));
    coeffs[static_cast<std::size_t>(deg)] = ExactScalar(1);
    for (int i = 1; i <= deg; ++i)
        coeffs[static_cast<std::size_t>(deg - i)] = -b_[static_cast<std::size_t>(i - 1)];
    return Polynomial(std::move(coeffs));
}

ExactScalar NonHomogeneousForm::forcing_at(long long a) const {
    ExactScalar acc(0);
    ExactScalar index(static_cast<long>(a));
    for (const auto& term : forcing_) {
        ExactScalar poly(0);
        ExactScalar ai(1);
        for (int i = 0; i < term.t; ++i) {
            poly += term.lambda[static_cast<std::size_t>(i)] * ai;
            ai *= index;
        }
        acc += poly * pow(term.gamma, a);
    }
    return acc;
}

RecurrentSequence from_nonhomogeneous(const NonHomogeneousForm& form) {
    std::vector<RootFactor> roots;
    for (const auto& term : form.forcing()) roots.push_back({term.gamma, term.t});
    Polynomial charpoly = form.q_poly() * expand_root_factors(roots);
    LinearRecurrence rec = LinearRecurrence::from_char_poly(charpoly);
    int d = rec.order();
    int m = form.m();
    std::vector<ExactScalar> u(form.head());
    u.resize(static_cast<std::size_t>(d));
    for (long long a = 0; a + m < d; ++a) {
        ExactScalar next = form.forcing_at(a);
        for (int i = 1; i <= m; ++i)
            next += form.b()[static_cast<std::size_t>(i - 1)] *
                    u[static_cast<std::size_t>(a + m - i)];
        u[static_cast<std::size_t>(a + m)] = next;
    }
    return RecurrentSequence(std::move(rec), std::move(u));
}

NonHomogeneousForm to_nonhomogeneous(const RecurrentSequence& seq, const Polynomial& q,
                                     const std::vector<RootFactor>& r_roots) {
    if (q.is_zero() || !q.is_monic())
        throw DomainError("FactorizationMismatch", "Q must be monic");
    if (q.degree() > 0 && q.coeff(0).is_zero())
        throw DomainError("FactorizationMismatch", "Q(0) must be nonzero");
    Polynomial r = expand_root_factors(r_roots);
    if (q * r != seq.rec().char_poly())
        throw DomainError("FactorizationMismatch",
                          "Q * R is not the characteristic polynomial of the sequence");

    int m = q.degree();
    std::vector<ExactScalar> b(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) b[static_cast<std::size_t>(i - 1)] = -q.coeff(m - i);

    int k = r.degree();
    auto u = eval_range(seq, 0, m + k - 1);
    std::vector<ExactScalar> head(u.begin(), u.begin() + m);

    std::vector<ForcingTerm> forcing;
    if (k > 0) {
        // Residual r(a) = u(a+m) - sum_i b_i u(a+m-i), annihilated by R.
        std::vector<ExactScalar> residual(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            ExactScalar acc = u[static_cast<std::size_t>(a + m)];
            for (int i = 1; i <= m; ++i)
                acc -= b[static_cast<std::size_t>(i - 1)] * u[static_cast<std::size_t>(a + m - i)];
            residual[static_cast<std::size_t>(a)] = acc;
        }
        // Solve residual(a) = sum_{j,i} lambda_ij a^i gamma_j^a on a = 0..k-1.
        ExactMatrix mat(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            std::size_t col = 0;
            for (const auto& rf : r_roots) {
                ExactScalar ga = pow(rf.gamma, a);
                ExactScalar ai(1);
                for (int i = 0; i < rf.multiplicity; ++i) {
                    mat.at(static_cast<std::size_t>(a), col++) = ai * ga;
                    ai *= ExactScalar(a);
                }
            }
        }
        auto lambda = solve(mat, residual);
        if (!lambda) throw std::logic_error("forcing extraction system is singular");
        std::size_t col = 0;
        for (const auto& rf : r_roots) {
            ForcingTerm term;
            term.gamma = rf.gamma;
            term.t = rf.multiplicity;
            for (int i = 0; i < rf.multiplicity; ++i) term.lambda.push_back((*lambda)[col++]);
            forcing.push_back(std::move(term));
        }
    }
    return NonHomogeneousForm(std::move(b), std::move(forcing), std::move(head));
}

ExactMatrix transition_matrix(const Polynomial& q, const std::vector<RootFactor>& r_roots) {
    if (q.is_zero() || !q.is_monic())
        throw DomainError("FactorizationMismatch", "Q must be monic");
    if (q.degree() > 0 && q.coeff(0).is_zero())
        throw DomainError("FactorizationMismatch", "Q(0) must be nonzero");
    int m = q.degree();
    NodeSystem system(r_roots);
    ExactMatrix a = build_matrix(system);
    std::size_t d = static_cast<std::size_t>(m) + a.rows();
    ExactMatrix t(d, d);
    for (int i = 0; i < m; ++i)
        t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = ExactScalar(1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t.at(static_cast<std::size_t>(m) + i, static_cast<std::size_t>(m) + j) = a.at(i, j);
    return t;
}

}  // namespace recurkit
