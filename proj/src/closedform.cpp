#include "recurkit/closedform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "recurkit/error.hpp"
#include "recurkit/matrix.hpp"

namespace recurkit {

ExponentialPolynomialSequence::ExponentialPolynomialSequence(std::vector<ClosedFormTerm> terms) {
    for (auto& term : terms) {
        if (term.gamma.is_zero())
            throw DomainError("InvalidClosedForm", "gamma must be nonzero");
        if (term.t < 1 || term.p.degree() >= term.t)
            throw DomainError("InvalidClosedForm", "need deg(p) < t");
        if (term.p.is_zero()) continue;
        terms_.push_back(std::move(term));
    }
    std::sort(terms_.begin(), terms_.end(), [](const ClosedFormTerm& a, const ClosedFormTerm& b) {
        return lex_less(a.gamma, b.gamma);
    });
    for (std::size_t i = 0; i + 1 < terms_.size(); ++i)
        if (terms_[i].gamma == terms_[i + 1].gamma)
            throw DomainError("DuplicateRoot", "repeated gamma " + to_string(terms_[i].gamma));
}

int ExponentialPolynomialSequence::order() const {
    int d = 0;
    for (const auto& term : terms_) d += term.t;
    return d;
}

ExactScalar ExponentialPolynomialSequence::eval(long long a) const {
    ExactScalar acc(0);
    ExactScalar index(static_cast<long>(a));
    for (const auto& term : terms_) acc += term.p.eval(index) * pow(term.gamma, a);
    return acc;
}

RecurrentSequence from_closed_form(const ExponentialPolynomialSequence& eps) {
    std::vector<RootFactor> roots;
    roots.reserve(eps.terms().size());
    for (const auto& term : eps.terms()) roots.push_back({term.gamma, term.t});
    Polynomial charpoly = expand_root_factors(roots);
    LinearRecurrence rec = LinearRecurrence::from_char_poly(charpoly);
    int d = rec.order();
    std::vector<ExactScalar> initial(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) initial[static_cast<std::size_t>(a)] = eps.eval(a);
    return RecurrentSequence(std::move(rec), std::move(initial));
}

ExponentialPolynomialSequence to_closed_form(const RecurrentSequence& seq,
                                             const std::optional<std::vector<RootFactor>>& roots) {
    Polynomial charpoly = seq.rec().char_poly();
    std::vector<RootFactor> factors;
    if (roots) {
        if (expand_root_factors(*roots) != charpoly)
            throw DomainError("RootMismatch",
                              "supplied roots do not expand to the characteristic polynomial");
        factors = *roots;
    } else {
        auto found = gaussian_root_factors(charpoly);
        if (!found)
            throw DomainError("RootsDontSplit",
                              "characteristic polynomial does not split over Q(i)");
        factors = *found;
    }

    int d = seq.order();
    if (d == 0) return ExponentialPolynomialSequence();

    // Transition matrix (a^i gamma_j^a) at a = 0..d-1; solve for the v_ij.
    ExactMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        std::size_t col = 0;
        for (const auto& rf : factors) {
            ExactScalar ga = pow(rf.gamma, a);
            ExactScalar ai(1);
            for (int i = 0; i < rf.multiplicity; ++i) {
                m.at(static_cast<std::size_t>(a), col++) = ai * ga;
                ai *= ExactScalar(a);  // 0^0 = 1 convention via ai starting at 1
            }
        }
    }
    auto v = solve(m, seq.initial());
    if (!v) throw std::logic_error("generalized Vandermonde system is singular");

    std::vector<ClosedFormTerm> terms;
    std::size_t col = 0;
    for (const auto& rf : factors) {
        std::vector<ExactScalar> coeffs(static_cast<std::size_t>(rf.multiplicity));
        for (int i = 0; i < rf.multiplicity; ++i) coeffs[static_cast<std::size_t>(i)] = (*v)[col++];
        terms.push_back({rf.gamma, rf.multiplicity, Polynomial(std::move(coeffs))});
    }
    return ExponentialPolynomialSequence(std::move(terms));
}

RationalFunction generating_function(const RecurrentSequence& seq) {
    int d = seq.order();
    const auto& c = seq.rec().c();
    std::vector<ExactScalar> den(static_cast<std::size_t>(d) + 1, ExactScalar(0));
    den[0] = ExactScalar(1);
    for (int i = 1; i <= d; ++i) den[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i - 1)];
    std::vector<ExactScalar> num(static_cast<std::size_t>(std::max(d, 1)), ExactScalar(0));
    for (int j = 0; j < d; ++j) {
        ExactScalar acc = seq.initial()[static_cast<std::size_t>(j)];
        for (int i = 1; i <= j; ++i)
            acc -= c[static_cast<std::size_t>(i - 1)] * seq.initial()[static_cast<std::size_t>(j - i)];
        num[static_cast<std::size_t>(j)] = acc;
    }
    return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& rf,
                                                   const std::vector<RootFactor>& den_roots) {
    // D(z) = prod (1 - gamma_j z)^{t_j}
    Polynomial dpoly = Polynomial::one();
    int d = 0;
    for (const auto& r : den_roots) {
        if (r.gamma.is_zero()) throw DomainError("InvalidClosedForm", "gamma must be nonzero");
        Polynomial lin({ExactScalar(1), -r.gamma});
        for (int k = 0; k < r.multiplicity; ++k) dpoly = dpoly * lin;
        d += r.multiplicity;
    }
    for (std::size_t i = 0; i < den_roots.size(); ++i)
        for (std::size_t j = i + 1; j < den_roots.size(); ++j)
            if (den_roots[i].gamma == den_roots[j].gamma)
                throw DomainError("DuplicateRoot", "repeated gamma");

    if (rf.num().degree() >= rf.den().degree())
        throw DomainError("DegreeTooLarge", "numerator degree must be below denominator degree");

    // rf.den() is monic; D = leading(D) * rf.den() must hold exactly.
    if (dpoly.degree() != rf.den().degree() || dpoly.monic() != rf.den())
        throw DomainError("DenominatorMismatch",
                          "denominator is not the stated product of linear factors");
    ExactScalar scale = dpoly.leading();  // D = scale * den
    Polynomial num_d = scale * rf.num();  // rf = num_d / D

    // num_d(z) = sum_{j,i} q_ij (1 - gamma_j z)^{t_j-1-i} prod_{k != j} (1 - gamma_k z)^{t_k}
    ExactMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    std::size_t col = 0;
    for (const auto& rj : den_roots) {
        Polynomial outer = Polynomial::one();
        for (const auto& rk : den_roots) {
            if (&rk == &rj) continue;
            Polynomial lin({ExactScalar(1), -rk.gamma});
            for (int k = 0; k < rk.multiplicity; ++k) outer = outer * lin;
        }
        Polynomial lin_j({ExactScalar(1), -rj.gamma});
        for (int i = 0; i < rj.multiplicity; ++i) {
            Polynomial basis = outer;
            for (int k = 0; k < rj.multiplicity - 1 - i; ++k) basis = basis * lin_j;
            for (int row = 0; row < d; ++row)
                m.at(static_cast<std::size_t>(row), col) = basis.coeff(row);
            ++col;
        }
    }
    std::vector<ExactScalar> rhs(static_cast<std::size_t>(d));
    for (int row = 0; row < d; ++row) rhs[static_cast<std::size_t>(row)] = num_d.coeff(row);
    auto q = solve(m, rhs);
    if (!q) throw std::logic_error("partial fraction system is singular");

    std::vector<PartialFractionTerm> result;
    col = 0;
    for (const auto& rj : den_roots) {
        PartialFractionTerm term;
        term.gamma = rj.gamma;
        for (int i = 0; i < rj.multiplicity; ++i) term.q.push_back((*q)[col++]);
        result.push_back(std::move(term));
    }
    return result;
}

RecurrentSequence seq_add(const RecurrentSequence& s1, const RecurrentSequence& s2) {
    Polynomial p1 = s1.rec().char_poly();
    Polynomial p2 = s2.rec().char_poly();
    Polynomial annihilator;
    if (p1.degree() == 0)
        annihilator = p2;
    else if (p2.degree() == 0)
        annihilator = p1;
    else
        annihilator = div_exact(p1 * p2, monic_gcd(p1, p2));
    LinearRecurrence rec = LinearRecurrence::from_char_poly(annihilator);
    int d = rec.order();
    std::vector<ExactScalar> initial(static_cast<std::size_t>(d));
    auto t1 = eval_range(s1, 0, d - 1);
    auto t2 = eval_range(s2, 0, d - 1);
    for (int a = 0; a < d; ++a)
        initial[static_cast<std::size_t>(a)] = t1[static_cast<std::size_t>(a)] + t2[static_cast<std::size_t>(a)];
    return RecurrentSequence(std::move(rec), std::move(initial));
}

RecurrentSequence seq_mul(const RecurrentSequence& s1, const RecurrentSequence& s2,
                          const std::optional<std::vector<RootFactor>>& roots1,
                          const std::optional<std::vector<RootFactor>>& roots2) {
    auto factors_of = [](const RecurrentSequence& s,
                         const std::optional<std::vector<RootFactor>>& given) {
        if (given) {
            if (expand_root_factors(*given) != s.rec().char_poly())
                throw DomainError("RootMismatch",
                                  "supplied roots do not expand to the characteristic polynomial");
            return *given;
        }
        auto found = gaussian_root_factors(s.rec().char_poly());
        if (!found)
            throw DomainError("RootsDontSplit",
                              "characteristic polynomial does not split over Q(i)");
        return *found;
    };
    auto f1 = factors_of(s1, roots1);
    auto f2 = factors_of(s2, roots2);

    // Zero-order operand: the product is the zero sequence.
    if (f1.empty() || f2.empty()) return RecurrentSequence(LinearRecurrence(), {});

    // Products gamma_j gamma'_k with exponent t_j + t'_k - 1; collisions keep
    // the largest exponent.
    std::vector<RootFactor> products;
    for (const auto& a : f1)
        for (const auto& b : f2) {
            ExactScalar g = a.gamma * b.gamma;
            int t = a.multiplicity + b.multiplicity - 1;
            bool merged = false;
            for (auto& existing : products) {
                if (existing.gamma == g) {
                    existing.multiplicity = std::max(existing.multiplicity, t);
                    merged = true;
                    break;
                }
            }
            if (!merged) products.push_back({g, t});
        }
    std::sort(products.begin(), products.end(),
              [](const RootFactor& a, const RootFactor& b) { return lex_less(a.gamma, b.gamma); });

    LinearRecurrence rec = LinearRecurrence::from_char_poly(expand_root_factors(products));
    int d = rec.order();
    auto t1 = eval_range(s1, 0, d - 1);
    auto t2 = eval_range(s2, 0, d - 1);
    std::vector<ExactScalar> initial(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
        initial[static_cast<std::size_t>(a)] = t1[static_cast<std::size_t>(a)] * t2[static_cast<std::size_t>(a)];
    return RecurrentSequence(std::move(rec), std::move(initial));
}

}  // namespace recurkit
