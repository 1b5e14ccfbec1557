#include "recurkit/exppoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "recurkit/error.hpp"
#include "recurkit/matrix.hpp"

namespace recurkit {

namespace {

// a (a-1) ... (a-i+1); zero when a < i.
Integer falling_factorial(long long a, int i) {
    Integer f = 1;
    for (int k = 0; k < i; ++k) f *= Integer(static_cast<long>(a - k));
    return f;
}

}  // namespace

ExponentialPolynomialFunction::ExponentialPolynomialFunction(std::vector<ExpPolyTerm> terms) {
    for (auto& term : terms) {
        if (term.a.is_zero()) continue;
        terms_.push_back(std::move(term));
    }
    std::sort(terms_.begin(), terms_.end(), [](const ExpPolyTerm& a, const ExpPolyTerm& b) {
        return lex_less(a.gamma, b.gamma);
    });
    for (std::size_t i = 0; i + 1 < terms_.size(); ++i)
        if (terms_[i].gamma == terms_[i + 1].gamma)
            throw DomainError("DuplicateRoot", "repeated gamma " + to_string(terms_[i].gamma));
}

int ExponentialPolynomialFunction::dimension() const {
    int d = 0;
    for (const auto& term : terms_) d += term.a.degree() + 1;
    return d;
}

ApproxScalar ExponentialPolynomialFunction::eval(const ApproxScalar& z) const {
    auto prec = z.precision();
    ApproxScalar acc(prec);
    for (const auto& term : terms_) {
        ApproxScalar gz = approximate(term.gamma, prec) * z;
        acc = acc + term.a.eval(z) * exp(gz);
    }
    return acc;
}

ExponentialPolynomialFunction ExponentialPolynomialFunction::derivative() const {
    std::vector<ExpPolyTerm> terms;
    for (const auto& term : terms_) {
        Polynomial b = term.a.derivative() + term.gamma * term.a;
        terms.push_back({std::move(b), term.gamma});
    }
    return ExponentialPolynomialFunction(std::move(terms));
}

std::vector<ExactScalar> taylor_coefficient_sequence(const ExponentialPolynomialFunction& f,
                                                     const ExactScalar& z0, int count) {
    if (count < 1) throw std::logic_error("count must be positive");
    if (!z0.is_zero())
        throw DomainError("NonzeroShiftUnsupported",
                          "exact Taylor data is only available at z0 = 0; shift the "
                          "coefficient polynomials to move the expansion point");
    std::vector<ExactScalar> u(static_cast<std::size_t>(count), ExactScalar(0));
    for (long long a = 0; a < count; ++a) {
        ExactScalar acc(0);
        for (const auto& term : f.terms()) {
            for (int i = 0; i <= term.a.degree(); ++i) {
                Integer ff = falling_factorial(a, i);
                if (ff == 0) continue;  // also guards gamma^(a-i) with a < i
                acc += term.a.coeff(i) * ExactScalar(Rational(ff)) * pow(term.gamma, a - i);
            }
        }
        u[static_cast<std::size_t>(a)] = acc;
    }
    return u;
}

int vanishing_order(const ExponentialPolynomialFunction& f, const ExactScalar& z0, int cap) {
    if (f.is_zero())
        throw DomainError("IdenticallyZero", "every coefficient polynomial is zero");
    int d = f.dimension();
    if (cap < d) throw DomainError("CapTooSmall", "cap must be at least the dimension");
    auto u = taylor_coefficient_sequence(f, z0, cap);
    for (int a = 0; a < cap; ++a) {
        if (!u[static_cast<std::size_t>(a)].is_zero()) {
            if (a > d - 1)
                throw std::logic_error("vanishing order exceeds the dimension bound");
            return a;
        }
    }
    throw std::logic_error("nonzero exponential polynomial with all Taylor data zero");
}

bool derivative_determinant_check(const std::vector<RootFactor>& system) {
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = i + 1; j < system.size(); ++j)
            if (system[i].gamma == system[j].gamma)
                throw DomainError("DuplicateRoot", "repeated gamma");
    int d = 0;
    for (const auto& rf : system) d += rf.multiplicity;

    ExactMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        std::size_t col = 0;
        for (const auto& rf : system) {
            for (int i = 0; i < rf.multiplicity; ++i) {
                Integer ff = falling_factorial(a, i);
                if (ff != 0)
                    m.at(static_cast<std::size_t>(a), col) =
                        ExactScalar(Rational(ff)) * pow(rf.gamma, a - i);
                ++col;
            }
        }
    }
    ExactScalar det = m.determinant();
    if (det.is_zero()) throw std::logic_error("derivative matrix is singular");

    // det M = (prod_{i<j} (gamma_j - gamma_i)^{t_i t_j}) * prod_j prod_{i<t_j} i!
    ExactScalar expected(1);
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = i + 1; j < system.size(); ++j)
            expected *= pow(system[j].gamma - system[i].gamma,
                            static_cast<long long>(system[i].multiplicity) *
                                system[j].multiplicity);
    for (const auto& rf : system)
        for (int i = 0; i < rf.multiplicity; ++i)
            expected *= ExactScalar(Rational(factorial(static_cast<unsigned long>(i))));
    if (det != expected)
        throw std::logic_error("derivative determinant disagrees with the product formula");
    return true;
}

}  // namespace recurkit
