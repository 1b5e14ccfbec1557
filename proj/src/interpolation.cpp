#include "recurkit/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "recurkit/error.hpp"

namespace recurkit {

NodeSystem::NodeSystem(std::vector<RootFactor> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].multiplicity < 1)
            throw DomainError("InvalidNodeSystem", "multiplicities must be positive");
        for (std::size_t j = i + 1; j < nodes_.size(); ++j)
            if (nodes_[i].gamma == nodes_[j].gamma)
                throw DomainError("DuplicateRoot", "repeated node " + to_string(nodes_[i].gamma));
        d_ += nodes_[i].multiplicity;
    }
}

int NodeSystem::block_offset(std::size_t j) const {
    int s = 0;
    for (std::size_t k = 0; k < j; ++k) s += nodes_[k].multiplicity;
    return s;
}

HermiteData::HermiteData(NodeSystem system, std::vector<std::vector<ExactScalar>> values)
    : system_(std::move(system)), values_(std::move(values)) {
    if (values_.size() != system_.nodes().size())
        throw DomainError("InvalidHermiteData", "one value list per node required");
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (static_cast<int>(values_[j].size()) != system_.nodes()[j].multiplicity)
            throw DomainError("InvalidHermiteData", "need exactly t_j values per node");
}

ExactMatrix build_matrix(const NodeSystem& system) {
    int d = system.dimension();
    ExactMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    std::size_t row = 0;
    for (const auto& node : system.nodes()) {
        for (int i = 0; i < node.multiplicity; ++i, ++row) {
            for (int k = 0; k < d; ++k) {
                if (k < i) continue;  // binom(k, i) = 0 for k < i
                ExactScalar entry =
                    ExactScalar(Rational(binomial(static_cast<unsigned long>(k),
                                                  static_cast<unsigned long>(i)))) *
                    pow(node.gamma, k - i);
                m.at(row, static_cast<std::size_t>(k)) = entry;
            }
        }
    }
    return m;
}

ExactScalar vandermonde_determinant(const NodeSystem& system) {
    ExactScalar det = build_matrix(system).determinant();
    ExactScalar formula(1);
    const auto& nodes = system.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            formula *= pow(nodes[j].gamma - nodes[i].gamma,
                           static_cast<long long>(nodes[i].multiplicity) *
                               nodes[j].multiplicity);
    if (det != formula)
        throw std::logic_error("elimination determinant disagrees with the product formula");
    return det;
}

Polynomial hermite_interpolate(const HermiteData& data) {
    const auto& nodes = data.system().nodes();
    Polynomial f;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const ExactScalar& gj = nodes[j].gamma;
        int tj = nodes[j].multiplicity;

        // h_j(z) = prod_{k != j} ((z - gamma_k)/(gamma_j - gamma_k))^{t_k}
        Polynomial hj = Polynomial::one();
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (k == j) continue;
            ExactScalar scale = invert(gj - nodes[k].gamma);
            Polynomial lin = scale * Polynomial({-nodes[k].gamma, ExactScalar(1)});
            for (int e = 0; e < nodes[k].multiplicity; ++e) hj = hj * lin;
        }

        // p_j(z) = sum_i eta_ij (z - gamma_j)^i / i!
        Polynomial pj;
        Polynomial lin_j({-gj, ExactScalar(1)});
        Polynomial power = Polynomial::one();
        for (int i = 0; i < tj; ++i) {
            ExactScalar coeff = data.values()[j][static_cast<std::size_t>(i)] /
                                ExactScalar(Rational(factorial(static_cast<unsigned long>(i))));
            pj = pj + coeff * power;
            power = power * lin_j;
        }

        Polynomial qj = taylor_truncate(RationalFunction(pj, hj), gj, tj);
        f = f + hj * qj;
    }
    return f;
}

Polynomial newton_interpolate(const HermiteData& data) {
    const auto& nodes = data.system().nodes();
    int d = data.system().dimension();
    if (d == 0) return Polynomial();

    // Node sequence with each gamma_j written t_j times (grouped), plus a map
    // back to (node index, offset) for the confluent entries.
    std::vector<ExactScalar> zs;
    std::vector<std::size_t> owner;
    for (std::size_t j = 0; j < nodes.size(); ++j)
        for (int i = 0; i < nodes[j].multiplicity; ++i) {
            zs.push_back(nodes[j].gamma);
            owner.push_back(j);
        }

    // dd[i][j] = f[z_i..z_j]; repeated nodes take eta_{kj}/k!.
    std::vector<std::vector<ExactScalar>> dd(static_cast<std::size_t>(d),
                                             std::vector<ExactScalar>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            data.values()[owner[static_cast<std::size_t>(i)]][0];
    for (int span = 1; span < d; ++span) {
        for (int i = 0; i + span < d; ++i) {
            int j = i + span;
            if (zs[static_cast<std::size_t>(i)] == zs[static_cast<std::size_t>(j)]) {
                // All of z_i..z_j coincide (repeats are contiguous).
                dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    data.values()[owner[static_cast<std::size_t>(i)]][static_cast<std::size_t>(span)] /
                    ExactScalar(Rational(factorial(static_cast<unsigned long>(span))));
            } else {
                dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (dd[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] -
                     dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]) /
                    (zs[static_cast<std::size_t>(j)] - zs[static_cast<std::size_t>(i)]);
            }
        }
    }

    Polynomial f = Polynomial::constant(dd[0][static_cast<std::size_t>(d - 1)]);
    for (int k = d - 2; k >= 0; --k) {
        Polynomial lin({-zs[static_cast<std::size_t>(k)], ExactScalar(1)});
        f = f * lin + Polynomial::constant(dd[0][static_cast<std::size_t>(k)]);
    }
    return f;
}

namespace {

ApproxScalar approx_pow(const ApproxScalar& base, int e) {
    ApproxScalar acc = approximate(ExactScalar(1), base.precision());
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

// Derivative data eta_{ij} at the working precision. Exact inputs stay
// exact whenever they are representable (rational data, e^0 factors).
std::vector<std::vector<ApproxScalar>> derivative_data(const AnalyticFunction& f,
                                                       const NodeSystem& system, long bits) {
    std::vector<std::vector<ApproxScalar>> eta;
    int max_t = 0;
    for (const auto& node : system.nodes()) max_t = std::max(max_t, node.multiplicity);

    if (std::holds_alternative<RationalFunction>(f)) {
        const auto& rf = std::get<RationalFunction>(f);
        std::vector<RationalFunction> derivs{rf};
        for (int i = 1; i < max_t; ++i) derivs.push_back(derivs.back().derivative());
        for (const auto& node : system.nodes()) {
            std::vector<ApproxScalar> row;
            for (int i = 0; i < node.multiplicity; ++i) {
                auto v = derivs[static_cast<std::size_t>(i)].eval(node.gamma);
                if (!v)
                    throw DomainError("PoleAtNode",
                                      "integrand has a pole at node " + to_string(node.gamma));
                row.push_back(approximate(*v, bits));
            }
            eta.push_back(std::move(row));
        }
        return eta;
    }

    const auto& ep = std::get<ExponentialPolynomialFunction>(f);
    std::vector<ExponentialPolynomialFunction> derivs{ep};
    for (int i = 1; i < max_t; ++i) derivs.push_back(derivs.back().derivative());
    for (const auto& node : system.nodes()) {
        std::vector<ApproxScalar> row;
        for (int i = 0; i < node.multiplicity; ++i) {
            ApproxScalar acc(static_cast<mpfr_prec_t>(bits));
            for (const auto& term : derivs[static_cast<std::size_t>(i)].terms()) {
                ExactScalar mu_gamma = term.gamma * node.gamma;
                ApproxScalar factor = exp(approximate(mu_gamma, bits));
                acc = acc + approximate(term.a.eval(node.gamma), bits) * factor;
            }
            row.push_back(std::move(acc));
        }
        eta.push_back(std::move(row));
    }
    return eta;
}

ApproxScalar eval_function(const AnalyticFunction& f, const ApproxScalar& z) {
    if (std::holds_alternative<RationalFunction>(f))
        return std::get<RationalFunction>(f).eval(z);
    return std::get<ExponentialPolynomialFunction>(f).eval(z);
}

// Gaussian elimination over ApproxScalar with partial pivoting by magnitude.
std::vector<ApproxScalar> approx_solve(std::vector<std::vector<ApproxScalar>> m,
                                       std::vector<ApproxScalar> rhs) {
    std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        BigFloat best_mag = m[col][col].magnitude();
        for (std::size_t i = col + 1; i < n; ++i) {
            BigFloat mag = m[i][col].magnitude();
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (best != col) {
            std::swap(m[best], m[col]);
            std::swap(rhs[best], rhs[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            ApproxScalar f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
            rhs[i] = rhs[i] - f * rhs[col];
        }
    }
    std::vector<ApproxScalar> x(n, ApproxScalar(rhs.empty() ? 53 : rhs[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        ApproxScalar acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace

ApproxScalar contour_residual(const AnalyticFunction& f, const NodeSystem& system,
                              const ApproxScalar& z, const ContourParams& params) {
    if (system.nodes().empty()) throw DomainError("InvalidNodeSystem", "need at least one node");
    if (params.points < 64)
        throw DomainError("TooFewQuadraturePoints", "need at least 64 quadrature points");
    if (params.radius <= 0) throw DomainError("InvalidRadius", "radius must be positive");
    long bits = params.bits;
    if (bits < 24) throw DomainError("PrecisionTooLow", "need at least 24 bits");
    auto prec = static_cast<mpfr_prec_t>(bits);

    // Exact containment checks against the circle |zeta - center| = radius.
    ExactScalar center(0);
    for (const auto& node : system.nodes()) center += node.gamma;
    center = center * invert(ExactScalar(Rational(static_cast<long>(system.nodes().size()))));
    Rational r2 = params.radius * params.radius;
    for (const auto& node : system.nodes()) {
        Rational dist2 = (node.gamma - center).norm();
        if (dist2 == r2)
            throw DomainError("NodeOnContour", "node " + to_string(node.gamma) + " lies on the contour");
        if (dist2 > r2)
            throw DomainError("NodeOutsideContour",
                              "node " + to_string(node.gamma) + " lies outside the contour");
    }
    if (std::holds_alternative<RationalFunction>(f)) {
        const auto& rf = std::get<RationalFunction>(f);
        if (rf.den().degree() > 0) {
            auto poles = gaussian_root_factors(rf.den());
            if (!poles)
                throw DomainError("RootsDontSplit",
                                  "cannot locate the integrand's poles over Q(i)");
            for (const auto& pole : *poles)
                if ((pole.gamma - center).norm() <= r2)
                    throw DomainError("PoleInsideContour",
                                      "pole " + to_string(pole.gamma) + " not outside the contour");
        }
    }
    ApproxScalar center_a = approximate(center, bits);
    BigFloat radius_a = BigFloat::of(params.radius, prec);
    if (!((z - center_a).magnitude() < radius_a))
        throw DomainError("PointOutsideContour", "evaluation point must lie inside the contour");

    // Interpolant of F's derivative data: solve the generalized Vandermonde
    // system for the monomial coefficients (rhs entries eta_ij / i!).
    auto eta = derivative_data(f, system, bits);
    int d = system.dimension();
    ExactMatrix a_exact = build_matrix(system);
    std::vector<std::vector<ApproxScalar>> a(static_cast<std::size_t>(d),
                                             std::vector<ApproxScalar>(static_cast<std::size_t>(d),
                                                                       ApproxScalar(prec)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                approximate(a_exact.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), bits);
    std::vector<ApproxScalar> rhs;
    for (std::size_t j = 0; j < system.nodes().size(); ++j)
        for (int i = 0; i < system.nodes()[j].multiplicity; ++i) {
            ExactScalar fact_inv = invert(ExactScalar(Rational(factorial(static_cast<unsigned long>(i)))));
            rhs.push_back(eta[j][static_cast<std::size_t>(i)] * approximate(fact_inv, bits));
        }
    auto coeffs = approx_solve(std::move(a), std::move(rhs));

    ApproxScalar f_at_z(prec);
    for (std::size_t k = coeffs.size(); k-- > 0;) f_at_z = f_at_z * z + coeffs[k];
    ApproxScalar big_f_at_z = eval_function(f, z);

    // (1/2 pi i) * integral = (r/N) * sum_k Phi(zeta_k) e^{i theta_k}.
    int n = params.points;
    BigFloat two_pi = BigFloat::of(2, prec) * BigFloat::pi(prec);
    ApproxScalar integral(prec);
    for (int k = 0; k < n; ++k) {
        BigFloat theta = two_pi * BigFloat::of(k, prec) / BigFloat::of(n, prec);
        BigFloat s(prec), c(prec);
        sin_cos(s, c, theta);
        ApproxScalar unit(c, s);
        ApproxScalar zeta = center_a + ApproxScalar(radius_a * c, radius_a * s);
        ApproxScalar phi = eval_function(f, zeta) / (z - zeta);
        for (const auto& node : system.nodes()) {
            ApproxScalar g = approximate(node.gamma, bits);
            phi = phi * approx_pow((z - g) / (zeta - g), node.multiplicity);
        }
        integral = integral + phi * unit;
    }
    integral = ApproxScalar(integral.re * radius_a / BigFloat::of(n, prec),
                            integral.im * radius_a / BigFloat::of(n, prec));

    ApproxScalar diff = f_at_z - big_f_at_z - integral;
    return ApproxScalar(diff.magnitude(), BigFloat(prec));
}

}  // namespace recurkit
