#pragma once

#include <variant>
#include <vector>

#include "recurkit/approx.hpp"
#include "recurkit/exppoly.hpp"
#include "recurkit/matrix.hpp"
#include "recurkit/polynomial.hpp"

namespace recurkit {

// Distinct nodes gamma_j with multiplicities t_j; d = sum t_j.
class NodeSystem {
public:
    NodeSystem() = default;
    explicit NodeSystem(std::vector<RootFactor> nodes);

    const std::vector<RootFactor>& nodes() const { return nodes_; }
    int dimension() const { return d_; }
    // s_j = t_1 + ... + t_{j-1}: the row offset of node j's block.
    int block_offset(std::size_t j) const;

private:
    std::vector<RootFactor> nodes_;
    int d_ = 0;
};

// Interpolation data: eta_{ij} = (d/dz)^i f (gamma_j), t_j values per node.
class HermiteData {
public:
    HermiteData() = default;
    HermiteData(NodeSystem system, std::vector<std::vector<ExactScalar>> values);

    const NodeSystem& system() const { return system_; }
    const std::vector<std::vector<ExactScalar>>& values() const { return values_; }

private:
    NodeSystem system_;
    std::vector<std::vector<ExactScalar>> values_;
};

// The generalized Vandermonde matrix: entry (s_j + i, k) = binom(k, i) gamma_j^{k-i}.
ExactMatrix build_matrix(const NodeSystem& system);

// Gaussian-elimination determinant, checked exactly against
// prod_{i<j} (gamma_j - gamma_i)^{t_i t_j}.
ExactScalar vandermonde_determinant(const NodeSystem& system);

// The explicit interpolation formula f = sum_j h_j T_{p_j/h_j, gamma_j, t_j}.
Polynomial hermite_interpolate(const HermiteData& data);

// Newton divided differences with confluent entries eta_{ij}/i! at repeated
// nodes; returns the identical polynomial as hermite_interpolate.
Polynomial newton_interpolate(const HermiteData& data);

// Analytic integrand for the contour verifier: a rational function or an
// exponential polynomial.
using AnalyticFunction = std::variant<RationalFunction, ExponentialPolynomialFunction>;

struct ContourParams {
    Rational radius = 2;
    int points = 256;
    long bits = 128;
};

// Residual |f(z) - F(z) - (1/2 pi i) integral of Phi| of the Hermite
// contour-integral identity, with Phi(zeta) =
// F(zeta)/(z - zeta) * prod_j ((z - gamma_j)/(zeta - gamma_j))^{t_j},
// quadrature on the circle centred at the node centroid.
ApproxScalar contour_residual(const AnalyticFunction& f, const NodeSystem& system,
                              const ApproxScalar& z, const ContourParams& params);

}  // namespace recurkit
