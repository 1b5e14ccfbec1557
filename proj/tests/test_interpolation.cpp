#include <doctest.h>

#include "oracles.hpp"
#include "recurkit/error.hpp"
#include "recurkit/interpolation.hpp"

using namespace recurkit;
using testkit::Rng;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<ExactScalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

std::vector<ExactScalar> scalars(std::initializer_list<long> values) {
    std::vector<ExactScalar> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

HermiteData data_of(std::vector<RootFactor> nodes, std::vector<std::vector<ExactScalar>> values) {
    return HermiteData(NodeSystem(std::move(nodes)), std::move(values));
}

// Direct route: solve build_matrix * b = (eta_ij / i!) for the monomial
// coefficients.
Polynomial linear_solve_interpolate(const HermiteData& data) {
    ExactMatrix a = build_matrix(data.system());
    std::vector<ExactScalar> rhs;
    for (std::size_t j = 0; j < data.system().nodes().size(); ++j)
        for (int i = 0; i < data.system().nodes()[j].multiplicity; ++i)
            rhs.push_back(data.values()[j][static_cast<std::size_t>(i)] /
                          ExactScalar(Rational(factorial(static_cast<unsigned long>(i)))));
    auto b = solve(a, rhs);
    REQUIRE(b.has_value());
    return Polynomial(*b);
}

HermiteData make_hermite_data(Rng& rng, int max_d) {
    int budget = static_cast<int>(rng.pick(1, max_d));
    auto gammas = rng.distinct_scalars(budget, 4, 3);
    std::vector<RootFactor> nodes;
    std::vector<std::vector<ExactScalar>> values;
    int used = 0;
    std::size_t g = 0;
    while (used < budget && g < gammas.size()) {
        int t = static_cast<int>(rng.pick(1, std::min(3, budget - used)));
        nodes.push_back({gammas[g++], t});
        std::vector<ExactScalar> row(static_cast<std::size_t>(t));
        for (auto& v : row) v = rng.scalar(4, 3);
        values.push_back(std::move(row));
        used += t;
    }
    return data_of(std::move(nodes), std::move(values));
}

}  // namespace

TEST_CASE("build_matrix") {
    Rng rng(7);
    for (int iter = 0; iter < 5; ++iter) {
        ExactScalar g = rng.scalar(9, 4);
        ExactMatrix m = build_matrix(NodeSystem({{g, 1}}));
        CHECK(m.rows() == 1);
        CHECK(m.at(0, 0) == ExactScalar(1));
    }

    ExactMatrix v = build_matrix(NodeSystem({{ExactScalar(1), 1}, {ExactScalar(2), 1}}));
    CHECK(v.at(0, 0) == ExactScalar(1));
    CHECK(v.at(0, 1) == ExactScalar(1));
    CHECK(v.at(1, 0) == ExactScalar(1));
    CHECK(v.at(1, 1) == ExactScalar(2));

    // Entry formula by hand for [(1,2),(2,1)]:
    //   rows (1, 1, 1), (0, 1, 2), (1, 2, 4).
    ExactMatrix m = build_matrix(NodeSystem({{ExactScalar(1), 2}, {ExactScalar(2), 1}}));
    std::vector<std::vector<long>> expected{{1, 1, 1}, {0, 1, 2}, {1, 2, 4}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == ExactScalar(expected[i][j]));

    CHECK_THROWS_AS(NodeSystem({{ExactScalar(1), 1}, {ExactScalar(1), 1}}), DomainError);
}

TEST_CASE("vandermonde_determinant examples") {
    CHECK(vandermonde_determinant(NodeSystem({{ExactScalar(1), 1}, {ExactScalar(2), 1}})) ==
          ExactScalar(1));
    NodeSystem confluent({{ExactScalar(1), 2}, {ExactScalar(2), 1}});
    CHECK(vandermonde_determinant(confluent) == ExactScalar(1));
    CHECK(testkit::cofactor_determinant(build_matrix(confluent)) == ExactScalar(1));
    CHECK(vandermonde_determinant(NodeSystem({{ExactScalar(1), 2}, {ExactScalar(3), 1}})) ==
          ExactScalar(4));
}

TEST_CASE("determinant identity on random node systems") {
    Rng rng(555123);
    for (int iter = 0; iter < 40; ++iter) {
        int budget = static_cast<int>(rng.pick(1, 5));
        auto gammas = rng.distinct_scalars(budget, 6, 4);
        std::vector<RootFactor> nodes;
        int used = 0;
        std::size_t g = 0;
        while (used < budget && g < gammas.size()) {
            int t = static_cast<int>(rng.pick(1, budget - used));
            nodes.push_back({gammas[g++], t});
            used += t;
        }
        NodeSystem system(nodes);
        ExactScalar det = vandermonde_determinant(system);  // asserts the formula internally
        CHECK(det == testkit::cofactor_determinant(build_matrix(system)));
        CHECK(!det.is_zero());
    }
}

TEST_CASE("hermite_interpolate examples") {
    CHECK(hermite_interpolate(data_of({{ExactScalar(0), 1}, {ExactScalar(1), 1}},
                                      {scalars({0}), scalars({1})})) == poly({0, 1}));
    CHECK(hermite_interpolate(data_of({{ExactScalar(0), 2}}, {scalars({1, 2})})) ==
          poly({1, 2}));
    CHECK(hermite_interpolate(data_of({{ExactScalar(0), 2}, {ExactScalar(1), 1}},
                                      {scalars({0, 0}), scalars({1})})) == poly({0, 0, 1}));
}

TEST_CASE("newton_interpolate examples") {
    CHECK(newton_interpolate(data_of({{ExactScalar(0), 1}, {ExactScalar(1), 1}},
                                     {scalars({0}), scalars({1})})) == poly({0, 1}));
    CHECK(newton_interpolate(data_of({{ExactScalar(0), 2}}, {scalars({1, 2})})) == poly({1, 2}));
    CHECK(newton_interpolate(data_of({{ExactScalar(0), 2}, {ExactScalar(1), 1}},
                                     {scalars({0, 0}), scalars({1})})) == poly({0, 0, 1}));
    CHECK(newton_interpolate(data_of({{ExactScalar(0), 1}, {ExactScalar(1), 1}},
                                     {scalars({1}), scalars({1})})) == poly({1}));
    CHECK(newton_interpolate(data_of({{ExactScalar(2), 1}}, {scalars({7})})) == poly({7}));
}

TEST_CASE("three solvers agree and meet the derivative conditions") {
    Rng rng(464646);
    for (int iter = 0; iter < 40; ++iter) {
        HermiteData data = make_hermite_data(rng, 6);
        Polynomial f = hermite_interpolate(data);
        CHECK(f == newton_interpolate(data));
        CHECK(f == linear_solve_interpolate(data));
        CHECK(f.degree() < data.system().dimension());

        for (std::size_t j = 0; j < data.system().nodes().size(); ++j) {
            Polynomial der = f;
            for (int i = 0; i < data.system().nodes()[j].multiplicity; ++i) {
                CHECK(der.eval(data.system().nodes()[j].gamma) ==
                      data.values()[j][static_cast<std::size_t>(i)]);
                der = der.derivative();
            }
        }
    }
}

TEST_CASE("interpolating a polynomial's own data reproduces it") {
    Rng rng(808);
    for (int iter = 0; iter < 30; ++iter) {
        HermiteData shape = make_hermite_data(rng, 5);
        int d = shape.system().dimension();
        Polynomial g = rng.polynomial(d - 1, 4, 3);
        std::vector<std::vector<ExactScalar>> values;
        for (const auto& node : shape.system().nodes()) {
            std::vector<ExactScalar> row;
            Polynomial der = g;
            for (int i = 0; i < node.multiplicity; ++i) {
                row.push_back(der.eval(node.gamma));
                der = der.derivative();
            }
            values.push_back(std::move(row));
        }
        HermiteData data(shape.system(), values);
        CHECK(hermite_interpolate(data) == g);
        CHECK(newton_interpolate(data) == g);
    }
}

namespace {

double residual_value(const AnalyticFunction& f, const NodeSystem& system,
                      const ExactScalar& z, const ContourParams& params) {
    ApproxScalar za = approximate(z, params.bits);
    return contour_residual(f, system, za, params).re.to_double();
}

}  // namespace

TEST_CASE("contour residual vanishes when the interpolant equals F") {
    // F = z^2 with d = 3 > deg F: the interpolant is F itself.
    AnalyticFunction f = RationalFunction(poly({0, 0, 1}), Polynomial::one());
    NodeSystem system({{ExactScalar(0), 2}, {ExactScalar(1), 1}});
    ContourParams params;  // radius 2, 256 points, 128 bits
    double r = residual_value(f, system, ExactScalar(Rational(1, 4)), params);
    CHECK(r < 1e-9);
}

TEST_CASE("contour residual for exp(z) at a single node") {
    AnalyticFunction f = ExponentialPolynomialFunction({{Polynomial::one(), ExactScalar(1)}});
    NodeSystem system({{ExactScalar(0), 1}});
    ContourParams params;
    double r = residual_value(f, system, ExactScalar(Rational(1, 2)), params);
    CHECK(r < 1e-9);
}

TEST_CASE("contour residual for a rational function with an outside pole") {
    AnalyticFunction f = RationalFunction(Polynomial::one(), poly({-4, 1}));
    NodeSystem system({{ExactScalar(0), 1}, {ExactScalar(1), 1}});
    ContourParams params;
    double r = residual_value(f, system, ExactScalar(Rational(1, 2)), params);
    CHECK(r < 1e-9);
}

TEST_CASE("contour residual decreases when points double, then floors") {
    // Pole at 9/4, just outside the circle |z - 0| = 2: slow trapezoid
    // convergence makes the improvement visible before the precision floor.
    AnalyticFunction f = RationalFunction(Polynomial::one(), poly({-9, 4}));
    NodeSystem system({{ExactScalar(0), 1}});
    ContourParams params;
    params.points = 64;
    double r64 = residual_value(f, system, ExactScalar(Rational(1, 8)), params);
    params.points = 128;
    double r128 = residual_value(f, system, ExactScalar(Rational(1, 8)), params);
    params.points = 256;
    double r256 = residual_value(f, system, ExactScalar(Rational(1, 8)), params);
    CHECK(r128 < r64);
    CHECK(r256 < r128);
}

TEST_CASE("contour error cases") {
    ContourParams params;
    AnalyticFunction exp_z =
        ExponentialPolynomialFunction({{Polynomial::one(), ExactScalar(1)}});

    // Node exactly on the circle: centroid of {0, 4} is 2, |0 - 2| = radius.
    CHECK_THROWS_AS(contour_residual(exp_z,
                                     NodeSystem({{ExactScalar(0), 1}, {ExactScalar(4), 1}}),
                                     approximate(ExactScalar(2), 128), params),
                    DomainError);
    try {
        contour_residual(exp_z, NodeSystem({{ExactScalar(0), 1}, {ExactScalar(4), 1}}),
                         approximate(ExactScalar(2), 128), params);
        FAIL("expected NodeOnContour");
    } catch (const DomainError& e) {
        CHECK(e.name() == "NodeOnContour");
    }

    // Pole inside the contour.
    AnalyticFunction bad = RationalFunction(Polynomial::one(), poly({-1, 1}));
    try {
        contour_residual(bad, NodeSystem({{ExactScalar(0), 1}}),
                         approximate(ExactScalar(Rational(1, 4)), 128), params);
        FAIL("expected PoleInsideContour");
    } catch (const DomainError& e) {
        CHECK(e.name() == "PoleInsideContour");
    }

    // Too few quadrature points.
    ContourParams coarse;
    coarse.points = 32;
    CHECK_THROWS_AS(contour_residual(exp_z, NodeSystem({{ExactScalar(0), 1}}),
                                     approximate(ExactScalar(Rational(1, 2)), 128), coarse),
                    DomainError);
}
