#include <doctest.h>

#include "oracles.hpp"
#include "recurkit/closedform.hpp"
#include "recurkit/error.hpp"
#include "recurkit/interpolation.hpp"
#include "recurkit/nonhomogeneous.hpp"

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

}  // namespace

TEST_CASE("from_nonhomogeneous") {
    // u(a+1) = u(a) + 1, u(0) = 0: the identity sequence u(a) = a.
    NonHomogeneousForm ramp({ExactScalar(1)}, {{ExactScalar(1), 1, {ExactScalar(1)}}},
                            {ExactScalar(0)});
    RecurrentSequence seq = from_nonhomogeneous(ramp);
    CHECK(seq.rec().c() == scalars({2, -1}));
    CHECK(seq.initial() == scalars({0, 1}));
    for (long long a = -5; a <= 10; ++a) CHECK(eval_at(seq, a) == ExactScalar(a));

    // u(a+1) = 2u(a) + 1, u(0) = 0: unrolls to 2^a - 1.
    NonHomogeneousForm mersenne({ExactScalar(2)}, {{ExactScalar(1), 1, {ExactScalar(1)}}},
                                {ExactScalar(0)});
    RecurrentSequence m = from_nonhomogeneous(mersenne);
    ExactScalar value(0);
    for (long long a = 0; a <= 12; ++a) {
        CHECK(eval_at(m, a) == value);  // forward unrolling oracle
        value = ExactScalar(2) * value + ExactScalar(1);
    }

    // Empty forcing: the plain homogeneous sequence.
    NonHomogeneousForm plain({ExactScalar(1), ExactScalar(1)}, {}, {ExactScalar(0), ExactScalar(1)});
    RecurrentSequence fib = from_nonhomogeneous(plain);
    CHECK(fib.rec().c() == scalars({1, 1}));
    CHECK(eval_at(fib, 10) == ExactScalar(55));
}

TEST_CASE("to_nonhomogeneous") {
    // u(a) = a along P = (T-1)^2 = Q R with Q = R = T - 1.
    RecurrentSequence ramp(LinearRecurrence({ExactScalar(2), ExactScalar(-1)}), scalars({0, 1}));
    NonHomogeneousForm form = to_nonhomogeneous(ramp, poly({-1, 1}), {{ExactScalar(1), 1}});
    CHECK(form.b() == scalars({1}));
    CHECK(form.head() == scalars({0}));
    REQUIRE(form.forcing().size() == 1);
    CHECK(form.forcing()[0].lambda == scalars({1}));

    // Trivial factorization: all the data sits in the head.
    RecurrentSequence fib(LinearRecurrence({ExactScalar(1), ExactScalar(1)}), scalars({0, 1}));
    NonHomogeneousForm trivial = to_nonhomogeneous(fib, fib.rec().char_poly(), {});
    CHECK(trivial.head() == fib.initial());
    CHECK(trivial.forcing().empty());

    // u = 2^a - 1 along Q = T - 2, R = T - 1: residual is constantly 1.
    RecurrentSequence mersenne(LinearRecurrence({ExactScalar(3), ExactScalar(-2)}),
                               scalars({0, 1}));
    NonHomogeneousForm mf = to_nonhomogeneous(mersenne, poly({-2, 1}), {{ExactScalar(1), 1}});
    CHECK(mf.head() == scalars({0}));
    CHECK(mf.forcing()[0].lambda == scalars({1}));

    CHECK_THROWS_AS(to_nonhomogeneous(mersenne, poly({-5, 1}), {{ExactScalar(1), 1}}),
                    DomainError);
    try {
        to_nonhomogeneous(mersenne, poly({-5, 1}), {{ExactScalar(1), 1}});
        FAIL("expected FactorizationMismatch");
    } catch (const DomainError& e) {
        CHECK(e.name() == "FactorizationMismatch");
    }
}

TEST_CASE("transition_matrix") {
    // Trivial factorization: the identity.
    CHECK(transition_matrix(poly({-1, -1, 1}), {}) == ExactMatrix::identity(2));

    // Pure splitting part: the generalized Vandermonde block.
    ExactMatrix t = transition_matrix(Polynomial::one(),
                                      {{ExactScalar(1), 1}, {ExactScalar(2), 1}});
    CHECK(t == build_matrix(NodeSystem({{ExactScalar(1), 1}, {ExactScalar(2), 1}})));

    // One head value plus one forcing value: both blocks are 1x1 identity.
    CHECK(transition_matrix(poly({-1, 1}), {{ExactScalar(1), 1}}) == ExactMatrix::identity(2));

    // The transition matrix is invertible whenever the R nodes are distinct.
    ExactMatrix big = transition_matrix(poly({-2, 1}),
                                        {{ExactScalar(3), 2}, {ExactScalar(-1), 1}});
    CHECK(!big.determinant().is_zero());
}

TEST_CASE("round trips between the representations") {
    Rng rng(778899);
    for (int iter = 0; iter < 30; ++iter) {
        // Random form: Q of degree m with Q(0) != 0, distinct nonzero gammas.
        int m = static_cast<int>(rng.pick(0, 2));
        std::vector<ExactScalar> b(static_cast<std::size_t>(m));
        for (int i = 0; i + 1 < m; ++i) b[static_cast<std::size_t>(i)] = rng.scalar(3, 2);
        if (m > 0) b[static_cast<std::size_t>(m - 1)] = rng.nonzero_scalar(3, 2);
        auto gammas = rng.distinct_scalars(2, 3, 2);
        std::vector<ForcingTerm> forcing;
        int total = 0;
        for (auto& g : gammas) {
            if (g.is_zero()) g = ExactScalar(Rational(7, 3));
            int t = static_cast<int>(rng.pick(1, 2));
            std::vector<ExactScalar> lambda(static_cast<std::size_t>(t));
            for (auto& v : lambda) v = rng.scalar(3, 2);
            forcing.push_back({g, t, std::move(lambda)});
            total += t;
        }
        if (forcing[0].gamma == forcing[1].gamma) continue;
        std::vector<ExactScalar> head(static_cast<std::size_t>(m));
        for (auto& v : head) v = rng.scalar(3, 2);
        NonHomogeneousForm form(b, forcing, head);

        CHECK(form.order() == m + total);  // parameter count m + sum t_j = d

        RecurrentSequence seq = from_nonhomogeneous(form);
        CHECK(seq.order() == form.order());

        // The sequence obeys the non-homogeneous relation at every index.
        auto window = eval_range(seq, -5, 25);
        for (long long a = -5; a + m <= 25; ++a) {
            ExactScalar expect = form.forcing_at(a);
            for (int i = 1; i <= m; ++i)
                expect += form.b()[static_cast<std::size_t>(i - 1)] *
                          window[static_cast<std::size_t>(a + m - i + 5)];
            CHECK(window[static_cast<std::size_t>(a + m + 5)] == expect);
        }

        // Exact round trip of the representation...
        std::vector<RootFactor> r_roots;
        for (const auto& term : form.forcing()) r_roots.push_back({term.gamma, term.t});
        NonHomogeneousForm back = to_nonhomogeneous(seq, form.q_poly(), r_roots);
        CHECK(back == form);

        // ...and of the terms.
        RecurrentSequence again = from_nonhomogeneous(back);
        for (long long a = -5; a <= 25; ++a) CHECK(eval_at(again, a) == eval_at(seq, a));
    }
}

TEST_CASE("the three representations of the repeated-root example agree") {
    Rng rng(31415);
    for (int iter = 0; iter < 25; ++iter) {
        ExactScalar gamma = rng.nonzero_scalar(3, 2);
        ExactScalar lambda = rng.scalar(3, 2);
        ExactScalar u0 = rng.scalar(3, 2);

        // Homogeneous: c = (2 gamma, -gamma^2), u(1) = gamma u(0) + lambda.
        RecurrentSequence homogeneous(
            LinearRecurrence({ExactScalar(2) * gamma, -(gamma * gamma)}),
            {u0, gamma * u0 + lambda});

        // Closed form: (lambda1 + lambda2 a) gamma^a.
        ExactScalar lambda2 = lambda / gamma;
        RecurrentSequence closed = from_closed_form(
            ExponentialPolynomialSequence({{gamma, 2, Polynomial({u0, lambda2})}}));

        // In-between: u(a+1) = gamma u(a) + lambda gamma^a.
        RecurrentSequence stepped = from_nonhomogeneous(
            NonHomogeneousForm({gamma}, {{gamma, 1, {lambda}}}, {u0}));

        for (long long a = -5; a <= 25; ++a) {
            ExactScalar reference = eval_at(homogeneous, a);
            CHECK(eval_at(closed, a) == reference);
            CHECK(eval_at(stepped, a) == reference);
        }
    }
}
