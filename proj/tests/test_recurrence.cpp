#include <doctest.h>

#include "oracles.hpp"
#include "recurkit/error.hpp"
#include "recurkit/recurrence.hpp"

using namespace recurkit;
using testkit::Rng;

namespace {

RecurrentSequence fibonacci() {
    return RecurrentSequence(LinearRecurrence({ExactScalar(1), ExactScalar(1)}),
                             {ExactScalar(0), ExactScalar(1)});
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<ExactScalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// Random sequence whose recurrence has invertible last coefficient.
RecurrentSequence random_sequence(Rng& rng, int max_order) {
    int d = static_cast<int>(rng.pick(1, max_order));
    std::vector<ExactScalar> c(static_cast<std::size_t>(d));
    for (int i = 0; i + 1 < d; ++i) c[static_cast<std::size_t>(i)] = rng.scalar(3, 2);
    c[static_cast<std::size_t>(d - 1)] = rng.nonzero_scalar(3, 2);
    std::vector<ExactScalar> init(static_cast<std::size_t>(d));
    for (auto& v : init) v = rng.scalar(3, 2);
    return RecurrentSequence(LinearRecurrence(std::move(c)), std::move(init));
}

}  // namespace

TEST_CASE("char_poly") {
    CHECK(LinearRecurrence({ExactScalar(1), ExactScalar(1)}).char_poly() == poly({-1, -1, 1}));
    // The (T - gamma)^2 case with gamma = 1: c = (2, -1).
    CHECK(LinearRecurrence({ExactScalar(2), ExactScalar(-1)}).char_poly() == poly({1, -2, 1}));
    CHECK(LinearRecurrence({ExactScalar(3), ExactScalar(-2)}).char_poly() ==
          expand_root_factors({{ExactScalar(2), 1}, {ExactScalar(1), 1}}));

    CHECK_THROWS_AS(LinearRecurrence({ExactScalar(1), ExactScalar(0)}), DomainError);
    CHECK(LinearRecurrence().char_poly() == Polynomial::one());

    // from_char_poly round-trips.
    LinearRecurrence rec({ExactScalar(3), ExactScalar(Rational(1, 2))});
    CHECK(LinearRecurrence::from_char_poly(rec.char_poly()) == rec);
    CHECK_THROWS_AS(LinearRecurrence::from_char_poly(poly({0, 1})), DomainError);
    CHECK_THROWS_AS(LinearRecurrence::from_char_poly(poly({1, 2})), DomainError);
}

TEST_CASE("eval_at") {
    auto fib = fibonacci();
    // Forward oracle: plain iteration.
    CHECK(testkit::iterate_forward(fib.rec().c(), fib.initial(), 10) == ExactScalar(55));
    CHECK(eval_at(fib, 10) == ExactScalar(55));
    // Backward step u(-1) = u(1) - u(0) = 1.
    CHECK(eval_at(fib, -1) == ExactScalar(1));
    CHECK(eval_at(fib, -6) == ExactScalar(-8));  // ..., 5, -3, 2, -1, 1, 0 pattern

    RecurrentSequence constant(LinearRecurrence({ExactScalar(1)}), {ExactScalar(5)});
    CHECK(eval_at(constant, 100) == ExactScalar(5));
    CHECK(eval_at(constant, -100) == ExactScalar(5));
}

TEST_CASE("eval_range matches eval_at") {
    auto fib = fibonacci();
    auto range = eval_range(fib, -5, 12);
    for (long long a = -5; a <= 12; ++a)
        CHECK(range[static_cast<std::size_t>(a + 5)] == eval_at(fib, a));
}

TEST_CASE("bidirectional consistency") {
    Rng rng(424242);
    for (int iter = 0; iter < 30; ++iter) {
        auto seq = random_sequence(rng, 5);
        int d = seq.order();
        auto forward = eval_range(seq, 0, 10 + d);
        // Re-anchor at a = 10: the shifted sequence v(a) = u(a + 10) must
        // step backward onto the forward-computed values.
        std::vector<ExactScalar> shifted_init(forward.begin() + 10, forward.begin() + 10 + d);
        RecurrentSequence shifted(seq.rec(), shifted_init);
        for (long long k = 0; k <= 10; ++k)
            CHECK(eval_at(shifted, -k) == forward[static_cast<std::size_t>(10 - k)]);
    }
}

TEST_CASE("companion_eval") {
    auto fib = fibonacci();
    CHECK(companion_eval(fib, 10) == ExactScalar(55));
    CHECK(companion_eval(fib, 0) == fib.initial()[0]);

    // Geometric 2^20 against a repeated-squaring oracle.
    RecurrentSequence geo(LinearRecurrence({ExactScalar(2)}), {ExactScalar(1)});
    Rational two_to_20(1);
    Rational base(2);
    unsigned long e = 20;
    while (e > 0) {  // independent binary powering on the rational itself
        if (e & 1UL) two_to_20 *= base;
        base *= base;
        e >>= 1;
    }
    CHECK(companion_eval(geo, 20) == ExactScalar(two_to_20));
    CHECK(two_to_20 == Rational(1048576));
}

TEST_CASE("companion_eval agrees with eval_at on random sequences") {
    Rng rng(98765);
    for (int iter = 0; iter < 20; ++iter) {
        auto seq = random_sequence(rng, 5);
        for (long long a = 0; a <= 50; a += 7) CHECK(companion_eval(seq, a) == eval_at(seq, a));
    }
}

TEST_CASE("minimal_recurrence examples") {
    // u(a) = 2^a presented as an order-2 sequence.
    RecurrentSequence pow2(LinearRecurrence({ExactScalar(3), ExactScalar(-2)}),
                           {ExactScalar(1), ExactScalar(2)});
    auto [rec, charpoly] = minimal_recurrence(pow2);
    CHECK(rec.order() == 1);
    CHECK(charpoly == poly({-2, 1}));
    CHECK(divmod(pow2.rec().char_poly(), charpoly).second.is_zero());

    auto [frec, fpoly] = minimal_recurrence(fibonacci());
    CHECK(frec.order() == 2);
    CHECK(fpoly == poly({-1, -1, 1}));

    RecurrentSequence zero(LinearRecurrence({ExactScalar(1), ExactScalar(1)}),
                           {ExactScalar(0), ExactScalar(0)});
    auto [zrec, zpoly] = minimal_recurrence(zero);
    CHECK(zrec.order() == 0);
    CHECK(zpoly == Polynomial::one());
}

TEST_CASE("minimality and divisibility on random sequences") {
    Rng rng(13579);
    for (int iter = 0; iter < 25; ++iter) {
        auto seq = random_sequence(rng, 4);
        int d = seq.order();
        auto [rec, charpoly] = minimal_recurrence(seq);
        int d0 = rec.order();
        CHECK(d0 <= d);
        CHECK(divmod(seq.rec().char_poly(), charpoly).second.is_zero());

        // Rank oracle on the window matrix: rows u(a+j), j = 0..r over 2d columns.
        auto terms = eval_range(seq, 0, 3LL * d);
        auto window_rank = [&](int rows) {
            ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(2 * d));
            for (int j = 0; j < rows; ++j)
                for (int k = 0; k < 2 * d; ++k)
                    m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                        terms[static_cast<std::size_t>(j + k)];
            return rank(m);
        };
        if (d0 > 0) CHECK(window_rank(d0) == static_cast<std::size_t>(d0));      // independent
        CHECK(window_rank(d0 + 1) == static_cast<std::size_t>(d0));              // dependent

        if (d0 > 0) CHECK(satisfies(seq, rec, {-8, 25}));
    }
}

TEST_CASE("ideal property: multiples of the minimal polynomial annihilate") {
    Rng rng(86420);
    for (int iter = 0; iter < 25; ++iter) {
        auto seq = random_sequence(rng, 3);
        auto [rec, charpoly] = minimal_recurrence(seq);
        (void)rec;
        // Monic multiplier with nonzero constant term.
        ExactScalar r1 = rng.nonzero_scalar(3, 2);
        Polynomial mult = expand_root_factors({{r1, 1}});
        Polynomial multiple = charpoly * mult;
        CHECK(satisfies(seq, LinearRecurrence::from_char_poly(multiple), {-5, 20}));
    }
}

TEST_CASE("satisfies") {
    auto fib = fibonacci();
    CHECK(satisfies(fib, LinearRecurrence({ExactScalar(1), ExactScalar(1)}), {-10, 30}));
    CHECK(!satisfies(fib, LinearRecurrence({ExactScalar(2), ExactScalar(-1)}), {-10, 30}));

    // Order-3 candidate whose char poly is (T^2 - T - 1)(T - 5).
    Polynomial multiple = poly({-1, -1, 1}) * poly({-5, 1});
    CHECK(satisfies(fib, LinearRecurrence::from_char_poly(multiple), {-10, 30}));
}
