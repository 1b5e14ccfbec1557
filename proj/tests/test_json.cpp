#include <doctest.h>

#include "oracles.hpp"
#include "recurkit/error.hpp"
#include "recurkit/json_io.hpp"

using namespace recurkit;
using testkit::Rng;

TEST_CASE("scalar wire format") {
    CHECK(scalar_to_json(ExactScalar(55)).dump() == "\"55\"");
    CHECK(scalar_to_json(ExactScalar(Rational(3, 2))).dump() == "\"3/2\"");
    CHECK(scalar_to_json(ExactScalar(Rational(0), Rational(1))).dump() ==
          "{\"im\":\"1\",\"re\":\"0\"}");

    CHECK(scalar_from_json(Json::parse("\"55\"")) == ExactScalar(55));
    CHECK(scalar_from_json(Json::parse("\"0/1\"")) == ExactScalar(0));
    CHECK(scalar_from_json(Json::parse("{\"re\":\"1/2\",\"im\":\"-3\"}")) ==
          ExactScalar(Rational(1, 2), Rational(-3)));

    CHECK_THROWS_AS(scalar_from_json(Json::parse("55")), FormatError);       // number, not string
    CHECK_THROWS_AS(scalar_from_json(Json::parse("\"1 2\"")), FormatError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse("{\"re\":\"1\"}")), FormatError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse("\"1/0\"")), FormatError);
}

TEST_CASE("round trips over random values") {
    Rng rng(321);
    for (int iter = 0; iter < 50; ++iter) {
        ExactScalar s = rng.scalar(100, 40);
        CHECK(scalar_from_json(scalar_to_json(s)) == s);

        Polynomial p = rng.polynomial(5, 20, 9);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);

        RationalFunction rf(rng.polynomial(3, 9, 4), rng.nonzero_polynomial(3, 9, 4));
        CHECK(rational_function_from_json(rational_function_to_json(rf)) == rf);
    }
}

TEST_CASE("sequence and closed form round trips") {
    RecurrentSequence fib(LinearRecurrence({ExactScalar(1), ExactScalar(1)}),
                          {ExactScalar(0), ExactScalar(1)});
    CHECK(sequence_from_json(sequence_to_json(fib)) == fib);
    CHECK(sequence_to_json(fib).dump() ==
          "{\"c\":[\"1\",\"1\"],\"initial\":[\"0\",\"1\"]}");

    ExponentialPolynomialSequence eps({{ExactScalar(2), 2, Polynomial({ExactScalar(1), ExactScalar(Rational(1, 2))})},
                                       {ExactScalar::i(), 1, Polynomial::one()}});
    CHECK(closed_form_from_json(closed_form_to_json(eps)) == eps);

    NonHomogeneousForm form({ExactScalar(2)}, {{ExactScalar(1), 1, {ExactScalar(1)}}},
                            {ExactScalar(0)});
    CHECK(nonhomogeneous_from_json(nonhomogeneous_to_json(form)) == form);

    ExponentialPolynomialFunction f({{Polynomial::x(), ExactScalar(1)},
                                     {Polynomial::one(), ExactScalar(0)}});
    CHECK(exp_poly_function_from_json(exp_poly_function_to_json(f)) == f);

    TwistedFamily fam({ExactScalar(1), ExactScalar(2)}, {ExactScalar(3), ExactScalar(5)});
    TwistedFamily back = family_from_json(family_to_json(fam));
    CHECK(back.alpha() == fam.alpha());
    CHECK(back.eps() == fam.eps());
}

TEST_CASE("hermite data and node lists") {
    HermiteData data(NodeSystem({{ExactScalar(0), 2}, {ExactScalar(1), 1}}),
                     {{ExactScalar(0), ExactScalar(0)}, {ExactScalar(1)}});
    HermiteData back = hermite_data_from_json(hermite_data_to_json(data));
    CHECK(back.system().nodes() == data.system().nodes());
    CHECK(back.values() == data.values());

    auto roots = root_factors_from_json(Json::parse(R"([{"gamma":"2","t":3}])"));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].gamma == ExactScalar(2));
    CHECK(roots[0].multiplicity == 3);

    CHECK_THROWS_AS(root_factors_from_json(Json::parse(R"([{"gamma":"2"}])")), FormatError);
    CHECK_THROWS_AS(root_factors_from_json(Json::parse(R"({"gamma":"2","t":1})")), FormatError);
    CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"c":["1","1"]})")), FormatError);
}

TEST_CASE("malformed values surface as domain errors, not format errors") {
    // Structure is fine but c_d = 0: the library invariant fires.
    CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"c":["1","0"],"initial":["0","1"]})")),
                    DomainError);
}
