#pragma once

#include <json.hpp>

#include "recurkit/closedform.hpp"
#include "recurkit/exppoly.hpp"
#include "recurkit/interpolation.hpp"
#include "recurkit/nonhomogeneous.hpp"
#include "recurkit/polynomial.hpp"
#include "recurkit/recurrence.hpp"
#include "recurkit/twisted.hpp"

// JSON wire formats. Scalars are exact rational strings: a bare "p" or
// "p/q" for real values, {"re": "p/q", "im": "p/q"} otherwise; parsers
// accept either spelling. Decoding throws FormatError on malformed shapes.

namespace recurkit {

using Json = nlohmann::json;

Json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json rational_function_to_json(const RationalFunction& rf);
RationalFunction rational_function_from_json(const Json& j);

Json sequence_to_json(const RecurrentSequence& seq);
RecurrentSequence sequence_from_json(const Json& j);

Json closed_form_to_json(const ExponentialPolynomialSequence& eps);
ExponentialPolynomialSequence closed_form_from_json(const Json& j);

Json root_factors_to_json(const std::vector<RootFactor>& roots);
std::vector<RootFactor> root_factors_from_json(const Json& j);

Json hermite_data_to_json(const HermiteData& data);
HermiteData hermite_data_from_json(const Json& j);

Json nonhomogeneous_to_json(const NonHomogeneousForm& form);
NonHomogeneousForm nonhomogeneous_from_json(const Json& j);

Json exp_poly_function_to_json(const ExponentialPolynomialFunction& f);
ExponentialPolynomialFunction exp_poly_function_from_json(const Json& j);

Json family_to_json(const TwistedFamily& fam);
TwistedFamily family_from_json(const Json& j);

Json matrix_to_json(const ExactMatrix& m);

Json scalar_list_to_json(const std::vector<ExactScalar>& values);
std::vector<ExactScalar> scalar_list_from_json(const Json& j);

// Field access helpers that map missing/ill-typed members to FormatError.
const Json& require_field(const Json& j, const char* key);
long long require_int(const Json& j, const char* key);

}  // namespace recurkit
