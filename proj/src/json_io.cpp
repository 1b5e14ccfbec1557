#include "recurkit/json_io.hpp"

#include "recurkit/error.hpp"

namespace recurkit {

namespace {

Rational rational_field(const Json& j, const char* key) {
    const Json& v = require_field(j, key);
    if (!v.is_string()) throw FormatError(std::string(key) + " must be a rational string");
    return parse_rational(v.get<std::string>());
}

}  // namespace

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long require_int(const Json& j, const char* key) {
    const Json& v = require_field(j, key);
    if (!v.is_number_integer()) throw FormatError(std::string(key) + " must be an integer");
    return v.get<long long>();
}

Json scalar_to_json(const ExactScalar& s) {
    if (s.is_real()) return Json(format_rational(s.re));
    return Json{{"re", format_rational(s.re)}, {"im", format_rational(s.im)}};
}

ExactScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return ExactScalar(parse_rational(j.get<std::string>()));
    if (j.is_object()) return ExactScalar(rational_field(j, "re"), rational_field(j, "im"));
    throw FormatError("scalar must be a rational string or {re, im} object");
}

Json scalar_list_to_json(const std::vector<ExactScalar>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(scalar_to_json(v));
    return arr;
}

std::vector<ExactScalar> scalar_list_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of scalars");
    std::vector<ExactScalar> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(scalar_from_json(item));
    return out;
}

Json polynomial_to_json(const Polynomial& p) { return Json{{"coeffs", scalar_list_to_json(p.coeffs())}}; }

Polynomial polynomial_from_json(const Json& j) {
    return Polynomial(scalar_list_from_json(require_field(j, "coeffs")));
}

Json rational_function_to_json(const RationalFunction& rf) {
    return Json{{"num", polynomial_to_json(rf.num())}, {"den", polynomial_to_json(rf.den())}};
}

RationalFunction rational_function_from_json(const Json& j) {
    return RationalFunction(polynomial_from_json(require_field(j, "num")),
                            polynomial_from_json(require_field(j, "den")));
}

Json sequence_to_json(const RecurrentSequence& seq) {
    return Json{{"c", scalar_list_to_json(seq.rec().c())},
                {"initial", scalar_list_to_json(seq.initial())}};
}

RecurrentSequence sequence_from_json(const Json& j) {
    return RecurrentSequence(LinearRecurrence(scalar_list_from_json(require_field(j, "c"))),
                             scalar_list_from_json(require_field(j, "initial")));
}

Json closed_form_to_json(const ExponentialPolynomialSequence& eps) {
    Json terms = Json::array();
    for (const auto& term : eps.terms())
        terms.push_back(Json{{"gamma", scalar_to_json(term.gamma)},
                             {"t", term.t},
                             {"p", polynomial_to_json(term.p)}});
    return Json{{"terms", terms}};
}

ExponentialPolynomialSequence closed_form_from_json(const Json& j) {
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw FormatError("terms must be an array");
    std::vector<ClosedFormTerm> out;
    for (const auto& term : terms) {
        ClosedFormTerm t;
        t.gamma = scalar_from_json(require_field(term, "gamma"));
        t.t = static_cast<int>(require_int(term, "t"));
        t.p = polynomial_from_json(require_field(term, "p"));
        out.push_back(std::move(t));
    }
    return ExponentialPolynomialSequence(std::move(out));
}

Json root_factors_to_json(const std::vector<RootFactor>& roots) {
    Json arr = Json::array();
    for (const auto& r : roots)
        arr.push_back(Json{{"gamma", scalar_to_json(r.gamma)}, {"t", r.multiplicity}});
    return arr;
}

std::vector<RootFactor> root_factors_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of {gamma, t} nodes");
    std::vector<RootFactor> out;
    for (const auto& item : j) {
        RootFactor r;
        r.gamma = scalar_from_json(require_field(item, "gamma"));
        r.multiplicity = static_cast<int>(require_int(item, "t"));
        out.push_back(std::move(r));
    }
    return out;
}

Json hermite_data_to_json(const HermiteData& data) {
    Json values = Json::array();
    for (const auto& row : data.values()) values.push_back(scalar_list_to_json(row));
    return Json{{"nodes", root_factors_to_json(data.system().nodes())}, {"values", values}};
}

HermiteData hermite_data_from_json(const Json& j) {
    NodeSystem system(root_factors_from_json(require_field(j, "nodes")));
    const Json& values = require_field(j, "values");
    if (!values.is_array()) throw FormatError("values must be an array of arrays");
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& row : values) rows.push_back(scalar_list_from_json(row));
    return HermiteData(std::move(system), std::move(rows));
}

Json nonhomogeneous_to_json(const NonHomogeneousForm& form) {
    Json forcing = Json::array();
    for (const auto& term : form.forcing())
        forcing.push_back(Json{{"gamma", scalar_to_json(term.gamma)},
                               {"t", term.t},
                               {"lambda", scalar_list_to_json(term.lambda)}});
    return Json{{"b", scalar_list_to_json(form.b())},
                {"forcing", forcing},
                {"head", scalar_list_to_json(form.head())}};
}

NonHomogeneousForm nonhomogeneous_from_json(const Json& j) {
    const Json& forcing = require_field(j, "forcing");
    if (!forcing.is_array()) throw FormatError("forcing must be an array");
    std::vector<ForcingTerm> terms;
    for (const auto& item : forcing) {
        ForcingTerm t;
        t.gamma = scalar_from_json(require_field(item, "gamma"));
        t.t = static_cast<int>(require_int(item, "t"));
        t.lambda = scalar_list_from_json(require_field(item, "lambda"));
        terms.push_back(std::move(t));
    }
    return NonHomogeneousForm(scalar_list_from_json(require_field(j, "b")), std::move(terms),
                              scalar_list_from_json(require_field(j, "head")));
}

Json exp_poly_function_to_json(const ExponentialPolynomialFunction& f) {
    Json terms = Json::array();
    for (const auto& term : f.terms())
        terms.push_back(
            Json{{"a", polynomial_to_json(term.a)}, {"gamma", scalar_to_json(term.gamma)}});
    return Json{{"terms", terms}};
}

ExponentialPolynomialFunction exp_poly_function_from_json(const Json& j) {
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw FormatError("terms must be an array");
    std::vector<ExpPolyTerm> out;
    for (const auto& item : terms) {
        ExpPolyTerm t;
        t.a = polynomial_from_json(require_field(item, "a"));
        t.gamma = scalar_from_json(require_field(item, "gamma"));
        out.push_back(std::move(t));
    }
    return ExponentialPolynomialFunction(std::move(out));
}

Json family_to_json(const TwistedFamily& fam) {
    return Json{{"alpha", scalar_list_to_json(fam.alpha())},
                {"eps", scalar_list_to_json(fam.eps())}};
}

TwistedFamily family_from_json(const Json& j) {
    return TwistedFamily(scalar_list_from_json(require_field(j, "alpha")),
                         scalar_list_from_json(require_field(j, "eps")));
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"matrix", rows}};
}

}  // namespace recurkit
