// recurkit: exact linear-recurrence toolkit over Q(i), JSON in / JSON out.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "recurkit/error.hpp"
#include "recurkit/json_io.hpp"

namespace rk = recurkit;
using rk::Json;

namespace {

struct CommonOpts {
    std::string input_path;
    std::string inline_json;
    std::string format = "json";
    std::string window = "-3..10";
    std::string radius = "2";
    int points = 256;
    long bits = 128;
};

void add_io_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--input", opts.input_path, "read the JSON input document from FILE");
    cmd->add_option("--json", opts.inline_json, "inline JSON input document");
    cmd->add_option("--format", opts.format, "output format: json (round-trippable) or text")
        ->check(CLI::IsMember({"json", "text"}));
}

Json load_input(const CommonOpts& opts) {
    if (opts.input_path.empty() == opts.inline_json.empty())
        throw rk::FormatError("exactly one of --input or --json is required");
    std::string text;
    if (!opts.input_path.empty()) {
        std::ifstream in(opts.input_path);
        if (!in) throw rk::FormatError("cannot open input file: " + opts.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        text = opts.inline_json;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw rk::FormatError(std::string("invalid JSON: ") + e.what());
    }
}

rk::IndexRange parse_window(const std::string& s) {
    auto sep = s.find("..");
    if (sep == std::string::npos) throw rk::FormatError("window must look like A..B");
    try {
        rk::IndexRange range{std::stoll(s.substr(0, sep)), std::stoll(s.substr(sep + 2))};
        if (range.lo > range.hi) throw rk::FormatError("empty window " + s);
        return range;
    } catch (const std::invalid_argument&) {
        throw rk::FormatError("window must look like A..B");
    } catch (const std::out_of_range&) {
        throw rk::FormatError("window bounds out of range");
    }
}

rk::AnalyticFunction function_from_json(const Json& j) {
    const Json& type = rk::require_field(j, "type");
    if (!type.is_string()) throw rk::FormatError("function type must be a string");
    std::string t = type.get<std::string>();
    if (t == "rational")
        return rk::RationalFunction(rk::polynomial_from_json(rk::require_field(j, "num")),
                                    rk::polynomial_from_json(rk::require_field(j, "den")));
    if (t == "exppoly") return rk::exp_poly_function_from_json(j);
    throw rk::FormatError("function type must be \"rational\" or \"exppoly\"");
}

// Human-readable mode: pretty-printed JSON (not meant to round-trip).
std::string render_text(const Json& out) {
    std::ostringstream os;
    os << out.dump(2);
    return os.str();
}

void emit(const Json& out, const CommonOpts& opts) {
    if (opts.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << render_text(out) << "\n";
}

Json spec_to_json(const rk::CoefficientSpec& spec) {
    return Json{{"h", spec.h},
                {"e_set", rk::scalar_list_to_json(spec.e_set)},
                {"m", spec.m},
                {"bound", spec.bound.get_str()},
                {"charpoly", rk::polynomial_to_json(spec.charpoly)}};
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for linear recurrence sequences and twisted binary forms"};
    app.require_subcommand(1);
    CommonOpts opts;
    if (const char* env_bits = std::getenv("RECURKIT_PRECISION_BITS")) {
        try {
            opts.bits = std::stol(env_bits);
        } catch (...) {
            // ignore unusable values; the flag default stays
        }
    }

    std::string action;  // which leaf command ran
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        add_io_options(cmd, opts);
        std::string tag = parent == &app ? name : parent->get_name() + "." + name;
        cmd->callback([&action, tag] { action = tag; });
        return cmd;
    };

    leaf(&app, "eval", "evaluate a sequence at an index");
    leaf(&app, "minorder", "minimal recurrence of a sequence");
    CLI::App* closedform = app.add_subcommand("closedform", "closed-form conversions");
    closedform->require_subcommand(1);
    leaf(closedform, "to", "sequence -> exponential-polynomial closed form");
    leaf(closedform, "from", "closed form -> sequence");
    leaf(&app, "genfun", "generating function of a sequence");
    leaf(&app, "partfrac", "partial fractions over a factored denominator");
    leaf(&app, "add", "sum of two sequences");
    leaf(&app, "mul", "product of two sequences");
    CLI::App* vandermonde = app.add_subcommand("vandermonde", "generalized Vandermonde matrix");
    vandermonde->require_subcommand(1);
    leaf(vandermonde, "matrix", "build the matrix");
    leaf(vandermonde, "det", "determinant (elimination vs product formula)");
    CLI::App* interpolate = app.add_subcommand("interpolate", "Hermite interpolation");
    interpolate->require_subcommand(1);
    leaf(interpolate, "hermite", "explicit truncation-operator formula");
    leaf(interpolate, "newton", "confluent divided differences");
    CLI::App* contour = leaf(&app, "contour", "contour-integral residual check");
    contour->add_option("--radius", opts.radius, "circle radius (rational)");
    contour->add_option("--points", opts.points, "quadrature points");
    contour->add_option("--bits", opts.bits, "working precision in bits")
        ->envname("RECURKIT_PRECISION_BITS");
    CLI::App* nonhomog = app.add_subcommand("nonhomog", "non-homogeneous representation");
    nonhomog->require_subcommand(1);
    leaf(nonhomog, "to", "split a sequence along P = Q R");
    leaf(nonhomog, "from", "rebuild the homogeneous sequence");
    CLI::App* exppoly = app.add_subcommand("exppoly", "exponential polynomials");
    exppoly->require_subcommand(1);
    leaf(exppoly, "taylor", "Taylor coefficient sequence at 0");
    leaf(exppoly, "order", "vanishing order at 0");
    CLI::App* twisted = app.add_subcommand("twisted", "twisted binary form families");
    twisted->require_subcommand(1);
    leaf(twisted, "coeffs", "coefficients U_1(a)..U_d(a)");
    leaf(twisted, "spec", "E_h, cardinality, characteristic polynomial");
    CLI::App* twisted_duality = leaf(twisted, "duality", "duality bijection and identity");
    twisted_duality->add_option("--window", opts.window, "index window A..B");
    leaf(twisted, "twoblock", "two-value twist worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the error plus usage
        return code == 0 ? 0 : 2;
    }

    Json in = load_input(opts);
    Json out;

    if (action == "eval") {
        auto seq = rk::sequence_from_json(rk::require_field(in, "sequence"));
        out = rk::scalar_to_json(rk::eval_at(seq, rk::require_int(in, "a")));
    } else if (action == "minorder") {
        auto seq = rk::sequence_from_json(rk::require_field(in, "sequence"));
        auto [rec, charpoly] = rk::minimal_recurrence(seq);
        out = Json{{"order", rec.order()},
                   {"c", rk::scalar_list_to_json(rec.c())},
                   {"charpoly", rk::polynomial_to_json(charpoly)}};
    } else if (action == "closedform.to") {
        auto seq = rk::sequence_from_json(rk::require_field(in, "sequence"));
        std::optional<std::vector<rk::RootFactor>> roots;
        if (in.contains("roots")) roots = rk::root_factors_from_json(in.at("roots"));
        out = rk::closed_form_to_json(rk::to_closed_form(seq, roots));
    } else if (action == "closedform.from") {
        auto eps = rk::closed_form_from_json(rk::require_field(in, "closedform"));
        out = rk::sequence_to_json(rk::from_closed_form(eps));
    } else if (action == "genfun") {
        auto seq = rk::sequence_from_json(rk::require_field(in, "sequence"));
        out = rk::rational_function_to_json(rk::generating_function(seq));
    } else if (action == "partfrac") {
        auto rf = rk::rational_function_from_json(rk::require_field(in, "rational_function"));
        auto roots = rk::root_factors_from_json(rk::require_field(in, "roots"));
        Json terms = Json::array();
        for (const auto& term : rk::partial_fractions(rf, roots))
            terms.push_back(Json{{"gamma", rk::scalar_to_json(term.gamma)},
                                 {"q", rk::scalar_list_to_json(term.q)}});
        out = Json{{"terms", terms}};
    } else if (action == "add") {
        auto s1 = rk::sequence_from_json(rk::require_field(in, "s1"));
        auto s2 = rk::sequence_from_json(rk::require_field(in, "s2"));
        out = rk::sequence_to_json(rk::seq_add(s1, s2));
    } else if (action == "mul") {
        auto s1 = rk::sequence_from_json(rk::require_field(in, "s1"));
        auto s2 = rk::sequence_from_json(rk::require_field(in, "s2"));
        std::optional<std::vector<rk::RootFactor>> roots1, roots2;
        if (in.contains("roots1")) roots1 = rk::root_factors_from_json(in.at("roots1"));
        if (in.contains("roots2")) roots2 = rk::root_factors_from_json(in.at("roots2"));
        out = rk::sequence_to_json(rk::seq_mul(s1, s2, roots1, roots2));
    } else if (action == "vandermonde.matrix") {
        rk::NodeSystem system(rk::root_factors_from_json(rk::require_field(in, "nodes")));
        out = rk::matrix_to_json(rk::build_matrix(system));
    } else if (action == "vandermonde.det") {
        rk::NodeSystem system(rk::root_factors_from_json(rk::require_field(in, "nodes")));
        out = rk::scalar_to_json(rk::vandermonde_determinant(system));
    } else if (action == "interpolate.hermite" || action == "interpolate.newton") {
        auto data = rk::hermite_data_from_json(in);
        auto f = action == "interpolate.hermite" ? rk::hermite_interpolate(data)
                                                 : rk::newton_interpolate(data);
        out = rk::polynomial_to_json(f);
    } else if (action == "contour") {
        auto f = function_from_json(rk::require_field(in, "function"));
        rk::NodeSystem system(rk::root_factors_from_json(rk::require_field(in, "nodes")));
        rk::ContourParams params;
        params.radius = rk::parse_rational(opts.radius);
        params.points = opts.points;
        params.bits = opts.bits;
        auto z = rk::approximate(rk::scalar_from_json(rk::require_field(in, "z")), params.bits);
        auto residual = rk::contour_residual(f, system, z, params);
        out = Json{{"bits", params.bits},
                   {"points", params.points},
                   {"radius", rk::format_rational(params.radius)},
                   {"residual", residual.re.str()}};
    } else if (action == "nonhomog.to") {
        auto seq = rk::sequence_from_json(rk::require_field(in, "sequence"));
        auto q = rk::polynomial_from_json(rk::require_field(in, "Q"));
        auto r_roots = rk::root_factors_from_json(rk::require_field(in, "R_roots"));
        out = rk::nonhomogeneous_to_json(rk::to_nonhomogeneous(seq, q, r_roots));
    } else if (action == "nonhomog.from") {
        auto form = rk::nonhomogeneous_from_json(rk::require_field(in, "form"));
        out = rk::sequence_to_json(rk::from_nonhomogeneous(form));
    } else if (action == "exppoly.taylor") {
        auto f = rk::exp_poly_function_from_json(rk::require_field(in, "function"));
        auto z0 = rk::scalar_from_json(rk::require_field(in, "z0"));
        auto values = rk::taylor_coefficient_sequence(
            f, z0, static_cast<int>(rk::require_int(in, "count")));
        out = rk::scalar_list_to_json(values);
    } else if (action == "exppoly.order") {
        auto f = rk::exp_poly_function_from_json(rk::require_field(in, "function"));
        auto z0 = rk::scalar_from_json(rk::require_field(in, "z0"));
        out = Json(rk::vanishing_order(f, z0, static_cast<int>(rk::require_int(in, "cap"))));
    } else if (action == "twisted.coeffs") {
        auto fam = rk::family_from_json(rk::require_field(in, "family"));
        out = rk::scalar_list_to_json(rk::form_coefficients(fam, rk::require_int(in, "a")));
    } else if (action == "twisted.spec") {
        auto fam = rk::family_from_json(rk::require_field(in, "family"));
        out = spec_to_json(rk::coefficient_spec(fam, static_cast<int>(rk::require_int(in, "h"))));
    } else if (action == "twisted.duality") {
        auto fam = rk::family_from_json(rk::require_field(in, "family"));
        bool ok = rk::duality_check(fam, static_cast<int>(rk::require_int(in, "h")),
                                    parse_window(opts.window));
        out = Json(ok);
    } else if (action == "twisted.twoblock") {
        auto eps = rk::scalar_from_json(rk::require_field(in, "eps"));
        auto eta = rk::scalar_from_json(rk::require_field(in, "eta"));
        auto alpha = rk::scalar_list_from_json(rk::require_field(in, "alpha"));
        auto report = rk::two_block_family(eps, eta, static_cast<int>(rk::require_int(in, "l")),
                                           static_cast<int>(rk::require_int(in, "d")), alpha);
        int d = report.family.d();
        Json e_sets{{"E1", rk::scalar_list_to_json(report.e1)},
                    {"E2", rk::scalar_list_to_json(report.e2)},
                    {"Ed1", rk::scalar_list_to_json(report.ed1)}};
        Json charpolys{{"U1", rk::polynomial_to_json(report.charpoly_u1)},
                       {"U2", rk::polynomial_to_json(report.charpoly_u2)},
                       {"Ud1", rk::polynomial_to_json(report.charpoly_ud1)},
                       {"Ud1_full", rk::polynomial_to_json(report.charpoly_ud1_full)}};
        Json bounds{{"m1", static_cast<int>(report.e1.size())},
                    {"m2", static_cast<int>(report.e2.size())},
                    {"md1", static_cast<int>(report.ed1.size())}};
        if (d >= 3) {
            e_sets["Ed2"] = rk::scalar_list_to_json(report.ed2);
            charpolys["Ud2"] = rk::polynomial_to_json(report.charpoly_ud2);
            bounds["md2"] = static_cast<int>(report.ed2.size());
        }
        out = Json{{"A", rk::scalar_to_json(report.a_coeff)},
                   {"B", rk::scalar_to_json(report.b_coeff)},
                   {"C", rk::scalar_to_json(report.c_constant)},
                   {"bounds", bounds},
                   {"charpolys", charpolys},
                   {"e_sets", e_sets}};
    } else {
        throw rk::FormatError("no subcommand selected");
    }

    emit(out, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rk::DomainError& e) {
        std::cerr << e.what() << "\n";  // "Name: detail"
        return 1;
    } catch (const rk::FormatError& e) {
        std::cerr << "MalformedInput: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}
