#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "indpoly/bounds.hpp"
#include "indpoly/classify.hpp"
#include "indpoly/enumerate.hpp"
#include "indpoly/graph6.hpp"
#include "indpoly/graphspec.hpp"
#include "indpoly/json_io.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/survey.hpp"

// Exit codes: 0 success / check passed, 1 check failed (violations or
// hypotheses unmet), 2 usage, parse or size-limit errors.

namespace {

using namespace indpoly;

enum class Format { human, json, tsv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    return Format::human;
}

int env_size_limit() {
    if (const char* v = std::getenv("INDPOLY_SIZE_LIMIT")) {
        int n = std::atoi(v);
        if (n > 0) return n;
    }
    return 24;
}

std::string human_polynomial(const std::vector<BigInt>& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) os << " + ";
        os << c[k].get_str();
        if (k == 1) os << " x";
        if (k > 1) os << " x^" << k;
    }
    return os.str();
}

std::string tsv_row(const std::vector<BigInt>& c) {
    std::ostringstream os;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) os << '\t';
        os << c[k].get_str();
    }
    return os.str();
}

void print_coefficients(const CoefficientSequence& cs, int n, Format fmt) {
    switch (fmt) {
        case Format::json:
            std::cout << Json{{"n", n},
                              {"alpha", cs.alpha()},
                              {"coeffs", to_json(cs)}}
                             .dump()
                      << "\n";
            break;
        case Format::tsv:
            std::cout << tsv_row(cs.coeffs) << "\n";
            break;
        case Format::human:
            std::cout << "n = " << n << ", alpha = " << cs.alpha() << "\n"
                      << "I(G;x) = " << human_polynomial(cs.coeffs) << "\n";
            break;
    }
}

void print_kv(Format fmt, const Json& j) {
    if (fmt == Format::json) {
        std::cout << j.dump() << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << (fmt == Format::tsv ? "\t" : " = ");
        if (it->is_string())
            std::cout << it->get<std::string>();
        else
            std::cout << it->dump();
        std::cout << "\n";
    }
}

int cmd_bounds(const Graph& g, const std::string& theorem,
               const std::string& lambda, int lambda_limit, Format fmt) {
    auto id = parse_theorem_id(theorem);
    if (!id) throw std::invalid_argument("unknown theorem '" + theorem + "'");
    CheckOptions opts;
    opts.lambda_size_limit = lambda_limit;
    BoundReport rep = run_check(*id, g, Rational::parse(lambda), opts);
    if (fmt == Format::json) {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        const char* sep = fmt == Format::tsv ? "\t" : " = ";
        std::cout << "theorem" << sep << theorem_name(rep.id) << "\n"
                  << "hypotheses_met" << sep
                  << (rep.hypotheses_met ? "true" : "false") << "\n";
        for (const auto& note : rep.hypothesis_notes)
            std::cout << "note" << sep << note << "\n";
        std::cout << "checked_count" << sep << rep.checked_count << "\n";
        for (const auto& v : rep.violations)
            std::cout << "violation" << sep << v.inequality << " at k=" << v.k
                      << ": " << v.lhs.get_str() << " !<= " << v.rhs.get_str()
                      << "\n";
        std::cout << "passed" << sep << (rep.passed() ? "true" : "false")
                  << "\n";
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "indpoly: exact independence polynomials, the well-coveredness "
        "hierarchy, coefficient bound checks and graph6 catalog surveys"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "human";
    app.add_option("--format", format, "output format: human, json or tsv")
        ->check(CLI::IsMember({"human", "json", "tsv"}));

    // Graphs are given as a GraphSpec expression ("corona(Star(3),K(2))"),
    // raw graph6 ("g6:F?zPw") or a file reference ("@graphs/h.el").
    std::string graph_arg, graph_arg2;

    auto* poly = app.add_subcommand("poly", "independence polynomial coefficients");
    poly->add_option("graph", graph_arg)->required();

    auto* oracle = app.add_subcommand(
        "oracle", "coefficients via the brute-force subset oracle (n <= 24)");
    oracle->add_option("graph", graph_arg)->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "well-coveredness hierarchy verdict");
    classify_cmd->add_option("graph", graph_arg)->required();
    bool with_w2 = false;
    int lambda_limit = env_size_limit();
    classify_cmd->add_flag("--w2", with_w2,
                           "also decide class W2 membership (n <= 16)");
    classify_cmd->add_option("--lambda-limit", lambda_limit,
                             "size guard for the lambda* enumeration");

    auto* bounds = app.add_subcommand("bounds", "run one theorem bound check");
    bounds->add_option("graph", graph_arg)->required();
    std::string theorem, lambda_str = "1";
    bounds->add_option("--theorem", theorem,
                       "TH13, COR3, COR2, TH5, COR1, TH3 or CORONA_K2")
        ->required();
    bounds->add_option("--lambda", lambda_str,
                       "lambda for TH13, as an integer or p/q");
    bounds->add_option("--lambda-limit", lambda_limit,
                       "size guard for the lambda* enumeration");

    auto* corona_cmd = app.add_subcommand(
        "corona", "build a corona base∘attach, or compute its polynomial");
    corona_cmd->add_option("base", graph_arg)->required();
    corona_cmd->add_option("attach", graph_arg2)->required();
    bool via_formula = false, via_enum = false;
    corona_cmd->add_flag("--via-formula", via_formula,
                         "polynomial through the composition identity");
    corona_cmd->add_flag("--via-enum", via_enum,
                         "polynomial through direct enumeration");

    auto* roots = app.add_subcommand("roots", "exact real-root census of I(G;x)");
    roots->add_option("graph", graph_arg);
    std::string coeffs_arg;
    roots->add_option("--coeffs", coeffs_arg,
                      "census an explicit polynomial, comma-separated integers");

    auto* window_cmd =
        app.add_subcommand("window", "roller-coaster index window");
    int w_alpha = 0, w_n = 0;
    std::string w_kind = "WELL_COVERED", w_conv = "ceil";
    window_cmd->add_option("--alpha", w_alpha)->required();
    window_cmd->add_option("--n", w_n)->required();
    window_cmd->add_option("--kind", w_kind,
                           "WELL_COVERED, ONE_WELL_COVERED or CORONA_K2")
        ->check(CLI::IsMember({"WELL_COVERED", "ONE_WELL_COVERED", "CORONA_K2"}));
    window_cmd->add_option(
        "--lo-convention", w_conv,
        "well-covered window start: ceil (alpha/2) or floor-plus-one");
    window_cmd->get_option("--lo-convention")
        ->check(CLI::IsMember({"ceil", "floor-plus-one"}));

    auto* survey_cmd =
        app.add_subcommand("survey", "run the catalog survey pipeline");
    SurveyConfig scfg;
    scfg.max_n = env_size_limit();
    std::string s_kind = "WELL_COVERED", s_lambda = "1", s_checks;
    survey_cmd->add_option("--input", scfg.inputs, "graph6 stream file(s)")
        ->required();
    survey_cmd->add_option("--output", scfg.output_path, "JSON-lines record file")
        ->required();
    survey_cmd->add_option("--summary", scfg.summary_path,
                           "summary JSON file (default: stdout)");
    survey_cmd->add_option("--filter", scfg.filter,
                           "predicate over classification fields");
    survey_cmd->add_option("--kind", s_kind, "window kind")
        ->check(CLI::IsMember({"WELL_COVERED", "ONE_WELL_COVERED", "CORONA_K2"}));
    survey_cmd->add_option("--checks", s_checks,
                           "comma-separated theorem ids to run per graph");
    survey_cmd->add_option("--th13-lambda", s_lambda, "lambda for TH13 checks");
    survey_cmd->add_option("--workers", scfg.workers, "worker count (0 = auto)");
    survey_cmd->add_option("--max-n", scfg.max_n, "per-graph order limit");
    survey_cmd->add_flag("--skip-bad", scfg.skip_parse_errors,
                         "skip unparsable lines instead of failing fast");
    survey_cmd->add_flag("--w2", scfg.compute_w2,
                         "include in_w2 in records (n <= 16)");

    for (CLI::App* sub : {poly, oracle, classify_cmd, bounds, corona_cmd, roots,
                          window_cmd, survey_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Format fmt = parse_format(format);
    try {
        if (poly->parsed()) {
            Graph g = parse_graph_argument(graph_arg);
            print_coefficients(independence_coefficients(g), g.n(), fmt);
            return 0;
        }
        if (oracle->parsed()) {
            Graph g = parse_graph_argument(graph_arg);
            print_coefficients(brute_force_coefficients(g), g.n(), fmt);
            return 0;
        }
        if (classify_cmd->parsed()) {
            Graph g = parse_graph_argument(graph_arg);
            ClassifyOptions opts;
            opts.compute_w2 = with_w2;
            opts.lambda_size_limit = lambda_limit;
            print_kv(fmt, to_json(classify(g, opts)));
            return 0;
        }
        if (bounds->parsed()) {
            Graph g = parse_graph_argument(graph_arg);
            return cmd_bounds(g, theorem, lambda_str, lambda_limit, fmt);
        }
        if (corona_cmd->parsed()) {
            Graph g = parse_graph_argument(graph_arg);
            Graph h = parse_graph_argument(graph_arg2);
            Graph gh = corona(g, h);
            if (!via_formula && !via_enum) {
                if (fmt == Format::json)
                    std::cout << Json{{"n", gh.n()},
                                      {"edge_count", gh.edge_count()},
                                      {"graph6", to_graph6(gh)}}
                                     .dump()
                              << "\n";
                else if (fmt == Format::tsv)
                    std::cout << to_graph6(gh) << "\n";
                else
                    std::cout << to_edge_list(gh) << "graph6: " << to_graph6(gh)
                              << "\n";
                return 0;
            }
            IntPolynomial via_f, via_e;
            if (via_formula) {
                IntPolynomial ig = independence_coefficients(g).to_polynomial();
                IntPolynomial iy = independence_coefficients(h).to_polynomial();
                via_f = corona_compose(ig, iy, g.n());
            }
            if (via_enum)
                via_e = independence_coefficients(gh).to_polynomial();
            if (fmt == Format::json) {
                Json j;
                if (via_formula) j["via_formula"] = to_json(via_f);
                if (via_enum) j["via_enum"] = to_json(via_e);
                if (via_formula && via_enum) j["equal"] = via_f == via_e;
                std::cout << j.dump() << "\n";
            } else {
                if (via_formula)
                    std::cout << (fmt == Format::tsv ? tsv_row(via_f.coeffs())
                                                     : "via formula: " +
                                                           human_polynomial(
                                                               via_f.coeffs()))
                              << "\n";
                if (via_enum)
                    std::cout << (fmt == Format::tsv ? tsv_row(via_e.coeffs())
                                                     : "via enumeration: " +
                                                           human_polynomial(
                                                               via_e.coeffs()))
                              << "\n";
                if (via_formula && via_enum)
                    std::cout << (via_f == via_e ? "equal" : "MISMATCH") << "\n";
            }
            return (via_formula && via_enum && !(via_f == via_e)) ? 1 : 0;
        }
        if (roots->parsed()) {
            IntPolynomial p;
            if (!coeffs_arg.empty()) {
                std::vector<std::string> parts;
                std::stringstream ss(coeffs_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) parts.push_back(tok);
                p = IntPolynomial::from_decimal_strings(parts);
            } else if (!graph_arg.empty()) {
                Graph g = parse_graph_argument(graph_arg);
                p = independence_coefficients(g).to_polynomial();
            } else {
                throw std::invalid_argument(
                    "roots: need a graph argument or --coeffs");
            }
            print_kv(fmt, to_json(real_root_census(p)));
            return 0;
        }
        if (window_cmd->parsed()) {
            Window w = roller_coaster_window(
                w_alpha, w_n, *parse_window_kind(w_kind),
                w_conv == "ceil" ? WindowLoConvention::CeilHalf
                                 : WindowLoConvention::FloorHalfPlusOne);
            print_kv(fmt, to_json(w));
            return 0;
        }
        if (survey_cmd->parsed()) {
            scfg.kind = *parse_window_kind(s_kind);
            scfg.th13_lambda = Rational::parse(s_lambda);
            if (!s_checks.empty()) {
                std::stringstream ss(s_checks);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto id = parse_theorem_id(tok);
                    if (!id)
                        throw std::invalid_argument("unknown theorem '" + tok +
                                                    "'");
                    scfg.checks.push_back(*id);
                }
            }
            SurveySummary sum = run_survey(scfg);
            if (scfg.summary_path.empty())
                std::cout << sum.document.dump(2) << "\n";
            else
                std::cout << "records: " << sum.records << " of " << sum.lines
                          << " lines\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
