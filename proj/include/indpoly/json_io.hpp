#pragma once

#include <json.hpp>

#include "indpoly/bounds.hpp"
#include "indpoly/classify.hpp"
#include "indpoly/enumerate.hpp"
#include "indpoly/polynomial.hpp"

// JSON views of the library types. Big integers are always rendered as
// decimal strings so consumers never lose width.

namespace indpoly {

using Json = nlohmann::json;

inline Json to_json(const BigInt& x) { return x.get_str(); }

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline Json to_json(const CoefficientSequence& s) {
    Json a = Json::array();
    for (const auto& c : s.coeffs) a.push_back(c.get_str());
    return a;
}

inline Json to_json(const ClassificationRecord& r) {
    Json j{{"n", r.n},
           {"alpha", r.alpha},
           {"connected", r.connected},
           {"has_isolated", r.has_isolated},
           {"well_covered", r.well_covered},
           {"very_well_covered", r.very_well_covered},
           {"one_well_covered", r.one_well_covered},
           {"lambda_star", r.lambda_star.str()}};
    if (r.in_w2) j["in_w2"] = *r.in_w2;
    return j;
}

inline Json to_json(const ShapeProfile& p) {
    return Json{{"unimodal", p.unimodal},
                {"mode_lo", p.mode_lo},
                {"mode_hi", p.mode_hi},
                {"nondecreasing_prefix_end", p.nondecreasing_prefix_end},
                {"nonincreasing_suffix_start", p.nonincreasing_suffix_start},
                {"log_concave", p.log_concave}};
}

inline Json to_json(const RootCensus& c) {
    return Json{{"degree", c.degree},
                {"squarefree_degree", c.squarefree_degree},
                {"distinct_real_roots", c.distinct_real_roots},
                {"real_rooted", c.real_rooted}};
}

inline Json to_json(const LevelCount& lc) {
    return Json{{"k", lc.k},
                {"omega_k", lc.omega_k},
                {"omega_k1", lc.omega_k1},
                {"edge_count", lc.edge_count},
                {"min_lower_degree", lc.min_lower_degree}};
}

inline Json to_json(const Violation& v) {
    return Json{{"k", v.k},
                {"inequality", v.inequality},
                {"lhs", v.lhs.get_str()},
                {"rhs", v.rhs.get_str()}};
}

inline Json to_json(const BoundReport& r) {
    Json viol = Json::array();
    for (const auto& v : r.violations) viol.push_back(to_json(v));
    return Json{{"theorem", theorem_name(r.id)},
                {"hypotheses_met", r.hypotheses_met},
                {"hypothesis_notes", r.hypothesis_notes},
                {"violations", viol},
                {"checked_count", r.checked_count},
                {"passed", r.passed()}};
}

inline Json to_json(const Window& w) {
    return Json{{"kind", window_kind_name(w.kind)},
                {"lo", w.lo},
                {"hi", w.hi},
                {"empty", w.empty()}};
}

}  // namespace indpoly
