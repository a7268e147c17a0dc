#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indpoly/classify.hpp"
#include "indpoly/enumerate.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/util.hpp"

namespace indpoly {

enum class TheoremId { TH13, COR3, COR2, TH5, COR1, TH3, CORONA_K2 };

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::TH13: return "TH13";
        case TheoremId::COR3: return "COR3";
        case TheoremId::COR2: return "COR2";
        case TheoremId::TH5: return "TH5";
        case TheoremId::COR1: return "COR1";
        case TheoremId::TH3: return "TH3";
        case TheoremId::CORONA_K2: return "CORONA_K2";
    }
    return "?";
}

inline std::optional<TheoremId> parse_theorem_id(const std::string& s) {
    for (TheoremId id :
         {TheoremId::TH13, TheoremId::COR3, TheoremId::COR2, TheoremId::TH5,
          TheoremId::COR1, TheoremId::TH3, TheoremId::CORONA_K2})
        if (s == theorem_name(id)) return id;
    return std::nullopt;
}

struct Violation {
    int k = 0;
    std::string inequality;  // family tag; strict families carry "strict"
    BigInt lhs;
    BigInt rhs;
};

// One theorem run against one graph. Hypothesis failures are reported, not
// thrown; the inequalities are evaluated either way for diagnostics.
struct BoundReport {
    TheoremId id = TheoremId::TH13;
    bool hypotheses_met = false;
    std::vector<std::string> hypothesis_notes;
    std::vector<Violation> violations;
    int checked_count = 0;

    bool passed() const { return hypotheses_met && violations.empty(); }
};

struct CheckOptions {
    int lambda_size_limit = 30;
};

namespace detail {

struct IneqChecker {
    BoundReport& rep;
    const std::vector<BigInt>& s;
    int alpha;

    // lhs <= rhs, or lhs < rhs when strict; equality violates a strict
    // family.
    void expect(int k, const char* tag, const BigInt& lhs, const BigInt& rhs,
                bool strict = false) {
        ++rep.checked_count;
        bool ok = strict ? lhs < rhs : lhs <= rhs;
        if (!ok) rep.violations.push_back({k, tag, lhs, rhs});
    }

    void expect_eq(int k, const char* tag, const BigInt& lhs,
                   const BigInt& rhs) {
        ++rep.checked_count;
        if (lhs != rhs) rep.violations.push_back({k, tag, lhs, rhs});
    }

    // s_from <= s_{from+1} <= ... <= s_to
    void nondecreasing(int from, int to, const char* tag) {
        for (int k = std::max(from, 0); k < std::min(to, alpha); ++k)
            expect(k, tag, s[k], s[k + 1]);
    }

    void nonincreasing_tail(int from, const char* tag, bool strict) {
        for (int k = std::max(from, 0); k < alpha; ++k) {
            ++rep.checked_count;
            bool ok = strict ? s[k] > s[k + 1] : s[k] >= s[k + 1];
            if (!ok) rep.violations.push_back({k, tag, s[k], s[k + 1]});
        }
    }
};

}  // namespace detail

// Quasi-regularizability bound: for a lambda-quasi-regularizable graph of
// order n, (k+1)s_{k+1} <= (n-(lambda+1)k)s_k for 0 <= k < alpha, and the
// coefficients are non-increasing from r = ceil((n-1)/(lambda+2)).
// Rational lambda is handled exactly by clearing denominators.
inline BoundReport check_quasi_regular_bounds(const Graph& g, Rational lambda,
                                              const CheckOptions& opts = {}) {
    if (lambda.is_infinite() || lambda.num <= 0)
        throw std::invalid_argument(
            "check_quasi_regular_bounds: lambda must be a positive rational");
    if (lambda.num > (1LL << 31) || lambda.den > (1LL << 31))
        throw std::invalid_argument(
            "check_quasi_regular_bounds: lambda numerator/denominator out of "
            "supported range");
    BoundReport rep;
    rep.id = TheoremId::TH13;

    Rational lam_star = lambda_star(g, opts.lambda_size_limit);
    rep.hypotheses_met = lambda <= lam_star;
    rep.hypothesis_notes.push_back("lambda* = " + lam_star.str());
    if (!rep.hypotheses_met)
        rep.hypothesis_notes.push_back("lambda " + lambda.str() +
                                       " exceeds lambda*");

    CoefficientSequence cs = independence_coefficients(g);
    const auto& s = cs.coeffs;
    int alpha = cs.alpha();
    long n = g.n();
    long p = static_cast<long>(lambda.num), q = static_cast<long>(lambda.den);
    detail::IneqChecker chk{rep, s, alpha};

    for (int k = 0; k < alpha; ++k)
        chk.expect(k, "count_bound", s[k + 1] * (q * (k + 1)),
                   s[k] * (q * n - (p + q) * k));
    long long r = ceil_div(static_cast<long long>(q) * (n - 1), p + 2LL * q);
    chk.nonincreasing_tail(static_cast<int>(r), "tail", false);
    return rep;
}

// The lambda = 1 specialization for quasi-regularizable graphs of order
// n >= 2. The index range starts at 0 (the k = 0 instance is s_1 <= n).
inline BoundReport check_cor3_bounds(const Graph& g,
                                     const CheckOptions& opts = {}) {
    BoundReport rep = check_quasi_regular_bounds(g, Rational(1), opts);
    rep.id = TheoremId::COR3;
    if (g.n() < 2) {
        rep.hypotheses_met = false;
        rep.hypothesis_notes.push_back("order < 2");
    }
    return rep;
}

// Non-decreasing prefix of a well-covered graph: s_0 <= ... <= s_ceil(a/2).
inline BoundReport check_th5_bounds(const Graph& g) {
    BoundReport rep;
    rep.id = TheoremId::TH5;
    rep.hypotheses_met = is_well_covered(g);
    if (!rep.hypotheses_met) rep.hypothesis_notes.push_back("not well-covered");

    CoefficientSequence cs = independence_coefficients(g);
    detail::IneqChecker chk{rep, cs.coeffs, cs.alpha()};
    chk.nondecreasing(0, static_cast<int>(ceil_div(cs.alpha(), 2)), "prefix");
    return rep;
}

// Well-covered two-sided chain (alpha-k)s_k <= (k+1)s_{k+1} <= (n-2k)s_k
// for 1 <= k < alpha, the TH5 prefix, and the non-increasing tail from
// ceil((n-1)/3). The upper side and the tail rest on quasi-
// regularizability, which an isolated vertex destroys, so both are
// skipped (and noted) when one is present.
inline BoundReport check_well_covered_bounds(const Graph& g) {
    BoundReport rep;
    rep.id = TheoremId::COR2;
    bool wc = is_well_covered(g);
    rep.hypotheses_met = wc && g.n() >= 2;
    if (!wc) rep.hypothesis_notes.push_back("not well-covered");
    if (g.n() < 2) rep.hypothesis_notes.push_back("order < 2");

    CoefficientSequence cs = independence_coefficients(g);
    const auto& s = cs.coeffs;
    int alpha = cs.alpha();
    long n = g.n();
    detail::IneqChecker chk{rep, s, alpha};

    bool isolated = g.has_isolated_vertex();
    if (isolated)
        rep.hypothesis_notes.push_back(
            "isolated vertex: upper bound and tail not applicable");
    for (int k = 1; k < alpha; ++k) {
        chk.expect(k, "lower", s[k] * (alpha - k), s[k + 1] * (k + 1));
        if (!isolated)
            chk.expect(k, "upper", s[k + 1] * (k + 1), s[k] * (n - 2 * k));
    }
    chk.nondecreasing(0, static_cast<int>(ceil_div(alpha, 2)), "prefix");
    if (!isolated)
        chk.nonincreasing_tail(static_cast<int>(ceil_div(n - 1, 3)), "tail",
                               false);
    return rep;
}

// Very well-covered graphs: the TH5 prefix plus the tail from
// ceil((2 alpha - 1)/3).
inline BoundReport check_very_well_covered_bounds(const Graph& g) {
    BoundReport rep;
    rep.id = TheoremId::COR1;
    CoefficientSequence cs = independence_coefficients(g);
    int alpha = cs.alpha();
    bool vwc = is_well_covered(g) && !g.has_isolated_vertex() &&
               g.n() == 2 * alpha;
    rep.hypotheses_met = vwc && g.n() >= 2;
    if (!vwc) rep.hypothesis_notes.push_back("not very well-covered");
    if (g.n() < 2) rep.hypothesis_notes.push_back("order < 2");

    detail::IneqChecker chk{rep, cs.coeffs, alpha};
    chk.nondecreasing(0, static_cast<int>(ceil_div(alpha, 2)), "prefix");
    chk.nonincreasing_tail(static_cast<int>(ceil_div(2LL * alpha - 1, 3)),
                           "tail", false);
    return rep;
}

// Connected 1-well-covered graphs of order n > 2: the doubled lower bound
// 2(alpha-k)s_k <= (k+1)s_{k+1}, the prefix up to ceil(2 alpha/3), the
// strict upper bound (k+1)s_{k+1} < (n-2k)s_k, and the strictly
// decreasing tail from ceil((n-1)/3). Equality violates the strict
// families.
inline BoundReport check_one_well_covered_bounds(const Graph& g) {
    BoundReport rep;
    rep.id = TheoremId::TH3;
    bool connected = is_connected(g);
    bool owc = is_one_well_covered(g);
    rep.hypotheses_met = connected && owc && g.n() > 2;
    if (!connected) rep.hypothesis_notes.push_back("not connected");
    if (!owc) rep.hypothesis_notes.push_back("not 1-well-covered");
    if (g.n() <= 2) rep.hypothesis_notes.push_back("order <= 2");

    CoefficientSequence cs = independence_coefficients(g);
    const auto& s = cs.coeffs;
    int alpha = cs.alpha();
    long n = g.n();
    detail::IneqChecker chk{rep, s, alpha};

    for (int k = 1; k < alpha; ++k) {
        chk.expect(k, "double_lower", s[k] * (2 * (alpha - k)),
                   s[k + 1] * (k + 1));
        chk.expect(k, "strict_upper", s[k + 1] * (k + 1), s[k] * (n - 2 * k),
                   /*strict=*/true);
    }
    chk.nondecreasing(0, static_cast<int>(ceil_div(2LL * alpha, 3)), "prefix");
    chk.nonincreasing_tail(static_cast<int>(ceil_div(n - 1, 3)), "strict_tail",
                           true);
    return rep;
}

// The corona-with-K2 suite. Takes the connected base graph H, builds
// G = H∘K_2 and verifies the theorem's conclusions: order 3*alpha,
// 2-quasi-regularizability, the two-sided bounds
// 2(alpha-k)s_k <= (k+1)s_{k+1} <= 3(alpha-k)s_k, prefix/tail
// monotonicity, the two top log-concavity inequalities (alpha >= 3), and
// unimodality (alpha <= 17).
//
// Coefficients come from the corona composition identity, which keeps
// alpha = 17 feasible. The quasi-regularizability sweep runs over one
// representative per orbit of the gadget-swap automorphisms: the two
// vertices of each pendant K_2 are interchangeable by an automorphism of G
// preserving |S| and |N(S)|, so independent sets avoiding the second
// gadget vertex realize every (|S|, |N(S)|) pair.
inline BoundReport check_corona_k2_bounds(const Graph& g_h) {
    if (!is_connected(g_h))
        throw std::invalid_argument("check_corona_k2_bounds: H must be connected");
    BoundReport rep;
    rep.id = TheoremId::CORONA_K2;
    rep.hypotheses_met = true;
    rep.hypothesis_notes.push_back("H connected, G = H o K_2");

    int nh = g_h.n();
    Graph g = corona(g_h, complete(2));
    IntPolynomial ih = independence_coefficients(g_h).to_polynomial();
    IntPolynomial ik2(std::vector<BigInt>{BigInt(1), BigInt(2)});
    IntPolynomial ig = corona_compose(ih, ik2, nh);
    const auto& s = ig.coeffs();
    int alpha = ig.degree();
    detail::IneqChecker chk{rep, s, alpha};

    // order n = 3*alpha, with alpha confirmed by branch and bound
    chk.expect_eq(0, "alpha", BigInt(alpha), BigInt(independence_number(g)));
    chk.expect_eq(0, "order", BigInt(g.n()), BigInt(3 * alpha));

    // 2-quasi-regularizability over gadget-orbit representatives
    VertexMask allowed = low_mask(nh);
    for (int v = 0; v < nh; ++v) allowed |= bit(nh + 2 * v);
    Rational lam = lambda_star_over(g, allowed);
    rep.hypothesis_notes.push_back("lambda* = " + lam.str());
    ++rep.checked_count;
    if (lam < Rational(2))
        rep.violations.push_back({0, "quasi_regular",
                                  BigInt(static_cast<long>(lam.num)),
                                  BigInt(2 * static_cast<long>(lam.den))});

    for (int k = 1; k < alpha; ++k) {
        chk.expect(k, "double_lower", s[k] * (2 * (alpha - k)),
                   s[k + 1] * (k + 1));
        chk.expect(k, "triple_upper", s[k + 1] * (k + 1),
                   s[k] * (3 * (alpha - k)));
    }
    chk.nondecreasing(0, static_cast<int>(ceil_div(2LL * alpha, 3)), "prefix");
    chk.nonincreasing_tail(static_cast<int>(ceil_div(3LL * alpha - 1, 4)),
                           "tail", false);

    if (alpha >= 3) {
        chk.expect(alpha - 2, "log_concave_top", s[alpha - 3] * s[alpha - 1],
                   s[alpha - 2] * s[alpha - 2]);
        chk.expect(alpha - 1, "log_concave_top", s[alpha - 2] * s[alpha],
                   s[alpha - 1] * s[alpha - 1]);
    }
    if (alpha <= 17) {
        ++rep.checked_count;
        ShapeProfile shape = shape_profile(ig);
        if (!shape.unimodal)
            rep.violations.push_back(
                {shape.nondecreasing_prefix_end + 1, "unimodal", BigInt(0),
                 BigInt(0)});
    }
    return rep;
}

// Dispatcher used by the CLI and the survey pipeline. TH13 takes lambda
// (default 1); CORONA_K2 interprets the graph as the base H.
inline BoundReport run_check(TheoremId id, const Graph& g,
                             Rational lambda = Rational(1),
                             const CheckOptions& opts = {}) {
    switch (id) {
        case TheoremId::TH13: return check_quasi_regular_bounds(g, lambda, opts);
        case TheoremId::COR3: return check_cor3_bounds(g, opts);
        case TheoremId::COR2: return check_well_covered_bounds(g);
        case TheoremId::TH5: return check_th5_bounds(g);
        case TheoremId::COR1: return check_very_well_covered_bounds(g);
        case TheoremId::TH3: return check_one_well_covered_bounds(g);
        case TheoremId::CORONA_K2: return check_corona_k2_bounds(g);
    }
    throw std::logic_error("unknown theorem id");
}

// --- roller-coaster windows -------------------------------------------------

enum class WindowKind { WELL_COVERED, ONE_WELL_COVERED, CORONA_K2 };

inline const char* window_kind_name(WindowKind k) {
    switch (k) {
        case WindowKind::WELL_COVERED: return "WELL_COVERED";
        case WindowKind::ONE_WELL_COVERED: return "ONE_WELL_COVERED";
        case WindowKind::CORONA_K2: return "CORONA_K2";
    }
    return "?";
}

inline std::optional<WindowKind> parse_window_kind(const std::string& s) {
    for (WindowKind k : {WindowKind::WELL_COVERED, WindowKind::ONE_WELL_COVERED,
                         WindowKind::CORONA_K2})
        if (s == window_kind_name(k)) return k;
    return std::nullopt;
}

// The two published phrasings of the well-covered window start differ for
// even alpha; the default is ceil(alpha/2), the alternative
// floor(alpha/2)+1.
enum class WindowLoConvention { CeilHalf, FloorHalfPlusOne };

struct Window {
    int lo = 0;
    int hi = -1;
    WindowKind kind = WindowKind::WELL_COVERED;

    bool empty() const { return lo > hi; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
};

inline Window roller_coaster_window(
    int alpha, int n, WindowKind kind,
    WindowLoConvention conv = WindowLoConvention::CeilHalf) {
    if (alpha < 1 || n < alpha)
        throw std::invalid_argument(
            "roller_coaster_window: need alpha >= 1 and n >= alpha");
    Window w;
    w.kind = kind;
    if (kind == WindowKind::WELL_COVERED)
        w.lo = conv == WindowLoConvention::CeilHalf
                   ? static_cast<int>(ceil_div(alpha, 2))
                   : alpha / 2 + 1;
    else
        w.lo = static_cast<int>(ceil_div(2LL * alpha, 3));
    if (kind == WindowKind::CORONA_K2)
        w.hi = static_cast<int>(ceil_div(3LL * alpha - 1, 4));
    else
        w.hi = std::min<long long>(alpha, ceil_div(n - 1LL, 3));
    return w;
}

}  // namespace indpoly
