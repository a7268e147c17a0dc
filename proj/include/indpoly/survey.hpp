#pragma once

#include <condition_variable>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "indpoly/bounds.hpp"
#include "indpoly/classify.hpp"
#include "indpoly/enumerate.hpp"
#include "indpoly/graph6.hpp"
#include "indpoly/json_io.hpp"

namespace indpoly {

// --- window signatures --------------------------------------------------

// Rank pattern of the coefficients inside a window, standard competition
// ranking (largest value gets rank 1, ties share a rank). The pattern is
// invariant under scaling all coefficients by a positive constant;
// `strict` marks windows whose values are pairwise distinct, in which case
// the pattern is a permutation of 1..size.
struct WindowSignature {
    Window window;
    std::vector<int> pattern;
    bool strict = false;
};

inline WindowSignature pattern_signature(const CoefficientSequence& cs,
                                         const Window& window) {
    WindowSignature sig;
    sig.window = window;
    sig.strict = true;
    if (window.empty()) return sig;
    if (window.lo < 0 || window.hi > cs.alpha())
        throw std::out_of_range("pattern_signature: window outside [0, alpha]");
    const auto& s = cs.coeffs;
    for (int i = window.lo; i <= window.hi; ++i) {
        int rank = 1;
        for (int j = window.lo; j <= window.hi; ++j) {
            if (s[j] > s[i]) ++rank;
            if (j != i && s[j] == s[i]) sig.strict = false;
        }
        sig.pattern.push_back(rank);
    }
    return sig;
}

inline Json to_json(const WindowSignature& sig) {
    return Json{{"window", to_json(sig.window)},
                {"pattern", sig.pattern},
                {"strict", sig.strict}};
}

// --- filter expressions ---------------------------------------------------

// Predicate language over ClassificationRecord fields:
//   boolean atoms:  well_covered very_well_covered one_well_covered
//                   connected has_isolated in_w2 true false
//   comparisons:    alpha|n  ==|!=|<=|>=|<|>  INT
//                   lambda_star  CMP  INT or P/Q
//   connectives:    ! && || ( )
// in_w2 evaluates to false when it was not computed for a graph.
struct Filter {
    std::function<bool(const ClassificationRecord&)> eval;
    bool uses_w2 = false;
};

namespace detail {

class FilterParser {
  public:
    explicit FilterParser(std::string_view text) : text_(text) {}

    Filter parse() {
        auto fn = parse_or();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return Filter{std::move(fn), uses_w2_};
    }

  private:
    using Fn = std::function<bool(const ClassificationRecord&)>;

    Fn parse_or() {
        Fn lhs = parse_and();
        for (;;) {
            skip();
            if (!eat("||")) return lhs;
            Fn rhs = parse_and();
            lhs = [l = std::move(lhs), r = std::move(rhs)](
                      const ClassificationRecord& rec) {
                return l(rec) || r(rec);
            };
        }
    }

    Fn parse_and() {
        Fn lhs = parse_unary();
        for (;;) {
            skip();
            if (!eat("&&")) return lhs;
            Fn rhs = parse_unary();
            lhs = [l = std::move(lhs), r = std::move(rhs)](
                      const ClassificationRecord& rec) {
                return l(rec) && r(rec);
            };
        }
    }

    Fn parse_unary() {
        skip();
        if (eat("!")) {
            Fn inner = parse_unary();
            return [f = std::move(inner)](const ClassificationRecord& rec) {
                return !f(rec);
            };
        }
        if (eat("(")) {
            Fn inner = parse_or();
            skip();
            if (!eat(")")) fail("expected ')'");
            return inner;
        }
        return parse_atom();
    }

    Fn parse_atom() {
        std::string name = ident();
        if (name == "true") return [](const ClassificationRecord&) { return true; };
        if (name == "false") return [](const ClassificationRecord&) { return false; };
        if (name == "well_covered")
            return [](const ClassificationRecord& r) { return r.well_covered; };
        if (name == "very_well_covered")
            return [](const ClassificationRecord& r) { return r.very_well_covered; };
        if (name == "one_well_covered")
            return [](const ClassificationRecord& r) { return r.one_well_covered; };
        if (name == "connected")
            return [](const ClassificationRecord& r) { return r.connected; };
        if (name == "has_isolated")
            return [](const ClassificationRecord& r) { return r.has_isolated; };
        if (name == "in_w2") {
            uses_w2_ = true;
            return [](const ClassificationRecord& r) {
                return r.in_w2.value_or(false);
            };
        }
        if (name == "alpha" || name == "n" || name == "lambda_star") {
            std::string op = cmp_op();
            Rational rhs = rational_literal();
            auto field = [name](const ClassificationRecord& r) -> Rational {
                if (name == "alpha") return Rational(r.alpha);
                if (name == "n") return Rational(r.n);
                return r.lambda_star;
            };
            return [field, op, rhs](const ClassificationRecord& r) {
                Rational v = field(r);
                if (op == "==") return v == rhs;
                if (op == "!=") return !(v == rhs);
                if (op == "<=") return v <= rhs;
                if (op == ">=") return v >= rhs;
                if (op == "<") return v < rhs;
                return v > rhs;
            };
        }
        fail("unknown field '" + name + "'");
    }

    std::string cmp_op() {
        skip();
        for (const char* op : {"==", "!=", "<=", ">=", "<", ">"})
            if (eat(op)) return op;
        fail("expected a comparison operator");
    }

    Rational rational_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '/' || text_[pos_] == '-'))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return Rational::parse(std::string(text_.substr(start, pos_ - start)));
    }

    std::string ident() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a field name");
        return std::string(text_.substr(start, pos_ - start));
    }

    bool eat(std::string_view tok) {
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void skip() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("filter: " + why + " at position " +
                                    std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_{0};
    bool uses_w2_ = false;
};

}  // namespace detail

inline Filter parse_filter(const std::string& text) {
    if (text.empty())
        return Filter{[](const ClassificationRecord&) { return true; }, false};
    return detail::FilterParser(text).parse();
}

// --- survey pipeline --------------------------------------------------------

struct SurveyConfig {
    std::vector<std::string> inputs;  // graph6 stream files, one graph per line
    std::string filter;               // empty accepts everything
    WindowKind kind = WindowKind::WELL_COVERED;
    WindowLoConvention lo_convention = WindowLoConvention::CeilHalf;
    std::vector<TheoremId> checks;
    Rational th13_lambda{1};
    std::string output_path;   // JSON-lines records
    std::string summary_path;  // empty: caller handles the summary object
    int workers = 0;           // 0 = hardware concurrency
    int max_n = 24;            // per-graph order limit; larger graphs are skipped
    bool skip_parse_errors = false;
    bool compute_w2 = false;   // forced on when the filter mentions in_w2
};

struct SurveySummary {
    std::uint64_t lines = 0;
    std::uint64_t records = 0;
    std::uint64_t filtered_out = 0;
    std::uint64_t skipped = 0;
    std::uint64_t parse_errors = 0;
    Json document;  // full summary document (also written to summary_path)
};

namespace detail {

struct SurveyCell {
    // pattern -> count, strict and tied aggregated separately
    std::map<std::vector<int>, std::uint64_t> strict_patterns;
    std::map<std::vector<int>, std::uint64_t> tied_patterns;
    std::uint64_t total = 0;
};

struct LineOutcome {
    std::string record;  // JSON line, empty when not emitted
    std::string issue;   // skip note, empty when none
    bool counted = false;
    bool filtered = false;
    bool skipped = false;
    bool parse_error = false;
    bool fatal = false;
    int alpha = 0;
    int n = 0;
    std::vector<int> pattern;
    bool strict = false;
};

inline LineOutcome survey_process_line(const SurveyConfig& cfg,
                                       const Filter& filter,
                                       std::uint64_t ordinal,
                                       const std::string& line,
                                       const std::string& where) {
    LineOutcome out;
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const std::exception& e) {
        out.parse_error = true;
        out.fatal = !cfg.skip_parse_errors;
        out.issue = where + ": " + e.what();
        return out;
    }
    if (g.n() > cfg.max_n) {
        out.skipped = true;
        out.issue = where + ": order " + std::to_string(g.n()) +
                    " exceeds the per-graph limit " + std::to_string(cfg.max_n);
        return out;
    }

    ClassifyOptions copts;
    copts.lambda_size_limit = cfg.max_n;
    bool want_w2 = cfg.compute_w2 || filter.uses_w2;
    copts.compute_w2 = want_w2 && g.n() <= 16;
    ClassificationRecord rec = classify(g, copts);
    if (want_w2 && !copts.compute_w2)
        out.issue = where + ": in_w2 unavailable (order > 16)";

    if (!filter.eval(rec)) {
        out.filtered = true;
        return out;
    }

    CoefficientSequence cs = independence_coefficients(g);
    Window window;  // empty for alpha = 0
    window.kind = cfg.kind;
    if (cs.alpha() >= 1)
        window = roller_coaster_window(cs.alpha(), g.n(), cfg.kind,
                                       cfg.lo_convention);
    WindowSignature sig = pattern_signature(cs, window);

    Json checks = Json::object();
    for (TheoremId id : cfg.checks) {
        Json summary;
        try {
            CheckOptions bopts;
            bopts.lambda_size_limit = cfg.max_n;
            BoundReport rep = run_check(id, g, cfg.th13_lambda, bopts);
            summary = Json{{"hypotheses_met", rep.hypotheses_met},
                           {"violations", rep.violations.size()},
                           {"passed", rep.passed()}};
        } catch (const std::exception& e) {
            summary = Json{{"hypotheses_met", false},
                           {"violations", 0},
                           {"passed", false},
                           {"error", e.what()}};
        }
        checks[theorem_name(id)] = summary;
    }

    Json record{{"ordinal", ordinal}, {"graph6", line},
                {"n", g.n()},         {"alpha", cs.alpha()},
                {"classification", to_json(rec)},
                {"coeffs", to_json(cs)},
                {"signature", to_json(sig)}};
    if (!cfg.checks.empty()) record["checks"] = checks;

    out.record = record.dump();
    out.counted = true;
    out.alpha = cs.alpha();
    out.n = g.n();
    out.pattern = sig.pattern;
    out.strict = sig.strict;
    return out;
}

}  // namespace detail

// Runs the catalog pipeline: parse, classify, filter, compute coefficients
// and window signature, run the requested checks, and emit one JSON line
// per accepted graph plus a final summary document. Work distributes over
// a worker pool; a sequencer applies every outcome in input order, so the
// output bytes do not depend on the worker count.
inline SurveySummary run_survey(const SurveyConfig& cfg) {
    if (cfg.output_path.empty())
        throw std::invalid_argument("run_survey: output path required");
    Filter filter = parse_filter(cfg.filter);

    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("run_survey: cannot open output file '" +
                                    cfg.output_path + "'");

    int workers = cfg.workers > 0
                      ? cfg.workers
                      : std::max(1u, std::thread::hardware_concurrency());

    struct Task {
        std::uint64_t ordinal;
        std::string line;
        std::string where;
    };

    std::mutex mu;
    std::condition_variable cv_space, cv_task, cv_done;
    std::deque<Task> tasks;
    std::map<std::uint64_t, detail::LineOutcome> completed;
    bool reading_done = false;
    bool abort = false;
    constexpr std::size_t queue_cap = 2048;

    auto worker_fn = [&] {
        for (;;) {
            Task t;
            {
                std::unique_lock lk(mu);
                cv_task.wait(lk, [&] {
                    return !tasks.empty() || reading_done || abort;
                });
                if (abort || (tasks.empty() && reading_done)) return;
                t = std::move(tasks.front());
                tasks.pop_front();
                cv_space.notify_one();
            }
            detail::LineOutcome o =
                detail::survey_process_line(cfg, filter, t.ordinal, t.line, t.where);
            {
                std::lock_guard lk(mu);
                completed.emplace(t.ordinal, std::move(o));
                cv_done.notify_one();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker_fn);

    SurveySummary sum;
    std::map<std::pair<int, int>, detail::SurveyCell> cells;
    std::vector<std::string> issues;
    std::string fatal_message;

    std::uint64_t writer_next = 0;
    auto drain_completed = [&](std::unique_lock<std::mutex>& lk) {
        while (true) {
            auto it = completed.find(writer_next);
            if (it == completed.end()) return;
            detail::LineOutcome o = std::move(it->second);
            completed.erase(it);
            lk.unlock();
            if (o.fatal && fatal_message.empty()) fatal_message = o.issue;
            if (!o.fatal && fatal_message.empty()) {
                if (!o.record.empty()) {
                    out << o.record << '\n';
                    ++sum.records;
                }
                if (!o.issue.empty()) issues.push_back(o.issue);
                if (o.filtered) ++sum.filtered_out;
                if (o.skipped) ++sum.skipped;
                if (o.parse_error) ++sum.parse_errors;
                if (o.counted) {
                    auto& cell = cells[{o.alpha, o.n}];
                    ++cell.total;
                    auto& bucket = o.strict ? cell.strict_patterns
                                            : cell.tied_patterns;
                    ++bucket[o.pattern];
                }
            }
            lk.lock();
            ++writer_next;
        }
    };

    // Read every input line, handing work to the pool and applying finished
    // outcomes in ordinal order as they become available.
    std::uint64_t ordinal = 0;
    for (const std::string& path : cfg.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            {
                std::lock_guard lk(mu);
                abort = true;
            }
            cv_task.notify_all();
            for (auto& th : pool) th.join();
            throw std::invalid_argument("run_survey: cannot open input file '" +
                                        path + "'");
        }
        std::string line;
        std::uint64_t lineno = 0;
        while (fatal_message.empty() && std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                line.pop_back();
            if (line.empty()) continue;
            std::unique_lock lk(mu);
            cv_space.wait(lk, [&] { return tasks.size() < queue_cap; });
            tasks.push_back(
                Task{ordinal, line, path + ":" + std::to_string(lineno)});
            ++ordinal;
            cv_task.notify_one();
            drain_completed(lk);
        }
        if (!fatal_message.empty()) break;
    }
    {
        std::unique_lock lk(mu);
        reading_done = true;
        cv_task.notify_all();
        cv_done.wait(lk, [&] {
            drain_completed(lk);
            return writer_next == ordinal;
        });
    }
    for (auto& th : pool) th.join();
    out.flush();

    if (!fatal_message.empty())
        throw std::runtime_error("run_survey: " + fatal_message);

    sum.lines = ordinal;
    Json cell_list = Json::array();
    for (const auto& [key, cell] : cells) {
        auto bucket_json = [](const std::map<std::vector<int>, std::uint64_t>& b) {
            Json arr = Json::array();
            for (const auto& [pattern, count] : b)
                arr.push_back(Json{{"pattern", pattern}, {"count", count}});
            return arr;
        };
        cell_list.push_back(Json{{"alpha", key.first},
                                 {"n", key.second},
                                 {"kind", window_kind_name(cfg.kind)},
                                 {"records", cell.total},
                                 {"strict_patterns", bucket_json(cell.strict_patterns)},
                                 {"tied_patterns", bucket_json(cell.tied_patterns)}});
    }
    sum.document = Json{{"lines", sum.lines},
                        {"records", sum.records},
                        {"filtered_out", sum.filtered_out},
                        {"skipped", sum.skipped},
                        {"parse_errors", sum.parse_errors},
                        {"window_kind", window_kind_name(cfg.kind)},
                        {"cells", cell_list},
                        {"issues", issues}};

    if (!cfg.summary_path.empty()) {
        std::ofstream sf(cfg.summary_path, std::ios::binary);
        if (!sf)
            throw std::invalid_argument(
                "run_survey: cannot open summary file '" + cfg.summary_path +
                "'");
        sf << sum.document.dump(2) << '\n';
    }
    return sum;
}

}  // namespace indpoly
