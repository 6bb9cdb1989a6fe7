#include "check.hpp"

#include <algorithm>

#include "preimage/avoid.hpp"
#include "preimage/extend_search.hpp"
#include "preimage/pair_analysis.hpp"
#include "preimage/resize.hpp"

namespace preimage::cli {

std::string to_string(Problem p) {
    switch (p) {
    case Problem::extend: return "extend";
    case Problem::extend_total: return "extend-total";
    case Problem::avoid: return "avoid";
    case Problem::resize: return "resize";
    }
    return "?";
}

std::string to_string(Answer a) {
    switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
    case Answer::unknown_budget: return "unknown-budget";
    }
    return "?";
}

Problem parse_problem(const std::string& name) {
    if (name == "extend") return Problem::extend;
    if (name == "extend-total") return Problem::extend_total;
    if (name == "avoid") return Problem::avoid;
    if (name == "resize") return Problem::resize;
    throw std::invalid_argument("unknown problem '" + name + "'");
}

Problem parse_goal(const std::string& name) {
    if (name == "extending") return Problem::extend;
    if (name == "totally-extending") return Problem::extend_total;
    if (name == "avoiding") return Problem::avoid;
    if (name == "resizing") return Problem::resize;
    throw std::invalid_argument("unknown goal '" + name + "'");
}

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "poly") return Method::poly;
    if (name == "oracle") return Method::oracle;
    throw std::invalid_argument("unknown method '" + name + "'");
}

int exit_code(Answer a) noexcept {
    switch (a) {
    case Answer::yes: return 0;
    case Answer::no: return 1;
    default: return 2;
    }
}

Classification classify(const Automaton& a) {
    Classification c;
    c.states = a.states();
    c.letters = a.letters();
    const auto comps = scc(a);
    c.strongly_connected = comps.count() == 1;
    c.sink_components = comps.sink_count();
    c.synchronizing = c.sink_components == 1 && is_synchronizing(a);
    c.permutation = is_permutation_automaton(a);
    c.sink_state = sink_state(a);
    return c;
}

bool verify_witness(const Automaton& a, const StateSet& s, Problem problem, const Word& w) {
    switch (problem) {
    case Problem::extend: return preimage_word(a, s, w).size() > s.size();
    case Problem::extend_total: return preimage_word(a, s, w).is_full();
    case Problem::avoid: return !apply_word(a, a.all_states(), w).intersects(s);
    case Problem::resize: return preimage_word(a, s, w).size() != s.size();
    }
    return false;
}

namespace {

/// What one method established about existence.
struct Outcome {
    bool exists = false;
    std::optional<Word> word;
    bool shortest = false;
    std::string method;
};

Goal goal_of(Problem p) {
    switch (p) {
    case Problem::extend: return Goal::extending;
    case Problem::extend_total: return Goal::totally_extending;
    case Problem::avoid: return Goal::avoiding;
    case Problem::resize: return Goal::resizing;
    }
    return Goal::extending;
}

Outcome run_oracle(const Automaton& a, const StateSet& s, const CheckRequest& req) {
    auto w = oracle_shortest(a, s, goal_of(req.problem), req.oracle);
    return {w.has_value(), std::move(w), true, "oracle"};
}

Outcome from_search(const SearchResult& r, bool shortest, CheckReport& report) {
    report.nodes_created = r.stats.nodes_created;
    report.nodes_expanded = r.stats.nodes_expanded;
    return {r.found(), r.word, shortest, "poly"};
}

Outcome run_poly(const Automaton& a, const StateSet& s, const CheckRequest& req, bool need_word,
                 CheckReport& report) {
    const bool automatic = req.method == Method::automatic;
    const bool sync = report.classification.synchronizing;
    switch (req.problem) {
    case Problem::extend:
        return from_search(shortest_extending_word_small(a, s, req.limits), true, report);
    case Problem::extend_total:
        if (automatic && sync) {
            auto r = totally_extensible_synchronizing(a, s, need_word);
            return {r.extensible, std::move(r.witness), false, "fast-path"};
        }
        return from_search(totally_extending_word_small(a, s, req.limits), false, report);
    case Problem::avoid:
        if (s.size() == 1 && !need_word) return {avoidable_state(a, s.first(), sync), std::nullopt, false, "poly"};
        return from_search(avoiding_word(a, s, req.limits), false, report);
    case Problem::resize: {
        if (automatic && !need_word) {
            if (auto fast = resizable_decision_fast(a, s, sync)) return {*fast, std::nullopt, false, "fast-path"};
        }
        auto r = shortest_resizing_word(a, s);
        report.basis_size = r.basis_size;
        report.vectors_tested = r.vectors_tested;
        return {r.word.has_value(), std::move(r.word), true, "poly"};
    }
    }
    return {};
}

void verify_or_throw(const Automaton& a, const StateSet& s, Problem p, const Outcome& o) {
    if (o.word && !verify_witness(a, s, p, *o.word))
        throw InternalError(o.method + " produced a word failing re-verification for " + to_string(p) + ": '" +
                            o.word->to_string(a.letters()) + "'");
}

}  // namespace

CheckReport check(const Automaton& a, const StateSet& s, const CheckRequest& req) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset universe does not match the automaton");
    CheckReport report;
    report.problem = req.problem;
    report.max_len = req.max_len;
    report.subset_size = s.size();
    report.classification = classify(a);

    const bool need_word = req.want_witness || req.max_len.has_value();
    const bool oracle_fits = a.states() <= std::min<std::size_t>(req.oracle.max_states, 64);
    const bool oracle_fallback = req.method == Method::automatic && oracle_fits;

    Outcome o;
    try {
        if (req.method == Method::oracle) {
            o = run_oracle(a, s, req);
        } else {
            try {
                o = run_poly(a, s, req, need_word, report);
            } catch (const BudgetExceeded&) {
                if (!oracle_fallback) throw;
                o = run_oracle(a, s, req);
            }
        }
        verify_or_throw(a, s, req.problem, o);

        if (o.exists && req.max_len && (!o.word || o.word->size() > *req.max_len) && !o.shortest) {
            if (oracle_fallback) {
                o = run_oracle(a, s, req);
                verify_or_throw(a, s, req.problem, o);
            } else {
                report.method = o.method;
                report.answer = Answer::unknown;
                report.note = "found word exceeds the length bound and is not known to be shortest";
                return report;
            }
        }
    } catch (const BudgetExceeded& e) {
        report.method = req.method == Method::oracle ? "oracle" : "poly";
        report.answer = Answer::unknown_budget;
        report.note = e.what();
        return report;
    } catch (const OracleCapExceeded& e) {
        report.method = "oracle";
        report.answer = Answer::unknown_budget;
        report.note = e.what();
        return report;
    }

    report.method = o.method;
    if (!o.exists) {
        report.answer = Answer::no;
    } else if (req.max_len && o.word->size() > *req.max_len) {
        report.answer = Answer::no;
    } else {
        report.answer = Answer::yes;
        if (o.word) {
            report.preimage_size = preimage_word(a, s, *o.word).size();
            if (req.want_witness) report.witness = std::move(o.word);
        }
    }
    return report;
}

}  // namespace preimage::cli
