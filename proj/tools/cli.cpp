#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "check.hpp"
#include "json.hpp"
#include "preimage/gadgets.hpp"
#include "preimage/io.hpp"
#include "preimage/pair_analysis.hpp"

namespace preimage::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string display(const Word& w, std::size_t k) { return w.empty() ? "(empty)" : w.to_string(k); }

Json subset_json(const StateSet& s) {
    Json arr = Json::array();
    s.for_each([&](State q) { arr.push_back(q); });
    return arr;
}

Json word_json(const Word& w) {
    Json arr = Json::array();
    for (Letter x : w) arr.push_back(x);
    return arr;
}

Json classification_json(const Classification& c) {
    Json j;
    j["states"] = c.states;
    j["letters"] = c.letters;
    j["strongly_connected"] = c.strongly_connected;
    j["synchronizing"] = c.synchronizing;
    j["permutation"] = c.permutation;
    j["sink_state"] = c.sink_state ? Json(*c.sink_state) : Json(nullptr);
    j["sink_components"] = c.sink_components;
    return j;
}

std::uint64_t default_budget() {
    const char* env = std::getenv(budget_env);
    if (env == nullptr || *env == '\0') return default_node_budget;
    try {
        std::size_t used = 0;
        const auto value = std::stoull(env, &used);
        if (used != std::string(env).size() || value == 0) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string(budget_env) + " must be a positive integer, got '" + env + "'");
    }
}

Automaton load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw std::runtime_error("cannot write '" + path + "'");
}

/// Options shared by check, oracle, rank and reset.
struct Common {
    std::string file;
    bool json = false;
    bool timing = false;
    std::optional<std::uint64_t> budget;
    std::size_t oracle_cap = OracleLimits{}.max_states;
    std::uint64_t oracle_nodes = OracleLimits{}.node_limit;

    void attach(CLI::App* app, bool needs_file = true) {
        if (needs_file) app->add_option("file", file, "automaton file")->required();
        app->add_flag("--json", json, "print a JSON report");
        app->add_flag("--timing", timing, "include elapsed wall-clock time");
        app->add_option("--budget", budget,
                        "node budget of the polynomial searches (default 5e7 or $" + std::string(budget_env) + ")")
            ->check(CLI::PositiveNumber);
        app->add_option("--oracle-cap", oracle_cap, "largest automaton the oracle accepts (at most 64)")
            ->check(CLI::Range(1, 64));
        app->add_option("--oracle-nodes", oracle_nodes, "subset budget of the oracle (default 2^24)")
            ->check(CLI::PositiveNumber);
    }

    SearchLimits limits() const { return {budget ? *budget : default_budget()}; }
    OracleLimits oracle() const { return {oracle_cap, oracle_nodes}; }
};

int emit_check(const std::string& command, const Automaton& a, const StateSet& s, const CheckReport& r,
               const Common& common, double elapsed_ms, std::ostream& out) {
    const std::size_t k = a.letters();
    if (common.json) {
        Json j;
        j["command"] = command;
        j["problem"] = to_string(r.problem);
        j["subset"] = subset_json(s);
        j["answer"] = to_string(r.answer);
        j["method"] = r.method;
        j["max_len"] = r.max_len ? Json(*r.max_len) : Json(nullptr);
        j["witness"] = r.witness ? Json(r.witness->to_string(k)) : Json(nullptr);
        j["witness_letters"] = r.witness ? word_json(*r.witness) : Json(nullptr);
        j["witness_length"] = r.witness ? Json(r.witness->size()) : Json(nullptr);
        j["subset_size"] = r.subset_size;
        j["preimage_size"] = r.preimage_size ? Json(*r.preimage_size) : Json(nullptr);
        j["stats"] = {{"nodes_created", r.nodes_created},
                      {"nodes_expanded", r.nodes_expanded},
                      {"basis_size", r.basis_size},
                      {"vectors_tested", r.vectors_tested}};
        j["classification"] = classification_json(r.classification);
        if (!r.note.empty()) j["note"] = r.note;
        if (common.timing) j["elapsed_ms"] = elapsed_ms;
        out << j.dump(2) << '\n';
    } else {
        out << "answer: " << to_string(r.answer) << '\n';
        out << "problem: " << to_string(r.problem) << '\n';
        out << "method: " << r.method << '\n';
        if (r.witness) {
            out << "witness: " << display(*r.witness, k) << '\n';
            out << "length: " << r.witness->size() << '\n';
        }
        out << "subset-size: " << r.subset_size << '\n';
        if (r.preimage_size) out << "preimage-size: " << *r.preimage_size << '\n';
        if (!r.note.empty()) out << "note: " << r.note << '\n';
        if (common.timing) out << "elapsed-ms: " << elapsed_ms << '\n';
    }
    return exit_code(r.answer);
}

double since_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_check(const std::string& command, const Common& common, const std::string& subset, CheckRequest req,
              std::ostream& out) {
    const Automaton a = load_automaton(common.file);
    const StateSet s = parse_subset(subset, a.states());
    req.limits = common.limits();
    req.oracle = common.oracle();
    const auto start = std::chrono::steady_clock::now();
    const CheckReport r = check(a, s, req);
    return emit_check(command, a, s, r, common, since_ms(start), out);
}

int cmd_classify(const Common& common, std::ostream& out) {
    const Automaton a = load_automaton(common.file);
    const Classification c = classify(a);
    if (common.json) {
        Json j;
        j["command"] = "classify";
        j["classification"] = classification_json(c);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "states: " << c.states << '\n'
        << "letters: " << c.letters << '\n'
        << "strongly-connected: " << yes_no(c.strongly_connected) << '\n'
        << "synchronizing: " << yes_no(c.synchronizing) << '\n'
        << "permutation: " << yes_no(c.permutation) << '\n'
        << "sink-state: " << (c.sink_state ? std::to_string(*c.sink_state) : "none") << '\n'
        << "sink-components: " << c.sink_components << '\n';
    return 0;
}

int cmd_rank(const Common& common, const std::string& method, std::ostream& out) {
    const Automaton a = load_automaton(common.file);
    std::size_t rank = 0;
    std::optional<RankResult> result;
    if (method == "oracle") {
        try {
            rank = oracle_min_rank(a, common.oracle());
        } catch (const std::runtime_error& e) {
            out << (common.json ? Json{{"command", "rank"}, {"answer", "unknown-budget"}, {"note", e.what()}}.dump(2)
                                : "answer: unknown-budget\nnote: " + std::string(e.what()))
                << '\n';
            return 2;
        }
    } else {
        result = minimal_rank_word(a);
        if (apply_word(a, a.all_states(), result->word) != result->image)
            throw InternalError("minimal-rank word does not produce its reported image");
        rank = result->rank();
    }
    if (common.json) {
        Json j;
        j["command"] = "rank";
        j["method"] = method;
        j["rank"] = rank;
        j["word"] = result ? Json(result->word.to_string(a.letters())) : Json(nullptr);
        j["image"] = result ? subset_json(result->image) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << "rank: " << rank << '\n';
        if (result) {
            out << "word: " << display(result->word, a.letters()) << '\n';
            out << "image: " << format_subset(result->image) << '\n';
        }
    }
    return 0;
}

int cmd_reset(const Common& common, const std::string& method, std::ostream& out) {
    const Automaton a = load_automaton(common.file);
    std::optional<Word> w;
    try {
        w = method == "oracle" ? oracle_shortest_reset(a, common.oracle()) : greedy_reset_word(a);
    } catch (const std::runtime_error& e) {
        out << (common.json ? Json{{"command", "reset"}, {"answer", "unknown-budget"}, {"note", e.what()}}.dump(2)
                            : "answer: unknown-budget\nnote: " + std::string(e.what()))
            << '\n';
        return 2;
    }
    if (w && apply_word(a, a.all_states(), *w).size() != 1)
        throw InternalError("reset word '" + w->to_string(a.letters()) + "' does not synchronize");
    if (common.json) {
        Json j;
        j["command"] = "reset";
        j["method"] = method;
        j["answer"] = w ? "yes" : "no";
        j["word"] = w ? Json(w->to_string(a.letters())) : Json(nullptr);
        j["length"] = w ? Json(w->size()) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << "answer: " << (w ? "yes" : "no") << '\n';
        out << "method: " << method << '\n';
        if (w) out << "word: " << display(*w, a.letters()) << '\n' << "length: " << w->size() << '\n';
    }
    return w ? 0 : 1;
}

RandomConstraint parse_constraint(const std::string& name) {
    if (name == "none") return RandomConstraint::none;
    if (name == "strongly-connected") return RandomConstraint::strongly_connected;
    if (name == "synchronizing") return RandomConstraint::synchronizing;
    if (name == "permutation") return RandomConstraint::permutation;
    throw UsageError("unknown constraint '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Preimage problems for deterministic finite automata", "preimage"};
    app.require_subcommand(1);

    // check
    Common check_common;
    std::string check_subset, check_problem, check_method = "auto";
    std::optional<std::size_t> check_max_len;
    bool check_witness = false;
    auto* check_cmd = app.add_subcommand("check", "decide a preimage problem for a subset");
    check_common.attach(check_cmd);
    check_cmd->add_option("--subset", check_subset, "comma-separated 0-based states")->required();
    check_cmd->add_option("--problem", check_problem, "extend | extend-total | avoid | resize")
        ->required()
        ->check(CLI::IsMember({"extend", "extend-total", "avoid", "resize"}));
    check_cmd->add_option("--method", check_method, "auto | poly | oracle")
        ->check(CLI::IsMember({"auto", "poly", "oracle"}));
    check_cmd->add_option("--max-len", check_max_len, "only accept words of at most this length");
    check_cmd->add_flag("--witness", check_witness, "report a witness word");

    // oracle
    Common oracle_common;
    std::string oracle_subset, oracle_goal;
    std::optional<std::size_t> oracle_max_len;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive subset search for a shortest word");
    oracle_common.attach(oracle_cmd);
    oracle_cmd->add_option("--subset", oracle_subset, "comma-separated 0-based states")->required();
    oracle_cmd->add_option("--goal", oracle_goal, "extending | totally-extending | avoiding | resizing")
        ->required()
        ->check(CLI::IsMember({"extending", "totally-extending", "avoiding", "resizing"}));
    oracle_cmd->add_option("--max-len", oracle_max_len, "only accept words of at most this length");

    // classify, rank, reset
    Common classify_common;
    auto* classify_cmd = app.add_subcommand("classify", "structural properties of an automaton");
    classify_cmd->add_option("file", classify_common.file, "automaton file")->required();
    classify_cmd->add_flag("--json", classify_common.json, "print JSON");

    Common rank_common;
    std::string rank_method = "poly";
    auto* rank_cmd = app.add_subcommand("rank", "minimal rank and a word attaining it");
    rank_common.attach(rank_cmd);
    rank_cmd->add_option("--method", rank_method, "poly | oracle")->check(CLI::IsMember({"poly", "oracle"}));

    Common reset_common;
    std::string reset_method = "greedy";
    auto* reset_cmd = app.add_subcommand("reset", "reset word (greedy) or shortest reset word (oracle)");
    reset_common.attach(reset_cmd);
    reset_cmd->add_option("--method", reset_method, "greedy | oracle")->check(CLI::IsMember({"greedy", "oracle"}));

    // gadget
    auto* gadget_cmd = app.add_subcommand("gadget", "reduction constructions");
    gadget_cmd->require_subcommand(1);
    std::string gadget_output;
    gadget_cmd->add_option("-o,--output", gadget_output, "write to this file instead of stdout");

    std::vector<std::string> dfa_files;
    auto* g_inter = gadget_cmd->add_subcommand("intersection", "DFA intersection gadget");
    g_inter->add_option("dfas", dfa_files, "DFA files (automaton plus 'initial' and 'accepting' lines)")
        ->required();

    std::string g_file, g_subset;
    std::optional<State> g_f;
    auto* g_bin = gadget_cmd->add_subcommand("binarize", "encode over a two-letter alphabet");
    g_bin->add_option("file", g_file, "automaton file")->required();
    g_bin->add_option("--subset", g_subset, "comma-separated 0-based states")->required();

    std::optional<std::string> g_sink_subset;
    auto* g_sink = gadget_cmd->add_subcommand("sink", "synchronizing two-letter encoding with a sink");
    g_sink->add_option("file", g_file, "binary automaton file")->required();
    g_sink->add_option("--subset", g_sink_subset, "subset to carry over (default: all states)");

    auto* g_large = gadget_cmd->add_subcommand("large-extend", "extensibility of Q from total extensibility of S");
    g_large->add_option("file", g_file, "automaton file")->required();
    g_large->add_option("--subset", g_subset, "comma-separated 0-based states")->required();
    g_large->add_option("--f", g_f, "state receiving S under the new letter")->required();

    // random
    std::size_t r_states = 0, r_letters = 0;
    std::uint64_t r_seed = 0;
    std::string r_constraint = "none";
    auto* random_cmd = app.add_subcommand("random", "seeded random automaton");
    random_cmd->add_option("--states", r_states, "number of states")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--letters", r_letters, "number of letters")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", r_seed, "generator seed")->required();
    random_cmd->add_option("--constraint", r_constraint, "none | strongly-connected | synchronizing | permutation")
        ->check(CLI::IsMember({"none", "strongly-connected", "synchronizing", "permutation"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (check_cmd->parsed()) {
            CheckRequest req;
            req.problem = parse_problem(check_problem);
            req.method = parse_method(check_method);
            req.max_len = check_max_len;
            req.want_witness = check_witness;
            return cmd_check("check", check_common, check_subset, req, out);
        }
        if (oracle_cmd->parsed()) {
            CheckRequest req;
            req.problem = parse_goal(oracle_goal);
            req.method = Method::oracle;
            req.max_len = oracle_max_len;
            req.want_witness = true;
            return cmd_check("oracle", oracle_common, oracle_subset, req, out);
        }
        if (classify_cmd->parsed()) return cmd_classify(classify_common, out);
        if (rank_cmd->parsed()) return cmd_rank(rank_common, rank_method, out);
        if (reset_cmd->parsed()) return cmd_reset(reset_common, reset_method, out);
        if (random_cmd->parsed()) {
            const Automaton a = random_automaton(r_states, r_letters, r_seed, parse_constraint(r_constraint));
            out << serialize_automaton(a);
            return 0;
        }
        if (gadget_cmd->parsed()) {
            std::optional<GadgetOutput> g;
            if (g_inter->parsed()) {
                std::vector<DfaWithAcceptance> dfas;
                for (const auto& path : dfa_files) dfas.push_back(parse_dfa(read_file(path)));
                g = intersection_gadget(dfas);
            } else {
                const Automaton a = load_automaton(g_file);
                if (g_bin->parsed()) {
                    g = binarize(a, parse_subset(g_subset, a.states()));
                } else if (g_sink->parsed()) {
                    g = g_sink_subset ? sink_binarize(a, parse_subset(*g_sink_subset, a.states())) : sink_binarize(a);
                } else {
                    g = large_extend_gadget(a, parse_subset(g_subset, a.states()), *g_f);
                }
            }
            write_text(serialize_gadget(*g), gadget_output, out);
            return 0;
        }
    } catch (const InternalError&) {
        throw;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}

}  // namespace preimage::cli
