/* check.hpp -- method routing and reports for the preimage problems */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "preimage/automaton.hpp"
#include "preimage/oracle.hpp"
#include "preimage/search.hpp"
#include "preimage/word.hpp"

namespace preimage::cli {

enum class Problem { extend, extend_total, avoid, resize };
enum class Method { automatic, poly, oracle };
enum class Answer { yes, no, unknown, unknown_budget };

std::string to_string(Problem p);
std::string to_string(Answer a);
Problem parse_problem(const std::string& name);
Problem parse_goal(const std::string& name);
Method parse_method(const std::string& name);

/// Exit status for an answer: 0 yes, 1 no, 2 unknown (budget or bound).
int exit_code(Answer a) noexcept;

inline constexpr int exit_usage = 3;
inline constexpr int exit_io = 4;

/// A witness failed re-verification. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Classification {
    std::size_t states = 0;
    std::size_t letters = 0;
    bool strongly_connected = false;
    bool synchronizing = false;
    bool permutation = false;
    std::optional<State> sink_state;
    std::size_t sink_components = 0;
};

Classification classify(const Automaton& a);

struct CheckRequest {
    Problem problem = Problem::extend;
    Method method = Method::automatic;
    std::optional<std::size_t> max_len;
    bool want_witness = false;
    SearchLimits limits;
    OracleLimits oracle;
};

struct CheckReport {
    Problem problem = Problem::extend;
    Answer answer = Answer::no;
    std::string method;  // "poly", "oracle" or "fast-path"
    std::optional<std::size_t> max_len;
    std::optional<Word> witness;
    std::size_t subset_size = 0;
    std::optional<std::size_t> preimage_size;
    std::uint64_t nodes_created = 0;
    std::uint64_t nodes_expanded = 0;
    std::size_t basis_size = 0;
    std::size_t vectors_tested = 0;
    std::string note;
    Classification classification;
};

/// Does `w` solve `problem` for S? Extending: |S.w^-1| > |S|; totally
/// extending: S.w^-1 = Q; avoiding: Q.w misses S; resizing: |S.w^-1| != |S|.
bool verify_witness(const Automaton& a, const StateSet& s, Problem problem, const Word& w);

/// Decides `request.problem` for S. Every word found is re-verified and
/// InternalError is thrown if that fails. Budget and oracle-cap exhaustion
/// are reported as Answer::unknown_budget, never thrown.
CheckReport check(const Automaton& a, const StateSet& s, const CheckRequest& request);

}  // namespace preimage::cli
