/* io.hpp -- text format for automata and DFAs */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "preimage/automaton.hpp"
#include "preimage/gadgets.hpp"

namespace preimage {

/// Malformed automaton text; `line()` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Format:
///
///     # comment to end of line
///     n k
///     d(0,0) d(0,1) ... d(0,k-1)
///     ...
///     d(n-1,0) ...  d(n-1,k-1)
///
/// One row per non-blank line, 0-based targets.
Automaton parse_automaton(std::string_view text);

/// Automaton text followed by `initial q` and `accepting q1 q2 ...` lines.
DfaWithAcceptance parse_dfa(std::string_view text);

/// Serializes in the format above. Optional state names are written as
/// comments after each row, and an optional subset as a `# subset:` comment.
std::string serialize_automaton(const Automaton& a, const std::vector<std::string>& state_names = {},
                                const std::optional<StateSet>& subset = std::nullopt);

std::string serialize_gadget(const GadgetOutput& g);

/// "1,3,4" (0-based, empty string for the empty set). Throws
/// std::invalid_argument on malformed or out-of-range entries.
StateSet parse_subset(std::string_view text, std::size_t states);
std::string format_subset(const StateSet& s);

std::string read_file(const std::string& path);

}  // namespace preimage
