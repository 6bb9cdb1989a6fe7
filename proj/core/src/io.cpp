#include "preimage/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace preimage {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) parsed.tokens.push_back(line.substr(start, i - start));
        }
        if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::size_t to_number(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

/// Parses header and rows; returns the index of the first unused line.
std::size_t parse_table(const std::vector<Line>& lines, std::optional<Automaton>& out) {
    if (lines.empty()) throw ParseError(0, "missing header 'n k'");
    const Line& header = lines.front();
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n k'");
    const std::size_t n = to_number(header.tokens[0], header.number);
    const std::size_t k = to_number(header.tokens[1], header.number);
    if (n == 0 || k == 0) throw ParseError(header.number, "n and k must be positive");
    if (lines.size() < n + 1)
        throw ParseError(lines.back().number, "expected " + std::to_string(n) + " rows, found " +
                                                  std::to_string(lines.size() - 1));
    std::vector<State> table;
    table.reserve(n * k);
    for (std::size_t q = 0; q < n; ++q) {
        const Line& row = lines[q + 1];
        if (row.tokens.size() != k)
            throw ParseError(row.number, "row " + std::to_string(q) + " has " + std::to_string(row.tokens.size()) +
                                             " entries, expected " + std::to_string(k));
        for (auto tok : row.tokens) {
            const std::size_t target = to_number(tok, row.number);
            if (target >= n)
                throw ParseError(row.number, "entry " + std::to_string(target) + " out of range [0, " +
                                                 std::to_string(n) + ")");
            table.push_back(static_cast<State>(target));
        }
    }
    out.emplace(n, k, std::move(table));
    return n + 1;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    const auto lines = tokenize(text);
    std::optional<Automaton> a;
    const std::size_t used = parse_table(lines, a);
    if (used != lines.size())
        throw ParseError(lines[used].number, "unexpected content after " + std::to_string(a->states()) + " rows");
    return *a;
}

DfaWithAcceptance parse_dfa(std::string_view text) {
    const auto lines = tokenize(text);
    std::optional<Automaton> a;
    std::size_t i = parse_table(lines, a);
    std::optional<State> initial;
    StateSet accepting(a->states());
    bool saw_accepting = false;
    auto state = [&](std::string_view tok, std::size_t line) {
        const std::size_t q = to_number(tok, line);
        if (q >= a->states()) throw ParseError(line, "state " + std::to_string(q) + " out of range");
        return static_cast<State>(q);
    };
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.front() == "initial") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'initial q'");
            initial = state(l.tokens[1], l.number);
        } else if (l.tokens.front() == "accepting") {
            saw_accepting = true;
            for (std::size_t j = 1; j < l.tokens.size(); ++j) accepting.insert(state(l.tokens[j], l.number));
        } else {
            throw ParseError(l.number, "expected 'initial' or 'accepting'");
        }
    }
    if (!initial) throw ParseError(0, "DFA lacks an 'initial' line");
    if (!saw_accepting) throw ParseError(0, "DFA lacks an 'accepting' line");
    return {std::move(*a), *initial, std::move(accepting)};
}

std::string serialize_automaton(const Automaton& a, const std::vector<std::string>& state_names,
                                const std::optional<StateSet>& subset) {
    std::ostringstream out;
    if (subset) out << "# subset: " << format_subset(*subset) << '\n';
    out << a.states() << ' ' << a.letters() << '\n';
    for (State q = 0; q < a.states(); ++q) {
        for (Letter x = 0; x < a.letters(); ++x) out << (x ? " " : "") << a.next(q, x);
        if (q < state_names.size()) out << "  # " << q << ": " << state_names[q];
        out << '\n';
    }
    return out.str();
}

std::string serialize_gadget(const GadgetOutput& g) {
    std::ostringstream out;
    out << "# letters:";
    for (const auto& l : g.letter_names) out << ' ' << l;
    out << '\n';
    out << serialize_automaton(g.automaton, g.names, g.subset);
    return out.str();
}

StateSet parse_subset(std::string_view text, std::size_t states) {
    StateSet s(states);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (tok.empty()) throw std::invalid_argument("empty entry in subset '" + std::string(text) + "'");
        std::size_t q = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), q);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad state '" + std::string(tok) + "' in subset");
        if (q >= states)
            throw std::invalid_argument("state " + std::to_string(q) + " out of range [0, " + std::to_string(states) +
                                        ")");
        s.insert(static_cast<State>(q));
        pos = end + 1;
    }
    return s;
}

std::string format_subset(const StateSet& s) {
    std::string out;
    s.for_each([&](State q) {
        if (!out.empty()) out += ',';
        out += std::to_string(q);
    });
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace preimage
