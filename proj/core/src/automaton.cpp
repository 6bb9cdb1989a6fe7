#include "preimage/automaton.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace preimage {

Automaton::Automaton(std::size_t states, std::size_t letters, std::vector<State> table)
    : n_(states), k_(letters), table_(std::move(table)) {
    if (n_ == 0) throw std::invalid_argument("automaton needs at least one state");
    if (k_ == 0) throw std::invalid_argument("automaton needs at least one letter");
    if (table_.size() != n_ * k_)
        throw std::invalid_argument("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                                    std::to_string(n_ * k_));
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= n_)
            throw std::invalid_argument("transition (" + std::to_string(i / k_) + ", " + std::to_string(i % k_) +
                                        ") leads to " + std::to_string(table_[i]) + ", outside [0, " +
                                        std::to_string(n_) + ")");

    pred_offsets_.assign(n_ * k_ + 1, 0);
    for (std::size_t q = 0; q < n_; ++q)
        for (std::size_t a = 0; a < k_; ++a) ++pred_offsets_[a * n_ + table_[q * k_ + a] + 1];
    for (std::size_t i = 1; i < pred_offsets_.size(); ++i) pred_offsets_[i] += pred_offsets_[i - 1];
    pred_states_.resize(n_ * k_);
    std::vector<std::size_t> fill(pred_offsets_.begin(), pred_offsets_.end() - 1);
    for (std::size_t q = 0; q < n_; ++q)
        for (std::size_t a = 0; a < k_; ++a) pred_states_[fill[a * n_ + table_[q * k_ + a]]++] = static_cast<State>(q);
}

Automaton Automaton::from_columns(const std::vector<std::vector<State>>& columns) {
    if (columns.empty()) throw std::invalid_argument("automaton needs at least one letter");
    const std::size_t n = columns.front().size();
    std::vector<State> table(n * columns.size());
    for (std::size_t a = 0; a < columns.size(); ++a) {
        if (columns[a].size() != n) throw std::invalid_argument("letter columns of different lengths");
        for (std::size_t q = 0; q < n; ++q) table[q * columns.size() + a] = columns[a][q];
    }
    return Automaton(n, columns.size(), std::move(table));
}

State Automaton::next(State q, const Word& w) const noexcept {
    for (Letter a : w) q = next(q, a);
    return q;
}

std::span<const State> Automaton::predecessors(State q, Letter a) const noexcept {
    const std::size_t idx = static_cast<std::size_t>(a) * n_ + q;
    return std::span<const State>(pred_states_).subspan(pred_offsets_[idx], pred_offsets_[idx + 1] - pred_offsets_[idx]);
}

namespace {

void check_bound(const Automaton& a, const StateSet& s) {
    if (s.universe() != a.states())
        throw std::invalid_argument("state set over " + std::to_string(s.universe()) +
                                    " states used with an automaton of " + std::to_string(a.states()) + " states");
}

void check_word(const Automaton& a, const Word& w) {
    for (Letter x : w)
        if (x >= a.letters()) throw std::invalid_argument("letter " + std::to_string(x) + " outside the alphabet");
}

}  // namespace

StateSet apply_letter(const Automaton& a, const StateSet& s, Letter letter) {
    StateSet out(a.states());
    s.for_each([&](State q) { out.insert(a.next(q, letter)); });
    return out;
}

StateSet preimage_letter(const Automaton& a, const StateSet& s, Letter letter) {
    StateSet out(a.states());
    s.for_each([&](State q) {
        for (State p : a.predecessors(q, letter)) out.insert(p);
    });
    return out;
}

StateSet apply_word(const Automaton& a, const StateSet& s, const Word& w) {
    check_bound(a, s);
    check_word(a, w);
    StateSet cur = s;
    for (Letter x : w) cur = apply_letter(a, cur, x);
    return cur;
}

StateSet preimage_word(const Automaton& a, const StateSet& s, const Word& w) {
    check_bound(a, s);
    check_word(a, w);
    // S.(uv)^-1 = (S.v^-1).u^-1: consume the word from its last letter.
    StateSet cur = s;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) cur = preimage_letter(a, cur, *it);
    return cur;
}

std::size_t SccDecomposition::sink_count() const noexcept {
    return static_cast<std::size_t>(std::count(is_sink.begin(), is_sink.end(), true));
}

SccDecomposition scc(const Automaton& a) {
    const std::size_t n = a.states();
    const std::size_t k = a.letters();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    // Iterative Tarjan.
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::vector<State>> raw;
    std::size_t counter = 0;

    struct Frame {
        State q;
        Letter next_letter;
    };
    std::vector<Frame> call;

    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_letter < k) {
                const State p = a.next(f.q, f.next_letter++);
                if (index[p] == unvisited) {
                    index[p] = low[p] = counter++;
                    stack.push_back(p);
                    on_stack[p] = true;
                    call.push_back({p, 0});
                } else if (on_stack[p]) {
                    low[f.q] = std::min(low[f.q], index[p]);
                }
                continue;
            }
            const State q = f.q;
            call.pop_back();
            if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
            if (low[q] == index[q]) {
                std::vector<State> comp;
                State p;
                do {
                    p = stack.back();
                    stack.pop_back();
                    on_stack[p] = false;
                    comp.push_back(p);
                } while (p != q);
                std::sort(comp.begin(), comp.end());
                raw.push_back(std::move(comp));
            }
        }
    }

    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

    SccDecomposition d;
    d.component_of.assign(n, 0);
    for (std::size_t c = 0; c < raw.size(); ++c)
        for (State q : raw[c]) d.component_of[q] = c;
    d.is_sink.assign(raw.size(), true);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            if (d.component_of[a.next(q, x)] != d.component_of[q]) d.is_sink[d.component_of[q]] = false;
    d.components = std::move(raw);
    return d;
}

bool is_strongly_connected(const Automaton& a) { return scc(a).count() == 1; }

bool is_permutation_automaton(const Automaton& a) {
    std::vector<bool> hit(a.states());
    for (Letter x = 0; x < a.letters(); ++x) {
        std::fill(hit.begin(), hit.end(), false);
        for (State q = 0; q < a.states(); ++q) {
            const State p = a.next(q, x);
            if (hit[p]) return false;
            hit[p] = true;
        }
    }
    return true;
}

std::optional<State> sink_state(const Automaton& a) {
    for (State q = 0; q < a.states(); ++q) {
        bool fixed = true;
        for (Letter x = 0; x < a.letters() && fixed; ++x) fixed = a.next(q, x) == q;
        if (fixed) return q;
    }
    return std::nullopt;
}

std::optional<Word> path_word(const Automaton& a, State from, const StateSet& targets) {
    if (targets.contains(from)) return Word{};
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(a.states(), none);
    std::vector<Letter> via(a.states(), 0);
    std::deque<State> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < a.letters(); ++x) {
            const State p = a.next(q, x);
            if (parent[p] != none) continue;
            parent[p] = q;
            via[p] = x;
            if (targets.contains(p)) {
                Word w;
                for (State cur = p; cur != from; cur = static_cast<State>(parent[cur])) w.push_front(via[cur]);
                return w;
            }
            queue.push_back(p);
        }
    }
    return std::nullopt;
}

}  // namespace preimage
