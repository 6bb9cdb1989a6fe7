#include "preimage/pair_analysis.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

namespace preimage {

std::size_t PairTable::index(State p, State q) const {
    if (p == q || p >= n_ || q >= n_)
        throw std::out_of_range("invalid pair {" + std::to_string(p) + "," + std::to_string(q) + "}");
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(q) * (q - 1) / 2 + p;
}

PairTable::PairTable(const Automaton& a) : n_(a.states()) {
    const std::size_t pairs = n_ * (n_ - 1) / 2;
    dist_.assign(pairs, unreachable);
    letter_.assign(pairs, 0);
    succ_p_.assign(pairs, 0);
    succ_q_.assign(pairs, 0);

    std::deque<std::pair<State, State>> queue;
    // Sources: pairs merged by one letter, scanned in ascending (q, p) then letter order.
    for (State q = 1; q < n_; ++q)
        for (State p = 0; p < q; ++p)
            for (Letter x = 0; x < a.letters(); ++x)
                if (a.next(p, x) == a.next(q, x)) {
                    const std::size_t i = index(p, q);
                    dist_[i] = 1;
                    letter_[i] = x;
                    succ_p_[i] = succ_q_[i] = a.next(p, x);
                    queue.emplace_back(p, q);
                    break;
                }

    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        const std::uint32_t d = dist_[index(p, q)];
        for (Letter x = 0; x < a.letters(); ++x)
            for (State pp : a.predecessors(p, x))
                for (State qq : a.predecessors(q, x)) {
                    // pp != qq always holds since p != q.
                    const std::size_t j = index(pp, qq);
                    if (dist_[j] != unreachable) continue;
                    dist_[j] = d + 1;
                    letter_[j] = x;
                    succ_p_[j] = p;
                    succ_q_[j] = q;
                    queue.emplace_back(std::min(pp, qq), std::max(pp, qq));
                }
    }

    for (auto d : dist_)
        if (d == unreachable) {
            all_compressible_ = false;
            break;
        }
}

std::uint32_t PairTable::distance(State p, State q) const { return dist_[index(p, q)]; }

std::optional<Word> PairTable::word(State p, State q) const {
    std::size_t i = index(p, q);
    if (dist_[i] == unreachable) return std::nullopt;
    Word w;
    while (true) {
        w.push_back(letter_[i]);
        if (succ_p_[i] == succ_q_[i]) break;
        i = index(succ_p_[i], succ_q_[i]);
    }
    return w;
}

bool is_synchronizing(const Automaton& a) { return PairTable(a).all_compressible(); }

namespace {

/// Compress `image` pair by pair while some pair is compressible; the chosen
/// pair is the one with the shortest word, ties broken by smallest (p, q).
RankResult compress_greedily(const Automaton& a, const PairTable& pairs) {
    RankResult r{Word{}, a.all_states()};
    while (r.image.size() > 1) {
        const auto members = r.image.members();
        std::uint32_t best = PairTable::unreachable;
        State bp = 0, bq = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const auto d = pairs.distance(members[i], members[j]);
                if (d < best) {
                    best = d;
                    bp = members[i];
                    bq = members[j];
                }
            }
        if (best == PairTable::unreachable) break;
        const Word w = *pairs.word(bp, bq);
        r.image = apply_word(a, r.image, w);
        r.word.append(w);
    }
    return r;
}

}  // namespace

std::optional<Word> greedy_reset_word(const Automaton& a) { return greedy_reset_word(a, PairTable(a)); }

std::optional<Word> greedy_reset_word(const Automaton& a, const PairTable& pairs) {
    if (!pairs.all_compressible()) return std::nullopt;
    return compress_greedily(a, pairs).word;
}

RankResult minimal_rank_word(const Automaton& a) { return minimal_rank_word(a, PairTable(a)); }

RankResult minimal_rank_word(const Automaton& a, const PairTable& pairs) { return compress_greedily(a, pairs); }

bool avoidable_state(const Automaton& a, State q, std::optional<bool> known_synchronizing) {
    if (q >= a.states()) throw std::out_of_range("state " + std::to_string(q) + " out of range");
    if (known_synchronizing.value_or(false)) {
        const auto sink = sink_state(a);
        // A synchronizing automaton has at most one sink state.
        return !(sink && *sink == q);
    }
    const auto d = scc(a);
    const std::size_t c = d.component_of[q];
    if (!d.is_sink[c]) return true;
    // The sink component is closed under all letters, so compressibility of a
    // pair inside it is the same in the sub-automaton and in the whole one.
    const PairTable pairs(a);
    for (State p : d.components[c])
        if (p != q && pairs.compressible(p, q)) return true;
    return false;
}

}  // namespace preimage
