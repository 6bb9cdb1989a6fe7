#include "preimage/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace preimage {

SubsetMask to_mask(const StateSet& s) {
    if (s.universe() > 64) throw OracleCapExceeded("subset masks hold at most 64 states");
    return s.blocks().empty() ? 0 : s.blocks()[0];
}

StateSet from_mask(SubsetMask m, std::size_t states) {
    StateSet s(states);
    while (m != 0) {
        s.insert(static_cast<State>(std::countr_zero(m)));
        m &= m - 1;
    }
    return s;
}

Word SubsetBfsResult::word_to(SubsetMask t) const {
    Word w;
    for (SubsetMask cur = t; reached.at(cur).depth != 0;) {
        const Entry& e = reached.at(cur);
        if (direction == Direction::preimage)
            w.push_back(e.letter);
        else
            w.push_front(e.letter);
        cur = e.parent;
    }
    return w;
}

namespace {

class MaskAutomaton {
public:
    MaskAutomaton(const Automaton& a, const OracleLimits& limits) : a_(a) {
        if (a.states() > limits.max_states || a.states() > 64)
            throw OracleCapExceeded("oracle refuses " + std::to_string(a.states()) + " states (cap " +
                                    std::to_string(std::min<std::size_t>(limits.max_states, 64)) + ")");
    }

    SubsetMask full() const noexcept {
        return a_.states() == 64 ? ~SubsetMask{0} : (SubsetMask{1} << a_.states()) - 1;
    }

    SubsetMask step(SubsetMask t, Letter x, Direction d) const noexcept {
        SubsetMask out = 0;
        if (d == Direction::preimage) {
            for (State q = 0; q < a_.states(); ++q)
                if ((t >> a_.next(q, x)) & 1u) out |= SubsetMask{1} << q;
        } else {
            while (t != 0) {
                out |= SubsetMask{1} << a_.next(static_cast<State>(std::countr_zero(t)), x);
                t &= t - 1;
            }
        }
        return out;
    }

    const Automaton& automaton() const noexcept { return a_; }

private:
    const Automaton& a_;
};

/// BFS from `origin`; stops as soon as a node other than the origin (or the
/// origin too, when `origin_counts`) satisfies `goal`.
template <typename Pred>
std::optional<SubsetMask> explore(const MaskAutomaton& m, SubsetMask origin, Direction d, const OracleLimits& limits,
                                  SubsetBfsResult& out, Pred&& goal, bool origin_counts) {
    out.direction = d;
    out.states = m.automaton().states();
    out.origin = origin;
    out.reached.clear();
    out.order.clear();
    out.reached.emplace(origin, SubsetBfsResult::Entry{0, 0, origin});
    out.order.push_back(origin);
    if (origin_counts && goal(origin)) return origin;
    for (std::size_t head = 0; head < out.order.size(); ++head) {
        const SubsetMask t = out.order[head];
        const std::uint32_t depth = out.reached.at(t).depth;
        for (Letter x = 0; x < m.automaton().letters(); ++x) {
            const SubsetMask next = m.step(t, x, d);
            if (!out.reached.emplace(next, SubsetBfsResult::Entry{depth + 1, x, t}).second) continue;
            if (out.order.size() >= limits.node_limit) throw BudgetExceeded(limits.node_limit, out.order.size() + 1);
            out.order.push_back(next);
            if (goal(next)) return next;
        }
    }
    return std::nullopt;
}

}  // namespace

SubsetBfsResult backward_subset_bfs(const Automaton& a, const StateSet& s, const OracleLimits& limits) {
    const MaskAutomaton m(a, limits);
    SubsetBfsResult out;
    explore(m, to_mask(s), Direction::preimage, limits, out, [](SubsetMask) { return false; }, false);
    return out;
}

SubsetBfsResult forward_subset_bfs(const Automaton& a, const StateSet& start, const OracleLimits& limits) {
    const MaskAutomaton m(a, limits);
    SubsetBfsResult out;
    explore(m, to_mask(start), Direction::image, limits, out, [](SubsetMask) { return false; }, false);
    return out;
}

std::optional<Word> oracle_shortest(const Automaton& a, const StateSet& s, Goal goal, const OracleLimits& limits) {
    const MaskAutomaton m(a, limits);
    const SubsetMask origin = to_mask(s);
    const int size = std::popcount(origin);
    const SubsetMask full = m.full();
    SubsetBfsResult out;
    std::optional<SubsetMask> hit;
    switch (goal) {
    case Goal::extending:
        hit = explore(m, origin, Direction::preimage, limits, out,
                      [&](SubsetMask t) { return std::popcount(t) > size; }, true);
        break;
    case Goal::totally_extending:
        hit = explore(m, origin, Direction::preimage, limits, out, [&](SubsetMask t) { return t == full; }, true);
        break;
    case Goal::avoiding:
        hit = explore(m, origin, Direction::preimage, limits, out, [](SubsetMask t) { return t == 0; }, true);
        break;
    case Goal::resizing:
        hit = explore(m, origin, Direction::preimage, limits, out,
                      [&](SubsetMask t) { return std::popcount(t) != size; }, false);
        break;
    }
    if (!hit) return std::nullopt;
    return out.word_to(*hit);
}

std::optional<Word> oracle_shortest_reset(const Automaton& a, const OracleLimits& limits) {
    const MaskAutomaton m(a, limits);
    SubsetBfsResult out;
    const auto hit = explore(m, m.full(), Direction::image, limits, out,
                             [](SubsetMask t) { return std::popcount(t) == 1; }, true);
    if (!hit) return std::nullopt;
    return out.word_to(*hit);
}

std::size_t oracle_min_rank(const Automaton& a, const OracleLimits& limits) {
    const auto bfs = forward_subset_bfs(a, a.all_states(), limits);
    std::size_t best = a.states();
    for (SubsetMask t : bfs.order) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(t)));
    return best;
}

}  // namespace preimage
