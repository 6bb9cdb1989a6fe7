#include "preimage/avoid.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace preimage {

RankPartition rank_partition(const Automaton& a, const StateSet& s) {
    return rank_partition(a, PairTable(a), s);
}

RankPartition rank_partition(const Automaton& a, const PairTable& pairs, const StateSet& s) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    RankResult rank = minimal_rank_word(a, pairs);
    RankPartition part;
    part.word = std::move(rank.word);
    part.image = std::move(rank.image);
    part.representative = part.image.members();

    std::vector<std::size_t> slot(a.states(), 0);
    for (std::size_t i = 0; i < part.representative.size(); ++i) slot[part.representative[i]] = i;
    part.classes.assign(part.representative.size(), StateSet(a.states()));
    part.class_of.assign(a.states(), 0);
    for (State q = 0; q < a.states(); ++q) {
        const std::size_t c = slot[a.next(q, part.word)];
        part.class_of[q] = c;
        part.classes[c].insert(q);
    }
    for (const auto& c : part.classes)
        if (c.intersects(s)) ++part.meeting_subset;
    return part;
}

SearchResult avoiding_word(const Automaton& a, const StateSet& s, const SearchLimits& limits) {
    return avoiding_word(a, PairTable(a), s, limits);
}

SearchResult avoiding_word(const Automaton& a, const PairTable& pairs, const StateSet& s, const SearchLimits& limits) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    SearchResult result;
    if (s.empty()) {
        result.word = Word{};
        return result;
    }

    const RankPartition part = rank_partition(a, pairs, s);
    const std::size_t z = part.meeting_subset;

    // Per class: does it meet S (must be hit), and which states of it lie outside S.
    std::vector<bool> must_hit(part.rank(), false);
    std::vector<std::size_t> wanted;
    for (std::size_t c = 0; c < part.rank(); ++c)
        if (part.classes[c].intersects(s)) {
            must_hit[c] = true;
            wanted.push_back(c);
        }

    const auto sources = binomial_saturating(part.rank(), z);
    if (sources > limits.node_limit) throw BudgetExceeded(limits.node_limit, sources);

    // T has z states; it is a goal iff every wanted class holds one of them outside S.
    std::vector<bool> seen(part.rank());
    auto goal = [&](const StateSet& t) {
        std::fill(seen.begin(), seen.end(), false);
        std::size_t hits = 0;
        t.for_each([&](State q) {
            const std::size_t c = part.class_of[q];
            if (must_hit[c] && !s.contains(q) && !seen[c]) {
                seen[c] = true;
                ++hits;
            }
        });
        return hits == z;
    };

    constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();
    struct Node {
        const StateSet* set;
        std::size_t parent;
        Letter letter;
    };
    std::unordered_map<StateSet, std::size_t, StateSetHash> visited;
    std::vector<Node> nodes;
    auto add = [&](StateSet t, std::size_t parent, Letter x) {
        auto [it, inserted] = visited.try_emplace(std::move(t), nodes.size());
        if (!inserted) return false;
        if (++result.stats.nodes_created > limits.node_limit)
            throw BudgetExceeded(limits.node_limit, result.stats.nodes_created);
        nodes.push_back({&it->first, parent, x});
        return true;
    };
    auto finish = [&](std::size_t i) {
        Word w;
        for (std::size_t cur = i; nodes[cur].parent != no_parent; cur = nodes[cur].parent) w.push_front(nodes[cur].letter);
        result.word = part.word + w;
        return result;
    };

    // Sources: z-subsets of Q.u in lexicographic order.
    const auto& pool = part.representative;
    if (z <= pool.size()) {
        std::vector<std::size_t> idx(z);
        for (std::size_t i = 0; i < z; ++i) idx[i] = i;
        std::vector<State> pick(z);
        while (true) {
            for (std::size_t i = 0; i < z; ++i) pick[i] = pool[idx[i]];
            StateSet t(a.states(), pick);
            const bool is_goal = goal(t);
            if (add(std::move(t), no_parent, 0) && is_goal) return finish(nodes.size() - 1);
            std::size_t i = z;
            while (i > 0 && idx[i - 1] == pool.size() - z + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < z; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        ++result.stats.nodes_expanded;
        for (Letter x = 0; x < a.letters(); ++x) {
            StateSet next = apply_letter(a, *nodes[head].set, x);
            const bool is_goal = goal(next);
            if (add(std::move(next), head, x) && is_goal) return finish(nodes.size() - 1);
        }
    }
    return result;
}

}  // namespace preimage
