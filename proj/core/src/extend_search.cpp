#include "preimage/extend_search.hpp"

#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace preimage {

namespace {

constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

/// Breadth-first search over subsets under the image action. Nodes are
/// canonical bit vectors; the visited map owns them.
class ImageSearch {
public:
    ImageSearch(const Automaton& a, const SearchLimits& limits) : a_(a), limits_(limits) {}

    /// Adds a node at the front layer; returns false if it was already known.
    bool add_source(StateSet set, Letter tag) { return add(std::move(set), no_parent, tag); }

    /// Runs FIFO from the current queue; returns the index of the first node
    /// satisfying `goal`, sources included, in BFS order.
    template <typename Goal>
    std::optional<std::size_t> run(Goal&& goal) {
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (goal(*nodes_[i].set)) return i;
        while (head_ < nodes_.size()) {
            const std::size_t cur = head_++;
            ++stats_.nodes_expanded;
            for (Letter x = 0; x < a_.letters(); ++x) {
                StateSet next = apply_letter(a_, *nodes_[cur].set, x);
                const bool is_goal = goal(next);
                if (add(std::move(next), cur, x) && is_goal) return nodes_.size() - 1;
            }
        }
        return std::nullopt;
    }

    /// Letters from the source tag to node i.
    Word word_to(std::size_t i) const {
        Word w;
        for (std::size_t cur = i; cur != no_parent; cur = nodes_[cur].parent) w.push_front(nodes_[cur].letter);
        return w;
    }

    /// Path letters only, without the source tag.
    Word path_to(std::size_t i) const {
        Word w;
        for (std::size_t cur = i; nodes_[cur].parent != no_parent; cur = nodes_[cur].parent)
            w.push_front(nodes_[cur].letter);
        return w;
    }

    const StateSet& set(std::size_t i) const { return *nodes_[i].set; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const SearchStats& stats() const noexcept { return stats_; }

private:
    struct Node {
        const StateSet* set;
        std::size_t parent;
        Letter letter;
    };

    bool add(StateSet set, std::size_t parent, Letter letter) {
        auto [it, inserted] = visited_.try_emplace(std::move(set), nodes_.size());
        if (!inserted) return false;
        if (++stats_.nodes_created > limits_.node_limit) throw BudgetExceeded(limits_.node_limit, stats_.nodes_created);
        nodes_.push_back({&it->first, parent, letter});
        return true;
    }

    const Automaton& a_;
    SearchLimits limits_;
    std::unordered_map<StateSet, std::size_t, StateSetHash> visited_;
    std::vector<Node> nodes_;
    std::size_t head_ = 0;
    SearchStats stats_;
};

void check_bound(const Automaton& a, const StateSet& s) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
}

/// Calls f(members) for every r-subset of `pool`, in lexicographic order.
template <typename F>
void for_each_combination(const std::vector<State>& pool, std::size_t r, F&& f) {
    if (r > pool.size()) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<State> pick(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) pick[i] = pool[idx[i]];
        f(pick);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == pool.size() - r + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SearchResult shortest_extending_word_small(const Automaton& a, const StateSet& s, const SearchLimits& limits) {
    check_bound(a, s);
    const std::size_t n = a.states();
    const std::size_t size = s.size();
    SearchResult result;
    if (size == 0 || size == n) return result;

    std::uint64_t estimate = 0;
    for (std::size_t i = 1; i <= size; ++i) {
        const auto c = binomial_saturating(n, i);
        estimate = (c > std::numeric_limits<std::uint64_t>::max() - estimate) ? std::numeric_limits<std::uint64_t>::max()
                                                                              : estimate + c;
    }
    if (estimate > limits.node_limit) throw BudgetExceeded(limits.node_limit, estimate);

    // in_degree[x * n + q] = |q.x^-1|
    std::vector<std::size_t> in_degree(n * a.letters());
    for (Letter x = 0; x < a.letters(); ++x)
        for (State q = 0; q < n; ++q) in_degree[x * n + q] = a.predecessors(q, x).size();

    ImageSearch search(a, limits);
    std::vector<State> everything(n);
    for (State q = 0; q < n; ++q) everything[q] = q;
    for (std::size_t r = 1; r <= size; ++r)
        for_each_combination(everything, r, [&](const std::vector<State>& pick) {
            for (Letter x = 0; x < a.letters(); ++x) {
                std::size_t total = 0;
                for (State q : pick) total += in_degree[x * n + q];
                if (total > size) {
                    search.add_source(StateSet(n, pick), x);
                    break;
                }
            }
        });

    const auto hit = search.run([&](const StateSet& node) { return node.is_subset_of(s); });
    if (hit) result.word = search.word_to(*hit);
    result.stats = search.stats();
    return result;
}

SearchResult totally_extending_word_small(const Automaton& a, const StateSet& s, const SearchLimits& limits) {
    return totally_extending_word_small(a, PairTable(a), s, limits);
}

SearchResult totally_extending_word_small(const Automaton& a, const PairTable& pairs, const StateSet& s,
                                          const SearchLimits& limits) {
    check_bound(a, s);
    SearchResult result;
    const RankResult rank = minimal_rank_word(a, pairs);
    if (rank.rank() > s.size()) return result;

    ImageSearch search(a, limits);
    search.add_source(rank.image, 0);
    const auto hit = search.run([&](const StateSet& node) { return node.is_subset_of(s); });
    if (hit) result.word = rank.word + search.path_to(*hit);
    result.stats = search.stats();
    return result;
}

SynchronizingExtension totally_extensible_synchronizing(const Automaton& a, const StateSet& s, bool want_witness) {
    check_bound(a, s);
    const PairTable pairs(a);
    if (!pairs.all_compressible()) throw std::invalid_argument("automaton is not synchronizing");

    const auto d = scc(a);
    StateSet sink(a.states());
    for (std::size_t c = 0; c < d.count(); ++c)
        if (d.is_sink[c])
            for (State q : d.components[c]) sink.insert(q);

    SynchronizingExtension out;
    out.extensible = sink.intersects(s);
    if (out.extensible && want_witness) {
        Word w = *greedy_reset_word(a, pairs);
        const State p = a.next(0, w);
        // p lies in the sink component, which is strongly connected and meets S.
        out.witness = w + *path_word(a, p, s);
    }
    return out;
}

}  // namespace preimage
