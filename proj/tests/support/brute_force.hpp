/* brute_force.hpp -- reference answers computed straight from the definitions */

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "preimage/automaton.hpp"

// Only Automaton::next is used from the library; everything else is
// recomputed here with plain containers.
namespace testing_support::brute {

using preimage::Automaton;
using preimage::State;
using Letters = std::vector<std::uint32_t>;
using Mask = std::uint64_t;

inline State run(const Automaton& a, State q, const Letters& w) {
    for (auto x : w) q = a.next(q, x);
    return q;
}

/// {q : q.w in S}, evaluated state by state.
inline Mask preimage_of(const Automaton& a, Mask s, const Letters& w) {
    Mask out = 0;
    for (State q = 0; q < a.states(); ++q)
        if ((s >> run(a, q, w)) & 1u) out |= Mask{1} << q;
    return out;
}

inline Mask image_of(const Automaton& a, Mask t, const Letters& w) {
    Mask out = 0;
    for (State q = 0; q < a.states(); ++q)
        if ((t >> q) & 1u) out |= Mask{1} << run(a, q, w);
    return out;
}

inline Mask full(const Automaton& a) { return a.states() == 64 ? ~Mask{0} : (Mask{1} << a.states()) - 1; }

/// First word in length-lexicographic order, up to `max_len`, satisfying `pred`.
inline std::optional<Letters> enumerate_shortest(const Automaton& a, std::size_t max_len,
                                                 const std::function<bool(const Letters&)>& pred) {
    Letters w;
    for (std::size_t len = 0; len <= max_len; ++len) {
        w.assign(len, 0);
        while (true) {
            if (pred(w)) return w;
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == a.letters()) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return std::nullopt;
}

/// Shortest length of a word whose preimage of S satisfies `pred`, by BFS
/// over preimage sets (letters are prepended). `allow_empty` lets the empty
/// word count.
inline std::optional<std::size_t> shortest_preimage_length(const Automaton& a, Mask s,
                                                           const std::function<bool(Mask)>& pred,
                                                           bool allow_empty) {
    if (allow_empty && pred(s)) return 0;
    std::map<Mask, std::size_t> depth{{s, 0}};
    std::queue<Mask> queue;
    queue.push(s);
    while (!queue.empty()) {
        const Mask t = queue.front();
        queue.pop();
        for (std::uint32_t x = 0; x < a.letters(); ++x) {
            const Mask p = preimage_of(a, t, Letters{x});
            if (depth.count(p)) continue;
            depth[p] = depth[t] + 1;
            if (pred(p)) return depth[p];
            queue.push(p);
        }
    }
    return std::nullopt;
}

/// All images Q.w.
inline std::set<Mask> reachable_images(const Automaton& a) {
    std::set<Mask> seen{full(a)};
    std::queue<Mask> queue;
    queue.push(full(a));
    while (!queue.empty()) {
        const Mask t = queue.front();
        queue.pop();
        for (std::uint32_t x = 0; x < a.letters(); ++x) {
            const Mask i = image_of(a, t, Letters{x});
            if (seen.insert(i).second) queue.push(i);
        }
    }
    return seen;
}

inline std::size_t min_rank(const Automaton& a) {
    std::size_t best = a.states();
    for (Mask t : reachable_images(a)) best = std::min<std::size_t>(best, std::popcount(t));
    return best;
}

inline bool synchronizing(const Automaton& a) { return min_rank(a) == 1; }

/// Is there w with q not in Q.w?
inline bool avoidable(const Automaton& a, State q) {
    for (Mask t : reachable_images(a))
        if (!((t >> q) & 1u)) return true;
    return false;
}

/// Is there w with p.w = q.w?
inline bool compressible(const Automaton& a, State p, State q) {
    std::set<std::pair<State, State>> seen{{p, q}};
    std::queue<std::pair<State, State>> queue;
    queue.push({p, q});
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop();
        if (u == v) return true;
        for (std::uint32_t x = 0; x < a.letters(); ++x) {
            std::pair<State, State> next{a.next(u, x), a.next(v, x)};
            if (seen.insert(next).second) queue.push(next);
        }
    }
    return false;
}

/// reach[p][q]: q reachable from p (reflexive).
inline std::vector<std::vector<bool>> reachability(const Automaton& a) {
    const std::size_t n = a.states();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (State p = 0; p < n; ++p) {
        r[p][p] = true;
        for (std::uint32_t x = 0; x < a.letters(); ++x) r[p][a.next(p, x)] = true;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][m] && r[m][j]) r[i][j] = true;
    return r;
}

/// States whose strongly connected component has no outgoing edge.
inline std::vector<bool> in_sink_component(const Automaton& a) {
    const auto r = reachability(a);
    std::vector<bool> out(a.states(), true);
    for (State p = 0; p < a.states(); ++p)
        for (State q = 0; q < a.states(); ++q)
            if (r[p][q] && !r[q][p]) out[p] = false;
    return out;
}

}  // namespace testing_support::brute
