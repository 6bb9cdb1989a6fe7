#include "preimage/gadgets.hpp"

#include <deque>
#include <map>
#include <random>
#include <stdexcept>

#include "preimage/pair_analysis.hpp"

namespace preimage {

void DfaWithAcceptance::validate() const {
    if (initial >= automaton.states()) throw std::invalid_argument("initial state out of range");
    if (accepting.universe() != automaton.states())
        throw std::invalid_argument("accepting set is not over the DFA's states");
}

namespace {

std::string letter_name(std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : std::to_string(i);
}

std::vector<std::string> plain_letter_names(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(letter_name(i));
    return out;
}

}  // namespace

GadgetOutput intersection_gadget(const std::vector<DfaWithAcceptance>& dfas) {
    if (dfas.empty()) throw std::invalid_argument("intersection gadget needs at least one DFA");
    const std::size_t k = dfas.front().automaton.letters();
    std::size_t total = 0;
    for (const auto& d : dfas) {
        d.validate();
        if (d.automaton.letters() != k) throw std::invalid_argument("DFAs do not share one alphabet");
        if (d.accepting.empty()) throw std::invalid_argument("DFA without accepting states");
        total += d.automaton.states();
    }
    const std::size_t m = dfas.size();
    const std::size_t cycle = 2 * total;
    const Letter alpha = static_cast<Letter>(k);
    const Letter beta = static_cast<Letter>(k + 1);

    // Layout: block 0 = s0, t0, Gamma_0; block i = Q_i \ {f_i} ascending, then Gamma_i.
    std::vector<std::size_t> block_start(m + 1), gamma_start(m + 1);
    std::vector<State> accept_pick(m);
    block_start[0] = 0;
    gamma_start[0] = 2;
    std::size_t next = 2 + cycle;
    for (std::size_t i = 0; i < m; ++i) {
        accept_pick[i] = dfas[i].accepting.first();
        block_start[i + 1] = next;
        gamma_start[i + 1] = next + dfas[i].automaton.states() - 1;
        next = gamma_start[i + 1] + cycle;
    }
    const std::size_t n = next;
    const State s0 = 0, t0 = 1;

    auto map_state = [&](std::size_t i, State q) -> State {
        const State f = accept_pick[i];
        if (q == f) return static_cast<State>(gamma_start[i + 1]);
        return static_cast<State>(block_start[i + 1] + (q < f ? q : q - 1));
    };
    // Entry state of block b: s0 for the control block, the mapped initial state otherwise.
    auto entry = [&](std::size_t b) -> State { return b == 0 ? s0 : map_state(b - 1, dfas[b - 1].initial); };

    std::vector<State> table(n * (k + 2));
    std::vector<std::string> names(n);
    StateSet subset(n);
    auto set = [&](State q, Letter x, State to) { table[static_cast<std::size_t>(q) * (k + 2) + x] = to; };

    // Control block.
    names[s0] = "s0";
    names[t0] = "t0";
    subset.insert(s0);
    for (Letter x = 0; x < k; ++x) {
        set(s0, x, s0);
        set(t0, x, t0);
    }
    set(s0, beta, static_cast<State>(gamma_start[0]));
    set(t0, beta, t0);
    set(s0, alpha, entry(1 % (m + 1)));
    set(t0, alpha, entry(1 % (m + 1)));
    for (std::size_t j = 0; j < cycle; ++j) {
        const auto g = static_cast<State>(gamma_start[0] + j);
        names[g] = "G0[" + std::to_string(j) + "]";
        subset.insert(g);
        for (Letter x = 0; x < k; ++x) set(g, x, t0);
        set(g, alpha, entry(1 % (m + 1)));
        set(g, beta, static_cast<State>(gamma_start[0] + (j + 1) % cycle));
    }

    for (std::size_t i = 0; i < m; ++i) {
        const auto& d = dfas[i];
        const State f = accept_pick[i];
        const State after = entry((i + 2) % (m + 1));
        const std::string prefix = "D" + std::to_string(i + 1);
        for (State q = 0; q < d.automaton.states(); ++q) {
            if (q == f) continue;
            const State me = map_state(i, q);
            names[me] = prefix + ".q" + std::to_string(q);
            if (d.accepting.contains(q)) subset.insert(me);
            for (Letter x = 0; x < k; ++x) set(me, x, map_state(i, d.automaton.next(q, x)));
            set(me, alpha, after);
            set(me, beta, me);
        }
        for (std::size_t j = 0; j < cycle; ++j) {
            const auto g = static_cast<State>(gamma_start[i + 1] + j);
            names[g] = "G" + std::to_string(i + 1) + "[" + std::to_string(j) + "]";
            subset.insert(g);
            for (Letter x = 0; x < k; ++x) set(g, x, map_state(i, d.automaton.next(f, x)));
            set(g, alpha, after);
            set(g, beta, static_cast<State>(gamma_start[i + 1] + (j + 1) % cycle));
        }
    }

    auto letters = plain_letter_names(k);
    letters.push_back("alpha");
    letters.push_back("beta");
    return {Automaton(n, k + 2, std::move(table)), std::move(subset), std::move(names), std::move(letters)};
}

GadgetOutput binarize(const Automaton& a, const StateSet& s) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    const std::size_t n = a.states(), k = a.letters();
    // (q, a_i) has index i * n + q.
    std::vector<State> table(n * k * 2);
    std::vector<std::string> names(n * k);
    StateSet subset(n * k);
    for (std::size_t i = 0; i < k; ++i)
        for (State q = 0; q < n; ++q) {
            const std::size_t me = i * n + q;
            table[me * 2 + 0] = static_cast<State>(i * n + a.next(q, static_cast<Letter>(i)));
            table[me * 2 + 1] = static_cast<State>(((i + 1) % k) * n + q);
            names[me] = "(" + std::to_string(q) + "," + letter_name(i) + ")";
            if (i != 0 || s.contains(q)) subset.insert(static_cast<State>(me));
        }
    return {Automaton(n * k, 2, std::move(table)), std::move(subset), std::move(names), {"a'", "b'"}};
}

GadgetOutput sink_binarize(const Automaton& a) { return sink_binarize(a, a.all_states()); }

GadgetOutput sink_binarize(const Automaton& a, const StateSet& s) {
    if (a.letters() != 2) throw std::invalid_argument("sink gadget needs a binary automaton");
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    const std::size_t n = a.states();
    const auto z = static_cast<State>(3 * n);
    std::vector<State> table((3 * n + 1) * 2);
    std::vector<std::string> names(3 * n + 1);
    StateSet subset(3 * n + 1);
    for (State q = 0; q < n; ++q) {
        const State qa = static_cast<State>(n + q), qb = static_cast<State>(2 * n + q);
        table[q * 2 + 0] = qa;
        table[q * 2 + 1] = qb;
        table[qa * 2 + 0] = a.next(q, 0);
        table[qa * 2 + 1] = a.next(q, 1);
        table[qb * 2 + 0] = z;
        table[qb * 2 + 1] = z;
        names[q] = "q" + std::to_string(q);
        names[qa] = "q" + std::to_string(q) + "^a";
        names[qb] = "q" + std::to_string(q) + "^b";
        if (s.contains(q)) subset.insert(q);
    }
    table[z * 2 + 0] = z;
    table[z * 2 + 1] = z;
    names[z] = "z";
    return {Automaton(3 * n + 1, 2, std::move(table)), std::move(subset), std::move(names), {"a", "b"}};
}

GadgetOutput large_extend_gadget(const Automaton& a, const StateSet& s, State f) {
    if (f >= a.states()) throw std::out_of_range("state f = " + std::to_string(f) + " out of range");
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    const std::size_t n = a.states(), k = a.letters();
    const auto e = static_cast<State>(n), sp = static_cast<State>(n + 1);
    const auto alpha = static_cast<Letter>(k);
    std::vector<State> table((n + 2) * (k + 1));
    auto set = [&](State q, Letter x, State to) { table[static_cast<std::size_t>(q) * (k + 1) + x] = to; };
    std::vector<std::string> names(n + 2);
    for (State q = 0; q < n; ++q) {
        for (Letter x = 0; x < k; ++x) set(q, x, a.next(q, x));
        set(q, alpha, s.contains(q) ? f : e);
        names[q] = "q" + std::to_string(q);
    }
    for (Letter x = 0; x < k; ++x) {
        set(e, x, e);
        set(sp, x, sp);
    }
    set(e, alpha, e);
    set(sp, alpha, f);
    names[e] = "e";
    names[sp] = "s";
    StateSet subset(n + 2);
    for (State q = 0; q < n; ++q) subset.insert(q);
    auto letters = plain_letter_names(k);
    letters.push_back("alpha");
    return {Automaton(n + 2, k + 1, std::move(table)), std::move(subset), std::move(names), std::move(letters)};
}

Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed, RandomConstraint constraint) {
    if (n == 0 || k == 0) throw std::invalid_argument("random automaton needs n, k >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));

    if (constraint == RandomConstraint::permutation) {
        std::vector<std::vector<State>> columns(k, std::vector<State>(n));
        for (auto& col : columns) {
            for (State q = 0; q < n; ++q) col[q] = q;
            // Fisher-Yates with the same generator keeps the draw reproducible.
            for (std::size_t i = n; i > 1; --i) {
                std::uniform_int_distribution<std::size_t> j(0, i - 1);
                std::swap(col[i - 1], col[j(rng)]);
            }
        }
        return Automaton::from_columns(columns);
    }

    for (std::size_t attempt = 0; attempt < random_attempt_cap; ++attempt) {
        std::vector<State> table(n * k);
        for (auto& t : table) t = pick(rng);
        Automaton a(n, k, std::move(table));
        switch (constraint) {
        case RandomConstraint::none:
            return a;
        case RandomConstraint::strongly_connected:
            if (is_strongly_connected(a)) return a;
            break;
        case RandomConstraint::synchronizing:
            if (is_synchronizing(a)) return a;
            break;
        case RandomConstraint::permutation:
            break;
        }
    }
    throw std::runtime_error("no automaton satisfying the constraint after " + std::to_string(random_attempt_cap) +
                             " attempts");
}

DfaWithAcceptance random_dfa(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<State> table(n * k);
    for (auto& t : table) t = pick(rng);
    StateSet accepting(n);
    std::bernoulli_distribution coin(0.5);
    for (State q = 0; q < n; ++q)
        if (coin(rng)) accepting.insert(q);
    if (accepting.empty()) accepting.insert(pick(rng));
    return {Automaton(n, k, std::move(table)), 0, std::move(accepting)};
}

DfaWithAcceptance trim(const DfaWithAcceptance& dfa) {
    dfa.validate();
    const auto& a = dfa.automaton;
    std::vector<std::size_t> renumber(a.states(), a.states());
    std::vector<State> order{dfa.initial};
    renumber[dfa.initial] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Letter x = 0; x < a.letters(); ++x) {
            const State p = a.next(order[head], x);
            if (renumber[p] == a.states()) {
                renumber[p] = order.size();
                order.push_back(p);
            }
        }
    std::vector<State> table(order.size() * a.letters());
    StateSet accepting(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter x = 0; x < a.letters(); ++x)
            table[i * a.letters() + x] = static_cast<State>(renumber[a.next(order[i], x)]);
        if (dfa.accepting.contains(order[i])) accepting.insert(static_cast<State>(i));
    }
    return {Automaton(order.size(), a.letters(), std::move(table)), 0, std::move(accepting)};
}

bool intersection_nonempty(const std::vector<DfaWithAcceptance>& dfas) {
    if (dfas.empty()) throw std::invalid_argument("empty DFA list");
    const std::size_t k = dfas.front().automaton.letters();
    for (const auto& d : dfas) {
        d.validate();
        if (d.automaton.letters() != k) throw std::invalid_argument("DFAs do not share one alphabet");
    }
    using Tuple = std::vector<State>;
    auto accepted = [&](const Tuple& t) {
        for (std::size_t i = 0; i < dfas.size(); ++i)
            if (!dfas[i].accepting.contains(t[i])) return false;
        return true;
    };
    Tuple start;
    for (const auto& d : dfas) start.push_back(d.initial);
    std::map<Tuple, bool> seen{{start, true}};
    std::deque<Tuple> queue{start};
    while (!queue.empty()) {
        Tuple t = std::move(queue.front());
        queue.pop_front();
        if (accepted(t)) return true;
        for (Letter x = 0; x < k; ++x) {
            Tuple u(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) u[i] = dfas[i].automaton.next(t[i], x);
            if (seen.emplace(u, true).second) queue.push_back(std::move(u));
        }
    }
    return false;
}

}  // namespace preimage
