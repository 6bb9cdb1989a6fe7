/* gadgets.hpp -- reduction constructions and seeded random automata */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "preimage/automaton.hpp"

namespace preimage {

/// Automaton with an initial state and accepting states (a DFA).
struct DfaWithAcceptance {
    Automaton automaton;
    State initial;
    StateSet accepting;

    /// Throws std::invalid_argument if the initial state or the accepting set
    /// does not fit the automaton.
    void validate() const;
};

/// Result of a construction: the automaton, the designated subset, and a
/// name for every new state describing its role.
struct GadgetOutput {
    Automaton automaton;
    StateSet subset;
    std::vector<std::string> names;
    std::vector<std::string> letter_names;
};

/// Intersection gadget over m DFAs sharing one alphabet Sigma.
///
/// Each DFA i keeps its states except one accepting state f_i (the smallest),
/// which is replaced by a cycle Gamma_i of 2M states, M the total state count.
/// A control block holds s0, t0 and Gamma_0. Letters are Sigma plus alpha
/// (cycling through the blocks) and beta (rotating every Gamma_i). The
/// subset S is the remaining accepting states, all Gamma_i and s0. S is
/// extensible iff it is totally extensible iff the languages intersect,
/// provided the DFAs are trimmed. The output is then strongly connected.
///
/// Throws std::invalid_argument on an empty list, an alphabet mismatch or a
/// DFA without accepting states.
GadgetOutput intersection_gadget(const std::vector<DfaWithAcceptance>& dfas);

/// Binary encoding over states Q x Sigma: letter a' applies the current
/// letter, b' advances to the next letter. S' = S x {a_0} plus every state
/// whose letter component is not a_0. Preserves strong connectivity,
/// extensibility and total extensibility in both directions.
GadgetOutput binarize(const Automaton& a, const StateSet& s);

/// Adds copies q^a, q^b of each state and a sink z: q -a-> q^a, q -b-> q^b,
/// q^a -x-> q.x, q^b -x-> z. The output is synchronizing with sink z and a
/// subset of the original states is extensible in it iff it was in the input.
/// The subset of the output is the image of `s` (the original states).
/// Throws std::invalid_argument unless the input has exactly two letters.
GadgetOutput sink_binarize(const Automaton& a, const StateSet& s);
/// Same, with the designated subset set to all original states.
GadgetOutput sink_binarize(const Automaton& a);

/// Adds states e, s and a letter alpha: alpha sends S and s to f, and every
/// other state (e included) to e. The designated subset is Q, which is
/// extensible in the output iff S is totally extensible in the input.
/// Throws std::out_of_range if f is not a state.
GadgetOutput large_extend_gadget(const Automaton& a, const StateSet& s, State f);

enum class RandomConstraint { none, strongly_connected, synchronizing, permutation };

inline constexpr std::size_t random_attempt_cap = 10'000;

/// Uniform random automaton from a seeded generator; constraints other than
/// `permutation` are met by rejection sampling with at most
/// random_attempt_cap draws, after which std::runtime_error is thrown.
Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed,
                           RandomConstraint constraint = RandomConstraint::none);

/// Random DFA with uniform transitions, initial state 0 and each state
/// accepting with probability 1/2 (at least one accepting state).
DfaWithAcceptance random_dfa(std::size_t n, std::size_t k, std::uint64_t seed);

/// Restriction of a DFA to the states reachable from its initial state.
/// Accepting states are kept if reachable; the result may accept nothing.
DfaWithAcceptance trim(const DfaWithAcceptance& dfa);

/// Is there a word accepted by every DFA? Product-automaton reachability.
bool intersection_nonempty(const std::vector<DfaWithAcceptance>& dfas);

}  // namespace preimage
