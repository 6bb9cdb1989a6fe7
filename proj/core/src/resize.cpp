#include "preimage/resize.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace preimage {

RationalVector augmented_vector(const StateSet& t) {
    RationalVector v(t.universe() + 1);
    t.for_each([&](State q) { v[q] = 1; });
    v.back() = 1;
    return v;
}

ResizeResult shortest_resizing_word(const Automaton& a, const StateSet& s,
                                    const std::function<void(const RationalBasis&)>& on_insert) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    ResizeResult result;
    RationalBasis basis(a.states() + 1);

    struct Item {
        Word word;
        StateSet preimage;
    };
    std::deque<Item> queue;
    basis.insert(augmented_vector(s));
    if (on_insert) on_insert(basis);
    queue.push_back({Word{}, s});

    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        for (Letter x = 0; x < a.letters(); ++x) {
            StateSet child = preimage_letter(a, item.preimage, x);
            Word w = item.word;
            w.push_front(x);
            ++result.vectors_tested;
            if (child.size() != s.size()) {
                result.word = std::move(w);
                result.basis_size = basis.size();
                return result;
            }
            if (basis.insert(augmented_vector(child))) {
                assert(basis.invariants_hold());
                if (on_insert) on_insert(basis);
                queue.push_back({std::move(w), std::move(child)});
            }
        }
    }
    result.basis_size = basis.size();
    return result;
}

std::optional<bool> resizable_decision_fast(const Automaton& a, const StateSet& s,
                                            std::optional<bool> known_synchronizing) {
    if (s.universe() != a.states()) throw std::invalid_argument("subset is not over the automaton's states");
    if (!known_synchronizing.value_or(false)) return std::nullopt;
    return !s.empty() && !s.is_full();
}

}  // namespace preimage
