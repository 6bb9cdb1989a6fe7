/* word.hpp -- finite words over a letter alphabet [0, k) */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "preimage/state_set.hpp"

namespace preimage {

/// A word acts left to right: q.(uv) = (q.u).v. The empty word is the identity.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    void push_back(Letter a) { letters_.push_back(a); }
    void push_front(Letter a) { letters_.insert(letters_.begin(), a); }
    void append(const Word& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }

    Word operator+(const Word& w) const {
        Word r(*this);
        r.append(w);
        return r;
    }

    bool operator==(const Word&) const = default;

    /// Letters a, b, c, ... when the alphabet has at most 26 letters, otherwise
    /// space-separated indices. The empty word renders as "" in both cases.
    std::string to_string(std::size_t alphabet_size) const;

    /// Inverse of to_string. Throws std::invalid_argument on letters >= alphabet_size.
    static Word parse(std::string_view text, std::size_t alphabet_size);

private:
    std::vector<Letter> letters_;
};

}  // namespace preimage
