#include "preimage/word.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace preimage {

std::string Word::to_string(std::size_t alphabet_size) const {
    std::string out;
    if (alphabet_size <= 26) {
        out.reserve(letters_.size());
        for (Letter a : letters_) out += static_cast<char>('a' + a);
        return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word Word::parse(std::string_view text, std::size_t alphabet_size) {
    Word w;
    if (alphabet_size <= 26) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c < 'a' || c >= static_cast<char>('a' + alphabet_size))
                throw std::invalid_argument(std::string("letter '") + c + "' outside the alphabet");
            w.push_back(static_cast<Letter>(c - 'a'));
        }
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        Letter a = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), a);
        if (ec != std::errc() || a >= alphabet_size)
            throw std::invalid_argument("bad letter index in word '" + std::string(text) + "'");
        w.push_back(a);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return w;
}

}  // namespace preimage
