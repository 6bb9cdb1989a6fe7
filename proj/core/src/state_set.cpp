#include "preimage/state_set.hpp"

#include <stdexcept>

namespace preimage {

namespace {

std::size_t block_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), blocks_(block_count(universe), 0) {}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : StateSet(universe, std::span<const State>(members.begin(), members.size())) {}

StateSet::StateSet(std::size_t universe, std::span<const State> members) : StateSet(universe) {
    for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t universe) {
    StateSet s(universe);
    for (auto& b : s.blocks_) b = ~std::uint64_t{0};
    if (universe % 64 != 0) s.blocks_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    s.count_ = universe;
    return s;
}

bool StateSet::insert(State q) {
    if (q >= universe_)
        throw std::out_of_range("state " + std::to_string(q) + " outside universe of size " +
                                std::to_string(universe_));
    const std::uint64_t mask = std::uint64_t{1} << (q & 63);
    auto& block = blocks_[q >> 6];
    if (block & mask) return false;
    block |= mask;
    ++count_;
    return true;
}

bool StateSet::erase(State q) {
    if (q >= universe_) return false;
    const std::uint64_t mask = std::uint64_t{1} << (q & 63);
    auto& block = blocks_[q >> 6];
    if (!(block & mask)) return false;
    block &= ~mask;
    --count_;
    return true;
}

void StateSet::clear() noexcept {
    for (auto& b : blocks_) b = 0;
    count_ = 0;
}

void StateSet::check_same_universe(const StateSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("state sets over different universes (" + std::to_string(universe_) +
                                    " vs " + std::to_string(other.universe_) + ")");
}

void StateSet::recount() noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    count_ = c;
}

bool StateSet::is_subset_of(const StateSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
}

bool StateSet::intersects(const StateSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & other.blocks_[i]) return true;
    return false;
}

StateSet StateSet::operator|(const StateSet& other) const {
    check_same_universe(other);
    StateSet r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] |= other.blocks_[i];
    r.recount();
    return r;
}

StateSet StateSet::operator&(const StateSet& other) const {
    check_same_universe(other);
    StateSet r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= other.blocks_[i];
    r.recount();
    return r;
}

StateSet StateSet::operator-(const StateSet& other) const {
    check_same_universe(other);
    StateSet r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= ~other.blocks_[i];
    r.recount();
    return r;
}

StateSet StateSet::complement() const { return full(universe_) - *this; }

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    out.reserve(count_);
    for_each([&](State q) { out.push_back(q); });
    return out;
}

State StateSet::first() const noexcept {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if (blocks_[b] != 0) return static_cast<State>(b * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[b])));
    return static_cast<State>(universe_);
}

State StateSet::next_after(State q) const noexcept {
    std::size_t pos = static_cast<std::size_t>(q) + 1;
    if (pos >= universe_) return static_cast<State>(universe_);
    std::size_t b = pos >> 6;
    std::uint64_t word = blocks_[b] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
        if (word != 0) return static_cast<State>(b * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        if (++b >= blocks_.size()) return static_cast<State>(universe_);
        word = blocks_[b];
    }
}

std::size_t StateSet::hash() const noexcept {
    // FNV-1a over the blocks, mixed with the universe size.
    std::uint64_t h = 1469598103934665603ull ^ universe_;
    for (auto b : blocks_) {
        h ^= b;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::string StateSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](State q) {
        if (!first_member) out += ',';
        out += std::to_string(q);
        first_member = false;
    });
    out += '}';
    return out;
}

}  // namespace preimage
