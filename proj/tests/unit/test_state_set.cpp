#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "preimage/state_set.hpp"
#include "preimage/word.hpp"

using namespace preimage;

TEST_CASE("StateSet basic membership", "[state_set]") {
    StateSet s(5, {0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
    CHECK(s.to_string() == "{0,3}");
    CHECK(s.insert(1));
    CHECK_FALSE(s.insert(1));
    CHECK(s.erase(0));
    CHECK_FALSE(s.erase(0));
    CHECK(s.members() == std::vector<State>{1, 3});
    CHECK_THROWS_AS(s.insert(5), std::out_of_range);
    CHECK_FALSE(s.contains(77));
}

TEST_CASE("StateSet empty and full", "[state_set]") {
    StateSet e(3);
    CHECK(e.empty());
    CHECK(e.to_string() == "{}");
    CHECK(StateSet::full(3).is_full());
    CHECK(e.complement() == StateSet::full(3));
    StateSet zero(0);
    CHECK(zero.empty());
    CHECK(zero.is_full());
}

TEST_CASE("StateSet operations across block boundaries", "[state_set]") {
    StateSet a(130, {0, 63, 64, 129});
    StateSet b(130, {63, 100});
    CHECK((a | b).size() == 5);
    CHECK((a & b) == StateSet(130, {63}));
    CHECK((a - b) == StateSet(130, {0, 64, 129}));
    CHECK(a.complement().size() == 126);
    CHECK(a.first() == 0);
    CHECK(a.next_after(0) == 63);
    CHECK(a.next_after(63) == 64);
    CHECK(a.next_after(129) == 130);
    CHECK(a.intersects(b));
    CHECK_FALSE((a - b).intersects(b));
    CHECK(StateSet(130, {63}).is_subset_of(a));
    CHECK_THROWS_AS(a | StateSet(129), std::invalid_argument);
}

TEST_CASE("StateSet agrees with std::set on random operations", "[state_set][property]") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 150;
        StateSet a(n), b(n);
        std::set<State> ra, rb;
        for (int i = 0; i < 40; ++i) {
            const State q = static_cast<State>(rng() % n);
            if (rng() & 1u) {
                a.insert(q);
                ra.insert(q);
            } else {
                b.insert(q);
                rb.insert(q);
            }
        }
        std::set<State> inter, uni;
        for (State q : ra)
            if (rb.count(q)) inter.insert(q);
        uni = ra;
        uni.insert(rb.begin(), rb.end());
        const auto m = (a & b).members();
        CHECK(std::set<State>(m.begin(), m.end()) == inter);
        CHECK((a | b).size() == uni.size());
        CHECK(a.complement().size() == n - ra.size());
        std::vector<State> walked;
        a.for_each([&](State q) { walked.push_back(q); });
        CHECK(walked == std::vector<State>(ra.begin(), ra.end()));
        CHECK((a == b) == (ra == rb));
        if (a == b) CHECK(a.hash() == b.hash());
    }
}

TEST_CASE("Word rendering and parsing", "[word]") {
    const Word w{1, 0, 0};
    CHECK(w.to_string(2) == "baa");
    CHECK(Word::parse("baa", 2) == w);
    CHECK(Word{}.to_string(2).empty());
    CHECK(Word::parse("", 2).empty());
    const Word big{27, 3};
    CHECK(big.to_string(30) == "27 3");
    CHECK(Word::parse("27 3", 30) == big);
    CHECK_THROWS_AS(Word::parse("c", 2), std::invalid_argument);
    Word v{0};
    v.push_front(1);
    v.append(Word{1});
    CHECK(v == Word{1, 0, 1});
    CHECK(Word{0} + Word{1} == Word{0, 1});
}
