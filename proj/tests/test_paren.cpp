#include <doctest.h>

#include <map>

#include "dyckt/counts.hpp"
#include "dyckt/fweight.hpp"
#include "dyckt/paren.hpp"

using namespace dyckt;

namespace {

// independent oracle: count the linear extensions of the truncated nesting
// poset by placing outer pairs first
Int linext_oracle(const NestPoset& poset)
{
    const int m = poset.size();
    REQUIRE(m <= 16);
    std::vector<unsigned> outer(m, 0);  // pairs that must precede each pair
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            if (q != p && poset.inside(p, q))
                outer[p] |= 1u << q;
    std::vector<Int> memo(size_t{1} << m, -1);
    auto rec = [&](auto&& self, unsigned placed) -> Int {
        if (placed + 1 == (1u << m))
            return 1;
        Int& slot = memo[placed];
        if (slot >= 0)
            return slot;
        Int total = 0;
        for (int p = 0; p < m; ++p)
            if (!(placed >> p & 1) && (outer[p] & ~placed) == 0)
                total += self(self, placed | (1u << p));
        return slot = total;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("boundary sequences")
{
    ParenSeq empty = paren_sequence(Partition());
    CHECK(empty.width() == 0);
    CHECK(empty.pad_open == 0);
    CHECK(empty.pad_close == 0);
    CHECK(empty.pair_count() == 0);
    CHECK(empty.open_at(0));
    CHECK_FALSE(empty.open_at(1));

    ParenSeq one = paren_sequence(Partition({1}));
    CHECK(one.window_str() == ")(");
    CHECK(one.pad_open == 1);
    CHECK(one.pad_close == 1);
    CHECK(one.padded_str() == "()()");

    ParenSeq big = paren_sequence(Partition({5, 3, 3, 1}));
    CHECK(big.window_str() == ")())(())(");
    CHECK(big.pad_open == 2);
    CHECK(big.pad_close == 1);
    CHECK(big.padded_str() == "(()())(())()");
}

TEST_CASE("padded words are balanced")
{
    for (const Partition& la : box(4, 4)) {
        ParenSeq ps = paren_sequence(la);
        int depth = 0;
        for (char c : ps.padded_str()) {
            depth += c == '(' ? 1 : -1;
            CHECK(depth >= 0);
        }
        CHECK(depth == 0);
    }
}

TEST_CASE("chord relation")
{
    for (const Partition& la : box(3, 3))
        CHECK(chord_relation(la, la));
    CHECK(chord_relation(Partition({1}), Partition()));
    CHECK_FALSE(chord_relation(Partition({2}), Partition()));
    CHECK_FALSE(chord_relation(Partition(), Partition({1})));  // not nested
}

TEST_CASE("chord relation matches the expansive count")
{
    for (const Partition& la : box(3, 3))
        for (const Partition& mu : box(3, 3))
            CHECK(chord_relation(la, mu) == (count_ce(la, mu) == 1));
    // partitions of different widths align correctly
    CHECK(chord_relation(Partition({4, 2, 1}), Partition({1})) ==
          (count_ce(Partition({4, 2, 1}), Partition({1})) == 1));
    for (const Partition& la : box(4, 2))
        for (const Partition& mu : box(2, 4))
            CHECK(chord_relation(la, mu) == (count_ce(la, mu) == 1));
}

TEST_CASE("nesting poset")
{
    NestPoset p = nesting_poset(Partition({5, 3, 3, 1}), 8);
    CHECK(p.sorted_lengths() == std::vector<int>{1, 1, 1, 1, 2, 3, 7, 8});
    CHECK(p.linear_extension_count() == 120);

    NestPoset chain = nesting_poset(Partition(), 5);
    CHECK(chain.sorted_lengths() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(chain.linear_extension_count() == 1);

    // the two minimal pairs of (1) are incomparable
    NestPoset two = nesting_poset(Partition({1}), 2);
    CHECK(two.sorted_lengths() == std::vector<int>{1, 1});
    CHECK(two.linear_extension_count() == 2);
    NestPoset three = nesting_poset(Partition({1}), 3);
    CHECK(three.sorted_lengths() == std::vector<int>{1, 1, 3});
    CHECK(three.linear_extension_count() == 2);

    CHECK_THROWS_AS(nesting_poset(Partition({1}), 1), IndexOutOfRange);
}

TEST_CASE("hook formula values and stabilization")
{
    CHECK(hook_formula_F(Partition({5, 3, 3, 1})) == 120);
    CHECK(hook_formula_F(Partition()) == 1);
    CHECK(hook_formula_F(Partition({2, 2})) == 6);
    for (const Partition& la : box(4, 4)) {
        Int v = hook_formula_F(la);
        int n = min_nesting_pairs(la);
        CHECK(nesting_poset(la, n).linear_extension_count() == v);
        CHECK(nesting_poset(la, n + 1).linear_extension_count() == v);
        CHECK(nesting_poset(la, n + 2).linear_extension_count() == v);
    }
}

TEST_CASE("hook formula matches the recursive weight")
{
    for (const Partition& la : box(5, 5))
        CHECK(hook_formula_F(la) == fweight(la));
}

TEST_CASE("hook product counts linear extensions")
{
    for (const Partition& la : box(2, 2)) {
        int n = min_nesting_pairs(la);
        for (int extra = 0; extra <= 2; ++extra) {
            NestPoset p = nesting_poset(la, n + extra);
            CHECK(p.linear_extension_count() == linext_oracle(p));
        }
    }
}
