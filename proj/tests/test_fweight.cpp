#include <doctest.h>

#include "dyckt/counts.hpp"
#include "dyckt/fweight.hpp"
#include "dyckt/paren.hpp"

using namespace dyckt;

namespace {

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        out.push_back(Partition(cur));
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace

TEST_CASE("highest nodes")
{
    CHECK(highest_nodes(Partition({1})) == std::vector<Node>{{1, 1}});
    CHECK(highest_nodes(Partition({2, 1})) == std::vector<Node>{{1, 2}, {2, 1}});
    CHECK(highest_nodes(Partition({5, 3, 3, 1})) == std::vector<Node>{{1, 5}, {3, 3}});
    CHECK_THROWS_AS(highest_nodes(Partition()), IndexOutOfRange);
}

TEST_CASE("row and column truncations")
{
    Partition la({5, 3, 3, 1});
    CHECK(drop_rows(la, 1) == Partition({3, 3, 1}));
    CHECK(drop_rows(la, 4) == Partition());
    CHECK(drop_cols(la, 3) == Partition({2}));
    CHECK(drop_cols(la, 5) == Partition());
}

TEST_CASE("weight values")
{
    CHECK(fweight(Partition()) == 1);
    CHECK(fweight(Partition({1})) == 2);
    CHECK(fweight(Partition({2})) == 3);
    CHECK(fweight(Partition({1, 1})) == 3);
    CHECK(fweight(Partition({2, 1})) == 6);
    CHECK(fweight(Partition({2, 2})) == 6);
    CHECK(fweight(Partition({5, 3, 3, 1})) == 120);
}

TEST_CASE("factorization choice independence")
{
    for (const Partition& la : partitions_up_to(16)) {
        if (la.empty())
            continue;
        Int v = fweight(la);
        for (Node n : highest_nodes(la))
            CHECK(fweight_at(la, n) == v);
    }
    CHECK_THROWS_AS(fweight_at(Partition({2, 1}), Node{1, 1}), IndexOutOfRange);
}

TEST_CASE("conjugation symmetry")
{
    for (const Partition& la : partitions_up_to(16))
        CHECK(fweight(la) == fweight(la.conjugate()));
}

TEST_CASE("addable-node recurrence")
{
    for (const Partition& la : partitions_up_to(12)) {
        for (Node n : la.addable_nodes()) {
            const int j = n.col();
            Int total = fweight(la.add_node(n));
            for (int x : x_set(la, j).values)
                total += fweight(strip_remove(la, j, x));
            CHECK(total == 2 * fweight(la));
        }
    }
}

TEST_CASE("single rows and columns")
{
    for (int n = 1; n <= 10; ++n) {
        CHECK(fweight(Partition({n})) == n + 1);
        CHECK(fweight(Partition(std::vector<int>(n, 1))) == n + 1);
    }
    // staircase: all boundary pairs unnested, so the hook is n!/n
    CHECK(fweight(Partition({3, 2, 1})) == 24);
    CHECK(fweight(Partition({3, 2, 1})) == hook_formula_F(Partition({3, 2, 1})));
}

TEST_CASE("weight equals hook value and tiling-count sum")
{
    for (const Partition& la : box(4, 4)) {
        CHECK(fweight(la) == hook_formula_F(la));
        Int total = 0;
        for (const Partition& mu : subpartitions(la))
            total += count_ci(la, mu);
        CHECK(total == fweight(la));
    }
}
