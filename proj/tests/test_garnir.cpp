#include <doctest.h>

#include <set>

#include "dyckt/fweight.hpp"
#include "dyckt/garnir.hpp"

using namespace dyckt;

namespace {

Tableau tab(const Partition& shape, std::vector<std::vector<int>> rows)
{
    return Tableau{shape, std::move(rows)};
}

// permutation taking the initial tableau to t, as images of 1..n
std::vector<int> tableau_perm(const Partition& pi, const Tableau& t)
{
    Tableau t0 = initial_tableau(pi);
    std::vector<int> perm(t.n() + 1);
    for (int a = 1; a <= pi.rows(); ++a)
        for (int b = 1; b <= pi.part(a); ++b)
            perm[t0.at(a, b)] = t.at(a, b);
    return perm;
}

int inversions(const std::vector<int>& perm)
{
    int inv = 0;
    for (size_t i = 1; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            inv += perm[i] > perm[j];
    return inv;
}

}  // namespace

TEST_CASE("residues")
{
    CHECK(residue({1, 1}, 4, 0) == 0);
    CHECK(residue({2, 1}, 2, 1) == 0);
    CHECK(residue_sequence(Partition({6, 4, 1, 1}), 4, 0) ==
          std::vector<int>{0, 1, 2, 3, 0, 1, 3, 0, 1, 2, 2, 1});
}

TEST_CASE("initial tableaux")
{
    CHECK(initial_tableau(Partition({6, 4, 1, 1})) ==
          tab(Partition({6, 4, 1, 1}),
              {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10}, {11}, {12}}));
    CHECK(initial_tableau(Partition({4})) == tab(Partition({4}), {{1, 2, 3, 4}}));
    CHECK(initial_tableau(Partition({1, 1, 1})) ==
          tab(Partition({1, 1, 1}), {{1}, {2}, {3}}));
    CHECK(initial_tableau(Partition({3, 2})).standard());
}

TEST_CASE("garnir belts and tableaux")
{
    Partition pi({6, 4, 1, 1});
    CHECK(is_garnir_node(pi, {1, 3}));
    CHECK_FALSE(is_garnir_node(pi, {2, 2}));  // (3,2) missing
    CHECK_FALSE(is_garnir_node(pi, {4, 1}));  // last row
    CHECK(garnir_belt(pi, {1, 3}).size() == 7);

    CHECK(garnir_tableau(pi, {1, 3}) ==
          tab(pi, {{1, 2, 6, 7, 8, 9}, {3, 4, 5, 10}, {11}, {12}}));
    CHECK(garnir_tableau(Partition({2, 2}), {1, 1}) ==
          tab(Partition({2, 2}), {{2, 3}, {1, 4}}));
    CHECK_THROWS_AS(garnir_tableau(pi, {2, 2}), NotGarnirNode);
    // every Garnir tableau is row-strict but never standard
    for (Node a : {Node{1, 1}, Node{1, 2}, Node{1, 3}, Node{1, 4}, Node{2, 1}}) {
        Tableau g = garnir_tableau(pi, a);
        CHECK(g.row_strict());
        CHECK_FALSE(g.standard());
    }
}

TEST_CASE("bricks")
{
    Partition pi({6, 4, 1, 1});
    GarnirData d2 = brick_data(pi, {1, 3}, 2, 0);
    CHECK(d2.f == 2);
    CHECK(d2.g == 1);
    CHECK(d2.bricks == std::vector<std::vector<Node>>{{{1, 3}, {1, 4}},
                                                      {{1, 5}, {1, 6}},
                                                      {{2, 2}, {2, 3}}});
    GarnirData d3 = brick_data(pi, {1, 3}, 3, 0);
    CHECK(d3.f == 1);
    CHECK(d3.g == 1);
    CHECK(d3.bricks == std::vector<std::vector<Node>>{{{1, 3}, {1, 4}, {1, 5}},
                                                      {{2, 1}, {2, 2}, {2, 3}}});
    GarnirData big = brick_data(Partition({11, 5, 3, 1}), {1, 5}, 3, 0);
    CHECK(big.f == 2);
    CHECK(big.g == 1);
    CHECK(big.d == 7);

    // no room for a brick: k = 0
    GarnirData none = brick_data(Partition({2, 2}), {1, 1}, 3, 0);
    CHECK(none.k == 0);
    CHECK_THROWS_AS(brick_data(pi, {1, 3}, 1, 0), IndexOutOfRange);
}

TEST_CASE("block swap words")
{
    Partition pi({11, 5, 3, 1});
    GarnirData d = brick_data(pi, {1, 5}, 3, 0);
    CHECK(sigma_word(d, 1).letters ==
          std::vector<int>{9, 8, 7, 10, 9, 8, 11, 10, 9});
    CHECK(sigma_word(d, 2).letters ==
          std::vector<int>{12, 11, 10, 13, 12, 11, 14, 13, 12});
    CHECK_THROWS_AS(sigma_word(d, 0), IndexOutOfRange);
    CHECK_THROWS_AS(sigma_word(d, 3), IndexOutOfRange);

    GarnirData d84 = brick_data(Partition({8, 4}), {1, 4}, 2, 0);
    for (int i = 1; i < d84.k; ++i)
        CHECK(sigma_word(d84, i).letters.size() == 4);  // e*e letters

    // the word realizes the block transposition and is reduced
    for (int i = 1; i < d.k; ++i) {
        PsiWord w = sigma_word(d, i);
        Tableau moved = apply_word(pi, w.letters);
        std::vector<int> perm = tableau_perm(pi, moved);
        for (int v = 1; v <= moved.n(); ++v) {
            int lo = d.d + (i - 1) * d.e;
            int expect = v;
            if (v >= lo && v < lo + d.e)
                expect = v + d.e;
            else if (v >= lo + d.e && v < lo + 2 * d.e)
                expect = v - d.e;
            CHECK(perm[v] == expect);
        }
        CHECK(inversions(perm) == static_cast<int>(w.letters.size()));
    }
}

TEST_CASE("brick tableaux for the (11,5,3,1) case")
{
    Partition pi({11, 5, 3, 1});
    GarnirData d = brick_data(pi, {1, 5}, 3, 0);
    CHECK(brick_tableau(d, Partition()) == garnir_tableau(pi, {1, 5}));
    CHECK(brick_tableau(d, Partition({1})) ==
          tab(pi, {{1, 2, 3, 4, 7, 8, 9, 13, 14, 15, 16}, {5, 6, 10, 11, 12},
                   {17, 18, 19}, {20}}));
    CHECK(brick_tableau(d, Partition({2})) == brick_base_tableau(d));
    CHECK(brick_base_tableau(d) ==
          tab(pi, {{1, 2, 3, 4, 7, 8, 9, 10, 11, 12, 16}, {5, 6, 13, 14, 15},
                   {17, 18, 19}, {20}}));
    CHECK_THROWS_AS(brick_tableau(d, Partition({3})), BoxMismatch);
}

TEST_CASE("brick tableaux for the (8,4) case")
{
    Partition pi({8, 4});
    GarnirData d = brick_data(pi, {1, 4}, 2, 0);
    REQUIRE(d.f == 2);
    REQUIRE(d.g == 2);
    CHECK(brick_tableau(d, Partition()) ==
          tab(pi, {{1, 2, 3, 8, 9, 10, 11, 12}, {4, 5, 6, 7}}));
    CHECK(brick_tableau(d, Partition({1})) ==
          tab(pi, {{1, 2, 3, 6, 7, 10, 11, 12}, {4, 5, 8, 9}}));
    CHECK(brick_tableau(d, Partition({2})) ==
          tab(pi, {{1, 2, 3, 6, 7, 8, 9, 12}, {4, 5, 10, 11}}));
    CHECK(brick_tableau(d, Partition({1, 1})) ==
          tab(pi, {{1, 2, 3, 4, 5, 10, 11, 12}, {6, 7, 8, 9}}));
    CHECK(brick_tableau(d, Partition({2, 1})) ==
          tab(pi, {{1, 2, 3, 4, 5, 8, 9, 12}, {6, 7, 10, 11}}));
    CHECK(brick_tableau(d, Partition({2, 2})) ==
          tab(pi, {{1, 2, 3, 4, 5, 6, 7, 12}, {8, 9, 10, 11}}));
}

TEST_CASE("brick tableaux are row-strict and injective")
{
    for (auto [pi, node, e] :
         {std::tuple{Partition({8, 4}), Node{1, 4}, 2},
          std::tuple{Partition({11, 5, 3, 1}), Node{1, 5}, 3},
          std::tuple{Partition({6, 4, 1, 1}), Node{1, 3}, 2},
          std::tuple{Partition({6, 6}), Node{1, 2}, 2}}) {
        GarnirData d = brick_data(pi, node, e, 0);
        std::set<std::vector<std::vector<int>>> seen;
        for (const Partition& la : box(d.f, d.g)) {
            Tableau t = brick_tableau(d, la);
            CHECK(t.row_strict());
            CHECK(seen.insert(t.rows).second);
            // the entries are a bijection onto 1..n
            std::set<int> entries;
            for (const auto& row : t.rows)
                entries.insert(row.begin(), row.end());
            CHECK(static_cast<int>(entries.size()) == t.n());
            CHECK(*entries.begin() == 1);
            CHECK(*entries.rbegin() == t.n());
            // entries outside the belt match the initial tableau
            Tableau t0 = initial_tableau(pi);
            std::set<Node> belt(d.belt.begin(), d.belt.end());
            for (int a = 1; a <= pi.rows(); ++a)
                for (int b = 1; b <= pi.part(a); ++b)
                    if (!belt.count({a, b}))
                        CHECK(t.at(a, b) == t0.at(a, b));
        }
    }
}

TEST_CASE("modified garnir elements")
{
    auto terms = modified_garnir(Partition({8, 4}), {1, 4}, 2, 0);
    REQUIRE(terms.size() == 6);
    std::vector<Int> coeffs;
    for (const GarnirTerm& t : terms)
        coeffs.push_back(t.coeff);
    CHECK(coeffs == std::vector<Int>{1, 2, 3, 3, 6, 6});

    auto small = modified_garnir(Partition({11, 5, 3, 1}), {1, 5}, 3, 0);
    REQUIRE(small.size() == 3);
    CHECK(small[0].coeff == 1);
    CHECK(small[1].coeff == 2);
    CHECK(small[2].coeff == 3);
    CHECK(small[0].lambda == Partition());
    CHECK(small[2].lambda == Partition({2}));

    // k = 0: a single unit term on the rearranged tableau
    auto trivial = modified_garnir(Partition({2, 2}), {1, 1}, 3, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].coeff == 1);
    CHECK(trivial[0].lambda == Partition());
    CHECK(trivial[0].tableau == garnir_tableau(Partition({2, 2}), {1, 1}));
}

TEST_CASE("assembled words realize their tableaux and are reduced")
{
    for (auto [pi, node, e, kappa] :
         {std::tuple{Partition({8, 4}), Node{1, 4}, 2, 0},
          std::tuple{Partition({11, 5, 3, 1}), Node{1, 5}, 3, 0},
          std::tuple{Partition({6, 4, 1, 1}), Node{1, 3}, 2, 0},
          std::tuple{Partition({6, 4, 1, 1}), Node{1, 3}, 3, 0},
          std::tuple{Partition({9, 7, 2}), Node{2, 2}, 2, 1},
          std::tuple{Partition({4, 1}), Node{1, 1}, 2, 0},   // bricks only above
          std::tuple{Partition({3, 3}), Node{1, 3}, 3, 0},   // bricks only below
          std::tuple{Partition({2, 2}), Node{1, 1}, 3, 0}}) {
        auto terms = modified_garnir(pi, node, e, kappa);
        CHECK(static_cast<Int>(terms.size()) ==
              binomial(brick_data(pi, node, e, kappa).k,
                       brick_data(pi, node, e, kappa).f));
        for (const GarnirTerm& term : terms) {
            CHECK(term.coeff == fweight(term.lambda));
            CHECK(apply_word(pi, term.word.letters) == term.tableau);
            CHECK(inversions(tableau_perm(pi, term.tableau)) ==
                  static_cast<int>(term.word.letters.size()));
        }
    }
}

TEST_CASE("classical element structure")
{
    auto terms = classical_garnir(Partition({8, 4}), {1, 4}, 2, 0);
    REQUIRE(terms.size() == 6);
    for (const ClassicalTerm& t : terms)
        CHECK(t.coset_letters == generator_word(t.lambda, 2, 2, Flavor::T).letters);
}

TEST_CASE("tau expansion")
{
    auto e = expand_tau(Partition(), 1, 1);
    CHECK(e == std::map<Partition, Int>{{Partition(), 1}, {Partition({1}), 1}});
    for (const Partition& mu : box(2, 2))
        CHECK(expand_tau(mu, 2, 2).at(mu) == 1);
    // columns assemble to the inclusive-count matrix
    IntMatrix p = matrix_P(2, 2);
    for (int c = 0; c < p.dim(); ++c) {
        auto col = expand_tau(p.labels[c], 2, 2);
        for (int r = 0; r < p.dim(); ++r) {
            auto it = col.find(p.labels[r]);
            CHECK((it == col.end() ? 0 : it->second) == p.at(r, c));
        }
    }
    // summing the expansions over the box recovers the recursive weights
    std::map<Partition, Int> totals;
    for (const Partition& mu : box(2, 2))
        for (auto [la, c] : expand_tau(mu, 2, 2))
            totals[la] += c;
    for (const Partition& la : box(2, 2))
        CHECK(totals[la] == fweight(la));
    CHECK_THROWS_AS(expand_tau(Partition({3}), 2, 2), BoxMismatch);
}
