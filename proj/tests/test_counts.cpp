#include <doctest.h>

#include "dyckt/counts.hpp"

using namespace dyckt;

TEST_CASE("inclusive counts")
{
    for (const Partition& la : box(3, 3)) {
        CHECK(count_ci(la, la, CountMode::BruteForce) == 1);
        CHECK(count_ci(la, la, CountMode::Recurrence) == 1);
    }
    CHECK(count_ci(Partition({2, 1}), Partition(), CountMode::BruteForce) == 2);
    CHECK(count_ci(Partition({2, 1}), Partition(), CountMode::Recurrence) == 2);
    CHECK(count_ci(Partition({1}), Partition({2})) == 0);  // not nested
}

TEST_CASE("expansive counts")
{
    for (const Partition& la : box(3, 3)) {
        CHECK(count_ce(la, la, CountMode::BruteForce) == 1);
        CHECK(count_ce(la, la, CountMode::Recurrence) == 1);
    }
    CHECK(count_ce(Partition({2}), Partition(), CountMode::BruteForce) == 0);
    CHECK(count_ce(Partition({2}), Partition(), CountMode::Recurrence) == 0);
    CHECK(count_ce(Partition({1}), Partition(), CountMode::BruteForce) == 1);
    CHECK(count_ce(Partition({1}), Partition(), CountMode::Recurrence) == 1);
}

TEST_CASE("recurrences agree with enumeration")
{
    for (const Partition& la : box(3, 3)) {
        for (const Partition& mu : subpartitions(la)) {
            CHECK(count_ci(la, mu, CountMode::BruteForce) ==
                  count_ci(la, mu, CountMode::Recurrence));
            Int e = count_ce(la, mu, CountMode::Recurrence);
            CHECK(e == count_ce(la, mu, CountMode::BruteForce));
            CHECK((e == 0 || e == 1));
        }
    }
}

TEST_CASE("total inclusive count over inner partitions")
{
    Partition la({5, 3, 3, 1});
    Int total = 0;
    for (const Partition& mu : subpartitions(la))
        total += count_ci(la, mu);
    CHECK(total == 120);
    // spot-check the recurrence against enumeration off the square boxes
    for (const Partition& mu : {Partition({3, 1}), Partition({5, 3}), Partition({1, 1, 1, 1})}) {
        CHECK(count_ci(la, mu, CountMode::Recurrence) ==
              count_ci(la, mu, CountMode::BruteForce));
        CHECK(count_ce(la, mu, CountMode::Recurrence) ==
              count_ce(la, mu, CountMode::BruteForce));
    }
}

TEST_CASE("qpoly arithmetic")
{
    QPoly a = QPoly::monomial(1);
    QPoly b = QPoly::monomial(3);
    QPoly s = a + b;
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(3) == 1);
    CHECK(s.eval_one() == 2);
    CHECK((a * b) == QPoly::monomial(4));
    CHECK(s.str() == "q + q^3");
    CHECK(QPoly::one().str() == "1");
    CHECK(QPoly::zero().str() == "0");
    CHECK((2 * a).coeff(1) == 2);
    QPoly neg = QPoly{{0, -1}};
    CHECK(neg.str() == "-q");
}

TEST_CASE("tiling polynomials")
{
    for (const Partition& la : box(3, 3))
        CHECK(ci_qpoly(la, la) == QPoly::one());
    CHECK(ci_qpoly(Partition({1}), Partition()) == QPoly::monomial(1));
    CHECK(ci_qpoly(Partition({2, 1}), Partition()) ==
          QPoly::monomial(1) + QPoly::monomial(3));
    CHECK(ce_qpoly(Partition({2}), Partition()) == QPoly::zero());
    CHECK(ce_qpoly(Partition({2, 1}), Partition()) == QPoly::monomial(1));
    CHECK_THROWS_AS(ci_qpoly(Partition({5, 5, 5, 5, 5}), Partition()), CapExceeded);
    // evaluation at one recovers the counts
    for (const Partition& la : box(3, 3)) {
        for (const Partition& mu : subpartitions(la)) {
            CHECK(ci_qpoly(la, mu).eval_one() == count_ci(la, mu));
            CHECK(ce_qpoly(la, mu).eval_one() == count_ce(la, mu));
        }
    }
}
