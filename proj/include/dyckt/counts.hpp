#pragma once

#include <string>
#include <vector>

#include "dyckt/tiling.hpp"

namespace dyckt {

enum class CountMode { BruteForce, Recurrence };

// Number of cover-inclusive Dyck tilings of lambda \ mu (0 when the shapes
// are not nested).  BruteForce filters the full enumeration; Recurrence
// evaluates the strip recurrence with memoization.
Int count_ci(const Partition& lambda, const Partition& mu,
             CountMode mode = CountMode::Recurrence, int cell_cap = 24);

// Number of cover-expansive Dyck tilings; always 0 or 1.
Int count_ce(const Partition& lambda, const Partition& mu,
             CountMode mode = CountMode::Recurrence, int cell_cap = 24);

// Polynomial with exact integer coefficients; coefficient k counts q^k.
struct QPoly {
    std::vector<Int> c;

    static QPoly zero() { return {}; }
    static QPoly one() { return QPoly{{1}}; }
    static QPoly monomial(int k, Int coeff = 1);

    void normalize();
    bool is_zero() const { return c.empty(); }
    Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : 0; }
    Int eval_one() const;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::string str() const;

    QPoly& operator+=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b, a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(Int s, const QPoly& a);
    bool operator==(const QPoly& o) const { return c == o.c; }
};

// Tile-count generating polynomials: coefficient of q^k counts the
// cover-inclusive (resp. cover-expansive) tilings with exactly k tiles.
QPoly ci_qpoly(const Partition& lambda, const Partition& mu, int cell_cap = 24);
QPoly ce_qpoly(const Partition& lambda, const Partition& mu);

}  // namespace dyckt
