#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dyckt/counts.hpp"
#include "dyckt/partition.hpp"

namespace dyckt {

// Free integer module on the f-subsets of {1..k}, k = f+g.  Subsets are bit
// masks (bit i-1 set when i belongs).  The cyclic generator corresponds to
// the subset {1..f}; the Coxeter generator t_i swaps the values i and i+1.
using Subset = std::uint32_t;

struct ModVec {
    int k = 0;
    std::map<Subset, Int> coords;  // zero coordinates are never stored

    bool is_zero() const { return coords.empty(); }
    void add_term(Subset s, Int c);
    ModVec& operator+=(const ModVec& o);
    ModVec& operator-=(const ModVec& o);
    friend ModVec operator+(ModVec a, const ModVec& b) { return a += b, a; }
    friend ModVec operator-(ModVec a, const ModVec& b) { return a -= b, a; }
    ModVec scaled(Int s) const;
    bool operator==(const ModVec& o) const { return k == o.k && coords == o.coords; }

    ModVec apply_t(int i) const;  // swap values i, i+1 in every subset
    ModVec apply_s(int i) const;  // apply_t(i) minus identity
};

enum class Flavor { T, S };

struct GenWord {
    Flavor flavor = Flavor::T;
    int k = 0;
    std::vector<int> letters;  // indices in 1..k-1; rightmost acts first
};

// Index word of the minimal coset representative attached to a partition in
// the f x g box: the row-by-row ascending runs.
GenWord generator_word(const Partition& lambda, int f, int g, Flavor flavor);

ModVec base_vector(int f, int g);
ModVec act(const GenWord& word, ModVec v);

// Image of the base subset under the coset representative of lambda; these
// images are exactly the subset basis.
Subset coset_subset(const Partition& lambda, int f, int g);

// Classification of s_i acting on the s-basis element of mu: exactly one of
// the four outcomes occurs.
struct SAction {
    enum Kind { Scale, Remove, Zero, Jump } kind = Zero;
    Int scale = 0;         // -2 for Scale
    Partition target;      // for Remove and Jump
    int case_id = 0;       // 1..4
    char subcase = 0;      // 'a'/'b' for cases 3 and 4
};

SAction s_action_case(const Partition& mu, int i, int f, int g);

// mu arises from lambda by removing a strip next to lambda's addable node in
// column i-g; this is the jump relation realized by the Zero/Jump cases.
bool strip_link(const Partition& lambda, const Partition& mu, int i, int f, int g);

struct IntMatrix {
    std::vector<Partition> labels;
    std::vector<std::vector<Int>> entries;

    int dim() const { return static_cast<int>(labels.size()); }
    Int at(int r, int c) const { return entries[r][c]; }
    bool is_identity() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
};

struct PolyMatrix {
    std::vector<Partition> labels;
    std::vector<std::vector<QPoly>> entries;

    int dim() const { return static_cast<int>(labels.size()); }
    bool is_identity() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
};

// Change-of-basis matrices over the canonical box order: N carries the
// sign-twisted cover-expansive counts, P the cover-inclusive counts.
IntMatrix matrix_N(int f, int g);
IntMatrix matrix_P(int f, int g);
PolyMatrix matrix_Nq(int f, int g);
PolyMatrix matrix_Pq(int f, int g);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool pass() const;
    std::string str() const;
};

// Machine verification, coefficient by coefficient in the subset model, of
// the three basis identities: the s-basis expanded in the t-basis with
// sign-twisted cover-expansive counts, the t-basis expanded in the s-basis
// with cover-inclusive counts, and the all-ones t-sum expanded with the
// recursive weights.
Report verify_basis_theorems(int f, int g, int cap = 8);

}  // namespace dyckt
