#pragma once

#include <string>
#include <vector>

#include "dyckt/partition.hpp"
#include "dyckt/permmod.hpp"

namespace dyckt {

// This module alone works in the English convention: the first coordinate of
// a node is the row counted downward, the second the column to the right.

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[a-1][b-1]

    int n() const { return static_cast<int>(shape.size()); }
    int at(int a, int b) const { return rows[a - 1][b - 1]; }
    void set(int a, int b, int v) { rows[a - 1][b - 1] = v; }
    bool row_strict() const;
    bool standard() const;
    Node node_of(int value) const;
    bool operator==(const Tableau& o) const { return shape == o.shape && rows == o.rows; }
    std::string str() const;
};

// Row-by-row filling 1..n.
Tableau initial_tableau(const Partition& pi);

int residue(Node n, int e, int kappa);
// Residues of 1..n read from the initial tableau.
std::vector<int> residue_sequence(const Partition& pi, int e, int kappa);

// A node with another node directly below it.
bool is_garnir_node(const Partition& pi, Node a);
// The tail of row a from the node on, plus the head of row a+1 up to it.
std::vector<Node> garnir_belt(const Partition& pi, Node a);
// Initial tableau with belt entries rearranged to increase from bottom left
// to top right.
Tableau garnir_tableau(const Partition& pi, Node a);

struct GarnirData {
    Partition pi;
    Node node;
    int e = 0;
    int kappa = 0;
    std::vector<Node> belt;
    std::vector<std::vector<Node>> bricks;  // row-a bricks first, left to right
    int f = 0;  // bricks in the upper row
    int g = 0;  // bricks in the lower row
    int k = 0;
    int d = 0;  // smallest entry in a brick of the Garnir tableau (0 if k = 0)
};

// Bricks are runs of e consecutive belt nodes in one row whose leftmost node
// has the residue of the Garnir node.
GarnirData brick_data(const Partition& pi, Node a, int e, int kappa);

struct PsiWord {
    enum Role { BlockSwap, RowInsertion, Assembled, CosetLetters };
    Role role = Assembled;
    std::vector<int> letters;  // rightmost acts first

    bool operator==(const PsiWord& o) const { return role == o.role && letters == o.letters; }
};

// Word for the block transposition swapping bricks i and i+1 (e*e letters,
// descending runs).
PsiWord sigma_word(const Partition& pi, Node a, int e, int kappa, int i);
PsiWord sigma_word(const GarnirData& data, int i);

// Bricks of the Garnir tableau reordered so their entries increase along the
// upper row and then the lower row.
Tableau brick_base_tableau(const GarnirData& data);

// Canonical word moving the initial tableau to the brick base tableau: one
// descending run per upper-row belt cell, left to right.
PsiWord row_insertion_word(const GarnirData& data);

// Row-strict tableau obtained by permuting the bricks of the base tableau by
// the coset representative of lambda; the full box runs from the Garnir
// tableau (empty partition) to the base tableau itself.
Tableau brick_tableau(const GarnirData& data, const Partition& lambda);
Tableau brick_tableau(const Partition& pi, Node a, int e, int kappa, const Partition& lambda);

struct GarnirTerm {
    Int coeff = 0;
    Partition lambda;
    Tableau tableau;
    PsiWord word;
};

// Fully reduced replacement for the classical Garnir element: one term per
// box partition, weighted by the recursive weight, with the assembled word.
std::vector<GarnirTerm> modified_garnir(const Partition& pi, Node a, int e, int kappa);

struct ClassicalTerm {
    Partition lambda;
    std::vector<int> coset_letters;  // indices of the brick generators
};

// The classical element as structured data: unit coefficients over the box,
// each term a product of brick generators in front of the row-insertion word.
std::vector<ClassicalTerm> classical_garnir(const Partition& pi, Node a, int e, int kappa);

// Coefficients expressing one tau-basis element over the sigma-basis.
std::map<Partition, Int> expand_tau(const Partition& mu, int f, int g);

// Simulate a word on the initial tableau (for validation): letters act as
// adjacent value swaps, rightmost first.
Tableau apply_word(const Partition& pi, const std::vector<int>& letters);

}  // namespace dyckt
