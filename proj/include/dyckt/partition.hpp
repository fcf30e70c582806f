#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dyckt/common.hpp"

namespace dyckt {

// Lattice point in the Russian convention: the row index a increases to the
// north-west, the position b within the row to the north-east.
struct Node {
    int a = 0;
    int b = 0;

    int height() const { return a + b; }
    int col() const { return b - a; }

    Node ne() const { return {a, b + 1}; }
    Node nw() const { return {a + 1, b}; }
    Node se() const { return {a - 1, b}; }
    Node sw() const { return {a, b - 1}; }
    Node north() const { return {a + 1, b + 1}; }
    Node south() const { return {a - 1, b - 1}; }

    auto operator<=>(const Node&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // text syntax "(6,4,4,3,2,2)"; "()" is the empty partition
    static Partition parse(const std::string& text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int a) const { return a >= 1 && a <= rows() ? parts_[a - 1] : 0; }
    Int size() const;
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    bool has_node(Node n) const { return n.a >= 1 && n.b >= 1 && n.b <= part(n.a); }

    bool is_addable(Node n) const;
    bool is_removable(Node n) const;
    std::vector<Node> nodes() const;
    std::vector<Node> addable_nodes() const;
    std::vector<Node> removable_nodes() const;
    Partition add_node(Node n) const;
    Partition remove_node(Node n) const;

    // highest node of the partition in column c, if the column is inhabited
    std::optional<Node> column_top(int c) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class ColumnKind { Addable, Removable, Neither };

struct ColumnNode {
    ColumnKind kind = ColumnKind::Neither;
    Node node{};
};

// The unique addable node of lambda in column j, or the unique removable node
// there, or Neither; the three cases are mutually exclusive.
ColumnNode addable_removable(const Partition& lambda, int j);

// Signed strip lengths next to the addable node of lambda in column j:
// x is in the set when lambda has a removable node in column j+x one level
// below the addable node, with everything strictly between lying lower.
struct StripSet {
    int j = 0;
    std::vector<int> values;  // sorted ascending, never contains 0

    std::vector<int> positive() const;
    std::vector<int> negative() const;
};

StripSet x_set(const Partition& lambda, int j);

// Removes the strip of highest nodes in the |x| columns between j and j+x.
// Requires x in x_set(lambda, j).
Partition strip_remove(const Partition& lambda, int j, int x);

// All partitions with at most g rows and parts at most f, ordered by size
// and then by descending lexicographic comparison of the part lists.
std::vector<Partition> box(int f, int g);

// All partitions contained in lambda, in the same canonical order.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace dyckt
