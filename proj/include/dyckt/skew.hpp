#pragma once

#include <vector>

#include "dyckt/partition.hpp"

namespace dyckt {

// Skew diagram outer \ inner. Within a column the node heights form an
// arithmetic progression with step 2.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const std::vector<Node>& cells() const { return cells_; }
    Int cell_count() const { return static_cast<Int>(cells_.size()); }
    bool contains(Node n) const
    {
        return outer_.has_node(n) && !inner_.has_node(n);
    }

    // column range is meaningful only when the shape is non-empty
    int min_col() const { return min_col_; }
    int max_col() const { return max_col_; }
    // nodes of one column, sorted by increasing height
    const std::vector<Node>& column(int c) const;

    bool operator==(const SkewShape& o) const
    {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<Node> cells_;                 // column-major, heights ascending
    std::vector<std::vector<Node>> columns_;  // indexed by col - min_col_
    int min_col_ = 0;
    int max_col_ = -1;
};

}  // namespace dyckt
