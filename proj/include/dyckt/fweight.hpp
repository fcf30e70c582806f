#pragma once

#include <vector>

#include "dyckt/partition.hpp"

namespace dyckt {

// All nodes of lambda of maximal height, ordered by row.
std::vector<Node> highest_nodes(const Partition& lambda);

// Remove the first a rows.
Partition drop_rows(const Partition& lambda, int a);
// Subtract b from every part, discarding what becomes non-positive.
Partition drop_cols(const Partition& lambda, int b);

// Recursive weight: 1 on the empty partition, otherwise binom(a+b, a) times
// the weights of the two sub-diagrams cut at a highest node (a, b).  The
// value is independent of which highest node is used; evaluation picks the
// first and is memoized.
Int fweight(const Partition& lambda);

// Single factorization step at a prescribed highest node, for checking that
// all choices agree.
Int fweight_at(const Partition& lambda, Node highest);

}  // namespace dyckt
