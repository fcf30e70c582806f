#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyckt/partition.hpp"

namespace dyckt {

// Boundary reading of a partition into parentheses.  The finite window holds
// the steps over the columns the diagram touches; to its left the sequence is
// all opens, to its right all closes.  Window symbols are anchored to
// absolute positions so sequences of different partitions align.
struct ParenSeq {
    std::vector<bool> window;  // true = open '(' (boundary step down)
    int anchor = 1;            // absolute position of the first window symbol
    int pad_open = 0;          // minimal balancing pads
    int pad_close = 0;

    int width() const { return static_cast<int>(window.size()); }
    int window_begin() const { return anchor; }
    int window_end() const { return anchor + width(); }  // one past the last

    // doubly-infinite accessor
    bool open_at(int pos) const
    {
        if (pos < anchor)
            return true;
        if (pos >= window_end())
            return false;
        return window[pos - anchor];
    }

    // pairs of the minimally padded balanced word
    int pair_count() const { return pad_open + open_count(); }
    int open_count() const;

    std::string window_str() const;
    std::string padded_str() const;
};

ParenSeq paren_sequence(const Partition& lambda);

// True when lambda's sequence arises from mu's by reversing some matched
// pairs (open...close becomes close...open); equivalent to the existence of
// a cover-expansive Dyck tiling of lambda \ mu.
bool chord_relation(const Partition& lambda, const Partition& mu);

// Truncated nesting poset on the N outermost-trimmed pairs: a pair is larger
// than any pair it nests inside.  Lengths count 1 plus the pairs within.
struct NestPoset {
    std::vector<std::pair<int, int>> pairs;  // (open, close) positions
    std::vector<int> lengths;

    int size() const { return static_cast<int>(pairs.size()); }
    bool inside(int p, int q) const
    {
        return pairs[q].first < pairs[p].first && pairs[p].second < pairs[q].second;
    }
    std::vector<int> sorted_lengths() const;
    // N! divided by the product of the lengths (exact)
    Int linear_extension_count() const;
};

NestPoset nesting_poset(const Partition& lambda, int n_pairs);

// Smallest admissible truncation: every pair meeting the window, plus one
// enclosing pair.
int min_nesting_pairs(const Partition& lambda);

// Hook-product evaluation of the weight: computed at the minimal truncation
// and once more at the next size, which must agree.
Int hook_formula_F(const Partition& lambda);

}  // namespace dyckt
