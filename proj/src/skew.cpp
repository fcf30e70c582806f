#include "dyckt/skew.hpp"

#include <algorithm>
#include <limits>

namespace dyckt {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (!outer_.contains(inner_))
        throw Error("skew shape requires outer to contain inner: " + outer_.str() + " vs " +
                    inner_.str());
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (int a = 1; a <= outer_.rows(); ++a) {
        for (int b = inner_.part(a) + 1; b <= outer_.part(a); ++b) {
            lo = std::min(lo, b - a);
            hi = std::max(hi, b - a);
        }
    }
    if (lo > hi)
        return;  // empty shape
    min_col_ = lo;
    max_col_ = hi;
    columns_.resize(hi - lo + 1);
    for (int a = 1; a <= outer_.rows(); ++a)
        for (int b = inner_.part(a) + 1; b <= outer_.part(a); ++b)
            columns_[b - a - lo].push_back({a, b});
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end(),
                  [](Node x, Node y) { return x.height() < y.height(); });
        for (size_t i = 1; i < col.size(); ++i)
            if (col[i].height() != col[i - 1].height() + 2)
                throw Error("internal: skew column is not contiguous");
    }
    for (int c = lo; c <= hi; ++c)
        for (Node n : columns_[c - lo])
            cells_.push_back(n);
}

const std::vector<Node>& SkewShape::column(int c) const
{
    static const std::vector<Node> kEmpty;
    if (columns_.empty() || c < min_col_ || c > max_col_)
        return kEmpty;
    return columns_[c - min_col_];
}

}  // namespace dyckt
