#include "dyckt/paren.hpp"

#include <algorithm>

namespace dyckt {

int ParenSeq::open_count() const
{
    int n = 0;
    for (bool b : window)
        n += b;
    return n;
}

std::string ParenSeq::window_str() const
{
    std::string s;
    for (bool b : window)
        s.push_back(b ? '(' : ')');
    return s;
}

std::string ParenSeq::padded_str() const
{
    std::string s(pad_open, '(');
    s += window_str();
    s.append(pad_close, ')');
    return s;
}

ParenSeq paren_sequence(const Partition& lambda)
{
    ParenSeq ps;
    if (lambda.empty())
        return ps;  // empty window anchored at 1: opens up to 0, closes from 1
    const int lo = 1 - lambda.rows();
    const int hi = lambda.part(1) - 1;
    // boundary envelope: one above the column tops, descending off both ends
    std::vector<int> env(hi - lo + 3);
    for (int c = lo; c <= hi; ++c)
        env[c - lo + 1] = lambda.column_top(c)->height() + 1;
    env[0] = env[1] - 1;
    env[env.size() - 1] = env[env.size() - 2] - 1;
    ps.anchor = lo;
    for (size_t i = 1; i < env.size(); ++i) {
        int step = env[i] - env[i - 1];
        if (step != 1 && step != -1)
            throw Error("internal: boundary envelope is not a lattice path");
        ps.window.push_back(step == -1);  // down-step emits an open
    }
    int depth = 0, min_depth = 0;
    for (bool open : ps.window) {
        depth += open ? 1 : -1;
        min_depth = std::min(min_depth, depth);
    }
    ps.pad_open = -min_depth;
    ps.pad_close = ps.pad_open + depth;
    return ps;
}

bool chord_relation(const Partition& lambda, const Partition& mu)
{
    ParenSeq sl = paren_sequence(lambda);
    ParenSeq sm = paren_sequence(mu);
    const int lo = std::min(sl.window_begin(), sm.window_begin()) - 1;
    const int hi = std::max(sl.window_end(), sm.window_end());
    std::vector<int> stack;
    for (int pos = lo; pos <= hi; ++pos) {
        if (sm.open_at(pos)) {
            stack.push_back(pos);
        } else if (!stack.empty()) {
            int open = stack.back();
            stack.pop_back();
            bool same = sl.open_at(open) && !sl.open_at(pos);
            bool flipped = !sl.open_at(open) && sl.open_at(pos);
            if (!same && !flipped)
                return false;
        } else {
            // close matched beyond the range: both sequences pad there
            if (sl.open_at(pos))
                return false;
        }
    }
    for (int open : stack)
        if (!sl.open_at(open))
            return false;
    return true;
}

std::vector<int> NestPoset::sorted_lengths() const
{
    std::vector<int> ls = lengths;
    std::sort(ls.begin(), ls.end());
    return ls;
}

Int NestPoset::linear_extension_count() const
{
    Int num = factorial(size());
    Int den = 1;
    for (int l : lengths)
        den = checked_mul(den, l);
    if (den == 0 || num % den != 0)
        throw Error("internal: hook product does not divide the factorial");
    return num / den;
}

NestPoset nesting_poset(const Partition& lambda, int n_pairs)
{
    ParenSeq ps = paren_sequence(lambda);
    const int core = ps.pair_count();
    if (n_pairs < core)
        throw IndexOutOfRange("truncation needs at least " + std::to_string(core) +
                              " pairs for " + lambda.str());
    const int extra = n_pairs - core;
    std::string word(static_cast<size_t>(ps.pad_open + extra), '(');
    word += ps.window_str();
    word.append(static_cast<size_t>(ps.pad_close + extra), ')');
    NestPoset poset;
    std::vector<int> stack;
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        if (word[pos] == '(') {
            stack.push_back(pos);
        } else {
            if (stack.empty())
                throw Error("internal: padded word is unbalanced");
            poset.pairs.emplace_back(stack.back(), pos);
            stack.pop_back();
        }
    }
    if (!stack.empty())
        throw Error("internal: padded word is unbalanced");
    std::sort(poset.pairs.begin(), poset.pairs.end());
    poset.lengths.resize(poset.pairs.size());
    for (int p = 0; p < poset.size(); ++p) {
        int l = 1;
        for (int q = 0; q < poset.size(); ++q)
            if (q != p && poset.inside(q, p))
                ++l;
        poset.lengths[p] = l;
    }
    return poset;
}

int min_nesting_pairs(const Partition& lambda)
{
    return paren_sequence(lambda).pair_count() + 1;
}

Int hook_formula_F(const Partition& lambda)
{
    const int n = min_nesting_pairs(lambda);
    Int first = nesting_poset(lambda, n).linear_extension_count();
    Int second = nesting_poset(lambda, n + 1).linear_extension_count();
    if (first != second)
        throw Error("internal: hook value did not stabilize for " + lambda.str());
    return first;
}

}  // namespace dyckt
