#include "dyckt/counts.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace dyckt {

namespace {

using Key = std::pair<Partition, Partition>;

std::map<Key, Int> g_ci_memo;
std::map<Key, Int> g_ce_memo;
std::mutex g_ci_mx;
std::mutex g_ce_mx;

std::optional<Int> memo_get(std::map<Key, Int>& memo, std::mutex& mx, const Key& k)
{
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(k);
    if (it == memo.end())
        return std::nullopt;
    return it->second;
}

void memo_put(std::map<Key, Int>& memo, std::mutex& mx, const Key& k, Int v)
{
    std::lock_guard<std::mutex> lock(mx);
    memo.emplace(k, v);  // idempotent: recomputed values are identical
}

// Leftmost column whose addable node of mu lies inside lambda.  Exists
// whenever lambda strictly contains mu, and choosing it keeps the whole
// recursion inside the bounding box of the original lambda.
int recursion_column(const Partition& lambda, const Partition& mu)
{
    bool found = false;
    int best = 0;
    for (Node n : mu.addable_nodes()) {
        if (lambda.has_node(n) && (!found || n.col() < best)) {
            best = n.col();
            found = true;
        }
    }
    if (!found)
        throw Error("internal: no addable node of the inner partition inside the outer");
    return best;
}

Int count_ci_rec(const Partition& lambda, const Partition& mu)
{
    if (!lambda.contains(mu))
        return 0;
    if (lambda == mu)
        return 1;
    Key key{lambda, mu};
    if (auto hit = memo_get(g_ci_memo, g_ci_mx, key))
        return *hit;
    const int j = recursion_column(lambda, mu);
    const Partition mu_up = mu.add_node(addable_removable(mu, j).node);
    ColumnNode cn = addable_removable(lambda, j);
    Int res;
    if (cn.kind != ColumnKind::Addable) {
        res = count_ci_rec(lambda, mu_up);
    } else {
        const Partition lambda_up = lambda.add_node(cn.node);
        res = count_ci_rec(lambda_up, mu_up) - count_ci_rec(lambda, mu_up);
        for (int x : x_set(lambda, j).values)
            res = checked_add(res, count_ci_rec(strip_remove(lambda, j, x), mu_up));
    }
    memo_put(g_ci_memo, g_ci_mx, key, res);
    return res;
}

Int count_ce_rec(const Partition& lambda, const Partition& mu)
{
    if (!lambda.contains(mu))
        return 0;
    if (lambda == mu)
        return 1;
    Key key{lambda, mu};
    if (auto hit = memo_get(g_ce_memo, g_ce_mx, key))
        return *hit;
    const int j = recursion_column(lambda, mu);
    ColumnNode cn = addable_removable(lambda, j);
    Int res;
    switch (cn.kind) {
    case ColumnKind::Neither:
        res = 0;
        break;
    case ColumnKind::Removable:
        res = count_ce_rec(lambda.remove_node(cn.node), mu);
        break;
    default: {
        const Partition mu_up = mu.add_node(addable_removable(mu, j).node);
        res = count_ce_rec(lambda, mu_up) + count_ce_rec(lambda.add_node(cn.node), mu_up);
        break;
    }
    }
    memo_put(g_ce_memo, g_ce_mx, key, res);
    return res;
}

}  // namespace

Int count_ci(const Partition& lambda, const Partition& mu, CountMode mode, int cell_cap)
{
    if (!lambda.contains(mu))
        return 0;
    if (mode == CountMode::Recurrence)
        return count_ci_rec(lambda, mu);
    Int n = 0;
    for (const Tiling& t : enumerate_tilings(SkewShape(lambda, mu), cell_cap))
        if (is_cover_inclusive(t))
            ++n;
    return n;
}

Int count_ce(const Partition& lambda, const Partition& mu, CountMode mode, int cell_cap)
{
    if (!lambda.contains(mu))
        return 0;
    if (mode == CountMode::Recurrence)
        return count_ce_rec(lambda, mu);
    Int n = 0;
    for (const Tiling& t : enumerate_tilings(SkewShape(lambda, mu), cell_cap))
        if (is_cover_expansive(t, Side::Both))
            ++n;
    return n;
}

QPoly QPoly::monomial(int k, Int coeff)
{
    QPoly p;
    p.c.assign(k + 1, 0);
    p.c[k] = coeff;
    p.normalize();
    return p;
}

void QPoly::normalize()
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

Int QPoly::eval_one() const
{
    Int s = 0;
    for (Int x : c)
        s = checked_add(s, x);
    return s;
}

std::string QPoly::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        if (c[k] == 0)
            continue;
        if (!out.empty())
            out += c[k] > 0 ? " + " : " - ";
        else if (c[k] < 0)
            out += "-";
        Int mag = c[k] > 0 ? c[k] : -c[k];
        std::string term;
        if (k == 0)
            term = std::to_string(mag);
        else {
            if (mag != 1)
                term = std::to_string(mag) + "*";
            term += "q";
            if (k > 1)
                term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.c.size() > c.size())
        c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i)
        c[i] = checked_add(c[i], o.c[i]);
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return QPoly::zero();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = checked_add(r.c[i + j], checked_mul(a.c[i], b.c[j]));
    r.normalize();
    return r;
}

QPoly operator*(Int s, const QPoly& a)
{
    QPoly r = a;
    for (Int& x : r.c)
        x = checked_mul(s, x);
    r.normalize();
    return r;
}

QPoly ci_qpoly(const Partition& lambda, const Partition& mu, int cell_cap)
{
    if (!lambda.contains(mu))
        return QPoly::zero();
    QPoly p;
    for (const Tiling& t : enumerate_tilings(SkewShape(lambda, mu), cell_cap)) {
        if (!is_cover_inclusive(t))
            continue;
        int k = t.tile_count();
        if (k >= static_cast<int>(p.c.size()))
            p.c.resize(k + 1, 0);
        ++p.c[k];
    }
    p.normalize();
    return p;
}

QPoly ce_qpoly(const Partition& lambda, const Partition& mu)
{
    if (!lambda.contains(mu))
        return QPoly::zero();
    auto t = find_ce_tiling(SkewShape(lambda, mu));
    if (!t)
        return QPoly::zero();
    return QPoly::monomial(t->tile_count());
}

}  // namespace dyckt
