#include "dyckt/garnir.hpp"

#include <algorithm>

#include "dyckt/fweight.hpp"

namespace dyckt {

bool Tableau::row_strict() const
{
    for (const auto& row : rows)
        for (size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] >= row[i])
                return false;
    return true;
}

bool Tableau::standard() const
{
    if (!row_strict())
        return false;
    for (size_t a = 1; a < rows.size(); ++a)
        for (size_t b = 0; b < rows[a].size(); ++b)
            if (rows[a - 1][b] >= rows[a][b])
                return false;
    return true;
}

Node Tableau::node_of(int value) const
{
    for (int a = 1; a <= shape.rows(); ++a)
        for (int b = 1; b <= shape.part(a); ++b)
            if (at(a, b) == value)
                return {a, b};
    throw IndexOutOfRange("value not in tableau");
}

std::string Tableau::str() const
{
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += " ";
            out += std::to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

Tableau initial_tableau(const Partition& pi)
{
    Tableau t{pi, {}};
    int next = 1;
    for (int a = 1; a <= pi.rows(); ++a) {
        std::vector<int> row(pi.part(a));
        for (int& v : row)
            v = next++;
        t.rows.push_back(std::move(row));
    }
    return t;
}

int residue(Node n, int e, int kappa)
{
    if (e < 1)
        throw IndexOutOfRange("quantum characteristic must be positive");
    int r = (n.b - n.a + kappa) % e;
    return r < 0 ? r + e : r;
}

std::vector<int> residue_sequence(const Partition& pi, int e, int kappa)
{
    std::vector<int> out;
    for (int a = 1; a <= pi.rows(); ++a)
        for (int b = 1; b <= pi.part(a); ++b)
            out.push_back(residue({a, b}, e, kappa));
    return out;
}

bool is_garnir_node(const Partition& pi, Node a)
{
    return pi.has_node(a) && pi.has_node({a.a + 1, a.b});
}

std::vector<Node> garnir_belt(const Partition& pi, Node a)
{
    if (!is_garnir_node(pi, a))
        throw NotGarnirNode("(" + std::to_string(a.a) + "," + std::to_string(a.b) +
                            ") is not a Garnir node of " + pi.str());
    std::vector<Node> belt;
    for (int b = a.b; b <= pi.part(a.a); ++b)
        belt.push_back({a.a, b});
    for (int b = 1; b <= a.b; ++b)
        belt.push_back({a.a + 1, b});
    return belt;
}

Tableau garnir_tableau(const Partition& pi, Node a)
{
    Tableau t = initial_tableau(pi);
    std::vector<Node> belt = garnir_belt(pi, a);
    std::vector<int> values;
    for (Node n : belt)
        values.push_back(t.at(n.a, n.b));
    std::sort(values.begin(), values.end());
    // bottom-left to top-right: the lower row first, then the upper row
    size_t idx = 0;
    for (int b = 1; b <= a.b; ++b)
        t.set(a.a + 1, b, values[idx++]);
    for (int b = a.b; b <= pi.part(a.a); ++b)
        t.set(a.a, b, values[idx++]);
    return t;
}

GarnirData brick_data(const Partition& pi, Node a, int e, int kappa)
{
    if (e < 2)
        throw IndexOutOfRange("bricks need e >= 2");
    GarnirData d;
    d.pi = pi;
    d.node = a;
    d.e = e;
    d.kappa = kappa;
    d.belt = garnir_belt(pi, a);
    const int b = a.b;
    for (int c = b; c + e - 1 <= pi.part(a.a); c += e) {
        std::vector<Node> brick;
        for (int t = 0; t < e; ++t)
            brick.push_back({a.a, c + t});
        d.bricks.push_back(std::move(brick));
        ++d.f;
    }
    int c0 = (b % e) + 1;  // smallest c >= 1 congruent to b+1 mod e
    for (int c = c0; c + e - 1 <= b; c += e) {
        std::vector<Node> brick;
        for (int t = 0; t < e; ++t)
            brick.push_back({a.a + 1, c + t});
        d.bricks.push_back(std::move(brick));
        ++d.g;
    }
    d.k = d.f + d.g;
    if (d.k > 0) {
        Tableau gt = garnir_tableau(pi, a);
        int best = gt.n() + 1;
        for (const auto& brick : d.bricks)
            for (Node n : brick)
                best = std::min(best, gt.at(n.a, n.b));
        d.d = best;
    }
    for (const auto& brick : d.bricks)
        if (residue(brick.front(), e, kappa) != residue(a, e, kappa))
            throw Error("internal: brick residue mismatch");
    return d;
}

PsiWord sigma_word(const GarnirData& data, int i)
{
    if (i < 1 || i >= data.k)
        throw IndexOutOfRange("brick generator index out of range");
    PsiWord w;
    w.role = PsiWord::BlockSwap;
    const int e = data.e, d = data.d;
    for (int r = 0; r < e; ++r)
        for (int l = d + i * e - 1 + r; l >= d + i * e - e + r; --l)
            w.letters.push_back(l);
    return w;
}

PsiWord sigma_word(const Partition& pi, Node a, int e, int kappa, int i)
{
    return sigma_word(brick_data(pi, a, e, kappa), i);
}

Tableau brick_base_tableau(const GarnirData& data)
{
    Tableau t = garnir_tableau(data.pi, data.node);
    // brick p takes the p-th value block
    for (size_t p = 0; p < data.bricks.size(); ++p)
        for (size_t r = 0; r < data.bricks[p].size(); ++r) {
            Node n = data.bricks[p][r];
            t.set(n.a, n.b, data.d + static_cast<int>(p) * data.e + static_cast<int>(r));
        }
    if (!t.row_strict())
        throw Error("internal: brick base tableau is not row-strict");
    return t;
}

PsiWord row_insertion_word(const GarnirData& data)
{
    Tableau tpi = initial_tableau(data.pi);
    Tableau base = brick_base_tableau(data);
    PsiWord w;
    w.role = PsiWord::RowInsertion;
    const int a = data.node.a;
    for (int b = data.node.b; b <= data.pi.part(a); ++b)
        for (int l = base.at(a, b) - 1; l >= tpi.at(a, b); --l)
            w.letters.push_back(l);
    return w;
}

Tableau brick_tableau(const GarnirData& data, const Partition& lambda)
{
    if (lambda.part(1) > data.f || lambda.rows() > data.g)
        throw BoxMismatch(lambda.str() + " does not fit in the brick box");
    Tableau base = brick_base_tableau(data);
    GenWord coset = generator_word(lambda, data.f, data.g, Flavor::T);
    // value permutation built from block swaps, rightmost letter first
    const int n = base.n();
    std::vector<int> perm(n + 1);
    for (int v = 0; v <= n; ++v)
        perm[v] = v;
    auto block_swap = [&](int i, int v) {
        const int lo = data.d + (i - 1) * data.e;
        if (v >= lo && v < lo + data.e)
            return v + data.e;
        if (v >= lo + data.e && v < lo + 2 * data.e)
            return v - data.e;
        return v;
    };
    for (auto it = coset.letters.rbegin(); it != coset.letters.rend(); ++it)
        for (int v = 1; v <= n; ++v)
            perm[v] = block_swap(*it, perm[v]);
    Tableau t = base;
    for (auto& row : t.rows)
        for (int& v : row)
            v = perm[v];
    if (!t.row_strict())
        throw Error("internal: brick tableau is not row-strict");
    return t;
}

Tableau brick_tableau(const Partition& pi, Node a, int e, int kappa, const Partition& lambda)
{
    return brick_tableau(brick_data(pi, a, e, kappa), lambda);
}

std::vector<GarnirTerm> modified_garnir(const Partition& pi, Node a, int e, int kappa)
{
    GarnirData data = brick_data(pi, a, e, kappa);
    PsiWord tail = row_insertion_word(data);
    std::vector<GarnirTerm> terms;
    for (const Partition& la : box(data.f, data.g)) {
        GarnirTerm term;
        term.coeff = fweight(la);
        term.lambda = la;
        term.tableau = brick_tableau(data, la);
        term.word.role = PsiWord::Assembled;
        for (int i : generator_word(la, data.f, data.g, Flavor::S).letters) {
            PsiWord sw = sigma_word(data, i);
            term.word.letters.insert(term.word.letters.end(), sw.letters.begin(),
                                     sw.letters.end());
        }
        term.word.letters.insert(term.word.letters.end(), tail.letters.begin(),
                                 tail.letters.end());
        terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<ClassicalTerm> classical_garnir(const Partition& pi, Node a, int e, int kappa)
{
    GarnirData data = brick_data(pi, a, e, kappa);
    std::vector<ClassicalTerm> terms;
    for (const Partition& la : box(data.f, data.g))
        terms.push_back({la, generator_word(la, data.f, data.g, Flavor::T).letters});
    return terms;
}

std::map<Partition, Int> expand_tau(const Partition& mu, int f, int g)
{
    if (mu.part(1) > f || mu.rows() > g)
        throw BoxMismatch(mu.str() + " does not fit in the box");
    std::map<Partition, Int> out;
    for (const Partition& la : box(f, g)) {
        Int c = count_ci(la, mu);
        if (c != 0)
            out[la] = c;
    }
    return out;
}

Tableau apply_word(const Partition& pi, const std::vector<int>& letters)
{
    Tableau t = initial_tableau(pi);
    const int n = t.n();
    std::vector<Node> pos(n + 1);
    for (int a = 1; a <= pi.rows(); ++a)
        for (int b = 1; b <= pi.part(a); ++b)
            pos[t.at(a, b)] = {a, b};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int i = *it;
        if (i < 1 || i >= n)
            throw IndexOutOfRange("word letter out of range");
        Node p = pos[i], q = pos[i + 1];
        t.set(p.a, p.b, i + 1);
        t.set(q.a, q.b, i);
        std::swap(pos[i], pos[i + 1]);
    }
    return t;
}

}  // namespace dyckt
