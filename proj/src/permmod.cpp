#include "dyckt/permmod.hpp"

#include "dyckt/fweight.hpp"

namespace dyckt {

void ModVec::add_term(Subset s, Int c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coords.emplace(s, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            coords.erase(it);
    }
}

ModVec& ModVec::operator+=(const ModVec& o)
{
    for (auto [s, c] : o.coords)
        add_term(s, c);
    return *this;
}

ModVec& ModVec::operator-=(const ModVec& o)
{
    for (auto [s, c] : o.coords)
        add_term(s, -c);
    return *this;
}

ModVec ModVec::scaled(Int s) const
{
    ModVec r{k, {}};
    for (auto [key, c] : coords)
        r.add_term(key, checked_mul(s, c));
    return r;
}

ModVec ModVec::apply_t(int i) const
{
    if (i < 1 || i >= k)
        throw IndexOutOfRange("generator index out of range");
    ModVec r{k, {}};
    const Subset low = Subset{1} << (i - 1);
    const Subset both = low | (low << 1);
    for (auto [s, c] : coords) {
        Subset mixed = (s & both);
        r.add_term(mixed == 0 || mixed == both ? s : s ^ both, c);
    }
    return r;
}

ModVec ModVec::apply_s(int i) const
{
    ModVec r = apply_t(i);
    r -= *this;
    return r;
}

GenWord generator_word(const Partition& lambda, int f, int g, Flavor flavor)
{
    if (lambda.part(1) > f || lambda.rows() > g)
        throw BoxMismatch(lambda.str() + " does not fit in the " + std::to_string(f) + "x" +
                          std::to_string(g) + " box");
    GenWord w{flavor, f + g, {}};
    for (int r = 1; r <= g; ++r)
        for (int i = lambda.part(r) + g + 1 - r; i <= f + g - r; ++i)
            w.letters.push_back(i);
    return w;
}

ModVec base_vector(int f, int g)
{
    if (f < 0 || g < 0 || f + g > 30)
        throw CapExceeded("module rank out of range");
    ModVec v{f + g, {}};
    v.add_term(f == 0 ? 0 : ((Subset{1} << f) - 1), 1);
    return v;
}

ModVec act(const GenWord& word, ModVec v)
{
    if (word.k != v.k)
        throw BoxMismatch("word and vector have different ranks");
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        v = word.flavor == Flavor::T ? v.apply_t(*it) : v.apply_s(*it);
    return v;
}

Subset coset_subset(const Partition& lambda, int f, int g)
{
    ModVec v = act(generator_word(lambda, f, g, Flavor::T), base_vector(f, g));
    if (v.coords.size() != 1 || v.coords.begin()->second != 1)
        throw Error("internal: coset representative did not send the base subset to a subset");
    return v.coords.begin()->first;
}

SAction s_action_case(const Partition& mu, int i, int f, int g)
{
    const int k = f + g;
    if (mu.part(1) > f || mu.rows() > g)
        throw BoxMismatch("partition outside the box");
    if (i < 1 || i >= k)
        throw IndexOutOfRange("generator index out of range");
    const int j = i - g;
    std::vector<SAction> matches;

    ColumnNode cn = addable_removable(mu, j);
    if (cn.kind == ColumnKind::Addable)
        matches.push_back({SAction::Scale, -2, {}, 1, 0});
    if (cn.kind == ColumnKind::Removable)
        matches.push_back({SAction::Remove, 0, mu.remove_node(cn.node), 2, 0});

    for (int a = 0; a <= g; ++a) {
        if ((a == 0 || mu.part(a) > j + a) && j + a > mu.part(a + 1)) {
            int w = 0;
            for (int t = a + 1; t <= g && w == 0; ++t)
                if (mu.part(t) == j + 2 * a - t)
                    w = t;
            if (w == 0) {
                matches.push_back({SAction::Zero, 0, {}, 3, 'a'});
            } else {
                std::vector<int> parts;
                for (int t = 1; t <= a; ++t)
                    parts.push_back(mu.part(t));
                parts.push_back(j + a);
                for (int t = a + 1; t <= w - 1; ++t)
                    parts.push_back(mu.part(t) + 1);
                for (int t = w + 1; t <= g; ++t)
                    parts.push_back(mu.part(t));
                matches.push_back({SAction::Jump, 0, Partition(std::move(parts)), 3, 'b'});
            }
        }
    }

    for (int a = 1; a < g; ++a) {
        if (mu.part(a) == j + a && mu.part(a + 1) == j + a) {
            bool all_below = true;
            for (int t = 1; t < a; ++t)
                if (mu.part(t) >= j + 2 * a - t)
                    all_below = false;
            if (i + 2 * a > k && all_below) {
                matches.push_back({SAction::Zero, 0, {}, 4, 'a'});
            } else {
                int w = 0;
                for (int t = a - 1; t >= 1 && w == 0; --t)
                    if (mu.part(t) >= j + 2 * a - t)
                        w = t;
                std::vector<int> parts;
                for (int t = 1; t <= w; ++t)
                    parts.push_back(mu.part(t));
                parts.push_back(j + 2 * a - w);
                for (int t = w + 1; t <= a - 1; ++t)
                    parts.push_back(mu.part(t) + 1);
                for (int t = a + 1; t <= g; ++t)
                    parts.push_back(mu.part(t));
                matches.push_back({SAction::Jump, 0, Partition(std::move(parts)), 4, 'b'});
            }
        }
    }

    if (matches.size() != 1)
        throw Error("internal: generator action cases are not exclusive for " + mu.str() +
                    ", i=" + std::to_string(i));
    return matches.front();
}

bool strip_link(const Partition& lambda, const Partition& mu, int i, int f, int g)
{
    if (lambda.part(1) > f || lambda.rows() > g || mu.part(1) > f || mu.rows() > g)
        throw BoxMismatch("partition outside the box");
    const int j = i - g;
    if (addable_removable(lambda, j).kind != ColumnKind::Addable)
        return false;
    for (int x : x_set(lambda, j).values)
        if (strip_remove(lambda, j, x) == mu)
            return true;
    return false;
}

bool IntMatrix::is_identity() const
{
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c)
            if (entries[r][c] != (r == c ? 1 : 0))
                return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.dim() != b.dim())
        throw BoxMismatch("matrix dimensions differ");
    IntMatrix r;
    r.labels = a.labels;
    r.entries.assign(a.dim(), std::vector<Int>(a.dim(), 0));
    for (int i = 0; i < a.dim(); ++i)
        for (int l = 0; l < a.dim(); ++l) {
            if (a.entries[i][l] == 0)
                continue;
            for (int j = 0; j < a.dim(); ++j)
                r.entries[i][j] =
                    checked_add(r.entries[i][j], checked_mul(a.entries[i][l], b.entries[l][j]));
        }
    return r;
}

bool PolyMatrix::is_identity() const
{
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c)
            if (!(entries[r][c] == (r == c ? QPoly::one() : QPoly::zero())))
                return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.dim() != b.dim())
        throw BoxMismatch("matrix dimensions differ");
    PolyMatrix r;
    r.labels = a.labels;
    r.entries.assign(a.dim(), std::vector<QPoly>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int l = 0; l < a.dim(); ++l) {
            if (a.entries[i][l].is_zero())
                continue;
            for (int j = 0; j < a.dim(); ++j)
                r.entries[i][j] += a.entries[i][l] * b.entries[l][j];
        }
    return r;
}

IntMatrix matrix_N(int f, int g)
{
    IntMatrix m;
    m.labels = box(f, g);
    const int d = m.dim();
    m.entries.assign(d, std::vector<Int>(d, 0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            Int e = count_ce(m.labels[r], m.labels[c]);
            Int sign = (m.labels[r].size() + m.labels[c].size()) % 2 == 0 ? 1 : -1;
            m.entries[r][c] = sign * e;
        }
    return m;
}

IntMatrix matrix_P(int f, int g)
{
    IntMatrix m;
    m.labels = box(f, g);
    const int d = m.dim();
    m.entries.assign(d, std::vector<Int>(d, 0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m.entries[r][c] = count_ci(m.labels[r], m.labels[c]);
    return m;
}

PolyMatrix matrix_Nq(int f, int g)
{
    PolyMatrix m;
    m.labels = box(f, g);
    const int d = m.dim();
    m.entries.assign(d, std::vector<QPoly>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            QPoly e = ce_qpoly(m.labels[r], m.labels[c]);
            Int sign = (m.labels[r].size() + m.labels[c].size()) % 2 == 0 ? 1 : -1;
            m.entries[r][c] = sign * e;
        }
    return m;
}

PolyMatrix matrix_Pq(int f, int g)
{
    PolyMatrix m;
    m.labels = box(f, g);
    const int d = m.dim();
    m.entries.assign(d, std::vector<QPoly>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m.entries[r][c] = ci_qpoly(m.labels[r], m.labels[c]);
    return m;
}

bool Report::pass() const
{
    for (const CheckResult& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string Report::str() const
{
    std::string out;
    for (const CheckResult& c : checks) {
        out += c.pass ? "PASS" : "FAIL";
        out += "  " + c.name;
        if (!c.detail.empty())
            out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

Report verify_basis_theorems(int f, int g, int cap)
{
    if (f + g > cap)
        throw CapExceeded("module verification capped at rank " + std::to_string(cap));
    Report report;
    const auto lambdas = box(f, g);
    const ModVec m = base_vector(f, g);

    std::map<Partition, Subset> subset_of;
    std::map<Subset, Partition> label_of;
    std::map<Partition, ModVec> s_vec;
    bool basis_ok = true;
    std::string basis_detail;
    for (const Partition& la : lambdas) {
        Subset s = coset_subset(la, f, g);
        subset_of[la] = s;
        if (!label_of.emplace(s, la).second) {
            basis_ok = false;
            basis_detail = "duplicate subset for " + la.str();
        }
        s_vec[la] = act(generator_word(la, f, g, Flavor::S), m);
    }
    report.checks.push_back({"t-basis subsets are distinct", basis_ok, basis_detail});

    // s-basis expanded over the t-basis: coefficients are sign-twisted
    // cover-expansive counts, read off directly on the subset basis.
    bool ok1 = true;
    std::string det1;
    for (const Partition& mu : lambdas) {
        const ModVec& v = s_vec[mu];
        for (const Partition& la : lambdas) {
            Int want = count_ce(la, mu);
            if ((la.size() + mu.size()) % 2 != 0)
                want = -want;
            auto it = v.coords.find(subset_of[la]);
            Int got = it == v.coords.end() ? 0 : it->second;
            if (got != want && ok1) {
                ok1 = false;
                det1 = "mu=" + mu.str() + " lambda=" + la.str() + " got " + std::to_string(got) +
                       " want " + std::to_string(want);
            }
        }
    }
    report.checks.push_back({"s-basis in t-basis matches signed expansive counts", ok1, det1});

    // t-basis expanded over the s-basis with cover-inclusive counts
    bool ok2 = true;
    std::string det2;
    for (const Partition& mu : lambdas) {
        ModVec sum{f + g, {}};
        for (const Partition& la : lambdas) {
            Int c = count_ci(la, mu);
            if (c != 0)
                sum += s_vec[la].scaled(c);
        }
        ModVec t_mu{f + g, {}};
        t_mu.add_term(subset_of[mu], 1);
        if (!(sum == t_mu) && ok2) {
            ok2 = false;
            det2 = "mu=" + mu.str();
        }
    }
    report.checks.push_back({"t-basis in s-basis matches inclusive counts", ok2, det2});

    // sum of the whole t-basis expanded with the recursive weights
    ModVec lhs{f + g, {}};
    for (const Partition& mu : lambdas)
        lhs.add_term(subset_of[mu], 1);
    ModVec rhs{f + g, {}};
    for (const Partition& la : lambdas)
        rhs += s_vec[la].scaled(fweight(la));
    report.checks.push_back({"t-basis sum matches weighted s-basis sum", lhs == rhs, ""});

    return report;
}

}  // namespace dyckt
