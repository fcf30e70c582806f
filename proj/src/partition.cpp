#include "dyckt/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dyckt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ParseError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw ParseError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected parenthesized partition, e.g. \"(3,1)\" or \"()\"");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad partition part '" + item + "'");
            parts.push_back(std::stoi(item));
        }
        if (!s.empty() && s.back() == ',')
            throw ParseError("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::conjugate() const
{
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0], 0);
        for (int p : parts_)
            for (int i = 0; i < p; ++i)
                ++conj[i];
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const
{
    for (int a = 1; a <= mu.rows(); ++a)
        if (part(a) < mu.part(a))
            return false;
    return true;
}

bool Partition::is_addable(Node n) const
{
    if (n.a < 1 || n.b < 1 || part(n.a) != n.b - 1)
        return false;
    return n.a == 1 || part(n.a - 1) >= n.b;
}

bool Partition::is_removable(Node n) const
{
    return has_node(n) && part(n.a) == n.b && part(n.a + 1) < n.b;
}

std::vector<Node> Partition::nodes() const
{
    std::vector<Node> out;
    for (int a = 1; a <= rows(); ++a)
        for (int b = 1; b <= part(a); ++b)
            out.push_back({a, b});
    return out;
}

std::vector<Node> Partition::addable_nodes() const
{
    std::vector<Node> out;
    for (int a = 1; a <= rows() + 1; ++a) {
        Node n{a, part(a) + 1};
        if (is_addable(n))
            out.push_back(n);
    }
    return out;
}

std::vector<Node> Partition::removable_nodes() const
{
    std::vector<Node> out;
    for (int a = 1; a <= rows(); ++a) {
        Node n{a, part(a)};
        if (is_removable(n))
            out.push_back(n);
    }
    return out;
}

Partition Partition::add_node(Node n) const
{
    if (!is_addable(n))
        throw IndexOutOfRange("node " + std::to_string(n.a) + "," + std::to_string(n.b) +
                              " is not addable to " + str());
    std::vector<int> parts = parts_;
    if (n.a > rows())
        parts.push_back(1);
    else
        ++parts[n.a - 1];
    return Partition(std::move(parts));
}

Partition Partition::remove_node(Node n) const
{
    if (!is_removable(n))
        throw IndexOutOfRange("node is not removable from " + str());
    std::vector<int> parts = parts_;
    --parts[n.a - 1];
    return Partition(std::move(parts));
}

std::optional<Node> Partition::column_top(int c) const
{
    // nodes of column c are (a, a+c); height 2a+c grows with a
    std::optional<Node> top;
    for (int a = std::max(1, 1 - c); a <= rows(); ++a) {
        if (a + c >= 1 && a + c <= part(a))
            top = Node{a, a + c};
    }
    return top;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.str();
}

ColumnNode addable_removable(const Partition& lambda, int j)
{
    for (int a = std::max(1, 1 - j); a <= lambda.rows() + 1; ++a) {
        Node n{a, a + j};
        if (lambda.is_addable(n))
            return {ColumnKind::Addable, n};
        if (lambda.is_removable(n))
            return {ColumnKind::Removable, n};
    }
    return {};
}

std::vector<int> StripSet::positive() const
{
    std::vector<int> out;
    for (int x : values)
        if (x > 0)
            out.push_back(x);
    return out;
}

std::vector<int> StripSet::negative() const
{
    std::vector<int> out;
    for (int x : values)
        if (x < 0)
            out.push_back(x);
    return out;
}

StripSet x_set(const Partition& lambda, int j)
{
    ColumnNode cn = addable_removable(lambda, j);
    if (cn.kind != ColumnKind::Addable)
        throw IndexOutOfRange(lambda.str() + " has no addable node in column " + std::to_string(j));
    const int target = cn.node.height() - 1;
    StripSet xs;
    xs.j = j;
    for (Node n : lambda.removable_nodes()) {
        if (n.height() != target)
            continue;
        int x = n.col() - j;
        bool ok = x != 0;
        for (int c = std::min(j, j + x) + 1; ok && c < std::max(j, j + x); ++c) {
            auto top = lambda.column_top(c);
            if (top && top->height() >= cn.node.height())
                ok = false;
        }
        if (ok)
            xs.values.push_back(x);
    }
    std::sort(xs.values.begin(), xs.values.end());
    return xs;
}

Partition strip_remove(const Partition& lambda, int j, int x)
{
    StripSet xs = x_set(lambda, j);
    if (std::find(xs.values.begin(), xs.values.end(), x) == xs.values.end())
        throw IndexOutOfRange("strip length " + std::to_string(x) + " not available for " +
                              lambda.str() + " at column " + std::to_string(j));
    const int clo = x > 0 ? j + 1 : j + x;
    const int chi = x > 0 ? j + x : j - 1;
    std::vector<int> removed_per_row(lambda.rows(), 0);
    for (int c = clo; c <= chi; ++c) {
        auto top = lambda.column_top(c);
        if (!top)
            throw Error("internal: strip column is empty");
        ++removed_per_row[top->a - 1];
    }
    std::vector<int> parts = lambda.parts();
    for (int a = 1; a <= lambda.rows(); ++a)
        parts[a - 1] -= removed_per_row[a - 1];
    Partition result(std::move(parts));
    if (result.size() != lambda.size() - std::abs(x))
        throw Error("internal: strip removal changed the wrong number of nodes");
    return result;
}

namespace {

void gen_box(int f, int g, int row, int maxpart, std::vector<int>& cur, std::vector<Partition>& out)
{
    out.push_back(Partition(cur));
    if (row >= g)
        return;
    for (int p = maxpart; p >= 1; --p) {
        cur.push_back(p);
        gen_box(f, g, row + 1, p, cur, out);
        cur.pop_back();
    }
}

bool box_order(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.parts() > b.parts();
}

}  // namespace

std::vector<Partition> box(int f, int g)
{
    if (f < 0 || g < 0)
        throw IndexOutOfRange("box dimensions must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_box(f, g, 0, f, cur, out);
    std::sort(out.begin(), out.end(), box_order);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (row > lambda.rows())
            return;
        for (int p = std::min(maxpart, lambda.part(row)); p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 1, lambda.empty() ? 0 : lambda.part(1));
    std::sort(out.begin(), out.end(), box_order);
    return out;
}

}  // namespace dyckt
