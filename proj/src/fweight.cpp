#include "dyckt/fweight.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dyckt {

std::vector<Node> highest_nodes(const Partition& lambda)
{
    if (lambda.empty())
        throw IndexOutOfRange("the empty partition has no nodes");
    int best = 0;
    for (int a = 1; a <= lambda.rows(); ++a)
        best = std::max(best, a + lambda.part(a));
    std::vector<Node> out;
    for (int a = 1; a <= lambda.rows(); ++a)
        if (a + lambda.part(a) == best)
            out.push_back({a, lambda.part(a)});
    return out;
}

Partition drop_rows(const Partition& lambda, int a)
{
    std::vector<int> parts;
    for (int r = a + 1; r <= lambda.rows(); ++r)
        parts.push_back(lambda.part(r));
    return Partition(std::move(parts));
}

Partition drop_cols(const Partition& lambda, int b)
{
    std::vector<int> parts;
    for (int p : lambda.parts())
        if (p > b)
            parts.push_back(p - b);
    return Partition(std::move(parts));
}

namespace {

std::map<Partition, Int> g_memo;
std::mutex g_mx;

}  // namespace

Int fweight(const Partition& lambda)
{
    if (lambda.empty())
        return 1;
    {
        std::lock_guard<std::mutex> lock(g_mx);
        auto it = g_memo.find(lambda);
        if (it != g_memo.end())
            return it->second;
    }
    Int value = fweight_at(lambda, highest_nodes(lambda).front());
    std::lock_guard<std::mutex> lock(g_mx);
    g_memo.emplace(lambda, value);
    return value;
}

Int fweight_at(const Partition& lambda, Node highest)
{
    auto hs = highest_nodes(lambda);
    if (std::find(hs.begin(), hs.end(), highest) == hs.end())
        throw IndexOutOfRange("not a highest node of " + lambda.str());
    Int left = fweight(drop_rows(lambda, highest.a));
    Int right = fweight(drop_cols(lambda, highest.b));
    return checked_mul(binomial(highest.a + highest.b, highest.a), checked_mul(left, right));
}

}  // namespace dyckt
