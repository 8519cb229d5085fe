#include "mis/constructions.hpp"

#include <array>
#include <string>
#include <utility>

#include "mis/errors.hpp"

namespace mis {

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 6> kFamilies{{
    {"moon_moser", Family::moon_moser},
    {"hujter_tuza", Family::hujter_tuza},
    {"g_extremal", Family::g_extremal},
    {"cycle", Family::cycle},
    {"complete", Family::complete},
    {"matching", Family::matching},
}};

void require(bool ok, const std::string& what)
{
    if (!ok) throw DomainError(what);
}

} // namespace

std::optional<Family> parse_family(std::string_view name)
{
    for (auto [key, f] : kFamilies)
        if (key == name) return f;
    return std::nullopt;
}

std::string_view to_string(Family f)
{
    for (auto [key, g] : kFamilies)
        if (g == f) return key;
    return "?";
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete(int n)
{
    require(n >= 0, "complete needs n >= 0");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) b.add_edge(u, v);
    return std::move(b).build();
}

Graph matching(int k)
{
    require(k >= 0, "matching needs k >= 0");
    return copies(complete(2), k);
}

Graph copies(const Graph& block, int count)
{
    require(count >= 0, "copies needs count >= 0");
    Graph out;
    for (int i = 0; i < count; ++i) out = disjoint_union(out, block);
    return out;
}

Graph moon_moser(int n, bool two_edges)
{
    require(n >= 3, "moon_moser needs n >= 3, got " + std::to_string(n));
    const Graph k3 = complete(3);
    switch (n % 3) {
    case 0: return copies(k3, n / 3);
    case 1:
        if (two_edges) return disjoint_union(copies(k3, (n - 4) / 3), matching(2));
        return disjoint_union(complete(4), copies(k3, (n - 4) / 3));
    default: return disjoint_union(copies(k3, (n - 2) / 3), complete(2));
    }
}

Graph hujter_tuza(int n)
{
    require(n >= 4, "hujter_tuza needs n >= 4, got " + std::to_string(n));
    if (n % 2 == 0) return matching(n / 2);
    return disjoint_union(cycle(5), matching((n - 5) / 2));
}

Graph g_extremal(int t, int n)
{
    require(t >= 0 && 3 * t <= n,
            "g_extremal needs 0 <= 3t <= n, got t=" + std::to_string(t) + " n=" + std::to_string(n));
    const int m = n - 3 * t;
    const Graph k3 = complete(3);
    if (m % 2 == 0) return disjoint_union(copies(k3, t), matching(m / 2));
    if (t > 0) return disjoint_union(copies(k3, t - 1), matching((m + 3) / 2));
    require(n >= 5, "g_extremal(0, n) needs n >= 5 for odd n, got n=" + std::to_string(n));
    return disjoint_union(cycle(5), matching((n - 5) / 2));
}

Graph construct(Family family, int n, int t)
{
    switch (family) {
    case Family::moon_moser: return moon_moser(n);
    case Family::hujter_tuza: return hujter_tuza(n);
    case Family::g_extremal: return g_extremal(t, n);
    case Family::cycle: return cycle(n);
    case Family::complete: return complete(n);
    case Family::matching: return matching(n);
    }
    throw DomainError("unknown family");
}

} // namespace mis
