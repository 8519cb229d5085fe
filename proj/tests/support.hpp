#pragma once

// Test-only generators and oracles. Nothing here calls the search code it is
// used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mis/graph.hpp"
#include "mis/graph6.hpp"

namespace mis::testing {

inline Graph path(int n)
{
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution edge(density);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

/// Labelled graph number `index` on n vertices, pairs in graph6 bit order.
inline Graph labeled(int n, std::uint64_t index)
{
    GraphBuilder b(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((index >> k) & 1) b.add_edge(u, v);
    return std::move(b).build();
}

inline std::uint64_t labeled_count(int n)
{
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return std::move(b).build();
}

/// Lexicographically smallest graph6 string over all relabellings.
inline std::string canonical_graph6(const Graph& g)
{
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = encode_graph6(relabel(g, perm));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// One representative per isomorphism class on n <= 6 vertices.
inline std::vector<std::string> nonisomorphic_graphs(int n)
{
    std::set<std::string> classes;
    for (std::uint64_t i = 0; i < labeled_count(n); ++i) classes.insert(canonical_graph6(labeled(n, i)));
    return {classes.begin(), classes.end()};
}

inline bool triangle_free_by_triples(const Graph& g)
{
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
    return true;
}

/// Tries every family of pairwise vertex-disjoint triples and keeps those
/// whose union induces exactly the triangles.
inline int naive_triangle_matching_number(const Graph& g)
{
    std::vector<std::vector<int>> triples;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c) triples.push_back({a, b, c});

    int best = 0;
    std::vector<int> chosen;
    auto induced_ok = [&] {
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const auto& t = triples[static_cast<std::size_t>(chosen[i])];
            if (!(g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[0], t[2]))) return false;
            for (std::size_t j = 0; j < i; ++j)
                for (int x : t)
                    for (int y : triples[static_cast<std::size_t>(chosen[j])])
                        if (g.adjacent(x, y)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (induced_ok()) best = std::max(best, static_cast<int>(chosen.size()));
        else return;
        for (std::size_t i = from; i < triples.size(); ++i) {
            const auto& t = triples[i];
            const std::uint64_t mask = (1ULL << t[0]) | (1ULL << t[1]) | (1ULL << t[2]);
            if (used & mask) continue;
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1, used | mask);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// Largest vertex subset in which every vertex has exactly one neighbour,
/// halved. Exponential in n.
inline int naive_induced_matching_number(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!((mask >> v) & 1)) continue;
            int d = 0;
            for (int u = 0; u < n; ++u)
                if (((mask >> u) & 1) && g.adjacent(u, v)) ++d;
            ok = d == 1;
        }
        if (ok) best = std::max(best, std::popcount(mask) / 2);
    }
    return best;
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end());
    return sets;
}

} // namespace mis::testing
