#include "mis/graph.hpp"

#include <string>

#include "mis/errors.hpp"

namespace mis {

namespace {

void check_order(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
}

void check_vertex(int n, int v)
{
    if (v < 0 || v >= n)
        throw CapacityError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
}

} // namespace

Graph::Graph(int n)
{
    check_order(n);
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += static_cast<std::size_t>(a.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v)) {
            if (u >= v) break;
            out.emplace_back(u, v);
        }
    return out;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    check_vertex(g_.n_, u);
    check_vertex(g_.n_, v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    g_.adj_[static_cast<std::size_t>(u)].insert(v);
    g_.adj_[static_cast<std::size_t>(v)].insert(u);
    return *this;
}

VertexSet Subgraph::lift(const VertexSet& s) const
{
    VertexSet out;
    for (int v : s) out.insert(original.at(static_cast<std::size_t>(v)));
    return out;
}

void require_vertices(const Graph& g, const VertexSet& s)
{
    const int top = s.last();
    if (top >= g.order()) check_vertex(g.order(), top);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    require_vertices(g, s);
    Subgraph out;
    out.original = s.to_vector();

    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        relabel[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);

    GraphBuilder b(static_cast<int>(out.original.size()));
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        const int v = out.original[i];
        for (int u : g.neighbors(v) & s) {
            if (u >= v) break;
            b.add_edge(relabel[static_cast<std::size_t>(u)], static_cast<int>(i));
        }
    }
    out.graph = std::move(b).build();
    return out;
}

Subgraph delete_closed_neighborhood(const Graph& g, int v)
{
    check_vertex(g.order(), v);
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int n = g.order() + h.order();
    if (n > kMaxVertices)
        throw CapacityError("disjoint union has " + std::to_string(n) + " vertices, cap is " +
                            std::to_string(kMaxVertices));
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
    return std::move(b).build();
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    const VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        for (int u : all - g.closed_neighborhood(v)) {
            if (u >= v) break;
            b.add_edge(u, v);
        }
    return std::move(b).build();
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp, frontier;
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
        }
        unseen -= comp;
        out.push_back(comp);
    }
    return out;
}

} // namespace mis
