#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mis/vertex_set.hpp"

namespace mis {

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Instances are built through GraphBuilder or one of the surgeries below and
/// never change afterwards, so they can be shared freely between threads.
class Graph {
public:
    /// The graph on zero vertices.
    Graph() = default;

    /// Edgeless graph on `n` vertices. Throws CapacityError if n > kMaxVertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const
    {
        VertexSet s = neighbors(v);
        s.insert(v);
        return s;
    }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    /// Edges (u, v) with u < v, ordered by v then u.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    /// Adds the undirected edge uv. Throws CapacityError on an out-of-range
    /// endpoint and DomainError on a loop.
    GraphBuilder& add_edge(int u, int v);

    int order() const noexcept { return g_.order(); }
    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    Graph g_;
};

/// An induced subgraph together with the map from its labels back to the
/// parent graph's labels: `original[i]` is the parent vertex relabelled i.
struct Subgraph {
    Graph graph;
    std::vector<int> original;

    /// Maps a vertex set in subgraph labels to parent labels.
    VertexSet lift(const VertexSet& s) const;
};

/// Throws CapacityError if any member of `s` lies outside [0, g.order()).
void require_vertices(const Graph& g, const VertexSet& s);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Induced subgraph on V(g) \ N[v].
Subgraph delete_closed_neighborhood(const Graph& g, int v);

/// g on vertices 0..g.n-1 followed by h shifted by g.n, with no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

} // namespace mis
