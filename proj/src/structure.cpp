#include "mis/structure.hpp"

#include <algorithm>
#include <vector>

namespace mis {

namespace {

/// Maximum number of vertex-disjoint blocks of `Arity` vertices (triangles or
/// edges) inducing exactly disjoint cliques. Choosing a block removes the
/// closed neighbourhoods of its vertices from the candidates, which keeps
/// every later block free of edges to earlier ones.
template <class Set, int Arity>
class InducedPacking {
public:
    explicit InducedPacking(const Graph& g)
    {
        adj_.reserve(static_cast<std::size_t>(g.order()));
        closed_.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            adj_.push_back(convert_set<Set>(g.neighbors(v)));
            closed_.push_back(convert_set<Set>(g.closed_neighborhood(v)));
        }
    }

    int solve(const Set& candidates)
    {
        best_ = 0;
        search(candidates, 0);
        return best_;
    }

private:
    void search(Set s, int chosen)
    {
        best_ = std::max(best_, chosen);
        // the lowest candidate either starts a block here or is dropped
        while (!s.empty()) {
            if (chosen + s.size() / Arity <= best_) return;
            const int v = s.first();
            const Set nv = adj(v) & s;
            if constexpr (Arity == 2) {
                for (int a : nv) search(s - closed(v) - closed(a), chosen + 1);
            } else {
                for (int a : nv)
                    for (int b : adj(a) & nv) {
                        if (b <= a) continue;
                        search(s - closed(v) - closed(a) - closed(b), chosen + 1);
                    }
            }
            s.erase(v);
        }
    }

    const Set& adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const Set& closed(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    std::vector<Set> adj_;
    std::vector<Set> closed_;
    int best_ = 0;
};

template <class Set, int Arity>
int packing_number(const Graph& g)
{
    InducedPacking<Set, Arity> packing(g);
    int total = 0;
    for (const VertexSet& component : connected_components(g)) {
        if (component.size() < Arity) continue;
        total += packing.solve(convert_set<Set>(component));
    }
    return total;
}

template <int Arity>
int packing_number(const Graph& g)
{
    if (g.order() <= SmallVertexSet::capacity) return packing_number<SmallVertexSet, Arity>(g);
    return packing_number<VertexSet, Arity>(g);
}

} // namespace

bool is_triangle_free(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) {
            if (u >= v) break;
            if (g.neighbors(u).intersects(g.neighbors(v))) return false;
        }
    return true;
}

int triangle_matching_number(const Graph& g)
{
    return packing_number<3>(g);
}

int induced_matching_number(const Graph& g)
{
    return packing_number<2>(g);
}

StructureProfile structure_profile(const Graph& g)
{
    StructureProfile p;
    p.triangle_free = is_triangle_free(g);
    p.triangle_matching_number = p.triangle_free ? 0 : triangle_matching_number(g);
    p.induced_matching_number = induced_matching_number(g);
    return p;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s)
{
    require_vertices(g, s);
    for (int v = 0; v < g.order(); ++v) {
        const bool touches = g.neighbors(v).intersects(s);
        if (s.contains(v) ? touches : !touches) return false;
    }
    return true;
}

} // namespace mis
