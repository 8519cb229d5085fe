#pragma once

#include "mis/graph.hpp"

namespace mis {

struct StructureProfile {
    bool triangle_free = true;
    /// Largest k such that some 3k vertices induce exactly kK3.
    int triangle_matching_number = 0;
    /// Largest k such that some 2k vertices induce exactly kK2.
    int induced_matching_number = 0;

    friend bool operator==(const StructureProfile&, const StructureProfile&) = default;
};

bool is_triangle_free(const Graph& g);

/// Exact branch and bound, run per connected component and summed.
int triangle_matching_number(const Graph& g);
int induced_matching_number(const Graph& g);

StructureProfile structure_profile(const Graph& g);

/// True iff `s` is independent and dominates every vertex outside it.
/// Throws CapacityError if `s` holds a vertex outside the graph.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

} // namespace mis
