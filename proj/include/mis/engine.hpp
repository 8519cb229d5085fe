#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mis/graph.hpp"
#include "mis/numeric.hpp"

namespace mis {

/// Largest order accepted by brute_force_mis.
inline constexpr int kBruteForceCap = 25;

/// All maximal independent sets of `g`, each exactly once, in the order the
/// pivoting search finds them. The graph on zero vertices has one maximal
/// independent set, the empty set.
///
/// The search is the independent-set form of pivoted Bron-Kerbosch: the
/// candidate set holds vertices non-adjacent to the partial solution, and the
/// pivot u (over candidates and excluded vertices) minimises |P ∩ N[u]|, ties
/// to the lowest index; only P ∩ N[u] is branched on.
///
/// If `max_sets` is given and more sets exist, throws ResourceError.
std::vector<VertexSet> enumerate_mis(const Graph& g, std::optional<std::size_t> max_sets = std::nullopt);

/// Number of maximal independent sets. Runs the same search per connected
/// component without materialising sets and multiplies the component counts.
BigCount count_mis(const Graph& g);

/// Scans all 2^n subsets. Independent oracle for enumerate_mis.
/// Throws CapacityError when g.order() > kBruteForceCap.
std::vector<VertexSet> brute_force_mis(const Graph& g);

/// Recursive upper bound mis(G) <= sum over w in N[v] of bound(G - N[w]),
/// branching on a minimum-degree vertex v (lowest index on ties). The empty
/// graph gives 1.
BigCount wood_bound(const Graph& g);

/// mis(C_n) from mis(C_3)=3, mis(C_4)=2, mis(C_5)=5 and
/// mis(C_n) = mis(C_{n-2}) + mis(C_{n-3}). Throws DomainError for n < 3.
BigCount mis_cycle(int n);

} // namespace mis
