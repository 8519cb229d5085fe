#pragma once

#include <optional>
#include <string_view>

#include "mis/graph.hpp"

namespace mis {

enum class Family { moon_moser, hujter_tuza, g_extremal, cycle, complete, matching };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

/// C_n with edges i ~ i+1 mod n. Throws DomainError for n < 3.
Graph cycle(int n);
Graph complete(int n);
/// k disjoint edges {2i, 2i+1}.
Graph matching(int k);

/// Disjoint union of `count` copies of `block`.
Graph copies(const Graph& block, int count);

/// Extremal graphs for mis_max(n): (n/3)K3, K4 + ((n-4)/3)K3, or
/// ((n-2)/3)K3 + K2 by n mod 3. With `two_edges` set, the n = 1 (mod 3) case
/// uses ((n-4)/3)K3 + 2K2 instead. Throws DomainError for n < 3.
Graph moon_moser(int n, bool two_edges = false);

/// (n/2)K2 for even n, C5 + ((n-5)/2)K2 for odd n. Throws DomainError for n < 4.
Graph hujter_tuza(int n);

/// Witness for g_bound(t, n) with m = n - 3t: tK3 + (m/2)K2 for even m,
/// (t-1)K3 + ((m+3)/2)K2 for odd m and t > 0, C5 + ((n-5)/2)K2 for odd m and
/// t = 0. Throws DomainError unless 0 <= 3t <= n (and n >= 5 in the last case).
Graph g_extremal(int t, int n);

/// Builds a family member by name; `t` is used only by g_extremal.
Graph construct(Family family, int n, int t = 0);

} // namespace mis
