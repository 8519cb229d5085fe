#include "mis/engine.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

#include "mis/errors.hpp"

namespace mis {

namespace {

template <class Set>
class PivotSearch {
public:
    explicit PivotSearch(const Graph& g)
    {
        closed_.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) closed_.push_back(convert_set<Set>(g.closed_neighborhood(v)));
    }

    /// Calls leaf(R) for every maximal independent set R ⊇ r whose remaining
    /// members come from `p`, excluding those that could take a vertex of `x`.
    template <class Leaf>
    void run(Set r, Set p, Set x, Leaf& leaf) const
    {
        if (p.empty()) {
            if (x.empty()) leaf(r);
            return;
        }

        int pivot = -1;
        int fewest = INT_MAX;
        for (int u : p | x) {
            const int k = (p & closed(u)).size();
            if (k < fewest) {
                fewest = k;
                pivot = u;
                if (k == 0) return; // u ∈ X can never be dominated
            }
        }

        for (int v : p & closed(pivot)) {
            Set rv = r;
            rv.insert(v);
            run(rv, p - closed(v), x - closed(v), leaf);
            p.erase(v);
            x.insert(v);
        }
    }

private:
    const Set& closed(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    std::vector<Set> closed_;
};

template <class Set>
std::vector<VertexSet> enumerate_with(const Graph& g, std::optional<std::size_t> max_sets)
{
    std::vector<VertexSet> out;
    auto leaf = [&](const Set& r) {
        if (max_sets && out.size() >= *max_sets)
            throw ResourceError("more than " + std::to_string(*max_sets) + " maximal independent sets");
        out.push_back(convert_set<VertexSet>(r));
    };
    PivotSearch<Set>(g).run(Set{}, convert_set<Set>(g.vertices()), Set{}, leaf);
    return out;
}

template <class Set>
BigCount count_with(const Graph& g)
{
    const PivotSearch<Set> search(g);
    BigCount total = 1;
    for (const VertexSet& component : connected_components(g)) {
        // One leaf per set; 2^64 leaves are out of reach of any run.
        std::uint64_t leaves = 0;
        auto leaf = [&](const Set&) { ++leaves; };
        search.run(Set{}, convert_set<Set>(component), Set{}, leaf);
        total *= leaves;
    }
    return total;
}

struct SetHash {
    std::size_t operator()(const VertexSet& s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.word(0) * 0x9e3779b97f4a7c15ULL ^ s.word(1));
    }
};

class WoodRecursion {
public:
    explicit WoodRecursion(const Graph& g) : g_(g) {}

    BigCount bound(const VertexSet& remaining)
    {
        if (remaining.empty()) return 1;
        if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;

        int branch = -1;
        int min_degree = INT_MAX;
        for (int v : remaining) {
            const int d = (g_.neighbors(v) & remaining).size();
            if (d < min_degree) {
                min_degree = d;
                branch = v;
            }
        }

        BigCount sum = 0;
        for (int w : g_.closed_neighborhood(branch) & remaining) sum += bound(remaining - g_.closed_neighborhood(w));
        memo_.emplace(remaining, sum);
        return sum;
    }

private:
    const Graph& g_;
    std::unordered_map<VertexSet, BigCount, SetHash> memo_;
};

} // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g, std::optional<std::size_t> max_sets)
{
    if (g.order() <= SmallVertexSet::capacity) return enumerate_with<SmallVertexSet>(g, max_sets);
    return enumerate_with<VertexSet>(g, max_sets);
}

BigCount count_mis(const Graph& g)
{
    if (g.order() <= SmallVertexSet::capacity) return count_with<SmallVertexSet>(g);
    return count_with<VertexSet>(g);
}

std::vector<VertexSet> brute_force_mis(const Graph& g)
{
    const int n = g.order();
    if (n > kBruteForceCap)
        throw CapacityError("brute force oracle refuses n = " + std::to_string(n) + " > " +
                            std::to_string(kBruteForceCap));

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).word(0));

    std::vector<VertexSet> out;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const bool inside = (mask >> v) & 1;
            const bool touches = (adj[static_cast<std::size_t>(v)] & mask) != 0;
            // members must see no member; non-members must see one
            ok = inside ? !touches : touches;
        }
        if (!ok) continue;
        VertexSet s;
        s.set_word(0, mask);
        out.push_back(s);
    }
    return out;
}

BigCount wood_bound(const Graph& g)
{
    return WoodRecursion(g).bound(g.vertices());
}

BigCount mis_cycle(int n)
{
    if (n < 3) throw DomainError("mis_cycle needs n >= 3, got " + std::to_string(n));
    // window holds mis(C_{k-2}), mis(C_{k-1}), mis(C_k)
    BigCount a = 3, b = 2, c = 5;
    if (n == 3) return a;
    if (n == 4) return b;
    for (int k = 6; k <= n; ++k) {
        BigCount next = b + a;
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    return c;
}

} // namespace mis
