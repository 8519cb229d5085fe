#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace mis {

/// Fixed-capacity bit-indexed vertex subset. `Words` 64-bit words give a
/// capacity of 64 * Words vertices; all operations are branch-light word loops.
template <std::size_t Words>
class BasicVertexSet {
public:
    static constexpr int capacity = static_cast<int>(64 * Words);

    constexpr BasicVertexSet() = default;

    constexpr BasicVertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices) insert(v);
    }

    /// The set {0, ..., n-1}.
    static constexpr BasicVertexSet prefix(int n)
    {
        BasicVertexSet s;
        for (std::size_t w = 0; w < Words; ++w) {
            const int lo = static_cast<int>(64 * w);
            if (n >= lo + 64)
                s.words_[w] = ~std::uint64_t{0};
            else if (n > lo)
                s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    constexpr void insert(int v) { words_[v >> 6] |= bit(v); }
    constexpr void erase(int v) { words_[v >> 6] &= ~bit(v); }
    constexpr bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

    constexpr int size() const
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    constexpr bool empty() const
    {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Lowest member, or -1 when empty.
    constexpr int first() const
    {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w]) return static_cast<int>(64 * w) + std::countr_zero(words_[w]);
        return -1;
    }

    /// Highest member, or -1 when empty.
    constexpr int last() const
    {
        for (std::size_t w = Words; w-- > 0;)
            if (words_[w]) return static_cast<int>(64 * w) + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    constexpr bool intersects(const BasicVertexSet& o) const
    {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    constexpr bool is_subset_of(const BasicVertexSet& o) const
    {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    constexpr BasicVertexSet& operator&=(const BasicVertexSet& o)
    {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    constexpr BasicVertexSet& operator|=(const BasicVertexSet& o)
    {
        for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    constexpr BasicVertexSet& operator-=(const BasicVertexSet& o)
    {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
    friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
    friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

    friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

    /// Orders sets by their member lists compared lexicographically, so that
    /// sorted families print in a natural order.
    friend constexpr bool operator<(const BasicVertexSet& a, const BasicVertexSet& b)
    {
        BasicVertexSet x = a, y = b;
        while (true) {
            const int u = x.first(), v = y.first();
            if (u != v) {
                if (u < 0) return true;
                if (v < 0) return false;
                return u < v;
            }
            if (u < 0) return false;
            x.erase(u);
            y.erase(v);
        }
    }

    constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }
    constexpr void set_word(std::size_t i, std::uint64_t value) { words_[i] = value; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(BasicVertexSet rest) : rest_(rest), cur_(rest.first()) {}

        constexpr int operator*() const { return cur_; }
        constexpr iterator& operator++()
        {
            rest_.erase(cur_);
            cur_ = rest_.first();
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.cur_ == b.cur_; }

    private:
        BasicVertexSet rest_{};
        int cur_ = -1;
    };

    constexpr iterator begin() const { return iterator(*this); }
    constexpr iterator end() const { return iterator(); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    /// Space separated member list, e.g. "0 2 4".
    std::string to_string() const
    {
        std::string out;
        for (int v : *this) {
            if (!out.empty()) out += ' ';
            out += std::to_string(v);
        }
        return out;
    }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, Words> words_{};
};

/// Largest vertex count any Graph may have.
inline constexpr int kMaxVertices = 128;

using VertexSet = BasicVertexSet<2>;
/// Single-word set used by the fast paths when n <= 64.
using SmallVertexSet = BasicVertexSet<1>;

static_assert(VertexSet::capacity == kMaxVertices);

/// Copies the low words of `s` into a narrower (or wider) set type; members
/// beyond the target capacity are dropped.
template <class To, std::size_t Words>
constexpr To convert_set(const BasicVertexSet<Words>& s)
{
    To out;
    constexpr std::size_t to_words = static_cast<std::size_t>(To::capacity / 64);
    for (std::size_t i = 0; i < to_words && i < Words; ++i) out.set_word(i, s.word(i));
    return out;
}

} // namespace mis
