#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// Subset of the vertex universe {0, ..., 63}, packed into a single word.
/// Vertices are dense integers; set algebra, cardinality and subset tests
/// are exact word operations.
class VertexSet {
public:
    static constexpr int max_universe = 64;

    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.add(v);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    /// Half-open range [lo, hi).
    static VertexSet range(int lo, int hi) {
        if (lo < 0 || hi < lo || hi > max_universe)
            throw std::out_of_range("VertexSet::range");
        const std::uint64_t upper = (hi == max_universe) ? ~std::uint64_t{0} : ((std::uint64_t{1} << hi) - 1);
        const std::uint64_t lower = (std::uint64_t{1} << lo) - 1;
        return from_bits(upper & ~lower);
    }

    bool contains(int v) const {
        return v >= 0 && v < max_universe && ((bits_ >> v) & 1u) != 0;
    }

    VertexSet& add(int v) {
        if (v < 0 || v >= max_universe)
            throw std::out_of_range("vertex out of range: " + std::to_string(v));
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }

    VertexSet& remove(int v) {
        if (v >= 0 && v < max_universe) bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    /// Smallest member, -1 when empty.
    int min() const { return bits_ ? std::countr_zero(bits_) : -1; }
    /// Largest member, -1 when empty.
    int max() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    std::uint64_t bits() const { return bits_; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend bool operator==(VertexSet, VertexSet) = default;

    /// Order as sorted vertex tuples: {0,3} precedes {1,2}, a proper prefix
    /// precedes its extensions. This is the canonical order used everywhere
    /// edges or witnesses need a deterministic ranking.
    static bool lex_less(VertexSet a, VertexSet b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            const int va = std::countr_zero(x);
            const int vb = std::countr_zero(y);
            if (va != vb) return va < vb;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        out += "}";
        return out;
    }

    class const_iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        int operator*() const { return std::countr_zero(rest_); }
        const_iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        const_iterator operator++(int) {
            const_iterator old = *this;
            ++(*this);
            return old;
        }
        friend bool operator==(const_iterator, const_iterator) = default;

    private:
        friend class VertexSet;
        explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
        std::uint64_t rest_ = 0;
    };

    const_iterator begin() const { return const_iterator(bits_); }
    const_iterator end() const { return const_iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

struct VertexSetLexLess {
    bool operator()(VertexSet a, VertexSet b) const { return VertexSet::lex_less(a, b); }
};

}  // namespace turan
