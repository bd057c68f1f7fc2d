#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace treefit {

// Subset of 0..universe-1 stored as a bitset.
class VertexSet {
public:
    static constexpr int npos = -1;

    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int> & members);

    static auto full(int universe) -> VertexSet;

    auto universe() const -> int { return static_cast<int>(bits_.size()); }
    auto count() const -> int { return static_cast<int>(bits_.count()); }
    auto empty() const -> bool { return bits_.none(); }

    auto contains(int v) const -> bool { return v >= 0 && v < universe() && bits_.test(static_cast<std::size_t>(v)); }
    void insert(int v) { bits_.set(static_cast<std::size_t>(v)); }
    void erase(int v) { bits_.reset(static_cast<std::size_t>(v)); }
    void clear() { bits_.reset(); }

    auto first() const -> int;
    auto next(int v) const -> int;
    auto members() const -> std::vector<int>;

    auto is_subset_of(const VertexSet & other) const -> bool { return bits_.is_subset_of(other.bits_); }
    auto intersects(const VertexSet & other) const -> bool { return bits_.intersects(other.bits_); }
    auto intersection_count(const VertexSet & other) const -> int;

    auto operator|=(const VertexSet & o) -> VertexSet & { bits_ |= o.bits_; return *this; }
    auto operator&=(const VertexSet & o) -> VertexSet & { bits_ &= o.bits_; return *this; }
    auto operator-=(const VertexSet & o) -> VertexSet & { bits_ -= o.bits_; return *this; }
    auto complement() const -> VertexSet;

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool { return a.bits_ == b.bits_; }

    template <typename F>
    void for_each(F && f) const
    {
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits_.find_next(i))
            f(static_cast<int>(i));
    }

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

}
