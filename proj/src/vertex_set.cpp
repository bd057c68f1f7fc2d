#include <treefit/vertex_set.hpp>

namespace treefit {

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
{
    for (int v : members)
        insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int> & members) : VertexSet(universe)
{
    for (int v : members)
        insert(v);
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet s(universe);
    s.bits_.set();
    return s;
}

auto VertexSet::first() const -> int
{
    auto i = bits_.find_first();
    return i == boost::dynamic_bitset<std::uint64_t>::npos ? npos : static_cast<int>(i);
}

auto VertexSet::next(int v) const -> int
{
    auto i = bits_.find_next(static_cast<std::size_t>(v));
    return i == boost::dynamic_bitset<std::uint64_t>::npos ? npos : static_cast<int>(i);
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(bits_.count());
    for_each([&](int v) { result.push_back(v); });
    return result;
}

auto VertexSet::intersection_count(const VertexSet & other) const -> int
{
    return static_cast<int>((bits_ & other.bits_).count());
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet s;
    s.bits_ = ~bits_;
    return s;
}

}
