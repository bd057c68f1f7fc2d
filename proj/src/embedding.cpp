#include <treefit/embedding.hpp>
#include <treefit/error.hpp>

#include <algorithm>
#include <string>

namespace treefit {

PartialEmbedding::PartialEmbedding(int tree_order, int graph_order) :
    map_(static_cast<std::size_t>(tree_order), -1),
    inverse_(static_cast<std::size_t>(graph_order), -1)
{
}

void PartialEmbedding::assign(int t, int g)
{
    if (t < 0 || t >= tree_order() || g < 0 || g >= graph_order())
        fail(ErrorKind::InvalidArgument, "assignment " + std::to_string(t) + " -> " + std::to_string(g) + " out of range");
    if (map_[t] != -1)
        fail(ErrorKind::InvalidArgument, "tree vertex " + std::to_string(t) + " already mapped");
    if (inverse_[g] != -1)
        fail(ErrorKind::InvalidArgument, "graph vertex " + std::to_string(g) + " already used");
    map_[t] = g;
    inverse_[g] = t;
    ++size_;
}

void PartialEmbedding::unassign(int t)
{
    if (map_[t] == -1)
        return;
    inverse_[map_[t]] = -1;
    map_[t] = -1;
    --size_;
}

auto PartialEmbedding::domain() const -> VertexSet
{
    VertexSet d(tree_order());
    for (int t = 0; t < tree_order(); ++t)
        if (map_[t] != -1)
            d.insert(t);
    return d;
}

auto PartialEmbedding::domain_list() const -> std::vector<int>
{
    std::vector<int> d;
    for (int t = 0; t < tree_order(); ++t)
        if (map_[t] != -1)
            d.push_back(t);
    return d;
}

auto PartialEmbedding::image_set() const -> VertexSet
{
    VertexSet s(graph_order());
    for (int g : map_)
        if (g != -1)
            s.insert(g);
    return s;
}

auto PartialEmbedding::restricted_to(const VertexSet & keep) const -> PartialEmbedding
{
    PartialEmbedding e(tree_order(), graph_order());
    for (int t = 0; t < tree_order(); ++t)
        if (map_[t] != -1 && keep.contains(t))
            e.assign(t, map_[t]);
    return e;
}

auto is_contains(const SolveOutcome & o) -> bool
{
    return std::holds_alternative<Contains>(o);
}

auto is_not_contained(const SolveOutcome & o) -> bool
{
    return std::holds_alternative<NotContained>(o);
}

auto is_not_found(const SolveOutcome & o) -> bool
{
    return std::holds_alternative<NotFound>(o);
}

auto outcome_name(const SolveOutcome & o) -> std::string
{
    if (is_contains(o))
        return "CONTAINS";
    if (is_not_contained(o))
        return "NOT_CONTAINED";
    return "NOT_FOUND";
}

auto verify(const PartialEmbedding & e, const Graph & g, const Tree & t) -> bool
{
    if (e.tree_order() != t.order() || e.graph_order() != g.order())
        return false;
    std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
    for (int x = 0; x < t.order(); ++x) {
        int y = e.image(x);
        if (y == -1)
            continue;
        if (y < 0 || y >= g.order() || seen[y] != -1 || e.preimage(y) != x)
            return false;
        seen[y] = x;
    }
    for (auto [a, b] : t.edges())
        if (e.is_mapped(a) && e.is_mapped(b) && ! g.adjacent(e.image(a), e.image(b)))
            return false;
    return is_connected_within(t, e.domain());
}

auto verify_certificate(const Graph & g, const Tree & t, const PartialEmbedding & e) -> bool
{
    return verify(e, g, t) && e.size() == t.order();
}

auto greedy_extend(const Graph & g, const Tree & t, PartialEmbedding & e, const VertexSet & target, const VertexSet * allowed) -> bool
{
    auto queue = e.domain_list();
    VertexSet seen = e.domain();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : t.neighbors(x)) {
            if (seen.contains(y) || ! target.contains(y))
                continue;
            seen.insert(y);
            int chosen = -1;
            for (int w : g.neighbors(e.image(x)))
                if (! e.is_used(w) && (! allowed || allowed->contains(w))) {
                    chosen = w;
                    break;
                }
            if (chosen == -1)
                return false;
            e.assign(y, chosen);
            queue.push_back(y);
        }
    }
    return target.is_subset_of(e.domain());
}

auto chvatal_extend(const Graph & g, const Tree & t, const PartialEmbedding & partial) -> PartialEmbedding
{
    return chvatal_extend(g, t, partial, all_vertices(t));
}

auto chvatal_extend(const Graph & g, const Tree & t, const PartialEmbedding & partial, const VertexSet & target) -> PartialEmbedding
{
    auto full_target = target | partial.domain();
    if (full_target.count() > g.min_degree() + 1)
        fail(ErrorKind::PreconditionViolated, "tree part has " + std::to_string(full_target.count())
                + " vertices but the minimum degree is " + std::to_string(g.min_degree()));
    if (! verify(partial, g, t))
        fail(ErrorKind::PreconditionViolated, "partial embedding does not verify");
    if (! is_connected_within(t, full_target))
        fail(ErrorKind::PreconditionViolated, "target does not induce a connected subtree");
    auto e = partial;
    if (e.empty())
        e.assign(full_target.first(), 0);
    if (! greedy_extend(g, t, e, full_target))
        panic("greedy extension ran out of free neighbors below the minimum degree bound");
    return e;
}

auto is_star(const Tree & t) -> bool
{
    return t.order() >= 2 && t.max_degree() == t.order() - 1;
}

auto solve_delta_plus_two(const Graph & g, const Tree & t) -> SolveOutcome
{
    int n = g.order();
    if (n == 0)
        fail(ErrorKind::PreconditionViolated, "empty graph");
    int delta = g.min_degree();
    if (t.order() > std::min(n, delta + 2))
        fail(ErrorKind::PreconditionViolated, "tree larger than min{|V(G)|, δ(G)+2}");
    if (! is_connected(g))
        fail(ErrorKind::PreconditionViolated, "graph is disconnected");

    PartialEmbedding e(t.order(), n);
    if (t.order() <= delta + 1)
        return Contains{chvatal_extend(g, t, e), "delta_plus_two"};

    int leaf = t.leaves().front();
    int anchor = t.neighbors(leaf)[0];
    auto rest = all_vertices(t);
    rest.erase(leaf);

    int high = -1;
    for (int v = 0; v < n && high == -1; ++v)
        if (g.degree(v) >= delta + 1)
            high = v;

    int u = high;
    if (high != -1)
        e.assign(anchor, high);
    else {
        if (is_star(t))
            return NotContained{"regular graph and star tree"};
        int x = -1, y = -1;
        for (int c : t.neighbors(anchor))
            if (! t.is_leaf(c)) {
                x = c;
                break;
            }
        for (int c : t.neighbors(x))
            if (c != anchor) {
                y = c;
                break;
            }
        u = 0;
        auto closed = g.closed_neighborhood(u);
        int gv = -1, gw = -1;
        for (int v : g.neighbors(u)) {
            for (int w : g.neighbors(v))
                if (! closed.contains(w)) {
                    gv = v;
                    gw = w;
                    break;
                }
            if (gv != -1)
                break;
        }
        if (gv == -1)
            panic("connected regular graph with n ≥ δ+2 has no vertex at distance two");
        e.assign(anchor, u);
        e.assign(x, gv);
        e.assign(y, gw);
    }

    e = chvatal_extend(g, t, e, rest);
    for (int w : g.neighbors(u))
        if (! e.is_used(w)) {
            e.assign(leaf, w);
            return Contains{e, "delta_plus_two"};
        }
    panic("reserved leaf found no free neighbor");
}

auto saved_non_neighbors(const Graph & g, const PartialEmbedding & e, int v) -> int
{
    int used_neighbors = 0;
    for (int w : g.neighbors(v))
        used_neighbors += e.is_used(w);
    return e.size() - used_neighbors - (e.is_used(v) ? 1 : 0);
}

auto complete_leaves(const Graph & g, const Tree & t, const std::vector<int> & leaves, const PartialEmbedding & partial) -> PartialEmbedding
{
    int delta = g.min_degree();
    int k = t.order() - delta;
    if (static_cast<int>(leaves.size()) != k - 1)
        fail(ErrorKind::PreconditionViolated, "expected " + std::to_string(k - 1) + " leaves, got " + std::to_string(leaves.size()));
    if (! verify(partial, g, t))
        fail(ErrorKind::PreconditionViolated, "partial embedding does not verify");

    VertexSet leaf_set(t.order());
    for (int l : leaves) {
        if (! t.is_leaf(l) || leaf_set.contains(l))
            fail(ErrorKind::PreconditionViolated, "vertex " + std::to_string(l) + " is not a distinct leaf");
        leaf_set.insert(l);
    }
    if (partial.domain().intersects(leaf_set))
        fail(ErrorKind::PreconditionViolated, "partial embedding already maps a reserved leaf");

    std::vector<int> anchors;
    for (int l : leaves)
        anchors.push_back(t.neighbors(l)[0]);
    for (int w : anchors) {
        if (! partial.is_mapped(w))
            fail(ErrorKind::PreconditionViolated, "leaf anchor " + std::to_string(w) + " is not mapped");
        int gw = partial.image(w);
        if (saved_non_neighbors(g, partial, gw) < neighbor_deficiency(g, gw, k))
            fail(ErrorKind::HypothesisNotMet, "anchor " + std::to_string(w) + " mapped to " + std::to_string(gw)
                    + " has too few saved non-neighbors");
    }

    auto e = chvatal_extend(g, t, partial, all_vertices(t) - leaf_set);

    std::vector<std::size_t> order(leaves.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return neighbor_deficiency(g, e.image(anchors[a]), k) < neighbor_deficiency(g, e.image(anchors[b]), k);
    });
    for (auto i : order) {
        int gw = e.image(anchors[i]);
        int chosen = -1;
        for (int x : g.neighbors(gw))
            if (! e.is_used(x)) {
                chosen = x;
                break;
            }
        if (chosen == -1)
            panic("leaf anchor ran out of free neighbors after the deficiency check passed");
        e.assign(leaves[i], chosen);
    }
    return e;
}

}
