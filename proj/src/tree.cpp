#include <treefit/error.hpp>
#include <treefit/tree.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace treefit {

Tree::Tree(int n, const std::vector<Edge> & edges)
{
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "a tree needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::InvalidArgument, "tree edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v)
            fail(ErrorKind::InvalidArgument, "loop at tree vertex " + std::to_string(u));
        int a = find(u), b = find(v);
        if (a == b)
            fail(ErrorKind::InvalidArgument, "tree edges contain a cycle through " + std::to_string(u) + " " + std::to_string(v));
        root[a] = b;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    if (static_cast<int>(edges.size()) != n - 1)
        fail(ErrorKind::InvalidArgument, "tree edges do not connect all vertices");
    for (auto & a : adj_)
        std::sort(a.begin(), a.end());
}

auto Tree::adjacent(int u, int v) const -> bool
{
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto Tree::leaves() const -> std::vector<int>
{
    std::vector<int> result;
    for (int v = 0; v < order(); ++v)
        if (is_leaf(v))
            result.push_back(v);
    return result;
}

auto Tree::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Tree::max_degree() const -> int
{
    int best = 0;
    for (int v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

auto all_vertices(const Tree & t) -> VertexSet
{
    return VertexSet::full(t.order());
}

auto degree_within(const Tree & t, const VertexSet & within, int v) -> int
{
    int d = 0;
    for (int w : t.neighbors(v))
        d += within.contains(w);
    return d;
}

auto is_connected_within(const Tree & t, const VertexSet & within) -> bool
{
    int start = within.first();
    if (start == VertexSet::npos)
        return true;
    RootedView view(t, start, &within);
    return static_cast<int>(view.order.size()) == within.count();
}

auto leaf_degree(const Tree & t) -> LeafDegree
{
    if (t.order() < 2)
        fail(ErrorKind::PreconditionViolated, "leaf degree needs at least two vertices");
    LeafDegree best{-1, -1};
    for (int v = 0; v < t.order(); ++v) {
        int c = 0;
        for (int w : t.neighbors(v))
            c += t.is_leaf(w);
        if (c > best.value)
            best = {c, v};
    }
    return best;
}

auto leaf_neighbors(const Tree & t, int v) -> std::vector<int>
{
    std::vector<int> result;
    for (int w : t.neighbors(v))
        if (t.is_leaf(w))
            result.push_back(w);
    return result;
}

auto leaf_adjacent_vertices(const Tree & t) -> std::vector<int>
{
    std::vector<int> result;
    for (int v = 0; v < t.order(); ++v)
        if (! leaf_neighbors(t, v).empty())
            result.push_back(v);
    return result;
}

auto tree_distances(const Tree & t, int source, const VertexSet * within) -> std::vector<int>
{
    int n = t.order();
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : t.neighbors(u))
            if (dist[w] == n && (! within || within->contains(w))) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

auto tree_path(const Tree & t, int u, int v) -> std::vector<int>
{
    RootedView view(t, v);
    std::vector<int> path;
    for (int x = u; x != -1; x = view.parent[x])
        path.push_back(x);
    return path;
}

auto tree_diameter(const Tree & t) -> TreeDiameter
{
    auto farthest = [&](int s) {
        auto d = tree_distances(t, s);
        return static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
    };
    int a = farthest(0);
    int b = farthest(a);
    int len = tree_distances(t, a)[b];
    return {len, std::min(a, b), std::max(a, b)};
}

auto leaf_count_lower_bound_holds(const Tree & t, int q) -> bool
{
    int diam = tree_diameter(t).length;
    if (diam < 1 || static_cast<long long>(t.order()) < static_cast<long long>(q) * diam)
        fail(ErrorKind::HypothesisNotMet, "need n >= q * diam(T) and diam(T) >= 1");
    return static_cast<int>(t.leaves().size()) >= q;
}

auto find_separable_edge(const Tree & t, int q) -> std::optional<Edge>
{
    int n = t.order();
    if (n < 2)
        return std::nullopt;
    RootedView view(t, 0);
    std::optional<Edge> best;
    int best_side = -1;
    for (int v = 1; v < n; ++v) {
        int side = std::min(view.size[v], n - view.size[v]);
        if (side < q)
            continue;
        Edge e{std::min(v, view.parent[v]), std::max(v, view.parent[v])};
        if (side > best_side || (side == best_side && e < *best)) {
            best = e;
            best_side = side;
        }
    }
    return best;
}

auto is_separable(const Tree & t, int q) -> bool
{
    return find_separable_edge(t, q).has_value();
}

namespace {
    auto largest_component(const Tree & t, const RootedView & view, int v) -> std::pair<int, int>
    {
        int n = t.order();
        std::pair<int, int> best{-1, -1};    // (size, neighbor)
        for (int w : t.neighbors(v)) {
            int s = (w == view.parent[v]) ? n - view.size[v] : view.size[w];
            if (s > best.first)
                best = {s, w};
        }
        return best;
    }
}

auto centroid(const Tree & t) -> int
{
    RootedView view(t, 0);
    for (int v = 0; v < t.order(); ++v)
        if (2 * std::max(largest_component(t, view, v).first, 0) <= t.order())
            return v;
    panic("tree without centroid");
}

auto find_balanced_edge(const Tree & t) -> Edge
{
    if (t.order() < 2)
        fail(ErrorKind::PreconditionViolated, "balanced edge needs at least two vertices");
    int c = centroid(t);
    RootedView view(t, 0);
    return {c, largest_component(t, view, c).second};
}

auto induced_subtree(const Tree & t, const VertexSet & within) -> InducedTree
{
    InducedTree out;
    out.local.assign(static_cast<std::size_t>(t.order()), -1);
    within.for_each([&](int v) {
        out.local[v] = static_cast<int>(out.original.size());
        out.original.push_back(v);
    });
    std::vector<Edge> edges;
    for (int v : out.original)
        for (int w : t.neighbors(v))
            if (v < w && within.contains(w))
                edges.emplace_back(out.local[v], out.local[w]);
    out.tree = Tree(static_cast<int>(out.original.size()), edges);
    return out;
}

auto side_of_edge(const Tree & t, int u, int v) -> VertexSet
{
    VertexSet side(t.order());
    std::vector<int> stack{u};
    side.insert(u);
    while (! stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(x))
            if (! side.contains(w) && ! (x == u && w == v)) {
                side.insert(w);
                stack.push_back(w);
            }
    }
    return side;
}

RootedView::RootedView(const Tree & t, int root_, const VertexSet * within) :
    root(root_)
{
    auto n = static_cast<std::size_t>(t.order());
    parent.assign(n, -1);
    children.assign(n, {});
    size.assign(n, 0);
    depth.assign(n, -1);
    height.assign(n, 0);
    depth[root] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int w : t.neighbors(u))
            if (depth[w] == -1 && (! within || within->contains(w))) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                children[u].push_back(w);
                order.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        size[u] = 1;
        for (int c : children[u]) {
            size[u] += size[c];
            height[u] = std::max(height[u], height[c] + 1);
        }
    }
}

auto maximal_trivial_paths(const Tree & t) -> std::vector<TrivialPath>
{
    return maximal_trivial_paths(t, all_vertices(t), VertexSet(t.order()));
}

auto maximal_trivial_paths(const Tree & t, const VertexSet & within, const VertexSet & terminals) -> std::vector<TrivialPath>
{
    auto is_break = [&](int v) { return terminals.contains(v) || degree_within(t, within, v) != 2; };
    std::vector<TrivialPath> result;
    within.for_each([&](int b) {
        if (! is_break(b))
            return;
        for (int w : t.neighbors(b)) {
            if (! within.contains(w))
                continue;
            TrivialPath path{b, w};
            while (! is_break(path.back())) {
                int cur = path.back(), prev = path[path.size() - 2];
                for (int x : t.neighbors(cur))
                    if (x != prev && within.contains(x)) {
                        path.push_back(x);
                        break;
                    }
            }
            if (b < path.back())
                result.push_back(std::move(path));
        }
    });
    return result;
}

auto minimal_spanning_subtree(const Tree & t, const VertexSet & w) -> VertexSet
{
    if (w.empty())
        fail(ErrorKind::PreconditionViolated, "spanning subtree of an empty set");
    auto result = all_vertices(t);
    std::vector<int> deg(static_cast<std::size_t>(t.order()));
    std::vector<int> queue;
    for (int v = 0; v < t.order(); ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1 && ! w.contains(v))
            queue.push_back(v);
    }
    while (! queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (! result.contains(v))
            continue;
        result.erase(v);
        for (int x : t.neighbors(v))
            if (result.contains(x) && --deg[x] <= 1 && ! w.contains(x))
                queue.push_back(x);
    }
    return result;
}

auto Contraction::owed_total() const -> int
{
    int total = 0;
    for (auto & p : paths)
        total += p.owed;
    return total;
}

auto contract_trivial_paths(const Tree & t, int cap) -> Contraction
{
    return contract_trivial_paths(t, all_vertices(t), VertexSet(t.order()), cap);
}

auto contract_trivial_paths(const Tree & t, const VertexSet & within, const VertexSet & terminals, int cap) -> Contraction
{
    if (cap < 1)
        fail(ErrorKind::InvalidArgument, "contraction cap must be positive");
    Contraction c;
    VertexSet kept(t.order());
    if (within.count() == 1)
        kept.insert(within.first());
    for (auto & p : maximal_trivial_paths(t, within, terminals)) {
        ContractedPath cp;
        cp.original = p;
        int len = static_cast<int>(p.size()) - 1;
        if (len > cap) {
            cp.kept.assign(p.begin(), p.begin() + cap);
            cp.kept.push_back(p.back());
        }
        else
            cp.kept = p;
        cp.owed = static_cast<int>(cp.original.size() - cp.kept.size());
        for (int v : cp.kept)
            kept.insert(v);
        c.paths.push_back(std::move(cp));
    }
    c.original_id = kept.members();
    std::vector<int> index(static_cast<std::size_t>(t.order()), -1);
    for (std::size_t i = 0; i < c.original_id.size(); ++i)
        index[c.original_id[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto & p : c.paths)
        for (std::size_t i = 0; i + 1 < p.kept.size(); ++i)
            edges.emplace_back(index[p.kept[i]], index[p.kept[i + 1]]);
    c.tree = Tree(static_cast<int>(c.original_id.size()), edges);
    return c;
}

namespace {
    auto codes_for_view(const Tree & t, const RootedView & view) -> std::vector<CanonicalCode>
    {
        std::vector<CanonicalCode> code(static_cast<std::size_t>(t.order()));
        for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
            int u = *it;
            std::vector<CanonicalCode> parts;
            for (int c : view.children[u])
                parts.push_back(std::move(code[c]));
            std::sort(parts.begin(), parts.end());
            std::string s = "(";
            for (auto & p : parts)
                s += p;
            s += ")";
            code[u] = std::move(s);
        }
        return code;
    }
}

auto canonical_code(const Tree & t, int root, const VertexSet * within) -> CanonicalCode
{
    RootedView view(t, root, within);
    return codes_for_view(t, view)[root];
}

auto canonical_code(const Tree & t, const RootedView & view, int v) -> CanonicalCode
{
    // restrict to the descendants of v in `view`
    VertexSet below(t.order());
    std::vector<int> stack{v};
    while (! stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        below.insert(x);
        for (int c : view.children[x])
            stack.push_back(c);
    }
    return canonical_code(t, v, &below);
}

namespace {
    auto has_injection(const std::vector<std::vector<char>> & ok) -> bool
    {
        // ok[i][j]: left i may go to right j
        std::size_t left = ok.size();
        if (left == 0)
            return true;
        std::size_t right = ok[0].size();
        std::vector<int> mate(right, -1);
        std::function<bool(std::size_t, std::vector<char> &)> augment = [&](std::size_t i, std::vector<char> & seen) {
            for (std::size_t j = 0; j < right; ++j)
                if (ok[i][j] && ! seen[j]) {
                    seen[j] = 1;
                    if (mate[j] == -1 || augment(static_cast<std::size_t>(mate[j]), seen)) {
                        mate[j] = static_cast<int>(i);
                        return true;
                    }
                }
            return false;
        };
        for (std::size_t i = 0; i < left; ++i) {
            std::vector<char> seen(right, 0);
            if (! augment(i, seen))
                return false;
        }
        return true;
    }
}

auto is_rooted_subtree(const Tree & small, int small_root, const Tree & big, int big_root,
    const VertexSet * small_within, const VertexSet * big_within) -> bool
{
    RootedView sv(small, small_root, small_within);
    RootedView bv(big, big_root, big_within);
    // fits[x][y]: subtree of x embeds into subtree of y with x -> y
    std::vector<std::vector<char>> fits(static_cast<std::size_t>(small.order()),
        std::vector<char>(static_cast<std::size_t>(big.order()), 0));
    for (auto xi = sv.order.rbegin(); xi != sv.order.rend(); ++xi) {
        int x = *xi;
        for (int y : bv.order) {
            auto & cx = sv.children[x];
            auto & cy = bv.children[y];
            if (cx.size() > cy.size() || sv.size[x] > bv.size[y] || sv.height[x] > bv.height[y])
                continue;
            std::vector<std::vector<char>> ok(cx.size(), std::vector<char>(cy.size(), 0));
            for (std::size_t i = 0; i < cx.size(); ++i)
                for (std::size_t j = 0; j < cy.size(); ++j)
                    ok[i][j] = fits[cx[i]][cy[j]];
            fits[x][y] = has_injection(ok);
        }
    }
    return fits[small_root][big_root];
}

}
