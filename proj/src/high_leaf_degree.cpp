#include <treefit/error.hpp>
#include <treefit/high_leaf_degree.hpp>

#include <algorithm>

namespace treefit {

namespace {
    auto first_leaf_neighbors(const Tree & t, int s, int count) -> std::vector<int>
    {
        auto leaves = leaf_neighbors(t, s);
        if (static_cast<int>(leaves.size()) < count)
            fail(ErrorKind::PreconditionViolated, "vertex " + std::to_string(s) + " has fewer than " + std::to_string(count)
                    + " leaf neighbors");
        leaves.resize(static_cast<std::size_t>(std::max(count, 0)));
        return leaves;
    }

    // Path from s toward a farthest vertex, cut to at most `length` edges.
    auto path_from(const Tree & t, int s, int length) -> std::vector<int>
    {
        auto dist = tree_distances(t, s);
        int far = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
        auto path = tree_path(t, s, far);
        if (static_cast<int>(path.size()) > length + 1)
            path.resize(static_cast<std::size_t>(length + 1));
        return path;
    }

    auto eccentricity(const Tree & t, int s) -> int
    {
        auto dist = tree_distances(t, s);
        return *std::max_element(dist.begin(), dist.end());
    }

    auto map_prefix(const Tree & t, const Graph & g, const std::vector<int> & path, const std::vector<int> & images) -> PartialEmbedding
    {
        PartialEmbedding e(t.order(), g.order());
        for (std::size_t i = 0; i < images.size() && i < path.size(); ++i)
            e.assign(path[i], images[i]);
        return e;
    }

    auto count_expanding(const Graph & g, int v, int k, int stop_at) -> int
    {
        int count = 0;
        for (int w : g.neighbors(v)) {
            count += is_expanding(g, v, w, k);
            if (count >= stop_at)
                break;
        }
        return count;
    }

    // Greedy continuation of `seq` inside `inside` until it has `size` entries.
    auto grow_inside(const Graph & g, std::vector<int> seq, const VertexSet & inside, std::size_t size) -> std::optional<std::vector<int>>
    {
        VertexSet used(g.order(), seq);
        while (seq.size() < size) {
            int next = -1;
            for (int w : g.neighbors(seq.back()))
                if (inside.contains(w) && ! used.contains(w)) {
                    next = w;
                    break;
                }
            if (next == -1)
                return std::nullopt;
            seq.push_back(next);
            used.insert(next);
        }
        seq.resize(size);
        return seq;
    }

    auto non_expanding_neighbors(const Graph & g, int v, int k) -> VertexSet
    {
        VertexSet b(g.order());
        for (int w : g.neighbors(v))
            if (! is_expanding(g, v, w, k))
                b.insert(w);
        return b;
    }

    // s -> u, then a, b on a shortest path to v at distance three, then v and
    // non-expanding neighbors of v. Everything after a lies outside N[u].
    auto dense_far_images(const Graph & g, int k, std::size_t size) -> std::optional<std::vector<int>>
    {
        for (int u = 0; u < g.order(); ++u) {
            auto dist = bfs_distances(g, u);
            for (int v = 0; v < g.order(); ++v) {
                if (dist[v] != 3)
                    continue;
                auto path = shortest_path_avoiding(g, u, v, VertexSet(g.order()));
                if (! path)
                    continue;
                auto seq = *path;
                if (seq.size() >= size) {
                    seq.resize(size);
                    return seq;
                }
                return grow_inside(g, seq, non_expanding_neighbors(g, v, k), size);
            }
        }
        return std::nullopt;
    }

    // s -> v, a common neighbor, u, then non-expanding neighbors of u outside
    // N(v), for non-adjacent u, v with few common neighbors.
    auto dense_near_images(const Graph & g, int k, int common_limit, std::size_t size) -> std::optional<std::vector<int>>
    {
        for (int u = 0; u < g.order(); ++u) {
            auto nu = g.neighborhood(u);
            std::optional<VertexSet> inside;
            for (int v = 0; v < g.order(); ++v) {
                if (v == u || nu.contains(v))
                    continue;
                auto nv = g.neighborhood(v);
                auto common = nu & nv;
                if (common.count() >= common_limit || common.empty())
                    continue;
                if (! inside)
                    inside = non_expanding_neighbors(g, u, k);
                auto seq = grow_inside(g, {v, common.first(), u}, *inside - nv, std::max<std::size_t>(size, 3));
                if (! seq)
                    continue;
                seq->resize(size);
                return seq;
            }
        }
        return std::nullopt;
    }

    auto ladder(const Graph & g, const Tree & t, int s, int k, const HighLeafThresholds & th, bool strict) -> std::optional<LadderResult>
    {
        int delta = g.min_degree();
        if (k <= 1)
            return LadderResult{chvatal_extend(g, t, PartialEmbedding(t.order(), g.order())), "chvatal"};
        auto leaves = first_leaf_neighbors(t, s, k - 1);

        auto finish = [&](const PartialEmbedding & sigma, const std::string & step) -> std::optional<LadderResult> {
            try {
                return LadderResult{complete_leaves(g, t, leaves, sigma), step};
            } catch (const Error & err) {
                if (strict)
                    panic("leaf completion failed in the " + step + " step: " + err.what());
                return std::nullopt;
            }
        };

        if (th.allow_high_degree)
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) >= delta + k - 1) {
                    PartialEmbedding e(t.order(), g.order());
                    e.assign(s, v);
                    if (auto r = finish(e, "high_degree"))
                        return r;
                    break;
                }

        auto path = path_from(t, s, th.path_factor * k);
        if (th.allow_expanding) {
            int need = th.expanding_factor * k;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) < need || count_expanding(g, v, k, need) < need)
                    continue;
                auto walk = run_expanding_walk(g, v, static_cast<int>(path.size()) - 1, k);
                if (walk.outside < neighbor_deficiency(g, v, k)) {
                    if (strict)
                        panic("expanding walk left too few vertices outside the neighborhood");
                    continue;
                }
                if (auto r = finish(map_prefix(t, g, path, walk.path), "expanding"))
                    return r;
                if (strict)
                    break;
            }
        }

        if (th.allow_dense && static_cast<int>(path.size()) >= k + 1) {
            auto size = static_cast<std::size_t>(k + 1);
            if (auto images = dense_far_images(g, k, size))
                if (auto r = finish(map_prefix(t, g, path, *images), "dense_far"))
                    return r;
            if (auto images = dense_near_images(g, k, th.common_factor * k, size))
                if (auto r = finish(map_prefix(t, g, path, *images), "dense_near"))
                    return r;
            if (strict)
                panic("dense case reached the branch the counting argument rules out");
        }
        if (strict)
            panic("no step of the leaf-degree ladder applied");
        return std::nullopt;
    }
}

auto is_expanding(const Graph & g, int v, int w, int k) -> bool
{
    int outside = 0;
    for (int x : g.neighbors(w))
        if (x != v && ! g.adjacent(v, x)) {
            if (++outside >= k - 1)
                return true;
        }
    return outside >= k - 1;
}

auto expanding_neighbors(const Graph & g, int v, int k) -> std::vector<int>
{
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (is_expanding(g, v, w, k))
            out.push_back(w);
    return out;
}

auto run_expanding_walk(const Graph & g, int v, int length, int k) -> ExpandingWalk
{
    auto nv = g.neighborhood(v);
    auto closed = g.closed_neighborhood(v);
    std::vector<int> expanding(static_cast<std::size_t>(g.order()), -1);
    auto exp = [&](int w) {
        if (expanding[w] == -1)
            expanding[w] = is_expanding(g, v, w, k);
        return expanding[w] == 1;
    };
    ExpandingWalk walk;
    walk.path.push_back(v);
    VertexSet used(g.order(), {v});
    while (static_cast<int>(walk.path.size()) <= length) {
        int x = walk.path.back();
        int next = -1;
        for (int w : g.neighbors(x)) {
            if (used.contains(w))
                continue;
            bool fits = ! nv.contains(x) ? true : ! exp(x) ? nv.contains(w) && exp(w) : ! closed.contains(w);
            if (fits) {
                next = w;
                break;
            }
        }
        if (next == -1)
            break;
        walk.path.push_back(next);
        used.insert(next);
        walk.outside += ! closed.contains(next);
    }
    return walk;
}

auto build_expanding_walk(const Graph & g, int v, int length, int k) -> ExpandingWalk
{
    int have = static_cast<int>(expanding_neighbors(g, v, k).size());
    if (have < 3 * k)
        fail(ErrorKind::NotEnoughExpanding, "vertex " + std::to_string(v) + " has " + std::to_string(have)
                + " expanding neighbors, need " + std::to_string(3 * k));
    return run_expanding_walk(g, v, length, k);
}

auto embed_high_leaf_degree_unconditional(const Graph & g, const Tree & t, int s, int k) -> LadderResult
{
    int delta = g.min_degree();
    if (t.order() != delta + k)
        fail(ErrorKind::PreconditionViolated, "tree order is not δ(G)+k");
    if (static_cast<int>(leaf_neighbors(t, s).size()) < k - 1)
        fail(ErrorKind::PreconditionViolated, "s has fewer than k−1 leaf neighbors");
    if (eccentricity(t, s) < 3 * k)
        fail(ErrorKind::PreconditionViolated, "no path of length 3k starts at s");
    if (delta < 11 * k * k)
        fail(ErrorKind::PreconditionViolated, "δ(G) < 11k²");
    if (g.order() < t.order())
        fail(ErrorKind::PreconditionViolated, "graph smaller than tree");
    if (! is_connected(g))
        fail(ErrorKind::PreconditionViolated, "graph is disconnected");
    return *ladder(g, t, s, k, HighLeafThresholds{}, true);
}

auto try_embed_high_leaf_degree(const Graph & g, const Tree & t, int s, int k, const HighLeafThresholds & th)
    -> std::optional<LadderResult>
{
    if (t.order() != g.min_degree() + k || g.order() < t.order())
        return std::nullopt;
    if (static_cast<int>(leaf_neighbors(t, s).size()) < k - 1)
        return std::nullopt;
    return ladder(g, t, s, k, th, false);
}

auto anchored_leaf_search(const Graph & g, const Tree & t, int s, int k, const ColorCodingOptions & options, Rng & rng)
    -> SolveOutcome
{
    auto leaves = first_leaf_neighbors(t, s, k - 1);
    if (t.order() > g.order())
        return NotContained{"tree larger than graph"};
    VertexSet drop(t.order());
    for (int l : leaf_neighbors(t, s))
        drop.insert(l);

    bool exact = true;
    NotFound nf;
    nf.failure_exponent = options.failure_exponent;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < t.degree(s))
            continue;
        Family outside{g.closed_neighborhood(v).complement(), neighbor_deficiency(g, v, k)};
        AhscInstance inst{g, t, {{s, v}}, {outside}};
        auto res = solve_ahsc(inst, options, rng);
        nf.rounds += res.not_found.rounds;
        if (res.not_found.seed)
            nf.seed = res.not_found.seed;
        if (res.solution) {
            auto sigma = res.solution->embedding.restricted_to(res.solution->subtree - drop);
            try {
                return Contains{complete_leaves(g, t, leaves, sigma), "high_leaf_degree:anchored"};
            } catch (const Error & err) {
                panic(std::string("anchored hitting subtree did not complete: ") + err.what());
            }
        }
        exact = exact && res.exact;
    }
    if (exact)
        return NotContained{"no anchored hitting subtree"};
    nf.reason = "color coding trials exhausted";
    return nf;
}

auto solve_high_leaf_degree(const Graph & g, const Tree & t, int k, const HighLeafConfig & config, Rng & rng) -> SolveOutcome
{
    int delta = g.min_degree();
    if (t.order() != delta + k)
        fail(ErrorKind::PreconditionViolated, "tree order is not δ(G)+k");
    if (t.order() < 2)
        return Contains{chvatal_extend(g, t, PartialEmbedding(t.order(), g.order())), "chvatal"};
    auto ld = leaf_degree(t);
    if (ld.value < k - 1)
        fail(ErrorKind::PreconditionViolated, "leaf degree below k−1");
    if (k <= 1)
        return Contains{chvatal_extend(g, t, PartialEmbedding(t.order(), g.order())), "chvatal"};
    int s = ld.witness;
    const auto & th = config.thresholds;

    if (delta < th.delta_factor * k * k) {
        auto out = contains_tree_by_size(g, t, config.color, rng);
        if (auto * c = std::get_if<Contains>(&out))
            c->branch = "high_leaf_degree:color_coding";
        return out;
    }
    if (eccentricity(t, s) < th.path_factor * k)
        return anchored_leaf_search(g, t, s, k, config.color, rng);
    if (g.order() < t.order())
        return NotContained{"tree larger than graph"};

    if (config.strict) {
        auto r = embed_high_leaf_degree_unconditional(g, t, s, k);
        return Contains{std::move(r.embedding), "high_leaf_degree:" + r.step};
    }
    if (is_connected(g))
        if (auto r = try_embed_high_leaf_degree(g, t, s, k, th))
            return Contains{std::move(r->embedding), "high_leaf_degree:" + r->step};
    auto out = anchored_leaf_search(g, t, s, k, config.color, rng);
    if (auto * c = std::get_if<Contains>(&out))
        c->branch = "fallback:high_leaf_degree";
    return out;
}

}
