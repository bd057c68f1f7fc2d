#include <treefit/error.hpp>
#include <treefit/medium_diameter.hpp>
#include <treefit/numeric.hpp>
#include <treefit/preserving_paths.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace treefit {

namespace {
    // Strict callers have checked the hypotheses, so a step that does not go
    // through is a bug; relaxed callers just get nothing.
    auto abandon(bool strict, const std::string & what) -> std::nullopt_t
    {
        if (strict)
            panic(what);
        return std::nullopt;
    }

    auto checked(const Graph & g, const Tree & t, PartialEmbedding e, const char * what) -> PartialEmbedding
    {
        if (! verify_certificate(g, t, e))
            panic(std::string(what) + " embedding does not verify");
        return e;
    }

    auto finish_leaves(const Graph & g, const Tree & t, const std::vector<int> & leaves, const PartialEmbedding & e,
        bool strict, const char * what) -> std::optional<PartialEmbedding>
    {
        try {
            return checked(g, t, complete_leaves(g, t, leaves, e), what);
        }
        catch (const Error & err) {
            return abandon(strict, std::string(what) + ": " + err.what());
        }
    }

    auto anchors_of(const Tree & t, const std::vector<int> & leaves) -> std::vector<int>
    {
        std::vector<int> out;
        for (int l : leaves)
            out.push_back(t.neighbors(l)[0]);
        return out;
    }

    auto first_unsatisfied(const Graph & g, const PartialEmbedding & e, const std::vector<int> & anchors, int k) -> int
    {
        for (int w : anchors) {
            int gw = e.image(w);
            if (saved_non_neighbors(g, e, gw) < neighbor_deficiency(g, gw, k))
                return w;
        }
        return -1;
    }

    // v ∉ N[target] ∪ Im reachable from `from` in one step, or as (m, v) in
    // two steps through an unused m.
    struct Reach {
        int middle = -1;
        int end = -1;
    };

    auto reach_non_neighbor(const Graph & g, const PartialEmbedding & e, int from, int target) -> std::optional<Reach>
    {
        for (int v : g.neighbors(from))
            if (! e.is_used(v) && ! g.adjacent(target, v))
                return Reach{-1, v};
        for (int m : g.neighbors(from)) {
            if (e.is_used(m))
                continue;
            for (int v : g.neighbors(m))
                if (v != m && ! e.is_used(v) && ! g.adjacent(target, v))
                    return Reach{m, v};
        }
        return std::nullopt;
    }

    auto common_free_neighbor(const Graph & g, const VertexSet & used, int a, int b) -> int
    {
        for (int x : g.neighbors(a))
            if (! used.contains(x) && g.adjacent(b, x))
                return x;
        return -1;
    }

    auto via_preserving_path(const Graph & g, const Tree & t, const VertexSet & modulator, int k, bool strict)
        -> std::optional<PartialEmbedding>
    {
        if (strict)
            return embed_via_preserving_path(g, t, modulator_to_preserving_path(g, modulator, k));
        auto p = try_modulator_to_preserving_path(g, modulator, k);
        if (! p || tree_diameter(t).length < 2 * static_cast<int>(p->vertices.size()) - 1)
            return std::nullopt;
        return embed_via_preserving_path(g, t, *p);
    }

    auto trivial_paths_core(const Graph & g, const Tree & t, bool strict, TrivialPathTrace * trace)
        -> std::optional<PartialEmbedding>
    {
        TrivialPathTrace local;
        if (! trace)
            trace = &local;
        int n = g.order();
        int delta = g.min_degree();
        int k = t.order() - delta;
        if (k < 2 || t.order() > n || t.order() < 3)
            return abandon(strict, "trivial paths: tree order out of range");
        auto diam = tree_diameter(t);

        std::vector<int> leaves{diam.u};
        if (k >= 3)
            leaves.push_back(diam.v);
        for (int l : t.leaves())
            if (static_cast<int>(leaves.size()) < k - 1 && l != diam.u && l != diam.v)
                leaves.push_back(l);
        if (static_cast<int>(leaves.size()) < k - 1)
            return abandon(strict, "trivial paths: fewer than k−1 leaves");
        auto anchors = anchors_of(t, leaves);

        VertexSet spine(t.order(), anchors);
        spine.insert(t.neighbors(diam.u)[0]);
        spine.insert(t.neighbors(diam.v)[0]);
        auto span = minimal_spanning_subtree(t, spine);
        if (span.count() < 2)
            return abandon(strict, "trivial paths: spanned subtree is a single vertex");

        int cap = 2 * k;
        auto con = contract_trivial_paths(t, span, spine, cap);
        if (con.tree.order() > delta + 1)
            return abandon(strict, "trivial paths: contracted subtree exceeds δ+1");
        auto small = chvatal_extend(g, con.tree, PartialEmbedding(con.tree.order(), n));
        std::vector<int> img(static_cast<std::size_t>(t.order()), -1);
        VertexSet used(n);
        for (int i = 0; i < con.tree.order(); ++i) {
            img[con.original_id[i]] = small.image(i);
            used.insert(small.image(i));
        }

        // non-neighbors each anchor still lacks
        VertexSet demand(n);
        for (int w : anchors) {
            int gw = img[w];
            int need = neighbor_deficiency(g, gw, k) - ((used | demand) - g.closed_neighborhood(gw)).count();
            auto avail = (used | demand | g.closed_neighborhood(gw)).complement();
            for (int x = avail.first(); need > 0 && x != -1; x = avail.next(x), --need)
                demand.insert(x);
            if (need > 0)
                return abandon(strict, "trivial paths: not enough non-neighbors in G");
        }

        std::size_t best = 0;
        for (std::size_t i = 1; i < con.paths.size(); ++i)
            if (con.paths[i].original.size() > con.paths[best].original.size())
                best = i;
        auto & host = con.paths[best];
        {
            int span_diam = tree_diameter(induced_subtree(t, span).tree).length;
            int pieces = std::max(spine.count() - 1, 1);
            if (static_cast<int>(host.original.size()) - 1 < (span_diam + pieces - 1) / pieces)
                panic("longest trivial path is shorter than the diameter split bound");
        }

        // thread the demand set between the ends of the host's last edge
        int s_first = img[host.kept[host.kept.size() - 2]];
        int s_last = img[host.kept.back()];
        std::vector<int> targets{s_first};
        demand.for_each([&](int x) { targets.push_back(x); });
        targets.push_back(s_last);
        auto pending = demand;
        pending.insert(s_last);
        auto inner = used;
        inner.erase(s_first);
        inner.erase(s_last);
        std::vector<int> q{s_first};
        VertexSet on_q(n, q);
        for (std::size_t i = 0; i + 1 < targets.size(); ++i) {
            pending.erase(targets[i + 1]);
            auto blocked = inner | on_q | pending;
            blocked.insert(targets[i]);
            auto hop = shortest_path_avoiding(g, targets[i], targets[i + 1], blocked);
            if (! hop || (strict && static_cast<int>(hop->size()) - 1 > 2 * k + 1)) {
                trace->hop_fallback = true;
                return via_preserving_path(g, t, blocked, k, strict);
            }
            for (std::size_t j = 1; j < hop->size(); ++j) {
                q.push_back((*hop)[j]);
                on_q.insert((*hop)[j]);
            }
        }
        if (static_cast<int>(q.size()) - 1 > host.owed + 1) {
            if (strict)
                panic("trivial paths: threaded path longer than the contracted budget");
            trace->hop_fallback = true;
            return via_preserving_path(g, t, inner, k, strict);
        }

        std::vector<std::vector<int>> images(con.paths.size());
        for (std::size_t i = 0; i < con.paths.size(); ++i)
            for (int v : con.paths[i].kept)
                images[i].push_back(img[v]);
        images[best].resize(images[best].size() - 2);
        images[best].insert(images[best].end(), q.begin(), q.end());
        used |= on_q;

        // re-expand by single insertions between consecutive images
        while (true) {
            int stalled = -1;
            bool progressed = false;
            for (std::size_t i = 0; i < con.paths.size(); ++i) {
                auto & im = images[i];
                if (im.size() >= con.paths[i].original.size())
                    continue;
                bool inserted = false;
                for (std::size_t j = 0; j + 1 < im.size() && ! inserted; ++j) {
                    int x = common_free_neighbor(g, used, im[j], im[j + 1]);
                    if (x == -1)
                        continue;
                    if (! g.adjacent(im[j], x) || ! g.adjacent(x, im[j + 1]))
                        panic("inserted vertex is not adjacent to both path neighbors");
                    im.insert(im.begin() + static_cast<std::ptrdiff_t>(j) + 1, x);
                    used.insert(x);
                    ++trace->insertions;
                    inserted = true;
                }
                if (inserted)
                    progressed = true;
                else if (stalled == -1)
                    stalled = static_cast<int>(i);
            }
            if (progressed)
                continue;
            if (stalled == -1)
                break;

            // nothing outside the image sees two consecutive vertices of
            // this path, so any 2k of them keep k−1 non-neighbors for all
            trace->stall_fallback = true;
            auto & im = images[static_cast<std::size_t>(stalled)];
            if (static_cast<int>(im.size()) < cap || static_cast<int>(host.original.size()) < cap + 2)
                return abandon(strict, "trivial paths: stalled path too short for the fallback");
            VertexSet allowed = used.complement();
            PartialEmbedding e(t.order(), n);
            for (int j = 0; j < cap; ++j) {
                allowed.insert(im[j]);
                e.assign(host.original[j + 1], im[j]);
            }
            if (! greedy_extend(g, t, e, span, &allowed))
                return abandon(strict, "trivial paths: fallback re-embedding ran out of vertices");
            return finish_leaves(g, t, leaves, e, strict, "trivial paths fallback");
        }

        PartialEmbedding e(t.order(), n);
        for (std::size_t i = 0; i < con.paths.size(); ++i) {
            auto & orig = con.paths[i].original;
            for (std::size_t j = 0; j < orig.size(); ++j)
                if (! e.is_mapped(orig[j]))
                    e.assign(orig[j], images[i][j]);
        }
        if (! verify(e, g, t))
            panic("re-expanded subtree does not verify");
        return finish_leaves(g, t, leaves, e, strict, "trivial paths");
    }

    auto escape_core(const Graph & g, const Tree & t, int u, bool strict) -> std::optional<PartialEmbedding>
    {
        int n = g.order();
        int delta = g.min_degree();
        int k = t.order() - delta;
        if (k < 2 || t.order() > n || u < 0 || u >= n)
            return abandon(strict, "escape: tree order out of range");
        int hub = 0;
        for (int v = 1; v < t.order(); ++v)
            if (t.degree(v) > t.degree(hub))
                hub = v;

        std::vector<int> leaves;
        for (int l : t.leaves())
            if (static_cast<int>(leaves.size()) < k - 1)
                leaves.push_back(l);
        if (static_cast<int>(leaves.size()) < k - 1)
            return abandon(strict, "escape: fewer than k−1 leaves");
        auto anchors = anchors_of(t, leaves);
        VertexSet spanned(t.order(), anchors);
        spanned.insert(hub);
        auto target = minimal_spanning_subtree(t, spanned);
        if (target.count() > delta + 1)
            return abandon(strict, "escape: spanned subtree exceeds δ+1");

        PartialEmbedding seed(t.order(), n);
        seed.assign(hub, u);
        auto e = chvatal_extend(g, t, seed, target);
        while (true) {
            int w = first_unsatisfied(g, e, anchors, k);
            if (w == -1)
                break;
            int x = -1;
            for (int c : t.neighbors(hub))
                if (! t.is_leaf(c) && ! e.is_mapped(c)) {
                    x = c;
                    break;
                }
            if (x == -1)
                return abandon(strict, "escape: no fresh non-leaf neighbor of the hub");
            int y = t.neighbors(x)[0] != hub ? t.neighbors(x)[0] : t.neighbors(x)[1];
            if (e.is_mapped(y))
                panic("branch below a fresh hub neighbor is already mapped");
            auto r = reach_non_neighbor(g, e, u, e.image(w));
            if (! r)
                return abandon(strict, "escape: no free non-neighbor within distance two");
            if (r->middle == -1)
                e.assign(x, r->end);
            else {
                e.assign(x, r->middle);
                e.assign(y, r->end);
            }
        }
        return finish_leaves(g, t, leaves, e, strict, "escape");
    }

    struct SubtreeChoice {
        std::vector<int> u;         // roots of depth-two subtrees
        std::vector<int> leaves;    // one leaf below each depth-one root
    };

    auto choose_subtrees(const Tree & t, const RootedView & view, int k, bool strict) -> std::optional<SubtreeChoice>
    {
        std::vector<int> two, one;
        for (int v = 0; v < t.order(); ++v) {
            if (view.height[v] == 2)
                two.push_back(v);
            else if (view.height[v] == 1)
                one.push_back(v);
        }
        auto lowest_child = [&](int v, int height) {
            for (int c : view.children[v])
                if (view.height[c] == height)
                    return c;
            return -1;
        };
        int uses = (k - 1) * (k - 1);
        SubtreeChoice out;
        if (static_cast<int>(two.size()) >= k * k - k) {
            out.u.assign(two.begin(), two.begin() + uses);
            for (int i = uses; i < k * k - k; ++i)
                out.leaves.push_back(lowest_child(lowest_child(two[i], 1), 0));
            return out;
        }
        if (strict)
            panic("fewer than k²−k subtrees of depth two under the hypotheses");
        VertexSet taken(t.order());
        for (int w : one)
            if (static_cast<int>(out.leaves.size()) < k - 1) {
                out.leaves.push_back(lowest_child(w, 0));
                if (view.parent[w] != -1)
                    taken.insert(view.parent[w]);
            }
        if (static_cast<int>(out.leaves.size()) < k - 1)
            return std::nullopt;
        for (int v : two)
            if (! taken.contains(v) && static_cast<int>(out.u.size()) < uses)
                out.u.push_back(v);
        return out;
    }

    auto separator_core(const Graph & g, const Tree & t, bool strict) -> std::optional<EmbeddingOrSeparator>
    {
        int n = g.order();
        int delta = g.min_degree();
        int k = t.order() - delta;
        if (k < 2 || t.order() > n)
            return abandon(strict, "escape or separator: tree order out of range");
        RootedView view(t, 0);
        auto choice = choose_subtrees(t, view, k, strict);
        if (! choice)
            return std::nullopt;
        auto anchors = anchors_of(t, choice->leaves);
        VertexSet spanned(t.order(), anchors);
        for (int u : choice->u)
            spanned.insert(u);
        auto target = minimal_spanning_subtree(t, spanned);
        if (target.count() > delta + 1)
            return abandon(strict, "escape or separator: spanned subtree exceeds δ+1");
        auto e = chvatal_extend(g, t, PartialEmbedding(t.order(), n), target);

        std::vector<int> fresh = choice->u;
        while (first_unsatisfied(g, e, anchors, k) != -1) {
            std::vector<int> unsatisfied;
            for (int w : anchors)
                if (saved_non_neighbors(g, e, e.image(w)) < neighbor_deficiency(g, e.image(w), k))
                    unsatisfied.push_back(w);
            bool grown = false;
            for (std::size_t wi = 0; wi < unsatisfied.size() && ! grown; ++wi)
                for (std::size_t ui = 0; ui < fresh.size() && ! grown; ++ui) {
                    int u = fresh[ui];
                    auto r = reach_non_neighbor(g, e, e.image(u), e.image(unsatisfied[wi]));
                    if (! r)
                        continue;
                    if (r->middle == -1)
                        e.assign(view.children[u].front(), r->end);
                    else {
                        int c = -1;
                        for (int x : view.children[u])
                            if (view.height[x] == 1) {
                                c = x;
                                break;
                            }
                        e.assign(c, r->middle);
                        e.assign(view.children[c].front(), r->end);
                    }
                    fresh.erase(fresh.begin() + static_cast<std::ptrdiff_t>(ui));
                    grown = true;
                }
            if (grown)
                continue;

            if (fresh.empty())
                return abandon(strict, "escape or separator: ran out of depth-two subtrees");
            auto image = e.image_set();
            VertexSet a(n), b = VertexSet::full(n);
            for (int u : fresh)
                a |= g.neighborhood(e.image(u)) - image;
            for (int w : unsatisfied)
                b &= g.neighborhood(e.image(w));
            auto s = image | (b - a);
            auto rest = (s | a).complement();
            bool closed = ! a.empty() && ! rest.empty();
            a.for_each([&](int x) {
                for (int y : g.neighbors(x))
                    if (rest.contains(y))
                        closed = false;
            });
            if (! closed || ! is_separator(g, s)) {
                if (strict)
                    fail(ErrorKind::HypothesisNotMet, "growth stalled but the stall set does not separate G");
                return std::nullopt;
            }
            if (strict) {
                long long bound = 2LL * k * (k - 1) * (tree_diameter(t).length + 2);
                if (s.count() > bound)
                    panic("separator exceeds 2k(k−1)(diam(T)+2)");
            }
            return EmbeddingOrSeparator{s};
        }
        auto done = finish_leaves(g, t, choice->leaves, e, strict, "escape or separator");
        if (! done)
            return std::nullopt;
        return EmbeddingOrSeparator{std::move(*done)};
    }

    auto minimal_separator(const Graph & g, VertexSet s) -> VertexSet
    {
        for (int v : s.members()) {
            auto smaller = s;
            smaller.erase(v);
            if (is_separator(g, smaller))
                s = smaller;
        }
        return s;
    }

    auto with_separator_core(const Graph & g, const Tree & t, const VertexSet & given, bool flip, bool strict)
        -> std::optional<PartialEmbedding>
    {
        int n = g.order();
        int delta = g.min_degree();
        if (t.order() < 2 || t.order() > n || given.universe() != n || ! is_separator(g, given))
            return abandon(strict, "separator: input out of range");
        auto s = minimal_separator(g, given);
        auto components = connected_components(g, s.complement());
        VertexSet a(n, components[0]);
        auto b = (s | a).complement();
        int hinge = s.first();
        auto hinge_nbrs = g.neighborhood(hinge);
        if (hinge_nbrs.intersection_count(a) < hinge_nbrs.intersection_count(b))
            std::swap(a, b);
        if (flip)
            std::swap(a, b);

        auto edge = find_separable_edge(t, 1);
        if (! edge)
            return abandon(strict, "separator: tree has no edge");
        auto [x, y] = *edge;
        if (t.degree(y) < t.degree(x))
            std::swap(x, y);
        if (strict && 3 * t.degree(x) > delta)
            panic("split vertex has degree above δ/3");
        auto side_x = side_of_edge(t, x, y);
        auto side_y = side_of_edge(t, y, x);

        auto landing = hinge_nbrs & b;
        if (landing.empty())
            return abandon(strict, "separator: separator vertex has no neighbor on the far side");
        PartialEmbedding e(t.order(), n);
        e.assign(y, landing.first());
        if (! greedy_extend(g, t, e, side_y, &b))
            return abandon(strict, "separator: far half does not fit");
        e.assign(x, hinge);
        if (! greedy_extend(g, t, e, side_x, &a))
            return abandon(strict, "separator: near half does not fit");
        return checked(g, t, e, "separator");
    }

    void require(bool ok, const std::string & what)
    {
        if (! ok)
            fail(ErrorKind::PreconditionViolated, what);
    }

    void require_common(const Graph & g, const Tree & t, int k, int k_min)
    {
        require(k >= k_min, "k < " + std::to_string(k_min));
        require(g.order() > 0, "empty graph");
        require(t.order() == g.min_degree() + k, "tree order is not δ(G)+k");
        require(leaf_degree(t).value < k, "ld(T) ≥ k");
    }
}

auto embed_via_trivial_paths(const Graph & g, const Tree & t, int k, TrivialPathTrace * trace) -> PartialEmbedding
{
    require_common(g, t, k, 3);
    require(is_connected(g), "graph is not connected");
    long long d = tree_diameter(t).length;
    require(d >= 2 * saturating_power(k, 4), "diam(T) < 2k⁴");
    require(g.min_degree() >= 2LL * k * d, "δ(G) < 2k·diam(T)");
    return *trivial_paths_core(g, t, true, trace);
}

auto try_embed_via_trivial_paths(const Graph & g, const Tree & t, TrivialPathTrace * trace) -> std::optional<PartialEmbedding>
{
    if (g.order() == 0 || ! is_connected(g))
        return std::nullopt;
    try {
        return trivial_paths_core(g, t, false, trace);
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

auto embed_via_escape(const Graph & g, const Tree & t, int k, int q) -> PartialEmbedding
{
    require_common(g, t, k, 2);
    long long d = tree_diameter(t).length;
    require(q >= 2LL * k * k * d, "q < 2k²·diam(T)");
    require(g.min_degree() >= q, "δ(G) < q");
    require(t.max_degree() >= k * k, "Δ(T) < k²");
    int u = -1;
    for (int v = 0; v < g.order() && u == -1; ++v)
        if (is_q_escape(g, v, q))
            u = v;
    require(u != -1, "graph has no " + std::to_string(q) + "-escape vertex");
    return *escape_core(g, t, u, true);
}

auto try_embed_via_escape(const Graph & g, const Tree & t, int u) -> std::optional<PartialEmbedding>
{
    if (g.order() == 0)
        return std::nullopt;
    try {
        return escape_core(g, t, u, false);
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

auto embed_or_separator(const Graph & g, const Tree & t, int k) -> EmbeddingOrSeparator
{
    require_common(g, t, k, 2);
    require(t.max_degree() < k * k, "Δ(T) ≥ k²");
    require(g.min_degree() >= saturating_power(k, 5) * tree_diameter(t).length, "δ(G) < k⁵·diam(T)");
    return *separator_core(g, t, true);
}

auto try_embed_or_separator(const Graph & g, const Tree & t) -> std::optional<EmbeddingOrSeparator>
{
    if (g.order() == 0)
        return std::nullopt;
    try {
        return separator_core(g, t, false);
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

auto embed_with_separator(const Graph & g, const Tree & t, int k, const VertexSet & s) -> PartialEmbedding
{
    require_common(g, t, k, 1);
    require(is_connected(g), "graph is not connected");
    require(s.universe() == g.order() && is_separator(g, s), "set is not a vertex separator");
    require(g.min_degree() >= 3 * s.count(), "δ(G) < 3|S|");
    require(g.min_degree() >= 15 * k, "δ(G) < 15k");
    require(is_separable(t, s.count() + k), "tree is not (|S|+k)-separable");
    return *with_separator_core(g, t, s, false, true);
}

auto try_embed_with_separator(const Graph & g, const Tree & t, const VertexSet & s, bool flip)
    -> std::optional<PartialEmbedding>
{
    if (g.order() == 0 || ! is_connected(g))
        return std::nullopt;
    try {
        return with_separator_core(g, t, s, flip, false);
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

auto MediumThresholds::literal(int k) -> MediumThresholds
{
    auto times = [](long long c, long long v) {
        return v > std::numeric_limits<long long>::max() / c ? std::numeric_limits<long long>::max() : c * v;
    };
    return {times(2, saturating_power(k, 11)), times(4, saturating_power(k, 13)), times(2, saturating_power(k, 14))};
}

namespace {
    auto min_degree_vertex(const Graph & g) -> int
    {
        int best = 0;
        for (int v = 1; v < g.order(); ++v)
            if (g.degree(v) < g.degree(best))
                best = v;
        return best;
    }

    auto as_int(long long v) -> int
    {
        return static_cast<int>(std::min<long long>(v, std::numeric_limits<int>::max()));
    }
}

auto solve_medium(const Graph & g, const Tree & t, int k) -> MediumResult
{
    require_common(g, t, k, 3);
    require(is_connected(g), "graph is not connected");
    int delta = g.min_degree();
    require(delta >= saturating_power(k, 17), "δ(G) < k^17");
    auto th = MediumThresholds::literal(k);
    require(g.order() >= static_cast<long long>(delta) + th.separable_q, "n < δ(G)+2k^14");
    int d = tree_diameter(t).length;
    require(d <= 8 * std::pow(k, 6) * std::log2(delta), "diam(T) > 8k⁶·log δ(G)");

    if (d >= th.large_diameter)
        return {embed_via_trivial_paths(g, t, k), "medium:trivial_paths"};
    if (t.max_degree() < k * k) {
        auto r = embed_or_separator(g, t, k);
        if (auto * e = std::get_if<PartialEmbedding>(&r))
            return {std::move(*e), "medium:escape_or_separator"};
        return {embed_with_separator(g, t, k, std::get<VertexSet>(r)), "medium:separator_handoff"};
    }
    int q = as_int(th.escape_q);
    for (int v = 0; v < g.order(); ++v)
        if (is_q_escape(g, v, q))
            return {embed_via_escape(g, t, k, q), "medium:escape"};
    require(is_separable(t, as_int(th.separable_q)), "no escape vertex and T is not 2k^14-separable");
    auto s = nonescape_separator(g, min_degree_vertex(g), q);
    return {embed_with_separator(g, t, k, s), "medium:nonescape_separator"};
}

auto try_solve_medium(const Graph & g, const Tree & t, const MediumThresholds & thresholds) -> std::optional<MediumResult>
{
    if (g.order() == 0 || t.order() > g.order())
        return std::nullopt;
    int k = t.order() - g.min_degree();
    if (k < 2)
        return std::nullopt;
    if (tree_diameter(t).length >= thresholds.large_diameter)
        if (auto e = try_embed_via_trivial_paths(g, t))
            return MediumResult{std::move(*e), "medium:trivial_paths"};
    if (t.max_degree() < k * k) {
        if (auto r = try_embed_or_separator(g, t)) {
            if (auto * e = std::get_if<PartialEmbedding>(&*r))
                return MediumResult{std::move(*e), "medium:escape_or_separator"};
            if (auto e = try_embed_with_separator(g, t, std::get<VertexSet>(*r)))
                return MediumResult{std::move(*e), "medium:separator_handoff"};
        }
    }
    int q = as_int(thresholds.escape_q);
    for (int v = 0; v < g.order(); ++v)
        if (is_q_escape(g, v, q)) {
            if (auto e = try_embed_via_escape(g, t, v))
                return MediumResult{std::move(*e), "medium:escape"};
            break;
        }
    if (is_separable(t, as_int(thresholds.separable_q))) {
        int v = min_degree_vertex(g);
        if (! is_q_escape(g, v, q)) {
            try {
                auto s = nonescape_separator(g, v, q);
                if (auto e = try_embed_with_separator(g, t, s))
                    return MediumResult{std::move(*e), "medium:nonescape_separator"};
            }
            catch (const Error &) {
            }
        }
    }
    return std::nullopt;
}

}
