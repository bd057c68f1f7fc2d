#include <treefit/error.hpp>
#include <treefit/numeric.hpp>
#include <treefit/small_diameter.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace treefit {

namespace {
    struct AnchorSets {
        VertexSet common;       // ⋂ N(u_i) over B
        VertexSet closed;       // N[B]
        VertexSet ground;       // N(B) ∖ B ∖ common
    };

    auto anchor_sets(const Graph & g, const VertexSet & b) -> AnchorSets
    {
        AnchorSets s{VertexSet::full(g.order()), b, VertexSet(g.order())};
        b.for_each([&](int u) {
            auto nu = g.neighborhood(u);
            s.common &= nu;
            s.closed |= nu;
        });
        s.ground = s.closed - b - s.common;
        return s;
    }

    // Subsets of `ground` with at most `limit` members, by increasing size.
    auto for_each_subset(const std::vector<int> & ground, int limit, int universe, const std::function<bool(const VertexSet &)> & f) -> bool
    {
        std::vector<int> pick;
        std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int size) -> bool {
            if (static_cast<int>(pick.size()) == size)
                return f(VertexSet(universe, pick));
            for (std::size_t i = from; i < ground.size(); ++i) {
                pick.push_back(ground[i]);
                bool stop = rec(i + 1, size);
                pick.pop_back();
                if (stop)
                    return true;
            }
            return false;
        };
        for (int size = 0; size <= limit && size <= static_cast<int>(ground.size()); ++size)
            if (rec(0, size))
                return true;
        return false;
    }

    auto subtree_vertices(const RootedView & view, int c) -> std::vector<int>
    {
        std::vector<int> out{c};
        for (std::size_t h = 0; h < out.size(); ++h)
            for (int ch : view.children[out[h]])
                out.push_back(ch);
        return out;
    }
}

auto multi_leaf_params_of(const Graph & g, const std::vector<int> & anchors, const VertexSet & image, int k) -> MultiLeafParams
{
    MultiLeafParams p{{}, VertexSet(g.order()), VertexSet(g.order()), 0};
    for (int u : anchors) {
        int d = neighbor_deficiency(g, u, k);
        int a = std::min((image - g.closed_neighborhood(u)).count(), d);
        p.a.push_back(a);
        if (a < d)
            p.b.insert(u);
    }
    if (p.b.empty())
        return p;
    auto s = anchor_sets(g, p.b);
    p.x = image & s.ground;
    p.a_b = (image - s.closed).count();
    return p;
}

auto for_each_multi_leaf_params(const Graph & g, const std::vector<int> & anchors, int k,
    const std::function<bool(const MultiLeafParams &)> & f) -> bool
{
    std::vector<int> def;
    for (int u : anchors)
        def.push_back(neighbor_deficiency(g, u, k));
    MultiLeafParams p{std::vector<int>(anchors.size(), 0), VertexSet(g.order()), VertexSet(g.order()), 0};

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i < anchors.size()) {
            for (int a = def[i]; a >= 0; --a) {
                p.a[i] = a;
                if (rec(i + 1))
                    return true;
            }
            return false;
        }
        p.b.clear();
        int limit = 0, smallest = 0;
        bool first = true;
        for (std::size_t j = 0; j < anchors.size(); ++j)
            if (p.a[j] < def[j]) {
                p.b.insert(anchors[j]);
                limit += p.a[j];
                smallest = first ? p.a[j] : std::min(smallest, p.a[j]);
                first = false;
            }
        if (p.b.empty()) {
            p.x.clear();
            p.a_b = 0;
            return f(p);
        }
        auto ground = anchor_sets(g, p.b).ground.members();
        for (int ab = smallest; ab >= 0; --ab) {
            p.a_b = ab;
            bool stop = for_each_subset(ground, limit, g.order(), [&](const VertexSet & x) {
                p.x = x;
                return f(p);
            });
            if (stop)
                return true;
        }
        return false;
    };
    return rec(0);
}

auto solve_with_leaf_anchor(const Graph & g, const Tree & t, const Anchoring & kappa, int k, const ColorCodingOptions & options,
    Rng & rng) -> SolveOutcome
{
    if (t.order() != g.min_degree() + k)
        fail(ErrorKind::PreconditionViolated, "tree order is not δ(G)+k");
    if (static_cast<int>(kappa.size()) != std::max(k - 1, 0))
        fail(ErrorKind::PreconditionViolated, "anchoring must fix exactly k−1 vertices");
    if (k <= 1)
        return Contains{chvatal_extend(g, t, PartialEmbedding(t.order(), g.order())), "chvatal"};

    VertexSet leaves(t.order());
    std::vector<int> anchors, leaf_of;
    VertexSet used_images(g.order());
    for (auto [s, u] : kappa) {
        if (s < 0 || s >= t.order() || u < 0 || u >= g.order())
            fail(ErrorKind::PreconditionViolated, "anchoring out of range");
        auto ls = leaf_neighbors(t, s);
        if (ls.empty())
            fail(ErrorKind::PreconditionViolated, "anchored vertex " + std::to_string(s) + " is not leaf-adjacent");
        if (used_images.contains(u) || leaves.contains(ls.front()))
            fail(ErrorKind::PreconditionViolated, "anchoring is not injective");
        used_images.insert(u);
        leaves.insert(ls.front());
        leaf_of.push_back(ls.front());
        anchors.push_back(u);
    }
    for (auto [s, u] : kappa)
        if (leaves.contains(s))
            fail(ErrorKind::PreconditionViolated, "anchored vertex is one of the reserved leaves");

    auto rest = all_vertices(t) - leaves;
    auto sub = induced_subtree(t, rest);
    Anchoring local;
    for (auto [s, u] : kappa)
        local.emplace_back(sub.local[s], u);
    auto anchor_set = VertexSet(g.order(), anchors);

    NotFound nf;
    nf.failure_exponent = options.failure_exponent;
    bool exact = true;
    std::optional<PartialEmbedding> found;
    for_each_multi_leaf_params(g, anchors, k, [&](const MultiLeafParams & p) {
        std::vector<Family> families;
        for (std::size_t i = 0; i < anchors.size(); ++i)
            families.push_back({g.closed_neighborhood(anchors[i]).complement(), p.a[i]});
        if (! p.b.empty()) {
            families.push_back({p.x, p.x.count()});
            families.push_back({anchor_sets(g, p.b).closed.complement(), p.a_b});
        }
        AhscInstance inst{g, sub.tree, local, families};
        auto res = solve_ahsc(inst, options, rng);
        nf.rounds += res.not_found.rounds;
        if (res.not_found.seed)
            nf.seed = res.not_found.seed;
        if (! res.solution) {
            exact = exact && res.exact;
            return false;
        }
        PartialEmbedding xi(t.order(), g.order());
        res.solution->subtree.for_each([&](int x) { xi.assign(sub.original[x], res.solution->embedding.image(x)); });
        xi = chvatal_extend(g, t, xi, rest);
        auto matching = max_bipartite_matching(g, anchor_set, xi.image_set().complement());
        if (matching.size() != anchors.size())
            return false;
        for (auto [u, w] : matching) {
            auto i = static_cast<std::size_t>(std::find(anchors.begin(), anchors.end(), u) - anchors.begin());
            xi.assign(leaf_of[i], w);
        }
        if (! verify_certificate(g, t, xi))
            panic("leaf-anchor extension produced an invalid embedding");
        found = std::move(xi);
        return true;
    });
    if (found)
        return Contains{std::move(*found), "small_diameter:leaf_anchor"};
    nf.reason = exact ? "no anchored extension" : "color coding trials exhausted";
    return nf;
}

auto w_candidates_around_centroid(const Tree & t, int k) -> WCandidates
{
    WCandidates w;
    w.root = centroid(t);
    w.w_set = VertexSet(t.order());
    RootedView view(t, w.root);
    std::map<CanonicalCode, std::size_t> index;
    for (int c : view.children[w.root]) {
        auto code = canonical_code(t, view, c);
        auto [it, fresh] = index.emplace(code, w.classes.size());
        if (fresh)
            w.classes.emplace_back();
        w.classes[it->second].push_back(c);
    }
    for (auto & cls : w.classes) {
        std::vector<int> reps(cls.begin(), cls.begin() + std::min<std::ptrdiff_t>(std::max(k - 1, 0), std::ssize(cls)));
        for (int c : reps)
            for (int x : subtree_vertices(view, c))
                if (! leaf_neighbors(t, x).empty())
                    w.w_set.insert(x);
        w.representatives.push_back(std::move(reps));
    }
    return w;
}

auto build_w_candidates(const Tree & t, int k, int p) -> WCandidates
{
    long long q = saturating_power(k, p);
    if (q <= t.order() && find_separable_edge(t, static_cast<int>(q)))
        fail(ErrorKind::TreeIsSeparable, "tree is " + std::to_string(q) + "-separable");
    return w_candidates_around_centroid(t, k);
}

auto solve_small_diameter(const Graph & g, const Tree & t, int k, int p, const SmallDiameterConfig & config, Rng & rng)
    -> SolveOutcome
{
    int delta = g.min_degree();
    if (t.order() != delta + k)
        fail(ErrorKind::PreconditionViolated, "tree order is not δ(G)+k");
    WCandidates w;
    if (config.strict) {
        long long q = saturating_power(k, p);
        if (delta < saturating_power(k, 3 * p + 1))
            fail(ErrorKind::PreconditionViolated, "δ(G) < k^(3p+1)");
        for (int v = 0; v < g.order(); ++v)
            if (q <= g.order() && is_q_escape(g, v, static_cast<int>(q)))
                fail(ErrorKind::PreconditionViolated, "vertex " + std::to_string(v) + " is a k^p-escape vertex");
        if (t.order() >= 2 && leaf_degree(t).value >= k)
            fail(ErrorKind::PreconditionViolated, "ld(T) ≥ k");
        try {
            w = build_w_candidates(t, k, p);
        } catch (const Error & err) {
            fail(ErrorKind::PreconditionViolated, err.message());
        }
    } else {
        w = w_candidates_around_centroid(t, k);
    }
    if (k <= 1)
        return Contains{chvatal_extend(g, t, PartialEmbedding(t.order(), g.order())), "chvatal"};

    NotFound nf;
    nf.failure_exponent = config.failure_exponent;
    auto candidates = w.w_set.members();
    int slots = k - 1;
    if (static_cast<int>(candidates.size()) < slots) {
        nf.reason = "candidate set smaller than k−1";
        return nf;
    }
    long long rounds = std::max<long long>(1, 2 * saturating_power(k, p + 2) * config.failure_exponent);
    nf.seed = rng.next();
    std::set<Anchoring> dead;

    for (long long round = 0; round < rounds; ++round) {
        Rng rr(derive_seed(nf.seed, 2, static_cast<std::uint64_t>(round)));
        nf.rounds = round + 1;
        for (int u = 0; u < g.order(); ++u) {
            if (g.degree(u) < slots)
                continue;
            std::vector<int> pool(g.neighbors(u).begin(), g.neighbors(u).end());
            rr.partial_shuffle(pool, static_cast<std::size_t>(slots));
            std::vector<int> sample(pool.begin(), pool.begin() + slots);
            std::sort(sample.begin(), sample.end());

            std::vector<int> pick;
            std::vector<char> taken(candidates.size(), 0);
            std::optional<SolveOutcome> hit;
            std::function<void()> rec = [&]() {
                if (hit)
                    return;
                if (static_cast<int>(pick.size()) == slots) {
                    Anchoring kappa;
                    for (int j = 0; j < slots; ++j)
                        kappa.emplace_back(pick[j], sample[j]);
                    if (dead.count(kappa))
                        return;
                    auto out = solve_with_leaf_anchor(g, t, kappa, k, config.color, rr);
                    if (is_contains(out))
                        hit = std::move(out);
                    else if (std::get<NotFound>(out).reason == "no anchored extension")
                        dead.insert(kappa);
                    return;
                }
                for (std::size_t i = 0; i < candidates.size() && ! hit; ++i) {
                    if (taken[i])
                        continue;
                    taken[i] = 1;
                    pick.push_back(candidates[i]);
                    rec();
                    pick.pop_back();
                    taken[i] = 0;
                }
            };
            rec();
            if (hit) {
                std::get<Contains>(*hit).branch = "small_diameter";
                return std::move(*hit);
            }
        }
    }
    nf.reason = "rounds exhausted";
    return nf;
}

}
