#include <treefit/dense_regime.hpp>
#include <treefit/error.hpp>

#include <algorithm>
#include <string>

namespace treefit {

auto hitting_set_lower_bound(const Tree & t) -> int
{
    int numerator = t.order() - 3 * static_cast<int>(t.leaves().size()) + 6;
    return numerator <= 0 ? 0 : (numerator + 1) / 2;
}

namespace {
    auto leaf_degree_within(const Tree & t, const VertexSet & within) -> int
    {
        int best = 0;
        within.for_each([&](int v) {
            int c = 0;
            for (int y : t.neighbors(v))
                c += within.contains(y) && degree_within(t, within, y) == 1;
            best = std::max(best, c);
        });
        return best;
    }

    auto leaves_within(const Tree & t, const VertexSet & within) -> std::vector<int>
    {
        std::vector<int> out;
        within.for_each([&](int v) {
            if (degree_within(t, within, v) == 1)
                out.push_back(v);
        });
        return out;
    }

    class DenseInduction {
    public:
        DenseInduction(const Graph & g, const Tree & t, int k, bool strict, DenseTrace * trace)
            : g_(g), t_(t), k_(k), strict_(strict), trace_(trace), e_(t.order(), g.order())
        {
        }

        auto run() -> std::optional<PartialEmbedding>
        {
            int delta = g_.min_degree();
            int base = std::min(t_.order(), delta + 1);
            auto order = dense_removal_order(t_, base);
            auto inside = all_vertices(t_);
            for (int u : order)
                inside.erase(u);
            e_ = chvatal_extend(g_, t_, PartialEmbedding(t_.order(), g_.order()), inside);
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                if (! add_leaf(*it, inside))
                    return std::nullopt;
                inside.insert(*it);
                if (! verify(e_, g_, t_))
                    panic("dense induction step broke the embedding");
            }
            return e_;
        }

    private:
        auto stuck(const std::string & what) -> bool
        {
            if (strict_)
                panic(what);
            return false;
        }

        auto parent_of(int u, const VertexSet & inside) const -> int
        {
            for (int y : t_.neighbors(u))
                if (inside.contains(y))
                    return y;
            panic("leaf to add has no mapped neighbor");
        }

        // Adds u to the embedded subtree `inside`.
        auto add_leaf(int u, const VertexSet & inside) -> bool
        {
            int v = parent_of(u, inside);
            int sv = e_.image(v);
            for (int w : g_.neighbors(sv))
                if (! e_.is_used(w)) {
                    e_.assign(u, w);
                    if (trace_)
                        ++trace_->free_steps;
                    return true;
                }

            auto grown = inside;
            grown.insert(u);
            long long leaves = static_cast<long long>(leaves_within(t_, grown).size());
            // (εδ + k)(k−1) with εδ = n − δ
            long long threshold = static_cast<long long>(g_.order() - g_.min_degree() + k_) * (k_ - 1);
            if (leaves >= threshold) {
                if (leaf_swap(u, v, grown))
                    return true;
                if (strict_)
                    return stuck("no leaf swap although the tree has many leaves");
                return relocate(u, v, inside);
            }
            if (relocate(u, v, inside))
                return true;
            if (strict_)
                return stuck("no vertex can be relocated to an outside vertex");
            return leaf_swap(u, v, grown);
        }

        // Moves the image of some leaf ℓ_x to an outside vertex w adjacent to
        // σ(x) and puts u on the old image of ℓ_x.
        auto leaf_swap(int u, int v, const VertexSet & grown) -> bool
        {
            int sv = e_.image(v);
            std::vector<int> chosen(static_cast<std::size_t>(t_.order()), -1);    // x -> ℓ_x
            for (int l : leaves_within(t_, grown)) {
                if (l == u)
                    continue;
                int x = parent_of(l, grown);
                if (x != v && chosen[x] == -1)
                    chosen[x] = l;
            }
            for (int w = 0; w < g_.order(); ++w) {
                if (e_.is_used(w))
                    continue;
                for (int x = 0; x < t_.order(); ++x) {
                    int l = chosen[x];
                    if (l == -1 || ! g_.adjacent(sv, e_.image(l)) || ! g_.adjacent(e_.image(x), w))
                        continue;
                    int old = e_.image(l);
                    e_.unassign(l);
                    e_.assign(l, w);
                    e_.assign(u, old);
                    if (trace_)
                        ++trace_->leaf_swaps;
                    return true;
                }
            }
            return false;
        }

        // Moves some x ≠ v with σ(x) adjacent to σ(v) to an outside vertex w
        // adjacent to the images of all tree neighbors of x, then puts u on
        // the old image of x.
        auto relocate(int u, int v, const VertexSet & inside) -> bool
        {
            int sv = e_.image(v);
            for (int w = 0; w < g_.order(); ++w) {
                if (e_.is_used(w))
                    continue;
                auto nw = g_.neighborhood(w);
                for (int x = 0; x < t_.order(); ++x) {
                    if (x == v || ! inside.contains(x) || ! g_.adjacent(sv, e_.image(x)))
                        continue;
                    bool fits = true;
                    for (int y : t_.neighbors(x))
                        if (inside.contains(y) && ! nw.contains(e_.image(y))) {
                            fits = false;
                            break;
                        }
                    if (! fits)
                        continue;
                    int old = e_.image(x);
                    e_.unassign(x);
                    e_.assign(x, w);
                    e_.assign(u, old);
                    if (trace_)
                        ++trace_->relocations;
                    return true;
                }
            }
            return false;
        }

        const Graph & g_;
        const Tree & t_;
        int k_;
        bool strict_;
        DenseTrace * trace_;
        PartialEmbedding e_;
    };
}

auto dense_removal_order(const Tree & t, int stop_size) -> std::vector<int>
{
    std::vector<int> order;
    auto inside = all_vertices(t);
    int current = leaf_degree_within(t, inside);
    while (inside.count() > std::max(stop_size, 1)) {
        int pick = -1, fallback = -1;
        for (int l : leaves_within(t, inside)) {
            if (fallback == -1)
                fallback = l;
            inside.erase(l);
            int after = leaf_degree_within(t, inside);
            inside.insert(l);
            if (after <= current) {
                pick = l;
                break;
            }
        }
        if (pick == -1) {
            // only the path on four vertices has no such leaf
            if (inside.count() > 4)
                panic("no leaf keeps the leaf-degree from growing");
            pick = fallback;
        }
        inside.erase(pick);
        order.push_back(pick);
        current = leaf_degree_within(t, inside);
    }
    return order;
}

auto embed_dense(const Graph & g, const Tree & t, int k, DenseTrace * trace) -> PartialEmbedding
{
    int delta = g.min_degree();
    int n = g.order();
    if (k < 1)
        fail(ErrorKind::PreconditionViolated, "k must be positive");
    if (delta < 12 * k * k)
        fail(ErrorKind::PreconditionViolated, "δ(G) < 12k²");
    if (n < delta + k)
        fail(ErrorKind::PreconditionViolated, "|V(G)| < δ(G)+k");
    // n ≤ (1 + 1/(4k))·δ, in integers
    if (4LL * k * n > (4LL * k + 1) * delta)
        fail(ErrorKind::PreconditionViolated, "|V(G)| > (1+1/(4k))δ(G)");
    if (t.order() > delta + k)
        fail(ErrorKind::PreconditionViolated, "tree has more than δ(G)+k vertices");
    if (leaf_degree(t).value >= k)
        fail(ErrorKind::PreconditionViolated, "ld(T) ≥ k");
    auto e = DenseInduction(g, t, k, true, trace).run();
    if (! e || ! verify_certificate(g, t, *e))
        panic("dense induction produced no embedding");
    return *e;
}

auto try_embed_dense(const Graph & g, const Tree & t, DenseTrace * trace) -> std::optional<PartialEmbedding>
{
    if (t.order() > g.order() || g.order() == 0)
        return std::nullopt;
    auto e = DenseInduction(g, t, std::max(leaf_degree(t).value + 1, t.order() - g.min_degree()), false, trace).run();
    if (e && ! verify_certificate(g, t, *e))
        panic("dense induction produced an invalid embedding");
    return e;
}

}
