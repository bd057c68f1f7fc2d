#include <treefit/color_coding.hpp>
#include <treefit/error.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <unordered_map>

namespace treefit {

namespace {
    // Per-family hit counts packed in mixed radix (quota+1 per family), capped.
    class Composition {
    public:
        explicit Composition(const std::vector<Family> & families)
        {
            std::uint64_t stride = 1;
            for (auto & f : families) {
                caps_.push_back(static_cast<std::uint64_t>(f.quota));
                strides_.push_back(stride);
                if (stride > (std::uint64_t{1} << 40) / (caps_.back() + 1))
                    fail(ErrorKind::InvalidArgument, "too many quota combinations for the dynamic program");
                stride *= caps_.back() + 1;
            }
            count_ = stride;
            for (std::size_t i = 0; i < caps_.size(); ++i)
                full_ += caps_[i] * strides_[i];
        }

        auto count() const -> std::uint64_t { return count_; }
        auto full() const -> std::uint64_t { return full_; }

        auto single(const std::vector<Family> & families, int v) const -> std::uint64_t
        {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < caps_.size(); ++i)
                if (caps_[i] > 0 && families[i].members.contains(v))
                    code += strides_[i];
            return code;
        }

        auto add(std::uint64_t a, std::uint64_t b) const -> std::uint64_t
        {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < caps_.size(); ++i) {
                std::uint64_t radix = caps_[i] + 1;
                std::uint64_t x = a / strides_[i] % radix + b / strides_[i] % radix;
                code += std::min(x, caps_[i]) * strides_[i];
            }
            return code;
        }

    private:
        std::vector<std::uint64_t> caps_;
        std::vector<std::uint64_t> strides_;
        std::uint64_t count_ = 1;
        std::uint64_t full_ = 0;
    };

    auto kappa_images(const Tree & t, const Graph & g, const Anchoring & kappa) -> std::vector<int>
    {
        std::vector<int> image(static_cast<std::size_t>(t.order()), -1);
        std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
        for (auto [x, v] : kappa) {
            if (x < 0 || x >= t.order() || v < 0 || v >= g.order())
                fail(ErrorKind::InvalidArgument, "anchoring out of range");
            if (image[x] != -1 || used[v])
                fail(ErrorKind::InvalidArgument, "anchoring is not injective");
            image[x] = v;
            used[v] = 1;
        }
        return image;
    }

    class ConstrainedSearch {
    public:
        ConstrainedSearch(const Graph & g, const Tree & t, const Anchoring & kappa, const std::vector<Family> & families,
            std::uint64_t cap) :
            g_(g), t_(t), families_(families), cap_(cap), e_(t.order(), g.order()),
            image_(kappa_images(t, g, kappa)), reserved_(static_cast<std::size_t>(g.order()), 0),
            hits_(families.size(), 0)
        {
            for (auto [x, v] : kappa)
                reserved_[v] = 1;
            int root = kappa.empty() ? 0 : kappa.front().first;
            if (kappa.empty())
                for (int x = 0; x < t.order(); ++x)
                    if (t.degree(x) > t.degree(root))
                        root = x;
            RootedView view(t, root);
            order_ = view.order;
            parent_ = view.parent;
        }

        auto run() -> std::optional<PartialEmbedding>
        {
            if (place(0))
                return e_;
            return std::nullopt;
        }

    private:
        auto place(std::size_t i) -> bool
        {
            if (cap_ && ++nodes_ > cap_)
                fail(ErrorKind::BudgetExceeded, "exact search node cap reached");
            int remaining = static_cast<int>(order_.size() - i);
            for (std::size_t f = 0; f < families_.size(); ++f)
                if (families_[f].quota - hits_[f] > remaining)
                    return false;
            if (i == order_.size())
                return true;
            int x = order_[i];
            auto attempt = [&](int v) -> bool {
                if (e_.is_used(v) || g_.degree(v) < t_.degree(x))
                    return false;
                if (reserved_[v] && image_[x] != v)
                    return false;
                e_.assign(x, v);
                for (std::size_t f = 0; f < families_.size(); ++f)
                    hits_[f] += families_[f].members.contains(v);
                bool ok = place(i + 1);
                if (! ok) {
                    for (std::size_t f = 0; f < families_.size(); ++f)
                        hits_[f] -= families_[f].members.contains(v);
                    e_.unassign(x);
                }
                return ok;
            };
            if (image_[x] != -1) {
                if (parent_[x] != -1 && ! g_.adjacent(e_.image(parent_[x]), image_[x]))
                    return false;
                return attempt(image_[x]);
            }
            if (parent_[x] == -1) {
                for (int v = 0; v < g_.order(); ++v)
                    if (attempt(v))
                        return true;
                return false;
            }
            for (int v : g_.neighbors(e_.image(parent_[x])))
                if (attempt(v))
                    return true;
            return false;
        }

        const Graph & g_;
        const Tree & t_;
        const std::vector<Family> & families_;
        std::uint64_t cap_;
        std::uint64_t nodes_ = 0;
        PartialEmbedding e_;
        std::vector<int> image_;
        std::vector<char> reserved_;
        std::vector<int> hits_;
        std::vector<int> order_;
        std::vector<int> parent_;
    };

    struct Back {
        std::uint64_t prev;
        int u;
        std::uint64_t child;
    };

    using StateMap = std::unordered_map<std::uint64_t, Back>;

    auto log_dp_cost(const Graph & g, int s, long long trials, std::uint64_t compositions) -> double
    {
        return std::log(static_cast<double>(trials)) + std::log(std::max(1, g.order()))
            + s * std::numbers::ln2 + std::log(std::max(1, g.max_degree())) + std::log(static_cast<double>(compositions));
    }

    // min of n·Δ^(s−1) and the number of injections n!/(n−s)!
    auto log_backtracking_cost(const Graph & g, int s) -> double
    {
        int n = std::max(1, g.order());
        double walks = std::log(n) + (s - 1) * std::log(std::max(1, g.max_degree()));
        double injections = std::lgamma(n + 1.0) - std::lgamma(std::max(1.0, n - s + 1.0));
        return std::min(walks, injections);
    }
}

auto trial_count(int size, int failure_exponent) -> long long
{
    double trials = std::ceil(std::exp(static_cast<double>(size)) * failure_exponent * std::numbers::ln2);
    return std::max<long long>(1, static_cast<long long>(trials));
}

auto random_coloring(const Graph & g, int palette, const Anchoring & kappa, Rng & rng) -> Coloring
{
    Coloring c;
    c.palette = palette;
    c.seed = rng.seed();
    c.color.assign(static_cast<std::size_t>(g.order()), -1);
    int reserved = static_cast<int>(kappa.size());
    if (reserved > palette)
        fail(ErrorKind::InvalidArgument, "more anchored vertices than colors");
    std::vector<char> anchored(static_cast<std::size_t>(g.order()), 0);
    for (auto [x, v] : kappa)
        anchored[v] = 1;
    for (int v = 0; v < g.order(); ++v)
        if (! anchored[v] && palette > reserved)
            c.color[v] = reserved + static_cast<int>(rng.below(static_cast<std::uint64_t>(palette - reserved)));
    for (int i = 0; i < reserved; ++i)
        c.color[kappa[i].second] = i;
    return c;
}

auto meets_quotas(const PartialEmbedding & e, const std::vector<Family> & families) -> bool
{
    auto image = e.image_set();
    for (auto & f : families)
        if (image.intersection_count(f.members) < f.quota)
            return false;
    return true;
}

auto colorful_full_tree_dp(const Graph & g, const Tree & t, const Coloring & coloring, const Anchoring & kappa,
    const std::vector<Family> & families) -> std::optional<PartialEmbedding>
{
    int s = t.order();
    int n = g.order();
    if (coloring.palette != s)
        fail(ErrorKind::PreconditionViolated, "palette must equal the tree order");
    Composition comp(families);
    int comp_bits = std::bit_width(comp.count());
    if (s + comp_bits > 64)
        fail(ErrorKind::PreconditionViolated, "tree too large for 64-bit dynamic program states");
    auto image = kappa_images(t, g, kappa);
    int reserved = static_cast<int>(kappa.size());
    int root = kappa.empty() ? 0 : kappa.front().first;
    RootedView view(t, root);

    auto mask_of = [&](std::uint64_t key) { return key & ((s == 64 ? 0 : (std::uint64_t{1} << s)) - 1); };
    auto comp_of = [&](std::uint64_t key) { return key >> s; };
    auto make_key = [&](std::uint64_t mask, std::uint64_t code) { return mask | (code << s); };

    // stages[x][v][j]: states after combining the first j children of x with x -> v
    std::vector<std::vector<std::vector<StateMap>>> stages(static_cast<std::size_t>(s));
    for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
        int x = *it;
        auto & children = view.children[x];
        stages[x].resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            int col = coloring.color[v];
            if (image[x] != -1 ? image[x] != v : (col < reserved || g.degree(v) < t.degree(x)))
                continue;
            auto & st = stages[x][v];
            st.emplace_back();
            st.back().emplace(make_key(std::uint64_t{1} << col, comp.single(families, v)), Back{0, -1, 0});
            for (int ch : children) {
                StateMap next;
                for (auto & [k1, b1] : st.back()) {
                    for (int u : g.neighbors(v)) {
                        auto & child_stages = stages[ch][u];
                        if (child_stages.size() != view.children[ch].size() + 1)
                            continue;
                        for (auto & [k2, b2] : child_stages.back()) {
                            if (mask_of(k1) & mask_of(k2))
                                continue;
                            auto key = make_key(mask_of(k1) | mask_of(k2), comp.add(comp_of(k1), comp_of(k2)));
                            next.emplace(key, Back{k1, u, k2});
                        }
                    }
                }
                if (next.empty())
                    break;
                st.push_back(std::move(next));
            }
            if (st.size() != children.size() + 1)
                st.clear();
        }
    }

    std::uint64_t full_mask = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
    auto target = make_key(full_mask, comp.full());
    for (int v = 0; v < n; ++v) {
        auto & st = stages[root][v];
        if (st.empty() || ! st.back().count(target))
            continue;
        PartialEmbedding e(s, n);
        std::function<void(int, int, std::uint64_t)> rebuild = [&](int x, int gv, std::uint64_t key) {
            e.assign(x, gv);
            auto & chain = stages[x][gv];
            for (std::size_t j = view.children[x].size(); j > 0; --j) {
                const Back & b = chain[j].at(key);
                rebuild(view.children[x][j - 1], b.u, b.child);
                key = b.prev;
            }
        };
        rebuild(root, v, target);
        return e;
    }
    return std::nullopt;
}

auto exact_constrained_search(const Graph & g, const Tree & t, const Anchoring & kappa, const std::vector<Family> & families,
    std::uint64_t node_cap) -> std::optional<PartialEmbedding>
{
    if (t.order() > g.order())
        return std::nullopt;
    return ConstrainedSearch(g, t, kappa, families, node_cap).run();
}

auto find_constrained_embedding(const Graph & g, const Tree & t, const Anchoring & kappa, const std::vector<Family> & families,
    const ColorCodingOptions & options, Rng & rng) -> SearchResult
{
    SearchResult out;
    kappa_images(t, g, kappa);
    int s = t.order();
    if (s > g.order()) {
        out.exact = true;
        out.reason = "tree larger than graph";
        return out;
    }
    for (auto & f : families)
        if (f.quota > s || f.quota > f.members.count()) {
            out.exact = true;
            out.reason = "quota cannot be met";
            return out;
        }

    auto check = [&](PartialEmbedding e) {
        if (! verify_certificate(g, t, e) || ! meets_quotas(e, families))
            panic("constrained search returned an invalid embedding");
        for (auto [x, v] : kappa)
            if (e.image(x) != v)
                panic("constrained search moved an anchored vertex");
        out.embedding = std::move(e);
    };

    long long trials = trial_count(s, options.failure_exponent);
    if (options.max_trials > 0)
        trials = std::min(trials, options.max_trials);
    Composition comp(families);
    bool exact = ! options.force_randomized
        && (s <= options.exact_threshold || log_dp_cost(g, s, trials, comp.count()) >= log_backtracking_cost(g, s));
    if (exact) {
        try {
            auto e = exact_constrained_search(g, t, kappa, families, options.node_cap);
            if (e)
                check(std::move(*e));
            out.exact = ! out.embedding;
            out.reason = "exhaustive search";
        } catch (const Error & err) {
            if (err.kind() != ErrorKind::BudgetExceeded)
                throw;
            out.reason = "BudgetExceeded";
        }
        return out;
    }

    out.seed = rng.next();
    for (long long i = 0; i < trials; ++i) {
        Rng trial(derive_seed(out.seed, 1, static_cast<std::uint64_t>(i)));
        auto coloring = random_coloring(g, s, kappa, trial);
        out.rounds = i + 1;
        if (auto e = colorful_full_tree_dp(g, t, coloring, kappa, families)) {
            check(std::move(*e));
            return out;
        }
    }
    out.reason = "color coding trials exhausted";
    return out;
}

auto contains_tree_by_size(const Graph & g, const Tree & t, const ColorCodingOptions & options, Rng & rng) -> SolveOutcome
{
    if (t.order() < 1)
        fail(ErrorKind::PreconditionViolated, "empty tree");
    if (t.order() > g.order())
        return NotContained{"tree larger than graph"};
    if (t.max_degree() > g.max_degree())
        return NotContained{"tree degree exceeds graph degree"};
    auto r = find_constrained_embedding(g, t, {}, {}, options, rng);
    if (r.embedding)
        return Contains{std::move(*r.embedding), "color_coding"};
    if (r.exact)
        return NotContained{r.reason};
    return NotFound{r.rounds, r.seed, options.failure_exponent, r.reason};
}

auto rooted_subtree_candidates(const Tree & t, int root, const VertexSet & region, int leaves) -> std::vector<VertexSet>
{
    VertexSet base(t.order(), {root});
    if (leaves == 0)
        return {base};
    RootedView view(t, root, &region);
    // Euler intervals for ancestor tests
    std::vector<int> tin(static_cast<std::size_t>(t.order()), 0), tout(static_cast<std::size_t>(t.order()), 0);
    int clock = 0;
    std::function<void(int)> dfs = [&](int x) {
        tin[x] = clock++;
        for (int c : view.children[x])
            dfs(c);
        tout[x] = clock;
    };
    dfs(root);
    auto related = [&](int a, int b) {
        return (tin[a] <= tin[b] && tin[b] < tout[a]) || (tin[b] <= tin[a] && tin[a] < tout[b]);
    };
    std::vector<int> pool(view.order.begin() + 1, view.order.end());
    std::vector<VertexSet> out;
    std::set<CanonicalCode> seen;
    std::vector<int> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == leaves) {
            auto set = base;
            for (int x : chosen)
                for (int y = x; y != -1 && ! set.contains(y); y = view.parent[y])
                    set.insert(y);
            if (seen.insert(canonical_code(t, root, &set)).second)
                out.push_back(std::move(set));
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                ok = ok && ! related(c, pool[i]);
            if (! ok)
                continue;
            chosen.push_back(pool[i]);
            pick(i + 1);
            chosen.pop_back();
        }
    };
    pick(0);
    return out;
}

auto solve_ahsc(const AhscInstance & inst, const ColorCodingOptions & options, Rng & rng) -> AhscResult
{
    const Graph & g = inst.g;
    const Tree & t = inst.t;
    kappa_images(t, g, inst.kappa);
    AhscResult result;
    result.not_found.failure_exponent = options.failure_exponent;
    for (auto & f : inst.families) {
        if (f.quota < 0 || f.members.universe() != g.order())
            fail(ErrorKind::InvalidArgument, "malformed family");
        if (f.quota > f.members.count()) {
            result.exact = true;
            result.not_found.reason = "quota exceeds family size";
            return result;
        }
    }

    if (inst.kappa.empty()) {
        bool trivial = std::all_of(inst.families.begin(), inst.families.end(), [](auto & f) { return f.quota == 0; });
        if (trivial && g.order() > 0) {
            PartialEmbedding e(t.order(), g.order());
            e.assign(0, 0);
            result.solution = AhscSolution{VertexSet(t.order(), {0}), e};
            return result;
        }
        result.exact = true;
        for (int x = 0; x < t.order(); ++x)
            for (int v = 0; v < g.order(); ++v) {
                AhscInstance anchored{g, t, {{x, v}}, inst.families};
                auto sub = solve_ahsc(anchored, options, rng);
                result.not_found.rounds += sub.not_found.rounds;
                if (sub.solution)
                    return sub;
                result.exact = result.exact && sub.exact;
            }
        result.not_found.reason = result.exact ? "no hitting subtree" : "color coding trials exhausted";
        return result;
    }

    VertexSet anchors(t.order());
    for (auto [x, v] : inst.kappa)
        anchors.insert(x);
    auto core = minimal_spanning_subtree(t, anchors);
    int total_quota = 0;
    for (auto & f : inst.families)
        total_quota += f.quota;

    // vertices of the core with something hanging off them
    struct Hook {
        int root;
        VertexSet region;
        int max_leaves;
        std::map<int, std::vector<VertexSet>> candidates;
    };
    std::vector<Hook> hooks;
    core.for_each([&](int w) {
        VertexSet region(t.order(), {w});
        std::vector<int> stack{w};
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : t.neighbors(x))
                if (! core.contains(y) && ! region.contains(y)) {
                    region.insert(y);
                    stack.push_back(y);
                }
        }
        if (region.count() > 1) {
            int leaf_count = 0;
            region.for_each([&](int y) { leaf_count += y != w && degree_within(t, region, y) == 1; });
            hooks.push_back({w, region, std::min(leaf_count, total_quota), {}});
        }
    });

    auto candidates = [&](Hook & h, int a) -> const std::vector<VertexSet> & {
        auto it = h.candidates.find(a);
        if (it != h.candidates.end())
            return it->second;
        auto list = rooted_subtree_candidates(t, h.root, h.region, a);
        for (auto & c : list) {
            auto small = induced_subtree(t, c);
            if (! is_rooted_subtree(small.tree, small.local[h.root], t, h.root, nullptr, &h.region))
                panic("candidate hanging subtree is not a rooted subtree of its region");
        }
        return h.candidates.emplace(a, std::move(list)).first->second;
    };

    result.exact = true;
    std::vector<int> split(hooks.size(), 0);
    std::vector<const VertexSet *> choice(hooks.size(), nullptr);
    bool done = false;

    auto try_subtree = [&](const VertexSet & sub) {
        auto local = induced_subtree(t, sub);
        Anchoring kappa;
        for (auto [x, v] : inst.kappa)
            kappa.emplace_back(local.local[x], v);
        auto r = find_constrained_embedding(g, local.tree, kappa, inst.families, options, rng);
        result.not_found.rounds += r.rounds;
        if (r.seed)
            result.not_found.seed = r.seed;
        if (r.embedding) {
            PartialEmbedding e(t.order(), g.order());
            for (int i = 0; i < local.tree.order(); ++i)
                e.assign(local.original[i], r.embedding->image(i));
            result.solution = AhscSolution{sub, std::move(e)};
            done = true;
        }
        result.exact = result.exact && r.exact;
    };

    std::function<void(std::size_t)> assemble = [&](std::size_t i) {
        if (done)
            return;
        if (i == hooks.size()) {
            auto sub = core;
            for (auto * c : choice)
                sub |= *c;
            try_subtree(sub);
            return;
        }
        for (auto & c : candidates(hooks[i], split[i])) {
            choice[i] = &c;
            assemble(i + 1);
            if (done)
                return;
        }
    };

    // compositions in lexicographic order
    std::function<void(std::size_t, int)> compose = [&](std::size_t i, int left) {
        if (done)
            return;
        if (i == hooks.size()) {
            assemble(0);
            return;
        }
        for (int a = 0; a <= std::min(left, hooks[i].max_leaves) && ! done; ++a) {
            split[i] = a;
            compose(i + 1, left - a);
        }
    };
    compose(0, total_quota);

    if (! result.solution)
        result.not_found.reason = result.exact ? "no hitting subtree" : "color coding trials exhausted";
    return result;
}

}
