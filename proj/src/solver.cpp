#include <treefit/solver.hpp>

#include <treefit/color_coding.hpp>
#include <treefit/dense_regime.hpp>
#include <treefit/error.hpp>
#include <treefit/high_leaf_degree.hpp>
#include <treefit/medium_diameter.hpp>
#include <treefit/numeric.hpp>
#include <treefit/preserving_paths.hpp>
#include <treefit/rng.hpp>
#include <treefit/small_diameter.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

namespace treefit {

auto ladder_case_name(LadderCase c) -> std::string
{
    switch (c) {
    case LadderCase::Chvatal: return "chvatal";
    case LadderCase::Size: return "size";
    case LadderCase::DeltaPlusTwo: return "delta_plus_two";
    case LadderCase::SmallDelta: return "small_delta";
    case LadderCase::HighLeafDegree: return "high_leaf_degree";
    case LadderCase::Dense: return "dense";
    case LadderCase::LargeDiameter: return "large_diameter";
    case LadderCase::Medium: return "medium";
    case LadderCase::SmallDiameter: return "small_diameter";
    }
    panic("unknown ladder case");
}

auto LadderThresholds::literal(int k, int delta) -> LadderThresholds
{
    LadderThresholds th;
    th.p = 15;
    th.small_delta = saturating_power(k, 3 * th.p + 1);
    double d = 8.0 * std::pow(k, 6) * std::log2(std::max(delta, 1));
    th.large_diameter = static_cast<long long>(std::min(std::ceil(d), 9e18));
    th.escape_q = saturating_power(k, th.p);
    th.separable_q = th.escape_q;
    return th;
}

auto LadderThresholds::relaxed(int k) -> LadderThresholds
{
    LadderThresholds th;
    th.p = 1;
    th.small_delta = 3LL * k;
    th.large_diameter = 4LL * k;
    th.escape_q = static_cast<long long>(k) * k;
    th.separable_q = th.escape_q;
    return th;
}

namespace {

auto thresholds_for(int k, int delta, bool relaxed) -> LadderThresholds
{
    return relaxed ? LadderThresholds::relaxed(k) : LadderThresholds::literal(k, delta);
}

auto has_escape_vertex(const Graph & g, long long q) -> bool
{
    // a q-escape vertex needs degree δ+q or a matching of size q
    if (q >= g.order())
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (is_q_escape(g, v, static_cast<int>(q)))
            return true;
    return false;
}

auto color_options(const SolveConfig & config) -> ColorCodingOptions
{
    ColorCodingOptions o;
    o.failure_exponent = config.failure_exponent;
    o.node_cap = config.node_cap;
    o.max_trials = config.max_trials;
    o.force_randomized = config.force_randomized;
    if (config.mode == SolveMode::Budgeted) {
        if (o.node_cap == 0)
            o.node_cap = budgeted_node_cap;
        if (o.max_trials == 0)
            o.max_trials = budgeted_max_trials;
    }
    return o;
}

auto retag(SolveOutcome out, const std::string & branch) -> SolveOutcome
{
    if (auto * c = std::get_if<Contains>(&out))
        c->branch = branch;
    return out;
}

class ComponentSolver {
public:
    ComponentSolver(const Graph & g, const Tree & t, const SolveConfig & config, Rng & rng)
        : g_(g), t_(t), config_(config), rng_(rng), color_(color_options(config))
    {
    }

    auto run(LadderCase c) -> SolveOutcome
    {
        int k = t_.order() - g_.min_degree();
        switch (c) {
        case LadderCase::Chvatal:
            return Contains{chvatal_extend(g_, t_, PartialEmbedding(t_.order(), g_.order())), "chvatal"};
        case LadderCase::Size:
            return NotContained{"tree larger than graph"};
        case LadderCase::DeltaPlusTwo:
            return solve_delta_plus_two(g_, t_);
        case LadderCase::SmallDelta:
            return by_size("color_coding");
        default:
            break;
        }
        if (config_.relaxed)
            return relaxed(c, k);
        try {
            return literal(c, k);
        } catch (const Error & err) {
            panic("ladder case " + ladder_case_name(c) + " failed: " + err.what());
        }
    }

private:
    auto by_size(const std::string & branch) -> SolveOutcome
    {
        auto out = retag(contains_tree_by_size(g_, t_, color_, rng_), branch);
        if (auto * nf = std::get_if<NotFound>(&out); nf && config_.mode == SolveMode::Budgeted)
            if (nf->reason != "BudgetExceeded" && color_.max_trials > 0 && nf->rounds >= color_.max_trials
                && trial_count(t_.order(), config_.failure_exponent) > color_.max_trials)
                nf->reason = "BudgetExceeded";
        return out;
    }

    auto literal(LadderCase c, int k) -> SolveOutcome
    {
        switch (c) {
        case LadderCase::HighLeafDegree: {
            HighLeafConfig hc;
            hc.color = color_;
            return solve_high_leaf_degree(g_, t_, k, hc, rng_);
        }
        case LadderCase::Dense:
            return Contains{embed_dense(g_, t_, k), "dense"};
        case LadderCase::LargeDiameter:
            return Contains{solve_large_diameter(g_, t_, k), "large_diameter"};
        case LadderCase::Medium: {
            auto r = solve_medium(g_, t_, k);
            return Contains{std::move(r.embedding), r.branch};
        }
        case LadderCase::SmallDiameter: {
            SmallDiameterConfig sc;
            sc.failure_exponent = config_.failure_exponent;
            sc.color = color_;
            return solve_small_diameter(g_, t_, k, 15, sc, rng_);
        }
        default:
            panic("constructive case expected");
        }
    }

    auto relaxed(LadderCase c, int k) -> SolveOutcome
    {
        std::string fallback = "fallback:" + ladder_case_name(c);
        switch (c) {
        case LadderCase::HighLeafDegree: {
            HighLeafConfig hc;
            hc.strict = false;
            hc.color = color_;
            return solve_high_leaf_degree(g_, t_, k, hc, rng_);
        }
        case LadderCase::Dense:
            if (auto e = try_embed_dense(g_, t_))
                return Contains{std::move(*e), "dense"};
            return by_size(fallback);
        case LadderCase::LargeDiameter:
            if (auto e = try_large_diameter(g_, t_, k))
                return Contains{std::move(*e), "large_diameter"};
            return by_size(fallback);
        case LadderCase::Medium: {
            auto th = LadderThresholds::relaxed(k);
            if (auto r = try_solve_medium(g_, t_, {th.large_diameter, th.escape_q, th.separable_q}))
                return Contains{std::move(r->embedding), r->branch};
            return by_size(fallback);
        }
        case LadderCase::SmallDiameter: {
            SmallDiameterConfig sc;
            sc.strict = false;
            sc.failure_exponent = config_.failure_exponent;
            sc.color = color_;
            auto out = solve_small_diameter(g_, t_, k, 1, sc, rng_);
            if (is_contains(out))
                return out;
            return by_size(fallback);
        }
        default:
            panic("constructive case expected");
        }
    }

    const Graph & g_;
    const Tree & t_;
    const SolveConfig & config_;
    Rng & rng_;
    ColorCodingOptions color_;
};

}

auto classify(const Graph & g, const Tree & t, bool relaxed) -> LadderCase
{
    int delta = g.min_degree();
    int k = t.order() - delta;
    if (k <= 1)
        return LadderCase::Chvatal;
    if (t.order() > g.order())
        return LadderCase::Size;
    if (k == 2)
        return LadderCase::DeltaPlusTwo;
    auto th = thresholds_for(k, delta, relaxed);
    if (delta < th.small_delta)
        return LadderCase::SmallDelta;
    if (leaf_degree(t).value >= k - 1)
        return LadderCase::HighLeafDegree;
    if (4.0 * k * g.order() <= (4.0 * k + 1) * delta)
        return LadderCase::Dense;
    if (tree_diameter(t).length >= th.large_diameter)
        return LadderCase::LargeDiameter;
    bool separable = 2 * th.separable_q <= t.order() && is_separable(t, static_cast<int>(th.separable_q));
    if (separable || has_escape_vertex(g, th.escape_q))
        return LadderCase::Medium;
    return LadderCase::SmallDiameter;
}

auto solve(const Graph & g, const Tree & t, const SolveConfig & config, SolveTrace * trace) -> SolveOutcome
{
    if (t.order() == 0)
        return Contains{PartialEmbedding(0, g.order()), "empty_tree"};
    if (t.order() > g.order())
        return NotContained{"tree larger than graph"};

    auto comps = connected_components(g, VertexSet::full(g.order()));
    std::sort(comps.begin(), comps.end(), [](const auto & a, const auto & b) { return a.front() < b.front(); });

    NotFound missed;
    missed.seed = config.seed;
    missed.failure_exponent = config.failure_exponent;
    bool any_missed = false;
    std::string last_reason = "no component has enough vertices";

    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (static_cast<int>(comps[i].size()) < t.order())
            continue;
        auto sub = induced_subgraph(g, comps[i]);
        auto c = classify(sub.graph, t, config.relaxed);
        if (trace)
            trace->cases.push_back(c);
        Rng rng(derive_seed(config.seed, 3, i));
        auto out = ComponentSolver(sub.graph, t, config, rng).run(c);

        if (auto * hit = std::get_if<Contains>(&out)) {
            if (! verify_certificate(sub.graph, t, hit->embedding))
                panic("branch " + hit->branch + " returned an invalid certificate");
            PartialEmbedding lifted(t.order(), g.order());
            for (int x = 0; x < t.order(); ++x)
                lifted.assign(x, sub.original[hit->embedding.image(x)]);
            if (! verify_certificate(g, t, lifted))
                panic("lifted certificate does not verify");
            return Contains{std::move(lifted), hit->branch};
        }
        if (auto * nf = std::get_if<NotFound>(&out)) {
            any_missed = true;
            missed.rounds += nf->rounds;
            if (missed.reason.empty() || nf->reason == "BudgetExceeded")
                missed.reason = nf->reason;
        } else {
            last_reason = std::get<NotContained>(out).reason;
        }
    }
    if (any_missed)
        return missed;
    return NotContained{last_reason};
}

}
