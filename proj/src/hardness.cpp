#include <treefit/hardness.hpp>

#include <treefit/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>

namespace treefit {

void validate(const ThreePartitionInstance & inst, bool loose)
{
    auto bad = [](const std::string & msg) { fail(ErrorKind::InvalidThreePartition, msg); };
    if (inst.n < 1)
        bad("need at least one triple");
    if (inst.sizes.size() != 3 * static_cast<std::size_t>(inst.n))
        bad("expected " + std::to_string(3 * inst.n) + " sizes, got " + std::to_string(inst.sizes.size()));
    if (inst.B < 1)
        bad("B must be positive");
    long long sum = 0;
    for (int s : inst.sizes) {
        if (s < 1)
            bad("sizes must be positive");
        if (! loose && ! (4LL * s > inst.B && 2LL * s < inst.B))
            bad("size " + std::to_string(s) + " is not strictly between B/4 and B/2");
        sum += s;
    }
    if (sum != static_cast<long long>(inst.n) * inst.B)
        bad("sizes sum to " + std::to_string(sum) + ", expected nB = " + std::to_string(static_cast<long long>(inst.n) * inst.B));
}

auto read_three_partition(std::istream & in) -> ThreePartitionInstance
{
    ThreePartitionInstance inst;
    if (! (in >> inst.n >> inst.B))
        fail(ErrorKind::Parse, "line 1: expected `n B`");
    inst.sizes.resize(static_cast<std::size_t>(std::max(inst.n, 0)) * 3);
    for (auto & s : inst.sizes)
        if (! (in >> s))
            fail(ErrorKind::Parse, "line 2: expected " + std::to_string(inst.sizes.size()) + " sizes");
    std::string rest;
    if (in >> rest)
        fail(ErrorKind::Parse, "unexpected trailing token '" + rest + "'");
    return inst;
}

void write_three_partition(std::ostream & out, const ThreePartitionInstance & inst)
{
    out << inst.n << ' ' << inst.B << '\n';
    for (std::size_t i = 0; i < inst.sizes.size(); ++i)
        out << (i ? " " : "") << inst.sizes[i];
    out << '\n';
}

auto find_three_partition(const ThreePartitionInstance & inst) -> std::optional<std::vector<Triple>>
{
    int m = static_cast<int>(inst.sizes.size());
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<Triple> triples;
    std::function<bool()> rec = [&]() {
        int a = 0;
        while (a < m && used[a])
            ++a;
        if (a == m)
            return true;
        used[a] = 1;
        for (int b = a + 1; b < m; ++b) {
            if (used[b])
                continue;
            used[b] = 1;
            for (int c = b + 1; c < m; ++c) {
                if (used[c] || inst.sizes[a] + inst.sizes[b] + inst.sizes[c] != inst.B)
                    continue;
                used[c] = 1;
                triples.push_back({a, b, c});
                if (rec())
                    return true;
                triples.pop_back();
                used[c] = 0;
            }
            used[b] = 0;
        }
        used[a] = 0;
        return false;
    };
    if (m % 3 != 0 || ! rec())
        return std::nullopt;
    return triples;
}

auto random_three_partition(int n, int B, bool perturb, Rng & rng) -> ThreePartitionInstance
{
    int lo = B / 4 + 1;
    int hi = (B + 1) / 2 - 1;
    if (n < 1 || lo > hi || 3 * lo > B || 3 * hi < B)
        fail(ErrorKind::InvalidArgument, "no triple of sizes strictly between B/4 and B/2 sums to B = " + std::to_string(B));
    ThreePartitionInstance inst{n, {}, B};
    for (int i = 0; i < n; ++i) {
        for (;;) {
            int a = static_cast<int>(rng.between(lo, hi));
            int blo = std::max(lo, B - a - hi), bhi = std::min(hi, B - a - lo);
            if (blo > bhi)
                continue;
            int b = static_cast<int>(rng.between(blo, bhi));
            inst.sizes.insert(inst.sizes.end(), {a, b, B - a - b});
            break;
        }
    }
    rng.shuffle(inst.sizes);
    if (perturb) {
        std::vector<std::pair<int, int>> moves;
        for (int i = 0; i < 3 * n; ++i)
            for (int j = 0; j < 3 * n; ++j)
                if (i != j && inst.sizes[i] < hi && inst.sizes[j] > lo)
                    moves.emplace_back(i, j);
        if (! moves.empty()) {
            auto [i, j] = moves[rng.below(moves.size())];
            ++inst.sizes[i];
            --inst.sizes[j];
        }
    }
    validate(inst);
    return inst;
}

auto parse_rational(const std::string & text) -> Rational
{
    auto number = [&](std::string_view s) {
        long long x = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (s.empty() || ec != std::errc() || end != s.data() + s.size())
            fail(ErrorKind::Parse, "'" + text + "' is not a rational number");
        return x;
    };
    Rational r;
    std::string_view s(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        r = {number(s.substr(0, slash)), number(s.substr(slash + 1))};
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto frac = s.substr(dot + 1);
        if (frac.size() > 15)
            fail(ErrorKind::Parse, "'" + text + "' has too many decimals");
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        long long whole = dot == 0 ? 0 : number(s.substr(0, dot));
        r = {whole * scale + (frac.empty() ? 0 : number(frac)), scale};
    } else {
        r = {number(s), 1};
    }
    if (r.num <= 0 || r.den <= 0)
        fail(ErrorKind::InvalidArgument, "ε must be positive, got '" + text + "'");
    long long g = std::gcd(r.num, r.den);
    return {r.num / g, r.den / g};
}

auto generate_hardness_instance(const ThreePartitionInstance & inst, Rational epsilon, bool loose) -> ReductionOutput
{
    validate(inst, loose);
    if (epsilon.num <= 0 || epsilon.den <= 0)
        fail(ErrorKind::InvalidArgument, "ε must be positive");
    ReductionOutput out;
    out.instance = inst;
    out.epsilon = epsilon;
    int n = inst.n, B = inst.B, m = 3 * n;
    long long ell = std::accumulate(inst.sizes.begin(), inst.sizes.end(), 0LL);
    out.ell = ell;
    long long by_eps = ((ell + 3) * epsilon.den + epsilon.num - 1) / epsilon.num;
    long long delta = std::max(by_eps, 3 * ell + 6LL * n - 2);
    long long copies = delta - B - 2;
    long long order = static_cast<long long>(n) * (B + 3) + ell * copies * (delta + 1) + 1 + (delta + 2 - m);
    if (order > 50'000'000)
        fail(ErrorKind::InvalidArgument, "instance would have " + std::to_string(order) + " vertices");
    out.delta = static_cast<int>(delta);
    out.Delta = out.delta + 2;

    // tree
    std::vector<Edge> te;
    int next = 0;
    out.r = next++;
    for (int a = 0; a < m; ++a) {
        out.v.push_back(next++);
        te.emplace_back(out.r, out.v.back());
    }
    out.R.resize(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < inst.sizes[a]; ++c) {
            out.R[a].push_back(next++);
            te.emplace_back(out.v[a], out.R[a].back());
        }
    for (int j = 0; j < out.Delta - m; ++j) {
        out.u.push_back(next++);
        te.emplace_back(out.r, out.u.back());
    }
    out.t = Tree(next, te);

    // graph
    std::vector<Edge> ge;
    auto clique = [&](int first, int size) {
        for (int a = first; a < first + size; ++a)
            for (int b = a + 1; b < first + size; ++b)
                ge.emplace_back(a, b);
    };
    next = 0;
    for (int i = 0; i < n; ++i) {
        out.L.emplace_back();
        for (int c = 0; c < B + 3; ++c)
            out.L[i].push_back(next + c);
        out.y.push_back({next, next + 1, next + 2});
        clique(next, B + 3);
        next += B + 3;
    }
    for (int i = 0; i < n; ++i)
        for (int c = 3; c < B + 3; ++c)
            for (int copy = 0; copy < copies; ++copy) {
                out.W.push_back({out.L[i][c], copy, next, out.delta + 1});
                clique(next, out.delta + 1);
                ge.emplace_back(out.L[i][c], next);
                next += out.delta + 1;
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int h = 0; h < 3; ++h)
                for (int h2 = 0; h2 < 3; ++h2)
                    ge.emplace_back(out.y[i][h], out.y[j][h2]);
    out.x = next++;
    for (int i = 0; i < n; ++i)
        for (int h = 0; h < 3; ++h)
            ge.emplace_back(out.y[i][h], out.x);
    int zcount = out.Delta - m;
    for (int j = 0; j < zcount; ++j)
        out.z.push_back(next + j);
    clique(next, zcount);
    for (int j = 0; j < zcount; ++j)
        ge.emplace_back(out.x, out.z[j]);
    next += zcount;
    out.Z.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int h = 0; h < 3; ++h) {
            int block = 3 * i + h;
            std::vector<char> in_set(static_cast<std::size_t>(zcount), 0);
            for (int c = 0; c < B + 1; ++c) {
                int j = block * (B + 1) + c;
                if (j >= zcount)
                    panic("z-sets do not fit");
                in_set[j] = 1;
                out.Z[i][h].push_back(out.z[j]);
            }
            for (int j = 0; j < zcount; ++j)
                if (! in_set[j])
                    ge.emplace_back(out.y[i][h], out.z[j]);
        }
    out.g = Graph(next, ge);

    auto problems = audit(out);
    if (! problems.empty())
        panic("generated instance fails its audit: " + problems.front());
    return out;
}

auto audit(const ReductionOutput & out) -> std::vector<std::string>
{
    std::vector<std::string> p;
    auto need = [&](bool ok, const std::string & what) {
        if (! ok)
            p.push_back(what);
    };
    const auto & g = out.g;
    const auto & inst = out.instance;
    int m = 3 * inst.n;
    need(out.Delta == out.delta + 2, "Δ = δ+2");
    need(g.min_degree() == out.delta, "δ(G) = δ");
    need(g.max_degree() == out.Delta, "Δ(G) = Δ");
    need(out.t.order() == out.delta + 3 + out.ell, "|V(T)| = δ+3+ℓ");
    need((out.ell + 3) * out.epsilon.den <= static_cast<long long>(out.delta) * out.epsilon.num, "|V(T)| ≤ (1+ε)δ");
    need(out.t.degree(out.r) == out.Delta, "deg_T(r) = Δ");
    long long copies = out.delta - inst.B - 2;
    long long order = static_cast<long long>(inst.n) * (inst.B + 3) + out.ell * copies * (out.delta + 1) + 1 + (out.Delta - m);
    need(g.order() == order, "|V(G)| matches the construction");

    for (int i = 0; i < inst.n; ++i) {
        for (int h = 0; h < 3; ++h)
            need(g.degree(out.y[i][h]) == out.delta + 1, "deg(y) = δ+1");
        for (std::size_t c = 3; c < out.L[i].size(); ++c)
            need(g.degree(out.L[i][c]) == out.delta, "deg(w) = δ for L-internal w");
    }
    for (const auto & w : out.W)
        for (int c = 0; c < w.size; ++c) {
            int d = g.degree(w.first + c);
            need(d == (c == 0 ? out.delta + 1 : out.delta), "W-clique degrees");
        }
    need(g.degree(out.x) == out.Delta, "deg(x) = Δ");
    for (int zj : out.z)
        need(g.degree(zj) >= out.Delta - 1 && g.degree(zj) <= out.Delta, "Δ−1 ≤ deg(z) ≤ Δ");

    std::vector<int> memberships(static_cast<std::size_t>(g.order()), 0);
    for (const auto & row : out.Z)
        for (const auto & set : row) {
            need(static_cast<int>(set.size()) == inst.B + 1, "|Z| = B+1");
            for (int zj : set)
                ++memberships[zj];
        }
    for (int zj : out.z)
        need(memberships[zj] <= 1, "z-sets pairwise disjoint");
    return p;
}

auto forward_certificate(const ReductionOutput & out, const std::vector<Triple> & partition) -> PartialEmbedding
{
    const auto & inst = out.instance;
    int m = 3 * inst.n;
    auto bad = [](const std::string & msg) { fail(ErrorKind::InvalidPartition, msg); };
    if (static_cast<int>(partition.size()) != inst.n)
        bad("expected " + std::to_string(inst.n) + " triples");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (const auto & tr : partition) {
        int sum = 0;
        for (int a : tr) {
            if (a < 0 || a >= m || seen[a])
                bad("triples must use every size index exactly once");
            seen[a] = 1;
            sum += inst.sizes[a];
        }
        if (sum != inst.B)
            bad("a triple sums to " + std::to_string(sum) + " instead of " + std::to_string(inst.B));
    }

    PartialEmbedding e(out.t.order(), out.g.order());
    e.assign(out.r, out.x);
    for (std::size_t j = 0; j < out.u.size(); ++j)
        e.assign(out.u[j], out.z[j]);
    for (int h = 0; h < inst.n; ++h) {
        std::size_t slot = 3;
        for (int k = 0; k < 3; ++k) {
            int a = partition[h][k];
            e.assign(out.v[a], out.y[h][k]);
            for (int leaf : out.R[a])
                e.assign(leaf, out.L[h][slot++]);
        }
    }
    if (! verify_certificate(out.g, out.t, e))
        panic("forward certificate does not verify");
    return e;
}

void write_landmarks(std::ostream & os, const ReductionOutput & red)
{
    using nlohmann::json;
    auto line = [&](const char * side, int vertex, const char * role, json extra) {
        extra["side"] = side;
        extra["vertex"] = vertex;
        extra["role"] = role;
        os << extra.dump() << '\n';
    };
    line("T", red.r, "r", json::object());
    for (std::size_t a = 0; a < red.v.size(); ++a) {
        line("T", red.v[a], "v", {{"index", a}});
        for (int leaf : red.R[a])
            line("T", leaf, "R", {{"index", a}});
    }
    for (std::size_t j = 0; j < red.u.size(); ++j)
        line("T", red.u[j], "u", {{"index", j}});

    for (std::size_t i = 0; i < red.L.size(); ++i)
        for (std::size_t c = 0; c < red.L[i].size(); ++c)
            if (c < 3)
                line("G", red.L[i][c], "y", {{"group", i}, {"h", c}});
            else
                line("G", red.L[i][c], "L", {{"group", i}});
    for (const auto & w : red.W)
        for (int c = 0; c < w.size; ++c)
            line("G", w.first + c, "W", {{"w", w.w}, {"copy", w.copy}, {"attached", c == 0}});
    line("G", red.x, "x", json::object());
    std::vector<json> owner(red.z.size(), nullptr);
    int base = red.z.empty() ? 0 : red.z.front();
    for (std::size_t i = 0; i < red.Z.size(); ++i)
        for (int h = 0; h < 3; ++h)
            for (int zj : red.Z[i][h])
                owner[zj - base] = json::array({i, h});
    for (std::size_t j = 0; j < red.z.size(); ++j)
        line("G", red.z[j], "z", {{"index", j}, {"Z", owner[j]}});
}

}
