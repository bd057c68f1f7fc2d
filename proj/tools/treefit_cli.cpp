#include <treefit/error.hpp>
#include <treefit/generators.hpp>
#include <treefit/hardness.hpp>
#include <treefit/io.hpp>
#include <treefit/oracle.hpp>
#include <treefit/rng.hpp>
#include <treefit/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace treefit;

namespace {

constexpr int exit_contains = 0;
constexpr int exit_not_contained = 1;
constexpr int exit_not_found = 2;
constexpr int exit_usage = 64;
constexpr int exit_input = 65;
constexpr int exit_internal = 70;

struct SolveFlags {
    std::string graph;
    std::string tree;
    std::optional<std::uint64_t> seed;
    int failure_exponent = 20;
    std::string mode = "strict";
    std::uint64_t budget_nodes = 0;
    long long max_trials = 0;
    std::string thresholds = "literal";
    std::string cert_out;
    std::string out_dir = ".";
};

// --seed, then TREEFIT_SEED, then 0.
auto resolve_seed(const std::optional<std::uint64_t> & flag) -> std::uint64_t
{
    if (flag)
        return *flag;
    if (const char * env = std::getenv("TREEFIT_SEED")) {
        std::uint64_t s = 0;
        std::string text(env);
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
        if (ec != std::errc() || end != text.data() + text.size())
            fail(ErrorKind::InvalidArgument, "TREEFIT_SEED is not an unsigned integer: '" + text + "'");
        return s;
    }
    return 0;
}

auto make_config(const SolveFlags & f) -> SolveConfig
{
    SolveConfig c;
    c.seed = resolve_seed(f.seed);
    c.failure_exponent = f.failure_exponent;
    c.mode = f.mode == "budgeted" ? SolveMode::Budgeted : SolveMode::Strict;
    c.node_cap = f.budget_nodes;
    c.max_trials = f.max_trials;
    c.relaxed = f.thresholds == "relaxed";
    return c;
}

void add_solve_options(CLI::App * cmd, SolveFlags & f)
{
    cmd->add_option("--seed", f.seed, "master seed (default: $TREEFIT_SEED, else 0)");
    cmd->add_option("--failure-exponent", f.failure_exponent, "randomized branches miss with probability ≤ 2^-e")
        ->check(CLI::Range(1, 60));
    cmd->add_option("--mode", f.mode, "strict or budgeted")->check(CLI::IsMember({"strict", "budgeted"}));
    cmd->add_option("--budget-nodes", f.budget_nodes, "exhaustive search node cap (0: mode default)");
    cmd->add_option("--max-trials", f.max_trials, "color-coding trial cap (0: mode default)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--thresholds", f.thresholds, "literal or relaxed case thresholds")
        ->check(CLI::IsMember({"literal", "relaxed"}));
}

auto exit_code(const SolveOutcome & o) -> int
{
    if (is_contains(o))
        return exit_contains;
    return is_not_contained(o) ? exit_not_contained : exit_not_found;
}

void report(std::ostream & out, const SolveOutcome & o)
{
    if (auto * c = std::get_if<Contains>(&o)) {
        out << "CONTAINS\n" << "branch " << c->branch << '\n';
    } else if (auto * nc = std::get_if<NotContained>(&o)) {
        out << "NOT_CONTAINED\n" << "reason " << nc->reason << '\n';
    } else {
        const auto & nf = std::get<NotFound>(o);
        out << "NOT_FOUND rounds=" << nf.rounds << " seed=" << nf.seed << '\n' << "reason " << nf.reason << '\n';
    }
}

auto cmd_solve(const SolveFlags & f) -> int
{
    auto g = load_graph(f.graph);
    auto t = load_tree(f.tree);
    auto outcome = solve(g, t, make_config(f));
    report(std::cout, outcome);
    if (auto * c = std::get_if<Contains>(&outcome)) {
        fs::path cert = f.cert_out.empty() ? fs::path(f.out_dir) / "certificate.txt" : fs::path(f.cert_out);
        if (cert.has_parent_path())
            fs::create_directories(cert.parent_path());
        save_certificate(cert, c->embedding);
        std::cout << "certificate " << cert.string() << '\n';
    }
    return exit_code(outcome);
}

auto cmd_verify(const std::string & graph, const std::string & tree, const std::string & cert) -> int
{
    auto g = load_graph(graph);
    auto t = load_tree(tree);
    auto e = load_certificate(cert, t.order(), g.order());
    bool ok = verify_certificate(g, t, e);
    std::cout << (ok ? "VALID" : "INVALID") << '\n';
    return ok ? 0 : 1;
}

auto cmd_oracle(const std::string & graph, const std::string & tree, std::uint64_t cap, const std::string & cert) -> int
{
    auto g = load_graph(graph);
    auto t = load_tree(tree);
    SolveOutcome outcome;
    try {
        outcome = brute_force_contains(g, t, cap);
    } catch (const Error & err) {
        if (err.kind() != ErrorKind::BudgetExceeded)
            throw;
        outcome = NotFound{0, 0, 0, "BudgetExceeded"};
    }
    report(std::cout, outcome);
    if (auto * c = std::get_if<Contains>(&outcome); c && ! cert.empty())
        save_certificate(cert, c->embedding);
    return exit_code(outcome);
}

struct RandomFlags {
    int n = 0;
    int delta = 0;
    int tree_size = 0;
    int leaf_cap = 0;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
};

auto cmd_generate_random(const RandomFlags & f) -> int
{
    if (f.n < 1)
        fail(ErrorKind::InvalidArgument, "--n must be positive");
    Rng rng(derive_seed(resolve_seed(f.seed), 5, 0));
    auto g = random_min_degree_graph(f.n, f.delta, rng);
    if (g.min_degree() != f.delta)
        panic("generated graph has δ = " + std::to_string(g.min_degree()) + " instead of " + std::to_string(f.delta));
    int size = f.tree_size > 0 ? f.tree_size : std::min(f.n, f.delta + 2);
    if (size > f.n)
        fail(ErrorKind::InvalidArgument, "tree size exceeds the graph order");
    auto t = f.leaf_cap > 0 ? random_tree_leaf_capped(size, f.leaf_cap, rng) : random_tree(size, rng);
    fs::create_directories(f.out_dir);
    save_graph(fs::path(f.out_dir) / "graph.txt", g);
    save_tree(fs::path(f.out_dir) / "tree.txt", t);
    std::cout << "n " << g.order() << "\nm " << g.edges().size() << "\ndelta " << g.min_degree() << "\ntree " << t.order()
              << "\nk " << t.order() - g.min_degree() << '\n';
    return 0;
}

struct HardnessFlags {
    std::string instance;
    std::string epsilon = "1";
    bool loose = false;
    bool certificate = false;
    std::string out_dir = ".";
};

auto cmd_generate_hardness(const HardnessFlags & f) -> int
{
    std::ifstream in(f.instance);
    if (! in)
        fail(ErrorKind::Parse, "cannot open " + f.instance);
    auto inst = read_three_partition(in);
    auto red = generate_hardness_instance(inst, parse_rational(f.epsilon), f.loose);
    fs::path dir(f.out_dir);
    fs::create_directories(dir);
    save_graph(dir / "graph.txt", red.g);
    save_tree(dir / "tree.txt", red.t);
    std::ofstream side(dir / "landmarks.jsonl", std::ios::binary);
    write_landmarks(side, red);
    std::cout << "delta " << red.delta << "\nDelta " << red.Delta << "\ntree " << red.t.order() << "\ngraph "
              << red.g.order() << '\n';
    if (f.certificate) {
        auto part = find_three_partition(inst);
        if (! part) {
            std::cout << "partition none\n";
            return 1;
        }
        save_certificate(dir / "certificate.txt", forward_certificate(red, *part));
        std::cout << "partition found\n";
    }
    return 0;
}

// RFC 4180: quote when the field holds a comma, quote or line break.
auto csv_field(const std::string & s) -> std::string
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

struct BenchRow {
    std::string instance, outcome, branch, rounds, error;
    double ms = 0;
};

// `<name>.graph.txt` with `<name>.tree.txt`, or a subdirectory holding
// graph.txt and tree.txt.
auto find_instances(const fs::path & dir) -> std::vector<std::tuple<std::string, fs::path, fs::path>>
{
    std::vector<std::tuple<std::string, fs::path, fs::path>> out;
    const std::string suffix = ".graph.txt";
    for (const auto & entry : fs::directory_iterator(dir)) {
        auto p = entry.path();
        if (entry.is_directory() && fs::exists(p / "graph.txt") && fs::exists(p / "tree.txt")) {
            out.emplace_back(p.filename().string(), p / "graph.txt", p / "tree.txt");
            continue;
        }
        auto name = p.filename().string();
        if (entry.is_regular_file() && name.size() > suffix.size() && name.ends_with(suffix)) {
            auto stem = name.substr(0, name.size() - suffix.size());
            auto tree = dir / (stem + ".tree.txt");
            if (fs::exists(tree))
                out.emplace_back(stem, p, tree);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto cmd_bench(const SolveFlags & f, const std::string & dir, const std::string & csv_out, int jobs) -> int
{
    if (! fs::is_directory(dir))
        fail(ErrorKind::InvalidArgument, "not a directory: " + dir);
    auto instances = find_instances(dir);
    auto base = make_config(f);
    std::vector<BenchRow> rows(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            auto & [name, gpath, tpath] = instances[i];
            auto & row = rows[i];
            row.instance = name;
            auto start = std::chrono::steady_clock::now();
            try {
                auto g = load_graph(gpath);
                auto t = load_tree(tpath);
                auto config = base;
                config.seed = derive_seed(base.seed, 4, i);
                auto o = solve(g, t, config);
                row.outcome = outcome_name(o);
                if (auto * c = std::get_if<Contains>(&o))
                    row.branch = c->branch;
                if (auto * nf = std::get_if<NotFound>(&o))
                    row.rounds = std::to_string(nf->rounds);
            } catch (const std::exception & err) {
                row.outcome = "ERROR";
                row.error = err.what();
            }
            row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j)
        pool.emplace_back(worker);
    for (auto & th : pool)
        th.join();

    std::ofstream file;
    if (! csv_out.empty()) {
        file.open(csv_out, std::ios::binary);
        if (! file)
            fail(ErrorKind::InvalidArgument, "cannot write " + csv_out);
    }
    std::ostream & out = csv_out.empty() ? std::cout : file;
    out << "instance,outcome,branch,time_ms,rounds,error\r\n";
    for (const auto & r : rows) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(3);
        ms << r.ms;
        out << csv_field(r.instance) << ',' << r.outcome << ',' << csv_field(r.branch) << ',' << ms.str() << ','
            << r.rounds << ',' << csv_field(r.error) << "\r\n";
    }
    return 0;
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"treefit: tree containment above minimum degree"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto * solve_cmd = app.add_subcommand("solve", "decide whether the graph contains the tree");
    solve_cmd->add_option("--graph", solve_flags.graph)->required();
    solve_cmd->add_option("--tree", solve_flags.tree)->required();
    add_solve_options(solve_cmd, solve_flags);
    solve_cmd->add_option("--cert-out", solve_flags.cert_out, "certificate path (default: <out-dir>/certificate.txt)");
    solve_cmd->add_option("--out-dir", solve_flags.out_dir);

    std::string vgraph, vtree, vcert;
    auto * verify_cmd = app.add_subcommand("verify", "check a certificate");
    verify_cmd->add_option("--graph", vgraph)->required();
    verify_cmd->add_option("--tree", vtree)->required();
    verify_cmd->add_option("--cert", vcert)->required();

    std::string ograph, otree, ocert;
    std::uint64_t onodes = 0;
    auto * oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
    oracle_cmd->add_option("--graph", ograph)->required();
    oracle_cmd->add_option("--tree", otree)->required();
    oracle_cmd->add_option("--budget-nodes", onodes, "node cap (0: unlimited)");
    oracle_cmd->add_option("--cert-out", ocert);

    auto * gen_cmd = app.add_subcommand("generate", "write instance files");
    gen_cmd->require_subcommand(1);
    RandomFlags rf;
    auto * random_cmd = gen_cmd->add_subcommand("random", "random graph with a prescribed minimum degree and a random tree");
    random_cmd->add_option("--n", rf.n)->required();
    random_cmd->add_option("--delta", rf.delta)->required();
    random_cmd->add_option("--tree-size", rf.tree_size, "default: min{n, δ+2}");
    random_cmd->add_option("--leaf-cap", rf.leaf_cap, "bound on ld(T), 0 for a uniform tree");
    random_cmd->add_option("--seed", rf.seed);
    random_cmd->add_option("--out-dir", rf.out_dir);
    HardnessFlags hf;
    auto * hard_cmd = gen_cmd->add_subcommand("hardness", "3-Partition reduction");
    hard_cmd->add_option("--instance", hf.instance, "file: `n B`, then the 3n sizes")->required();
    hard_cmd->add_option("--epsilon", hf.epsilon, "p/q or decimal");
    hard_cmd->add_flag("--loose", hf.loose, "skip the B/4 < s < B/2 bounds");
    hard_cmd->add_flag("--certificate", hf.certificate, "search a partition and write the forward certificate");
    hard_cmd->add_option("--out-dir", hf.out_dir);

    SolveFlags bench_flags;
    std::string bench_dir, bench_csv;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto * bench_cmd = app.add_subcommand("bench", "solve every instance in a directory, CSV report");
    bench_cmd->add_option("--dir", bench_dir)->required();
    bench_cmd->add_option("--csv", bench_csv, "output file (default: stdout)");
    bench_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    add_solve_options(bench_cmd, bench_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve_flags);
        if (*verify_cmd)
            return cmd_verify(vgraph, vtree, vcert);
        if (*oracle_cmd)
            return cmd_oracle(ograph, otree, onodes, ocert);
        if (*random_cmd)
            return cmd_generate_random(rf);
        if (*hard_cmd)
            return cmd_generate_hardness(hf);
        if (*bench_cmd)
            return cmd_bench(bench_flags, bench_dir, bench_csv, jobs);
    } catch (const Error & err) {
        std::cerr << "error: " << err.what() << '\n';
        return err.kind() == ErrorKind::Parse ? exit_input : exit_usage;
    } catch (const std::exception & err) {
        std::cerr << "internal error: " << err.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
