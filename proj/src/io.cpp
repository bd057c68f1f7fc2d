#include <treefit/io.hpp>

#include <treefit/error.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace treefit {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream & in) : in_(in) {}

    // Next non-blank, non-comment line split into integers; false at end.
    auto next(std::vector<long long> & fields) -> bool
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            fields.clear();
            std::istringstream words(line);
            std::string w;
            while (words >> w) {
                long long x = 0;
                auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), x);
                if (ec != std::errc() || end != w.data() + w.size())
                    error("'" + w + "' is not an integer");
                fields.push_back(x);
            }
            return true;
        }
        return false;
    }

    auto expect(std::size_t count, const std::string & what) -> std::vector<long long>
    {
        std::vector<long long> f;
        if (! next(f))
            fail(ErrorKind::Parse, "unexpected end of input, expected " + what);
        if (f.size() != count)
            error("expected " + what);
        return f;
    }

    void expect_end()
    {
        std::vector<long long> f;
        if (next(f))
            error("unexpected trailing line");
    }

    [[noreturn]] void error(const std::string & msg) const
    {
        fail(ErrorKind::Parse, "line " + std::to_string(line_) + ": " + msg);
    }

private:
    std::istream & in_;
    int line_ = 0;
};

auto read_edges(LineReader & r, long long n, long long m, bool ordered) -> std::vector<Edge>
{
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long long i = 0; i < m; ++i) {
        auto f = r.expect(2, "an edge `u v`");
        auto u = f[0], v = f[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            r.error("vertex out of range 0.." + std::to_string(n - 1));
        if (u == v)
            r.error("loop at vertex " + std::to_string(u));
        if (ordered && u > v)
            r.error("edge endpoints must satisfy u < v");
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (! seen.insert(e).second)
            r.error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back(e);
    }
    return edges;
}

template <typename T, typename F>
auto load(const std::filesystem::path & p, F read) -> T
{
    std::ifstream in(p);
    if (! in)
        fail(ErrorKind::Parse, "cannot open " + p.string());
    try {
        return read(in);
    } catch (const Error & err) {
        if (err.kind() != ErrorKind::Parse)
            throw;
        fail(ErrorKind::Parse, p.string() + ": " + err.message());
    }
}

template <typename F>
void save(const std::filesystem::path & p, F write)
{
    std::ofstream out(p, std::ios::binary);
    if (! out)
        fail(ErrorKind::InvalidArgument, "cannot write " + p.string());
    write(out);
    if (! out)
        fail(ErrorKind::InvalidArgument, "write failed for " + p.string());
}

}

auto read_graph(std::istream & in) -> Graph
{
    LineReader r(in);
    auto head = r.expect(2, "header `n m`");
    if (head[0] < 0 || head[1] < 0 || head[0] > 100'000'000)
        r.error("bad header");
    auto edges = read_edges(r, head[0], head[1], true);
    r.expect_end();
    return Graph(static_cast<int>(head[0]), edges);
}

void write_graph(std::ostream & out, const Graph & g)
{
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

auto read_tree(std::istream & in) -> Tree
{
    LineReader r(in);
    auto head = r.expect(1, "header `n`");
    if (head[0] < 1 || head[0] > 100'000'000)
        r.error("a tree needs between 1 and 10^8 vertices");
    auto edges = read_edges(r, head[0], head[0] - 1, false);
    r.expect_end();
    try {
        return Tree(static_cast<int>(head[0]), edges);
    } catch (const Error & err) {
        fail(ErrorKind::Parse, "not a tree: " + err.message());
    }
}

void write_tree(std::ostream & out, const Tree & t)
{
    out << t.order() << '\n';
    for (auto [u, v] : t.edges())
        out << u << ' ' << v << '\n';
}

auto read_certificate(std::istream & in, int tree_order, int graph_order) -> PartialEmbedding
{
    LineReader r(in);
    PartialEmbedding e(tree_order, graph_order);
    std::vector<long long> f;
    long long last = -1;
    while (r.next(f)) {
        if (f.size() != 2)
            r.error("expected a pair `t g`");
        auto x = f[0], v = f[1];
        if (x < 0 || x >= tree_order)
            r.error("tree vertex out of range 0.." + std::to_string(tree_order - 1));
        if (v < 0 || v >= graph_order)
            r.error("graph vertex out of range 0.." + std::to_string(graph_order - 1));
        if (x <= last)
            r.error("tree vertices must be strictly increasing");
        if (e.is_used(static_cast<int>(v)))
            r.error("graph vertex " + std::to_string(v) + " used twice");
        e.assign(static_cast<int>(x), static_cast<int>(v));
        last = x;
    }
    return e;
}

void write_certificate(std::ostream & out, const PartialEmbedding & e)
{
    for (int x = 0; x < e.tree_order(); ++x)
        if (e.is_mapped(x))
            out << x << ' ' << e.image(x) << '\n';
}

auto load_graph(const std::filesystem::path & p) -> Graph
{
    return load<Graph>(p, [](std::istream & in) { return read_graph(in); });
}

auto load_tree(const std::filesystem::path & p) -> Tree
{
    return load<Tree>(p, [](std::istream & in) { return read_tree(in); });
}

auto load_certificate(const std::filesystem::path & p, int tree_order, int graph_order) -> PartialEmbedding
{
    return load<PartialEmbedding>(p, [&](std::istream & in) { return read_certificate(in, tree_order, graph_order); });
}

void save_graph(const std::filesystem::path & p, const Graph & g)
{
    save(p, [&](std::ostream & out) { write_graph(out, g); });
}

void save_tree(const std::filesystem::path & p, const Tree & t)
{
    save(p, [&](std::ostream & out) { write_tree(out, t); });
}

void save_certificate(const std::filesystem::path & p, const PartialEmbedding & e)
{
    save(p, [&](std::ostream & out) { write_certificate(out, e); });
}

}
