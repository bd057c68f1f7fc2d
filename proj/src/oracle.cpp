#include <treefit/error.hpp>
#include <treefit/oracle.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace treefit {

namespace {
    class Search {
    public:
        Search(const Graph & g, const Tree & t, std::uint64_t cap) :
            g_(g), t_(t), cap_(cap), e_(t.order(), g.order())
        {
            // twin classes: equal open (false twins) or closed (true twins) neighborhoods
            std::map<std::vector<int>, int> open_ids, closed_ids;
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
                open_twin_.push_back(open_ids.emplace(nb, static_cast<int>(open_ids.size())).first->second);
                nb.insert(std::upper_bound(nb.begin(), nb.end(), v), v);
                closed_twin_.push_back(closed_ids.emplace(nb, static_cast<int>(closed_ids.size())).first->second);
            }
        }

        auto run() -> bool
        {
            int n = t_.order();
            if (n == 1) {
                e_.assign(0, 0);
                return true;
            }
            if (n == 2) {
                for (int u = 0; u < g_.order(); ++u)
                    if (g_.degree(u) > 0) {
                        e_.assign(0, u);
                        e_.assign(1, g_.neighbors(u)[0]);
                        return true;
                    }
                return false;
            }
            int root = 0;
            for (int v = 0; v < n; ++v)
                if (t_.degree(v) > t_.degree(root))
                    root = v;
            // internal vertices in BFS order from the root
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            parent_.assign(static_cast<std::size_t>(n), -1);
            order_.push_back(root);
            seen[root] = 1;
            for (std::size_t h = 0; h < order_.size(); ++h)
                for (int w : t_.neighbors(order_[h]))
                    if (! seen[w] && ! t_.is_leaf(w)) {
                        seen[w] = 1;
                        parent_[w] = order_[h];
                        order_.push_back(w);
                    }
            for (int v = 0; v < n; ++v)
                if (t_.is_leaf(v))
                    leaves_.push_back(v);
            return place(0);
        }

        auto embedding() const -> const PartialEmbedding & { return e_; }

    private:
        auto tick() -> void
        {
            if (cap_ && ++nodes_ > cap_)
                fail(ErrorKind::BudgetExceeded, "oracle node cap reached");
        }

        auto unmapped_neighbors(int x) const -> int
        {
            int c = 0;
            for (int y : t_.neighbors(x))
                c += ! e_.is_mapped(y);
            return c;
        }

        auto free_neighbors(int v) const -> int
        {
            int c = 0;
            for (int w : g_.neighbors(v))
                c += ! e_.is_used(w);
            return c;
        }

        auto feasible() const -> bool
        {
            for (std::size_t i = 0; i < order_.size() && e_.is_mapped(order_[i]); ++i)
                if (free_neighbors(e_.image(order_[i])) < unmapped_neighbors(order_[i]))
                    return false;
            return g_.order() - e_.size() >= t_.order() - e_.size();
        }

        auto place(std::size_t i) -> bool
        {
            if (i == order_.size())
                return place_leaves();
            int x = order_[i];
            // swapping two unused twins is an automorphism fixing the partial
            // map, so after one of them fails the other fails too
            std::vector<int> failed_open, failed_closed;
            auto try_vertex = [&](int v) {
                if (e_.is_used(v) || g_.degree(v) < t_.degree(x))
                    return false;
                if (std::find(failed_open.begin(), failed_open.end(), open_twin_[v]) != failed_open.end()
                    || std::find(failed_closed.begin(), failed_closed.end(), closed_twin_[v]) != failed_closed.end())
                    return false;
                tick();
                e_.assign(x, v);
                if (feasible() && place(i + 1))
                    return true;
                e_.unassign(x);
                failed_open.push_back(open_twin_[v]);
                failed_closed.push_back(closed_twin_[v]);
                return false;
            };
            if (parent_[x] == -1) {
                for (int v = 0; v < g_.order(); ++v)
                    if (try_vertex(v))
                        return true;
                return false;
            }
            for (int v : g_.neighbors(e_.image(parent_[x])))
                if (try_vertex(v))
                    return true;
            return false;
        }

        auto place_leaves() -> bool
        {
            // Kuhn's algorithm: leaves on the left, free graph vertices on the right
            std::vector<int> owner(static_cast<std::size_t>(g_.order()), -1);
            std::vector<int> stamp(static_cast<std::size_t>(g_.order()), -1);
            std::function<bool(std::size_t, int)> augment = [&](std::size_t li, int round) -> bool {
                int anchor = e_.image(t_.neighbors(leaves_[li])[0]);
                for (int w : g_.neighbors(anchor)) {
                    if (e_.is_used(w) || stamp[w] == round)
                        continue;
                    stamp[w] = round;
                    if (owner[w] == -1 || augment(static_cast<std::size_t>(owner[w]), round)) {
                        owner[w] = static_cast<int>(li);
                        return true;
                    }
                }
                return false;
            };
            for (std::size_t li = 0; li < leaves_.size(); ++li)
                if (! augment(li, static_cast<int>(li)))
                    return false;
            for (int w = 0; w < g_.order(); ++w)
                if (owner[w] != -1)
                    e_.assign(leaves_[owner[w]], w);
            return true;
        }

        const Graph & g_;
        const Tree & t_;
        std::uint64_t cap_;
        std::uint64_t nodes_ = 0;
        PartialEmbedding e_;
        std::vector<int> order_;
        std::vector<int> parent_;
        std::vector<int> leaves_;
        std::vector<int> open_twin_;
        std::vector<int> closed_twin_;
    };
}

auto brute_force_contains(const Graph & g, const Tree & t, std::uint64_t node_cap) -> SolveOutcome
{
    if (t.order() > g.order())
        return NotContained{"tree larger than graph"};
    Search search(g, t, node_cap);
    if (! search.run())
        return NotContained{"exhaustive search"};
    if (! verify_certificate(g, t, search.embedding()))
        panic("oracle produced an invalid certificate");
    return Contains{search.embedding(), "oracle"};
}

}
