#include "sandlab/tutte.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "sandlab/error.hpp"

namespace sandlab {

namespace {

using MultiEdge = std::pair<int, int>;  // first <= second; equal means loop
using EdgeList = std::vector<MultiEdge>;

// Edges keep their original relative order so the branching choice is stable.
class TutteRecursion {
public:
    explicit TutteRecursion(EdgeOrder order) : order_(order) {}

    BivariatePolynomial run(const EdgeList& edges) {
        if (edges.empty()) {
            BivariatePolynomial one;
            one.add_term(0, 0, 1);
            return one;
        }
        auto key = canonical(edges);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const std::size_t pick = order_ == EdgeOrder::Lowest ? 0 : edges.size() - 1;
        const MultiEdge e = edges[pick];
        EdgeList rest = edges;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));

        BivariatePolynomial result;
        if (e.first == e.second) {
            result = run(rest).shifted(0, 1);
        } else if (!connected_without(rest, e.first, e.second)) {
            result = run(contract(rest, e)).shifted(1, 0);
        } else {
            result = run(rest);
            result += run(contract(rest, e));
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    static EdgeList contract(const EdgeList& edges, MultiEdge e) {
        EdgeList out;
        out.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a == e.second) a = e.first;
            if (b == e.second) b = e.first;
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
        return out;
    }

    static bool connected_without(const EdgeList& edges, int from, int to) {
        std::vector<int> stack{from};
        std::vector<int> seen{from};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : edges) {
                int w;
                if (a == v)
                    w = b;
                else if (b == v)
                    w = a;
                else
                    continue;
                if (w == to) return true;
                if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
                    seen.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        return from == to;
    }

    // Vertex labels are renumbered by first appearance; edge order is kept,
    // so equal keys have identical recursion trees.
    static EdgeList canonical(const EdgeList& edges) {
        std::map<int, int> relabel;
        EdgeList out;
        out.reserve(edges.size());
        const auto id = [&](int v) {
            auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
            return it->second;
        };
        for (auto [a, b] : edges) {
            const int x = id(a), y = id(b);
            out.emplace_back(x, y);
        }
        return out;
    }

    EdgeOrder order_;
    std::map<EdgeList, BivariatePolynomial> memo_;
};

}  // namespace

BivariatePolynomial tutte_polynomial(const Graph& g, EdgeOrder order, int edge_cap) {
    if (g.edge_count() > static_cast<std::size_t>(edge_cap))
        throw CapExceeded("Tutte recursion capped at " + std::to_string(edge_cap) + " edges");
    EdgeList edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return TutteRecursion(order).run(edges);
}

Polynomial tutte_T1x(const Graph& g, EdgeOrder order, int edge_cap) {
    return tutte_polynomial(g, order, edge_cap).at_x_equals_one();
}

}  // namespace sandlab
