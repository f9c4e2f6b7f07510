#pragma once

// Cross-checks between the brute-force oracles, the word characterisations,
// the bijections and the closed-form counts.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sandlab/bigint.hpp"
#include "sandlab/error.hpp"
#include "sandlab/graph.hpp"

namespace sandlab {

/// Subgraphs of C_{2n} with n edges and k connected components, sorted.
std::vector<Subgraph> enumerate_gamma(int n, int k);
/// The members of enumerate_gamma(n, k) that contain vertex 1 but not the
/// edge {1, 2n}.
std::vector<Subgraph> enumerate_gamma_bar(int n, int k);
/// binom(2k, k) * binom(n+k-1, n-k)
BigInt count_gamma(int n, int k);
/// binom(n+k-1, n) * binom(n-1, n-k)
BigInt count_gamma_bar(int n, int k);

/// Clockwise-first vertex of a path component of a subgraph of C_m.
Vertex component_start(const Subgraph& s, int m, const std::vector<Vertex>& component);

/// Box contents (edges, missing vertices) read clockwise from vertex 1, one
/// box per component. Requires vertex 1 to start its component.
std::vector<std::pair<int, int>> gamma_bar_boxes(const Subgraph& s, int m);

struct DoublyRootedSubgraph {
    int cycle_size;  // 2n
    Subgraph subgraph;
    Vertex root_vertex;
    std::vector<Vertex> root_component;  // sorted

    friend auto operator<=>(const DoublyRootedSubgraph&, const DoublyRootedSubgraph&) = default;
};

/// Rotates anti-clockwise through root_vertex - 1 positions (v -> v - i + 1
/// mod 2n). Requires the root component to start at vertex 1; the result has
/// root vertex 1 and its component starts at 2n + 2 - i (mod 2n).
DoublyRootedSubgraph rotate_doubly_rooted(const DoublyRootedSubgraph& g);
/// Requires root vertex 1; rotates the root component back to start at 1.
DoublyRootedSubgraph unrotate_doubly_rooted(const DoublyRootedSubgraph& g);

/// (2n/k) binom(n+k-1,n) binom(n-1,n-k) == binom(2k,k) binom(n+k-1,n-k),
/// compared after clearing the denominator.
bool verify_binomial_identity(int n, int k);

/// Subgraphs of C_n with k edges (n >= 3, 0 <= k <= n). The empty subgraph is
/// not counted.
BigInt count_cycle_subgraphs(int n, int k);

/// Differed Delannoy counts as printed, rows n = 1..6, columns k = 1..n.
const std::vector<std::vector<long long>>& reference_differed_delannoy_rows();
/// Recurrent fan configurations by level as printed, rows n = 1..7, listed
/// from the highest level (n-1) down to level 0.
const std::vector<std::vector<long long>>& reference_fan_level_rows();

struct ReportCell {
    std::string check;
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
    bool ok;
};

struct Report {
    std::string theorem;
    int n_max;
    bool passed;
    std::vector<ReportCell> cells;
    std::optional<std::string> counterexample;
};

/// Recognised tags, in a fixed order.
const std::vector<std::string>& theorem_tags();

/// Runs the named cross-check for every size up to n_max. Unknown tags and
/// n_max below the family minimum raise InvalidArgument.
Report verify_theorem(const std::string& tag, int n_max, const BruteForceCaps& caps = {});

}  // namespace sandlab
