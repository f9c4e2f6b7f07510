#pragma once

// Recurrent configurations of the wheel W_n as words in {0,1,2}^n, and their
// bijections to properly-marked orientations of C_n and to subgraphs of the
// dual cycle.
//
// Rim vertices 1..n run clockwise; "edge i" is {i, i+1} (mod n). Edge i is
// clockwise when directed i -> i+1.

#include <functional>
#include <vector>

#include "sandlab/graph.hpp"
#include "sandlab/sandpile.hpp"

namespace sandlab {

/// Shared C_n used as the carrier of cycle orientations.
GraphPtr cycle_graph(int n);

/// 02-cycle condition; the ASM additionally needs some vertex with 2 grains.
bool wheel_is_recurrent(const Configuration& c, Model model);

/// Strict 02-cycle condition: zeros and twos alternate cyclically, with only
/// ones in between (no zeros means all ones). ASM needs a 2.
bool wheel_is_minimal_recurrent(const Configuration& c, Model model);

/// Vertices with 2 grains reached clockwise from a 0 through 1s only.
std::vector<Vertex> cyclically_first_maximal(const Configuration& c);

/// Total size of the maximal 01*-chains.
int weight01star(const Configuration& c);

/// m(c): zeros kept, cyclically first maximal vertices keep 2, all else 1.
Configuration canonical_minimal(const Configuration& c);

/// The orientation of C_n whose in-degrees are c. The all-ones word maps to
/// the counter-clockwise cycle.
Orientation orientation_of_minimal(const Configuration& c);

struct MarkedCycleOrientation {
    Orientation orientation;  // of C_n
    std::vector<Vertex> marks;  // sorted

    int n() const { return orientation.graph().n_nonsink(); }
    /// Edge i = {i, i+1} directed i+1 -> i.
    bool is_counter_clockwise(int i) const;
    std::vector<int> ccw_edges() const;

    friend bool operator==(const MarkedCycleOrientation&, const MarkedCycleOrientation&) = default;
};

/// Builds a marked orientation from its counter-clockwise edge list; edges not
/// listed are clockwise. Marks are validated for range only.
MarkedCycleOrientation make_marked_cycle_orientation(int n, const std::vector<int>& ccw_edges,
                                                     std::vector<Vertex> marks);

/// Every mark has both incident edges counter-clockwise, and at least one
/// edge is counter-clockwise.
bool is_properly_marked(const MarkedCycleOrientation& mo);

/// Phi_W: (O(m(c)), non-cyclically-first 2s).
MarkedCycleOrientation phi_wheel(const Configuration& c);
/// Psi_W: in-degrees plus one grain per mark.
Configuration psi_wheel(const MarkedCycleOrientation& mo);

/// Subgraph of the dual cycle C_n', stored on C_n's labels: dual vertex d_i is
/// primal edge {i, i+1}, so dual edge {d_{i-1}, d_i} stands for primal vertex i.
struct DualSubgraph {
    int n;
    Subgraph subgraph;

    friend bool operator==(const DualSubgraph&, const DualSubgraph&) = default;
};

DualSubgraph pmo_to_subgraph(const MarkedCycleOrientation& mo);
MarkedCycleOrientation subgraph_to_pmo(const DualSubgraph& s);

/// S o Phi_W and its inverse.
DualSubgraph wheel_to_subgraph(const Configuration& c);
Configuration subgraph_to_wheel(const DualSubgraph& s);

/// All properly-marked orientations of C_n, generated independently of Phi_W.
void for_each_properly_marked(int n, const std::function<void(const MarkedCycleOrientation&)>& visit);

}  // namespace sandlab
