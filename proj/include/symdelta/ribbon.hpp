#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdelta/set_system.hpp"
#include "symdelta/symplectic.hpp"

namespace symdelta {

/// Combinatorial ribbon graph: a rotation system with a twist bit per edge.
/// Half-edges are numbered 0..2m-1; each occurs exactly once in some vertex
/// rotation and exactly once in an edge pair.
struct RibbonGraph {
    /// Cyclic half-edge order around each vertex; an empty list is an
    /// isolated vertex.
    std::vector<std::vector<int>> rotations;

    struct Edge {
        std::string label;
        int half_a = 0;
        int half_b = 0;
        bool twisted = false;

        bool operator==(const Edge&) const = default;
    };
    std::vector<Edge> edges;

    int n_vertices() const { return static_cast<int>(rotations.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    /// Edge labels in edge-list order; this is the ground set shared by rho
    /// and pi.
    GroundSet edge_ground() const;

    /// Checks the half-edge partition invariants; throws InvalidArgument.
    void validate() const;

    /// Reorders vertices by smallest half-edge, rotates each rotation to
    /// start at its smallest half-edge, and orients each edge pair
    /// (half_a < half_b).  Value equality of normalized graphs is equality
    /// of rotation systems.
    RibbonGraph normalized() const;

    bool operator==(const RibbonGraph&) const = default;
};

/// True if the underlying abstract graph is connected (the empty graph is
/// connected).
bool is_connected(const RibbonGraph& g);

/// Number of boundary walks of the thickened surface.
int boundary_components(const RibbonGraph& g);

/// Delete the edges outside `edge_mask` (mask over edge-list positions);
/// all vertices stay.
RibbonGraph spanning_subgraph(const RibbonGraph& g, std::uint64_t edge_mask);

/// Bouchet's delta-matroid: a set of edges is feasible iff the spanning
/// subgraph it induces has a connected boundary.  Requires a connected graph.
DeltaMatroid rho(const RibbonGraph& g);

/// Partial dual with respect to a set of edges; an involution, identity on
/// the empty set, preserves edge labels and connectivity.
RibbonGraph partial_dual(const RibbonGraph& g, std::uint64_t edge_mask);

/// One-vertex ribbon graph.
struct FramedChordDiagram {
    explicit FramedChordDiagram(RibbonGraph g);
    RibbonGraph graph;
};

/// Chords become vertices, adjacency is interleaving of endpoints in the
/// rotation cycle, framing is the twist bit.
FramedGraph intersection_graph(const FramedChordDiagram& d);

/// The Lagrangian subspace of a connected ribbon graph: on one vertex it is
/// the graphic subspace of the intersection graph; in general the graph is
/// carried to a one-vertex presentation by partial duality and back by local
/// duality.
LagrangianSubspace pi(const RibbonGraph& g);

/// Canonical key of the corner structure with edge labels; equal keys iff
/// the ribbon graphs are homeomorphic by an edge-label-preserving map.
std::string canonical_ribbon_key(const RibbonGraph& g);

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

/// Every one-vertex ribbon graph with exactly n_edges edges: all chord
/// matchings of the rotation cycle times all twist patterns.  Edges are
/// labeled "1".."m" by first endpoint.
std::vector<RibbonGraph> all_one_vertex_diagrams(int n_edges);

} // namespace symdelta
