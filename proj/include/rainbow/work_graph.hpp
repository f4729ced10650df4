#pragma once

#include "rainbow/core.hpp"

#include <array>
#include <vector>

namespace rainbow {

// Mutable view over an immutable ColouredMultigraph: tracks which vertices
// are still alive and keeps the per-colour edge and kernel-vertex counts in
// step. Deleting a vertex of a K2 strands its partner, which then leaves the
// class (kernel semantics), so n_c can drop by 2 per deleted vertex.
//
// Solvers copy one of these per run; copies are cheap relative to the graph.
class WorkGraph {
public:
    explicit WorkGraph(const ColouredMultigraph& g);

    const ColouredMultigraph& graph() const { return *g_; }

    bool alive(VertexId v) const { return alive_[v] != 0; }
    std::uint32_t clique_alive(std::uint32_t ci) const { return comp_alive_[ci]; }

    std::int64_t colour_edges(ColourId c) const { return e_c_[c]; }
    std::int64_t colour_vertices(ColourId c) const { return n_c_[c]; }
    std::int64_t live_vertex_count() const { return live_vertices_; }

    // Surviving degree of v within colour c: (alive size of its clique - 1),
    // zero when the clique has withered below 2.
    std::int64_t colour_degree(ColourId c, VertexId v) const;

    // Deletes a vertex and updates counters. Safe to call on dead vertices.
    void remove_vertex(VertexId v);

    // Up to three alive vertices of a clique, ascending.
    std::uint32_t alive_members(std::uint32_t ci, std::array<VertexId, 3>& out) const;
    std::vector<VertexId> alive_members_vec(std::uint32_t ci) const;

    // Lexicographically smallest surviving edge of colour c (by min endpoint,
    // then max endpoint, then clique index). Returns false if none survive.
    bool smallest_edge(ColourId c, VertexId& u, VertexId& v) const;

    // k-th surviving edge of colour c, 0 <= k < colour_edges(c), in clique
    // order with the three K3 edges ordered (v0v1, v0v2, v1v2) over the
    // alive, ascending members.
    void edge_by_index(ColourId c, std::int64_t k, VertexId& u, VertexId& v) const;

    // All surviving edges of a colour, deterministic order (as above).
    std::vector<std::pair<VertexId, VertexId>> edges_of_colour(ColourId c) const;

private:
    const ColouredMultigraph* g_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint32_t> comp_alive_;
    std::vector<std::int64_t> e_c_;
    std::vector<std::int64_t> n_c_;
    std::int64_t live_vertices_ = 0;
};

} // namespace rainbow
