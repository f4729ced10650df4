#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using VertexId = std::uint32_t;
using ColourId = std::uint32_t;

// One clique declaration: the vertices of colour `colour` forming a complete
// component. Used as build input; inside ColouredMultigraph cliques live in
// flat canonical storage.
struct CliqueSpec {
    ColourId colour = 0;
    std::vector<VertexId> vertices;
};

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        OverlappingCliques,
        TrivialClique,
        DuplicateVertex,
        BadColourIndex,
        ClassTooSmall,
        NotNormalized,
        BadConfig,
    };

    GraphError(Kind kind, std::string msg, std::int64_t colour = -1, std::int64_t vertex = -1)
        : std::runtime_error(std::move(msg)), kind(kind), colour(colour), vertex(vertex) {}

    Kind kind;
    std::int64_t colour;
    std::int64_t vertex;
};

// Partial map colour -> edge. Valid iff all endpoints are pairwise distinct
// and each entry lies inside one clique of its colour (see verify_matching).
struct RainbowMatching {
    std::map<ColourId, std::pair<VertexId, VertexId>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    void add(ColourId c, VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        entries[c] = {u, v};
    }
};

// Edge-coloured multigraph whose colour classes are disjoint unions of
// cliques. Vertices are global indices; multiplicity arises only from the
// same pair appearing in cliques of several colours. Immutable after build.
class ColouredMultigraph {
public:
    ColouredMultigraph() = default;

    // Validates and canonicalises (vertices sorted within each clique,
    // cliques sorted by colour, then min vertex, then lexicographically).
    // Throws GraphError on overlap within a colour, size < 2, duplicate
    // vertices, or colour index out of range.
    static ColouredMultigraph build(std::uint32_t n_colours, std::vector<CliqueSpec> cliques);

    std::uint32_t colour_count() const { return n_colours_; }
    std::uint32_t vertex_count() const { return n_vertices_; }
    std::uint32_t clique_count() const { return static_cast<std::uint32_t>(clique_offset_.size()) - 1; }

    std::span<const VertexId> clique_vertices(std::uint32_t idx) const {
        return {vertex_pool_.data() + clique_offset_[idx],
                vertex_pool_.data() + clique_offset_[idx + 1]};
    }
    ColourId clique_colour(std::uint32_t idx) const { return clique_colour_[idx]; }
    std::uint32_t clique_size(std::uint32_t idx) const {
        return clique_offset_[idx + 1] - clique_offset_[idx];
    }

    // Clique index range [begin, end) of one colour class.
    std::pair<std::uint32_t, std::uint32_t> colour_cliques(ColourId c) const {
        return {colour_begin_[c], colour_begin_[c + 1]};
    }

    std::int64_t colour_vertices(ColourId c) const { return n_c_[c]; }  // n_c
    std::int64_t colour_edges(ColourId c) const { return e_c_[c]; }     // e_c
    std::int64_t total_edges() const { return total_edges_; }

    // Cliques containing vertex v (indices into clique storage).
    std::span<const std::uint32_t> vertex_cliques(VertexId v) const {
        if (v >= n_vertices_) return {};
        return {incidence_.data() + inc_offset_[v], incidence_.data() + inc_offset_[v + 1]};
    }

    // Clique of colour c containing v, or UINT32_MAX. Within a colour the
    // cliques are vertex-disjoint, so there is at most one.
    std::uint32_t clique_of(ColourId c, VertexId v) const;

    bool is_normalized() const { return max_clique_size_ <= 3; }
    std::uint32_t max_clique_size() const { return max_clique_size_; }

private:
    std::uint32_t n_colours_ = 0;
    std::uint32_t n_vertices_ = 0;
    std::int64_t total_edges_ = 0;
    std::uint32_t max_clique_size_ = 0;

    std::vector<VertexId> vertex_pool_;
    std::vector<std::uint32_t> clique_offset_;  // size clique_count()+1
    std::vector<ColourId> clique_colour_;
    std::vector<std::uint32_t> colour_begin_;   // size n_colours+1
    std::vector<std::int64_t> n_c_;
    std::vector<std::int64_t> e_c_;

    std::vector<std::uint32_t> inc_offset_;     // CSR vertex -> cliques
    std::vector<std::uint32_t> incidence_;
};

// Convenience wrapper mirroring the build operation.
ColouredMultigraph build_instance(std::vector<CliqueSpec> cliques, std::uint32_t n_colours);

struct InstanceStats {
    struct ColourStats {
        std::int64_t n_c = 0;  // vertices in the class
        std::int64_t e_c = 0;  // edges in the class
        std::int64_t a_c = 0;  // K3 components
        std::int64_t b_c = 0;  // K2 components
    };
    std::vector<ColourStats> colours;
    std::vector<std::int64_t> degree;         // d_v, edges incident with multiplicity
    std::vector<std::int64_t> colour_degree;  // Cd_v, number of colours at v
    std::vector<std::int64_t> degree_tri;     // d_v within K3 components
    std::vector<std::int64_t> degree_line;    // d_v within K2 components
    std::int64_t max_multiplicity = 0;        // max over pairs of co-occurring colours
};

// Full statistic sweep, including the exact max pair multiplicity
// (sort-based, so O(E log E) on the whole instance).
InstanceStats instance_stats(const ColouredMultigraph& g);

// Multiplicity of one pair: number of colours whose class contains both.
std::int64_t pair_multiplicity(const ColouredMultigraph& g, VertexId u, VertexId v);

struct VerifyReport {
    struct Violation {
        enum class Kind { BadColour, NotAnEdge, SharedVertex, MissingColour, DegenerateEdge };
        Kind kind;
        std::int64_t colour = -1;
        std::int64_t vertex = -1;
        std::string describe() const;
    };
    bool accepted = true;
    std::vector<Violation> violations;
};

// Accepts iff every entry is an edge of its colour (both endpoints inside one
// clique of that colour), endpoints are globally distinct, and, when
// require_full, every colour is present. Never throws; the report carries the
// violation list.
VerifyReport verify_matching(const ColouredMultigraph& g, const RainbowMatching& m,
                             bool require_full = false);

// Removes a vertex set: every clique loses those vertices and cliques that
// drop below size 2 disappear from their class. Vertex ids are preserved.
ColouredMultigraph remove_vertices(const ColouredMultigraph& g,
                                   const std::vector<VertexId>& s);

// Splits every clique into K3/K2 components without losing vertices, then
// removes whole components (pairs first, ascending clique order) while the
// class stays at >= ceil((2+delta)*n) vertices. Requires every class to start
// at or above that target; final n_c lands in [target, target+2].
//
// Split rule for K_t: t % 3 == 0 -> t/3 triangles; t % 3 == 2 -> floor(t/3)
// triangles + one pair; t % 3 == 1 -> (t-4)/3 triangles + two pairs.
ColouredMultigraph normalize_cliques(const ColouredMultigraph& g, double delta,
                                     std::uint32_t n);

// ceil((2+delta)*n) with a guard against FP noise on exact integers.
std::int64_t class_size_target(double delta, std::uint32_t n);

// max(1, floor(sqrt(n)/log^2 n)) - the multiplicity cap both theorems assume.
std::int64_t multiplicity_cap(std::uint32_t n);

} // namespace rainbow
