#include "rainbow/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rainbow {

namespace {

// Lexicographic compare of two cliques given as sorted vertex spans.
bool clique_less(std::span<const VertexId> a, std::span<const VertexId> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

ColouredMultigraph ColouredMultigraph::build(std::uint32_t n_colours,
                                             std::vector<CliqueSpec> cliques) {
    for (auto& cl : cliques) {
        if (cl.colour >= n_colours)
            throw GraphError(GraphError::Kind::BadColourIndex,
                             "clique colour " + std::to_string(cl.colour) +
                                 " out of range (colors " + std::to_string(n_colours) + ")",
                             cl.colour);
        if (cl.vertices.size() < 2)
            throw GraphError(GraphError::Kind::TrivialClique,
                             "clique of colour " + std::to_string(cl.colour) +
                                 " has size " + std::to_string(cl.vertices.size()),
                             cl.colour);
        std::sort(cl.vertices.begin(), cl.vertices.end());
        for (std::size_t i = 1; i < cl.vertices.size(); ++i)
            if (cl.vertices[i] == cl.vertices[i - 1])
                throw GraphError(GraphError::Kind::DuplicateVertex,
                                 "duplicate vertex " + std::to_string(cl.vertices[i]) +
                                     " in clique of colour " + std::to_string(cl.colour),
                                 cl.colour, cl.vertices[i]);
    }

    std::sort(cliques.begin(), cliques.end(), [](const CliqueSpec& a, const CliqueSpec& b) {
        if (a.colour != b.colour) return a.colour < b.colour;
        return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                            b.vertices.begin(), b.vertices.end());
    });

    ColouredMultigraph g;
    g.n_colours_ = n_colours;
    g.n_c_.assign(n_colours, 0);
    g.e_c_.assign(n_colours, 0);
    g.colour_begin_.assign(n_colours + 1, 0);

    std::size_t pool_size = 0;
    for (const auto& cl : cliques) pool_size += cl.vertices.size();
    g.vertex_pool_.reserve(pool_size);
    g.clique_offset_.reserve(cliques.size() + 1);
    g.clique_offset_.push_back(0);
    g.clique_colour_.reserve(cliques.size());

    VertexId max_vertex = 0;
    bool any_vertex = false;
    for (const auto& cl : cliques) {
        const auto k = static_cast<std::int64_t>(cl.vertices.size());
        g.clique_colour_.push_back(cl.colour);
        g.vertex_pool_.insert(g.vertex_pool_.end(), cl.vertices.begin(), cl.vertices.end());
        g.clique_offset_.push_back(static_cast<std::uint32_t>(g.vertex_pool_.size()));
        g.n_c_[cl.colour] += k;
        g.e_c_[cl.colour] += k * (k - 1) / 2;
        g.max_clique_size_ = std::max<std::uint32_t>(g.max_clique_size_,
                                                     static_cast<std::uint32_t>(k));
        any_vertex = true;
        max_vertex = std::max(max_vertex, cl.vertices.back());
        ++g.colour_begin_[cl.colour + 1];
    }
    std::partial_sum(g.colour_begin_.begin(), g.colour_begin_.end(), g.colour_begin_.begin());
    g.n_vertices_ = any_vertex ? max_vertex + 1 : 0;
    g.total_edges_ = std::accumulate(g.e_c_.begin(), g.e_c_.end(), std::int64_t{0});

    // Disjointness within each colour: with cliques sorted by colour we can
    // stamp vertices per colour with an epoch array.
    {
        std::vector<std::uint32_t> stamp(g.n_vertices_, UINT32_MAX);
        for (ColourId c = 0; c < n_colours; ++c) {
            for (std::uint32_t ci = g.colour_begin_[c]; ci < g.colour_begin_[c + 1]; ++ci) {
                for (VertexId v : g.clique_vertices(ci)) {
                    if (stamp[v] == c)
                        throw GraphError(GraphError::Kind::OverlappingCliques,
                                         "colour " + std::to_string(c) +
                                             " has overlapping cliques at vertex " +
                                             std::to_string(v),
                                         c, v);
                    stamp[v] = c;
                }
            }
        }
    }

    // Vertex -> clique incidence CSR.
    g.inc_offset_.assign(g.n_vertices_ + 1, 0);
    for (VertexId v : g.vertex_pool_) ++g.inc_offset_[v + 1];
    std::partial_sum(g.inc_offset_.begin(), g.inc_offset_.end(), g.inc_offset_.begin());
    g.incidence_.resize(g.vertex_pool_.size());
    {
        std::vector<std::uint32_t> cursor(g.inc_offset_.begin(), g.inc_offset_.end() - 1);
        for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci)
            for (VertexId v : g.clique_vertices(ci)) g.incidence_[cursor[v]++] = ci;
    }
    return g;
}

ColouredMultigraph build_instance(std::vector<CliqueSpec> cliques, std::uint32_t n_colours) {
    return ColouredMultigraph::build(n_colours, std::move(cliques));
}

std::uint32_t ColouredMultigraph::clique_of(ColourId c, VertexId v) const {
    for (std::uint32_t ci : vertex_cliques(v))
        if (clique_colour_[ci] == c) return ci;
    return UINT32_MAX;
}

InstanceStats instance_stats(const ColouredMultigraph& g) {
    InstanceStats st;
    st.colours.resize(g.colour_count());
    st.degree.assign(g.vertex_count(), 0);
    st.colour_degree.assign(g.vertex_count(), 0);
    st.degree_tri.assign(g.vertex_count(), 0);
    st.degree_line.assign(g.vertex_count(), 0);

    std::vector<std::uint64_t> pairs;
    pairs.reserve(static_cast<std::size_t>(g.total_edges()));

    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci) {
        const auto verts = g.clique_vertices(ci);
        const auto k = static_cast<std::int64_t>(verts.size());
        const ColourId c = g.clique_colour(ci);
        auto& cs = st.colours[c];
        cs.n_c += k;
        cs.e_c += k * (k - 1) / 2;
        if (k == 3) ++cs.a_c;
        if (k == 2) ++cs.b_c;
        for (VertexId v : verts) {
            st.degree[v] += k - 1;
            st.colour_degree[v] += 1;
            if (k == 3) st.degree_tri[v] += 2;
            if (k == 2) st.degree_line[v] += 1;
        }
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                pairs.push_back((static_cast<std::uint64_t>(verts[i]) << 32) | verts[j]);
    }

    std::sort(pairs.begin(), pairs.end());
    std::int64_t best = 0;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        best = std::max<std::int64_t>(best, static_cast<std::int64_t>(j - i));
        i = j;
    }
    st.max_multiplicity = best;
    return st;
}

std::int64_t pair_multiplicity(const ColouredMultigraph& g, VertexId u, VertexId v) {
    std::int64_t count = 0;
    for (std::uint32_t ci : g.vertex_cliques(u)) {
        const auto verts = g.clique_vertices(ci);
        if (std::binary_search(verts.begin(), verts.end(), v)) ++count;
    }
    return count;
}

std::string VerifyReport::Violation::describe() const {
    switch (kind) {
        case Kind::BadColour:
            return "colour " + std::to_string(colour) + " out of range";
        case Kind::NotAnEdge:
            return "entry of colour " + std::to_string(colour) +
                   " is not an edge of that colour (vertex " + std::to_string(vertex) + ")";
        case Kind::SharedVertex:
            return "vertex " + std::to_string(vertex) + " used by more than one entry";
        case Kind::MissingColour:
            return "colour " + std::to_string(colour) + " has no entry";
        case Kind::DegenerateEdge:
            return "entry of colour " + std::to_string(colour) + " repeats a vertex";
    }
    return "unknown";
}

VerifyReport verify_matching(const ColouredMultigraph& g, const RainbowMatching& m,
                             bool require_full) {
    VerifyReport rep;
    auto flag = [&](VerifyReport::Violation::Kind k, std::int64_t c, std::int64_t v) {
        rep.violations.push_back({k, c, v});
        rep.accepted = false;
    };

    std::map<VertexId, int> uses;
    for (const auto& [c, edge] : m.entries) {
        const auto [u, v] = edge;
        if (c >= g.colour_count()) {
            flag(VerifyReport::Violation::Kind::BadColour, c, -1);
            continue;
        }
        if (u == v) {
            flag(VerifyReport::Violation::Kind::DegenerateEdge, c, u);
            continue;
        }
        const std::uint32_t ci = g.clique_of(c, u);
        bool edge_ok = false;
        if (ci != UINT32_MAX) {
            const auto verts = g.clique_vertices(ci);
            edge_ok = std::binary_search(verts.begin(), verts.end(), v);
        }
        if (!edge_ok) flag(VerifyReport::Violation::Kind::NotAnEdge, c, u);
        ++uses[u];
        ++uses[v];
    }
    for (const auto& [v, n] : uses)
        if (n > 1) flag(VerifyReport::Violation::Kind::SharedVertex, -1, v);
    if (require_full)
        for (ColourId c = 0; c < g.colour_count(); ++c)
            if (!m.entries.count(c)) flag(VerifyReport::Violation::Kind::MissingColour, c, -1);
    return rep;
}

ColouredMultigraph remove_vertices(const ColouredMultigraph& g,
                                   const std::vector<VertexId>& s) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (VertexId v : s)
        if (v < g.vertex_count()) gone[v] = true;

    std::vector<CliqueSpec> kept;
    kept.reserve(g.clique_count());
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci) {
        CliqueSpec spec;
        spec.colour = g.clique_colour(ci);
        for (VertexId v : g.clique_vertices(ci))
            if (!gone[v]) spec.vertices.push_back(v);
        if (spec.vertices.size() >= 2) kept.push_back(std::move(spec));
    }
    return ColouredMultigraph::build(g.colour_count(), std::move(kept));
}

std::int64_t class_size_target(double delta, std::uint32_t n) {
    const double v = (2.0 + delta) * static_cast<double>(n);
    return static_cast<std::int64_t>(std::ceil(v - 1e-9 * std::max(1.0, v)));
}

std::int64_t multiplicity_cap(std::uint32_t n) {
    if (n == 0) return 1;
    const double ln = std::log(static_cast<double>(n));
    if (ln <= 0.0) return 1;
    const double cap = std::sqrt(static_cast<double>(n)) / (ln * ln);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(cap)));
}

ColouredMultigraph normalize_cliques(const ColouredMultigraph& g, double delta,
                                     std::uint32_t n) {
    if (delta <= 0.0)
        throw GraphError(GraphError::Kind::BadConfig, "delta must be positive");
    const std::int64_t target = class_size_target(delta, n);
    for (ColourId c = 0; c < g.colour_count(); ++c)
        if (g.colour_vertices(c) < target)
            throw GraphError(GraphError::Kind::ClassTooSmall,
                             "colour " + std::to_string(c) + " has n_c=" +
                                 std::to_string(g.colour_vertices(c)) + " < " +
                                 std::to_string(target),
                             c);

    std::vector<CliqueSpec> out;
    out.reserve(g.clique_count() * 2);
    std::vector<std::int64_t> n_c(g.colour_count(), 0);

    // Split K_t into triangles and pairs, preserving every vertex.
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci) {
        const auto verts = g.clique_vertices(ci);
        const ColourId c = g.clique_colour(ci);
        const std::size_t t = verts.size();
        std::size_t triangles = 0, pairs = 0;
        if (t % 3 == 0) {
            triangles = t / 3;
        } else if (t % 3 == 2) {
            triangles = t / 3;
            pairs = 1;
        } else {  // t % 3 == 1, t >= 4
            triangles = (t - 4) / 3;
            pairs = 2;
        }
        std::size_t pos = 0;
        for (std::size_t i = 0; i < triangles; ++i, pos += 3)
            out.push_back({c, {verts[pos], verts[pos + 1], verts[pos + 2]}});
        for (std::size_t i = 0; i < pairs; ++i, pos += 2)
            out.push_back({c, {verts[pos], verts[pos + 1]}});
        n_c[c] += static_cast<std::int64_t>(t);
    }

    // Cap classes at target+2 by deleting whole components, pairs before
    // triangles, in ascending component order. Stops as soon as the class
    // fits, keeping e_c as high as possible.
    std::vector<char> drop(out.size(), 0);
    {
        std::vector<std::vector<std::uint32_t>> by_colour(g.colour_count());
        for (std::uint32_t i = 0; i < out.size(); ++i)
            by_colour[out[i].colour].push_back(i);
        for (ColourId c = 0; c < g.colour_count(); ++c) {
            if (n_c[c] <= target + 2) continue;
            for (int pass = 0; pass < 2 && n_c[c] > target + 2; ++pass) {
                const std::size_t want = pass == 0 ? 2 : 3;
                for (std::uint32_t idx : by_colour[c]) {
                    if (n_c[c] <= target + 2) break;
                    const auto sz = static_cast<std::int64_t>(out[idx].vertices.size());
                    if (static_cast<std::size_t>(sz) != want) continue;
                    if (n_c[c] - sz < target) continue;
                    drop[idx] = 1;
                    n_c[c] -= sz;
                }
            }
        }
    }

    std::vector<CliqueSpec> kept;
    kept.reserve(out.size());
    for (std::uint32_t i = 0; i < out.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(out[i]));
    return ColouredMultigraph::build(g.colour_count(), std::move(kept));
}

} // namespace rainbow
