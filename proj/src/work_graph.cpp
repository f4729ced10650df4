#include "rainbow/work_graph.hpp"

#include <algorithm>
#include <limits>

namespace rainbow {

WorkGraph::WorkGraph(const ColouredMultigraph& g) : g_(&g) {
    alive_.assign(g.vertex_count(), 0);
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci)
        for (VertexId v : g.clique_vertices(ci)) alive_[v] = 1;
    live_vertices_ = std::count(alive_.begin(), alive_.end(), std::uint8_t{1});

    comp_alive_.resize(g.clique_count());
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci)
        comp_alive_[ci] = static_cast<std::uint32_t>(g.clique_vertices(ci).size());

    e_c_.resize(g.colour_count());
    n_c_.resize(g.colour_count());
    for (ColourId c = 0; c < g.colour_count(); ++c) {
        e_c_[c] = g.colour_edges(c);
        n_c_[c] = g.colour_vertices(c);
    }
}

std::int64_t WorkGraph::colour_degree(ColourId c, VertexId v) const {
    if (v >= alive_.size() || !alive_[v]) return 0;
    for (std::uint32_t ci : g_->vertex_cliques(v)) {
        if (g_->clique_colour(ci) != c) continue;
        const std::uint32_t k = comp_alive_[ci];
        return k >= 2 ? k - 1 : 0;
    }
    return 0;
}

void WorkGraph::remove_vertex(VertexId v) {
    if (v >= alive_.size() || !alive_[v]) return;
    alive_[v] = 0;
    --live_vertices_;
    for (std::uint32_t ci : g_->vertex_cliques(v)) {
        const std::uint32_t k = comp_alive_[ci];
        if (k == 0) continue;
        comp_alive_[ci] = k - 1;
        const ColourId c = g_->clique_colour(ci);
        if (k >= 2) {
            e_c_[c] -= k - 1;
            // kernel count: the last partner of a dying K2 becomes trivial
            n_c_[c] -= (k == 2) ? 2 : 1;
        }
    }
}

std::uint32_t WorkGraph::alive_members(std::uint32_t ci, std::array<VertexId, 3>& out) const {
    std::uint32_t n = 0;
    for (VertexId v : g_->clique_vertices(ci)) {
        if (!alive_[v]) continue;
        if (n < 3) out[n] = v;
        ++n;
    }
    return n;
}

std::vector<VertexId> WorkGraph::alive_members_vec(std::uint32_t ci) const {
    std::vector<VertexId> out;
    for (VertexId v : g_->clique_vertices(ci))
        if (alive_[v]) out.push_back(v);
    return out;
}

bool WorkGraph::smallest_edge(ColourId c, VertexId& u, VertexId& v) const {
    const auto [begin, end] = g_->colour_cliques(c);
    VertexId bu = std::numeric_limits<VertexId>::max();
    VertexId bv = std::numeric_limits<VertexId>::max();
    bool found = false;
    for (std::uint32_t ci = begin; ci < end; ++ci) {
        if (comp_alive_[ci] < 2) continue;
        // the two smallest alive members give the clique's lexicographic best
        VertexId a = std::numeric_limits<VertexId>::max();
        VertexId b = std::numeric_limits<VertexId>::max();
        for (VertexId w : g_->clique_vertices(ci)) {
            if (!alive_[w]) continue;
            if (w < a) {
                b = a;
                a = w;
            } else if (w < b) {
                b = w;
            }
        }
        if (!found || a < bu || (a == bu && b < bv)) {
            bu = a;
            bv = b;
            found = true;
        }
    }
    if (found) {
        u = bu;
        v = bv;
    }
    return found;
}

void WorkGraph::edge_by_index(ColourId c, std::int64_t k, VertexId& u, VertexId& v) const {
    const auto [begin, end] = g_->colour_cliques(c);
    for (std::uint32_t ci = begin; ci < end; ++ci) {
        const std::uint32_t a = comp_alive_[ci];
        if (a < 2) continue;
        const std::int64_t edges = static_cast<std::int64_t>(a) * (a - 1) / 2;
        if (k >= edges) {
            k -= edges;
            continue;
        }
        const auto mem = alive_members_vec(ci);
        for (std::size_t i = 0; i < mem.size(); ++i) {
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                if (k == 0) {
                    u = mem[i];
                    v = mem[j];
                    return;
                }
                --k;
            }
        }
    }
    throw std::out_of_range("edge index past surviving edges of colour");
}

std::vector<std::pair<VertexId, VertexId>> WorkGraph::edges_of_colour(ColourId c) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    const auto [begin, end] = g_->colour_cliques(c);
    for (std::uint32_t ci = begin; ci < end; ++ci) {
        if (comp_alive_[ci] < 2) continue;
        const auto mem = alive_members_vec(ci);
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                out.emplace_back(mem[i], mem[j]);
    }
    return out;
}

} // namespace rainbow
