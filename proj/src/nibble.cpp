#include "rainbow/nibble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rainbow {

namespace {

bool epsilon_is_integral(double epsilon, std::uint32_t n, std::int64_t& chunk_out) {
    const double raw = epsilon * static_cast<double>(n);
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-6 * std::max(1.0, raw)) return false;
    chunk_out = static_cast<std::int64_t>(rounded);
    return chunk_out >= 1;
}

} // namespace

double default_epsilon(std::uint32_t n_colours, double sigma1, double sigma2) {
    if (n_colours == 0) return 1.0;
    const double gamma = sigma1 / sigma2;
    const double head = sigma2 * (1.0 - gamma) * (1.0 - gamma) * n_colours / 5.0;
    std::int64_t k = static_cast<std::int64_t>(std::floor(head));
    const std::int64_t k_max =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(0.1 * n_colours));
    k = std::clamp<std::int64_t>(k, 1, k_max);
    return static_cast<double>(k) / static_cast<double>(n_colours);
}

NibbleConfig resolve_config(NibbleConfig cfg, std::uint32_t n_colours) {
    if (!(cfg.sigma1 > 0.0) || !(cfg.sigma1 < cfg.sigma2))
        throw GraphError(GraphError::Kind::BadConfig, "need 0 < sigma1 < sigma2");
    if (cfg.epsilon == 0.0) cfg.epsilon = default_epsilon(n_colours, cfg.sigma1, cfg.sigma2);
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0)
        throw GraphError(GraphError::Kind::BadConfig, "epsilon must lie in (0, 1]");
    if (n_colours > 0) {
        std::int64_t chunk;
        if (!epsilon_is_integral(cfg.epsilon, n_colours, chunk))
            throw GraphError(GraphError::Kind::BadConfig,
                             "epsilon * n_colours must be a positive integer");
    }
    return cfg;
}

ChunkPlan plan_chunks(std::uint32_t n_colours, double epsilon, Rng& rng) {
    std::int64_t chunk = 0;
    if (n_colours > 0 && !epsilon_is_integral(epsilon, n_colours, chunk))
        throw GraphError(GraphError::Kind::BadConfig,
                         "epsilon * n_colours must be a positive integer");

    ChunkPlan plan;
    plan.chunk_of.assign(n_colours, 0);
    if (n_colours == 0) return plan;

    std::vector<ColourId> perm(n_colours);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);

    const std::uint32_t tau =
        static_cast<std::uint32_t>((n_colours + chunk - 1) / chunk);
    plan.chunks.resize(tau);
    for (std::uint32_t i = 0; i < n_colours; ++i) {
        const std::uint32_t j = static_cast<std::uint32_t>(i / chunk);
        plan.chunks[j].push_back(perm[i]);
        plan.chunk_of[perm[i]] = j;
    }
    return plan;
}

NibbleState::NibbleState(const ColouredMultigraph& g, const NibbleConfig& cfg,
                         ChunkPlan plan)
    : g_(&g), cfg_(cfg), plan_(std::move(plan)), work_(g) {
    init_degrees();
    refresh_deviations();
}

void NibbleState::init_degrees() {
    const std::uint32_t tau = plan_.tau();
    deg_.assign(static_cast<std::size_t>(g_->vertex_count()) * tau, 0);
    for (std::uint32_t ci = 0; ci < g_->clique_count(); ++ci) {
        const auto verts = g_->clique_vertices(ci);
        const auto j = plan_.chunk_of[g_->clique_colour(ci)];
        const auto d = static_cast<std::int32_t>(verts.size() - 1);
        for (VertexId v : verts) deg_[static_cast<std::size_t>(v) * tau + j] += d;
    }

    std::int64_t max_chunk = 0;
    for (const auto& ch : plan_.chunks)
        max_chunk = std::max<std::int64_t>(max_chunk, static_cast<std::int64_t>(ch.size()));
    bucket_.assign(tau, std::vector<std::int64_t>(2 * max_chunk + 2, 0));
    max_ptr_.assign(tau, 0);
    for (VertexId v = 0; v < g_->vertex_count(); ++v) {
        if (!work_.alive(v)) continue;
        for (std::uint32_t j = 0; j < tau; ++j) {
            const auto d = deg_[static_cast<std::size_t>(v) * tau + j];
            ++bucket_[j][d];
            max_ptr_[j] = std::max<std::int64_t>(max_ptr_[j], d);
        }
    }
}

std::int64_t NibbleState::chunk_degree(VertexId v, std::uint32_t chunk) const {
    return deg_[static_cast<std::size_t>(v) * plan_.tau() + chunk];
}

std::int64_t NibbleState::chunk_max_degree(std::uint32_t chunk) const {
    auto& ptr = const_cast<NibbleState*>(this)->max_ptr_[chunk];
    while (ptr > 0 && bucket_[chunk][ptr] == 0) --ptr;
    return ptr;
}

void NibbleState::remove_vertex_tracked(VertexId v) {
    if (!work_.alive(v)) return;
    const std::uint32_t tau = plan_.tau();
    // co-members of v lose one edge towards v's colours' chunks
    for (std::uint32_t ci : g_->vertex_cliques(v)) {
        const std::uint32_t k = work_.clique_alive(ci);
        if (k < 2) continue;
        const std::uint32_t j = plan_.chunk_of[g_->clique_colour(ci)];
        for (VertexId u : g_->clique_vertices(ci)) {
            if (u == v || !work_.alive(u)) continue;
            auto& d = deg_[static_cast<std::size_t>(u) * tau + j];
            --bucket_[j][d];
            ++bucket_[j][d - 1];
            --d;
        }
    }
    // v's own degree mass leaves every chunk's statistics
    for (std::uint32_t j = 0; j < tau; ++j)
        --bucket_[j][deg_[static_cast<std::size_t>(v) * tau + j]];
    work_.remove_vertex(v);
}

void NibbleState::refresh_deviations() {
    const double x = cfg_.epsilon * step_;
    const double dx = 1.0 - cfg_.gamma() * x;
    const double n = static_cast<double>(g_->colour_count());

    double e_dev = 0;
    for (std::uint32_t j = step_; j < plan_.tau(); ++j)
        for (ColourId c : plan_.chunks[j]) {
            const double predicted =
                static_cast<double>(g_->colour_edges(c)) * dx * dx;
            const double dev =
                std::abs(predicted - static_cast<double>(work_.colour_edges(c)));
            e_dev = std::max(e_dev, dev);
        }
    e_dev_ = e_dev;

    const double threshold = cfg_.epsilon * cfg_.sigma1 * dx * n;
    double d_dev = 0;
    for (std::uint32_t j = step_; j < plan_.tau(); ++j) {
        const double over = static_cast<double>(chunk_max_degree(j)) - threshold;
        if (over > d_dev) d_dev = over;
    }
    d_dev_ = d_dev;
}

StepProbability step_probability(std::uint32_t step, double epsilon, double gamma,
                                 double sigma2, std::uint32_t n_colours, double e_dev,
                                 double d_dev) {
    const double dx = 1.0 - gamma * (epsilon * step);
    StepProbability out;
    out.c = (2.0 * d_dev * dx + 2.0 * epsilon * gamma * e_dev) /
            (sigma2 * dx * dx * dx * static_cast<double>(n_colours));
    out.p = epsilon * gamma / dx + out.c;
    return out;
}

StepProbability step_probability(const NibbleState& state) {
    return step_probability(state.step(), state.config().epsilon, state.config().gamma(),
                            state.config().sigma2, state.graph().colour_count(),
                            state.e_deviation(), state.d_deviation());
}

double marking_probability(const NibbleState& state, VertexId v,
                           const std::vector<ColourId>& chunk) {
    double survive = 1.0;
    for (ColourId c : chunk) {
        const std::int64_t ec = state.work().colour_edges(c);
        if (ec <= 0)
            throw GraphError(GraphError::Kind::BadConfig,
                             "EmptyColourClass: colour " + std::to_string(c) +
                                 " has no surviving edge",
                             c);
        const std::int64_t d = state.work().colour_degree(c, v);
        if (d > 0)
            survive *= 1.0 - static_cast<double>(d) / static_cast<double>(ec);
    }
    return 1.0 - survive;
}

// Internal accessor for the solver loop.
struct NibbleOps {
    static WorkGraph& work(NibbleState& st) { return st.work_; }
    static RainbowMatching& matching(NibbleState& st) { return st.matching_; }
    static void remove_vertex(NibbleState& st, VertexId v) { st.remove_vertex_tracked(v); }
    static void advance(NibbleState& st) {
        ++st.step_;
        st.refresh_deviations();
    }
};

std::vector<double> marking_probabilities(const NibbleState& state) {
    const auto& g = state.graph();
    const auto& work = state.work();
    const auto& chunk = state.plan().chunks[state.step()];
    std::vector<double> survive(g.vertex_count(), 1.0);
    for (ColourId c : chunk) {
        const std::int64_t ec = work.colour_edges(c);
        if (ec <= 0)
            throw GraphError(GraphError::Kind::BadConfig,
                             "EmptyColourClass: colour " + std::to_string(c) +
                                 " has no surviving edge",
                             c);
        const auto [begin, end] = g.colour_cliques(c);
        for (std::uint32_t ci = begin; ci < end; ++ci) {
            const std::uint32_t k = work.clique_alive(ci);
            if (k < 2) continue;
            const double factor =
                1.0 - static_cast<double>(k - 1) / static_cast<double>(ec);
            for (VertexId v : g.clique_vertices(ci))
                if (work.alive(v)) survive[v] *= factor;
        }
    }
    std::vector<double> p(g.vertex_count(), 0.0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (work.alive(v) && survive[v] != 1.0) p[v] = 1.0 - survive[v];
    return p;
}

std::optional<double> zap_probability(double P, double p) {
    if (p > 1.0 || P > p) return std::nullopt;
    if (P >= 1.0) {
        if (p >= 1.0) return 0.0;
        return std::nullopt;
    }
    return (p - P) / (1.0 - P);
}

IterationOutcome run_iteration(NibbleState& state, Rng& rng) {
    IterationOutcome out;
    const auto& g = state.graph();
    const auto& cfg = state.config();
    const auto& plan = state.plan();
    const std::uint32_t s = state.step();
    const auto& chunk = plan.chunks[s];
    auto& work = NibbleOps::work(state);

    auto broke = [&](std::string reason) {
        out.ok = false;
        out.break_reason = std::move(reason);
        return out;
    };

    for (ColourId c : chunk)
        if (work.colour_edges(c) <= 0)
            return broke("EmptyColourClass: colour " + std::to_string(c) +
                         " in chunk " + std::to_string(s));

    const auto [p, c_corr] = step_probability(state);
    const std::vector<double> P = marking_probabilities(state);

    // Q_i(v) must exist for every vertex; P(v)=0 vertices share Q=p.
    if (auto q = zap_probability(0.0, p); !q)
        return broke("QOutOfRange: p=" + std::to_string(p) + " at step " +
                     std::to_string(s));
    std::vector<double> Q(P.size(), p);
    for (VertexId v = 0; v < P.size(); ++v) {
        if (P[v] == 0.0) continue;
        const auto q = zap_probability(P[v], p);
        if (!q)
            return broke("QOutOfRange: P(v)=" + std::to_string(P[v]) + " > p=" +
                         std::to_string(p) + " at step " + std::to_string(s));
        Q[v] = *q;
    }

    // independent zap bits, fixed (ascending) order for reproducibility
    std::vector<std::uint8_t> zap_bit(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!work.alive(v)) continue;
        zap_bit[v] = rng.uniform() < Q[v] ? 1 : 0;
    }

    // Step 1: one uniform edge per chunk colour
    struct Chosen {
        ColourId colour;
        VertexId u, v;
    };
    std::vector<Chosen> chosen;
    chosen.reserve(chunk.size());
    std::vector<std::uint8_t> marked(g.vertex_count(), 0);
    std::vector<std::uint32_t> usage(g.vertex_count(), 0);
    for (ColourId c : chunk) {
        const std::int64_t k = static_cast<std::int64_t>(rng.below(
            static_cast<std::uint64_t>(work.colour_edges(c))));
        VertexId u, v;
        work.edge_by_index(c, k, u, v);
        chosen.push_back({c, u, v});
        marked[u] = marked[v] = 1;
        ++usage[u];
        ++usage[v];
    }

    // Step 2: kill the collision-free chosen edges
    auto& matching = NibbleOps::matching(state);
    std::vector<ColourId> phi;
    std::vector<std::uint8_t> killed_vertex(g.vertex_count(), 0);
    std::int64_t killed = 0;
    for (const auto& ch : chosen) {
        if (usage[ch.u] >= 2 || usage[ch.v] >= 2) {
            phi.push_back(ch.colour);
        } else {
            killed_vertex[ch.u] = killed_vertex[ch.v] = 1;
        }
    }

    // component-hit statistics against the pre-deletion state; a vertex is
    // condemned iff it is marked or its zap bit is set
    if (cfg.record_stats) {
        out.record.stat_L.assign(g.colour_count(), -1);
        out.record.stat_T1.assign(g.colour_count(), -1);
        out.record.stat_T2.assign(g.colour_count(), -1);
        out.record.colour_edges_mid.assign(g.colour_count(), -1);
        auto tally = [&](ColourId c) {
            std::int64_t L = 0, T1 = 0, T2 = 0, e_mid = 0;
            const auto [begin, end] = g.colour_cliques(c);
            for (std::uint32_t ci = begin; ci < end; ++ci) {
                const std::uint32_t k = work.clique_alive(ci);
                if (k < 2) continue;
                std::uint32_t condemned = 0, deleted = 0;
                for (VertexId v : g.clique_vertices(ci)) {
                    if (!work.alive(v)) continue;
                    if (marked[v] || zap_bit[v]) ++condemned;
                    if (killed_vertex[v] || zap_bit[v]) ++deleted;
                }
                if (k == 2 && condemned >= 1) ++L;
                if (k == 3) {
                    if (condemned >= 1) ++T1;
                    if (condemned >= 2) ++T2;
                }
                const std::uint32_t left = k - deleted;
                e_mid += static_cast<std::int64_t>(left) * (left - 1) / 2;
            }
            out.record.stat_L[c] = L;
            out.record.stat_T1[c] = T1;
            out.record.stat_T2[c] = T2;
            out.record.colour_edges_mid[c] = e_mid;
        };
        for (ColourId c : phi) tally(c);
        for (std::uint32_t j = s + 1; j < plan.tau(); ++j)
            for (ColourId c : plan.chunks[j]) tally(c);
    }

    for (const auto& ch : chosen) {
        if (usage[ch.u] < 2 && usage[ch.v] < 2) {
            matching.add(ch.colour, ch.u, ch.v);
            ++killed;
            NibbleOps::remove_vertex(state, ch.u);
            NibbleOps::remove_vertex(state, ch.v);
        }
    }

    // Step 3: zap surviving vertices whose bit came up
    std::int64_t zapped = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!zap_bit[v] || !work.alive(v)) continue;
        NibbleOps::remove_vertex(state, v);
        ++zapped;
    }

    // Step 4: greedily process the colliding colours, ascending colour index
    std::sort(phi.begin(), phi.end());
    for (ColourId c : phi) {
        VertexId u, v;
        if (!NibbleOps::work(state).smallest_edge(c, u, v))
            return broke("PhiGreedyStuck: colour " + std::to_string(c) + " at step " +
                         std::to_string(s));
        matching.add(c, u, v);
        NibbleOps::remove_vertex(state, u);
        NibbleOps::remove_vertex(state, v);
    }

    NibbleOps::advance(state);

    auto& rec = out.record;
    rec.step = s;
    rec.p = p;
    rec.c_correction = c_corr;
    rec.phi = static_cast<std::int64_t>(phi.size());
    rec.killed = killed;
    rec.zapped = zapped;
    rec.marked = static_cast<std::int64_t>(
        std::count(marked.begin(), marked.end(), std::uint8_t{1}));
    rec.e_dev = state.e_deviation();
    rec.d_dev = state.d_deviation();
    rec.colour_edges.assign(g.colour_count(), -1);
    for (std::uint32_t j = s + 1; j < plan.tau(); ++j)
        for (ColourId c : plan.chunks[j])
            rec.colour_edges[c] = state.work().colour_edges(c);
    rec.chunk_max_degree.assign(plan.tau(), -1);
    for (std::uint32_t j = s + 1; j < plan.tau(); ++j)
        rec.chunk_max_degree[j] = state.chunk_max_degree(j);
    return out;
}

NibbleRun run_nibble(const ColouredMultigraph& g, const NibbleConfig& raw_cfg) {
    if (!g.is_normalized())
        throw GraphError(GraphError::Kind::NotNormalized,
                         "nibble requires cliques of size <= 3");
    const NibbleConfig cfg = resolve_config(raw_cfg, g.colour_count());

    NibbleRun run;
    if (g.colour_count() == 0) {
        run.outcome.status = SolveOutcome::Status::Found;
        run.trace.epsilon = cfg.epsilon;
        run.trace.sigma1 = cfg.sigma1;
        run.trace.sigma2 = cfg.sigma2;
        run.trace.seed = cfg.seed;
        return run;
    }

    for (std::uint32_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        const std::uint64_t attempt_seed = cfg.seed + attempt;
        Rng rng(splitmix64(attempt_seed));
        ChunkPlan plan = plan_chunks(g.colour_count(), cfg.epsilon, rng);
        const std::uint32_t tau = plan.tau();

        NibbleState state(g, cfg, std::move(plan));
        NibbleTrace trace;
        trace.n_colours = g.colour_count();
        trace.epsilon = cfg.epsilon;
        trace.sigma1 = cfg.sigma1;
        trace.sigma2 = cfg.sigma2;
        trace.seed = attempt_seed;
        trace.attempt = attempt;
        trace.chunks = state.plan().chunks;
        trace.initial_colour_edges.resize(g.colour_count());
        for (ColourId c = 0; c < g.colour_count(); ++c)
            trace.initial_colour_edges[c] = g.colour_edges(c);
        trace.initial_e_dev = state.e_deviation();
        trace.initial_d_dev = state.d_deviation();

        std::vector<NibbleState> captured;
        bool broke = false;
        std::string reason;
        std::int64_t broke_step = -1;

        for (std::uint32_t s = 0; s + 1 < tau; ++s) {
            if (std::find(cfg.capture_steps.begin(), cfg.capture_steps.end(), s) !=
                cfg.capture_steps.end())
                captured.push_back(state);
            auto it = run_iteration(state, rng);
            if (!it.ok) {
                broke = true;
                reason = std::move(it.break_reason);
                broke_step = s;
                break;
            }
            trace.records.push_back(std::move(it.record));
        }

        if (!broke) {
            // final chunk: greedy, feasibility-checked via the edge bound
            const auto& last = state.plan().chunks[tau - 1];
            std::vector<ColourId> order(last.begin(), last.end());
            std::sort(order.begin(), order.end());
            const auto need = static_cast<std::int64_t>(4 * order.size());
            for (ColourId c : order)
                if (state.work().colour_edges(c) < need) {
                    broke = true;
                    reason = "FinalGreedyStuck: colour " + std::to_string(c) +
                             " has " + std::to_string(state.work().colour_edges(c)) +
                             " < " + std::to_string(need) + " edges";
                    broke_step = tau - 1;
                    break;
                }
            if (!broke) {
                for (ColourId c : order) {
                    VertexId u, v;
                    if (!NibbleOps::work(state).smallest_edge(c, u, v)) {
                        broke = true;
                        reason = "FinalGreedyStuck: colour " + std::to_string(c);
                        broke_step = tau - 1;
                        break;
                    }
                    NibbleOps::matching(state).add(c, u, v);
                    NibbleOps::remove_vertex(state, u);
                    NibbleOps::remove_vertex(state, v);
                }
            }
        }

        if (!broke) {
            run.outcome.status = SolveOutcome::Status::Found;
            run.outcome.matching = state.matching();
            run.outcome.max_size = static_cast<std::int64_t>(state.matching().size());
            run.trace = std::move(trace);
            run.captured = std::move(captured);
            return run;
        }

        run.outcome.status = SolveOutcome::Status::Broke;
        run.outcome.reason = reason;
        run.outcome.iteration = broke_step;
        run.outcome.matching = state.matching();
        run.trace = std::move(trace);
    }
    return run;
}

ColouredMultigraph reduce_theorem1(const ColouredMultigraph& g, Rng& rng,
                                   std::vector<std::int64_t>* kept_out) {
    if (!g.is_normalized())
        throw GraphError(GraphError::Kind::NotNormalized,
                         "reduction requires a normalized instance");
    if (kept_out) kept_out->assign(g.colour_count(), 0);

    std::vector<CliqueSpec> cliques;
    cliques.reserve(g.clique_count());
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci) {
        const auto verts = g.clique_vertices(ci);
        const ColourId c = g.clique_colour(ci);
        if (verts.size() == 2) {
            cliques.push_back({c, {verts[0], verts[1]}});
            continue;
        }
        // keep the triangle w.p. 1/4, otherwise one of its 3 edges each 1/4
        switch (rng.below(4)) {
            case 0:
                cliques.push_back({c, {verts[0], verts[1], verts[2]}});
                if (kept_out) ++(*kept_out)[c];
                break;
            case 1:
                cliques.push_back({c, {verts[0], verts[1]}});
                break;
            case 2:
                cliques.push_back({c, {verts[0], verts[2]}});
                break;
            case 3:
                cliques.push_back({c, {verts[1], verts[2]}});
                break;
        }
    }
    return ColouredMultigraph::build(g.colour_count(), std::move(cliques));
}

Theorem1Run solve_theorem1(const ColouredMultigraph& g, double delta, NibbleConfig cfg) {
    const std::uint32_t n = g.colour_count();
    const std::int64_t target = class_size_target(delta, n);
    for (ColourId c = 0; c < n; ++c)
        if (g.colour_vertices(c) < target)
            throw GraphError(GraphError::Kind::ClassTooSmall,
                             "HypothesisViolation: colour " + std::to_string(c) +
                                 " has n_c=" + std::to_string(g.colour_vertices(c)) +
                                 " < " + std::to_string(target),
                             c);
    {
        const auto st = instance_stats(g);
        if (st.max_multiplicity > multiplicity_cap(n))
            throw GraphError(GraphError::Kind::BadConfig,
                             "HypothesisViolation: edge multiplicity " +
                                 std::to_string(st.max_multiplicity) + " exceeds " +
                                 std::to_string(multiplicity_cap(n)));
    }

    const ColouredMultigraph normalized = normalize_cliques(g, delta, n);
    const double e_floor = (1.0 + delta / 4.0) * static_cast<double>(n);
    const double d_ceil = (1.0 + delta / 8.0) * static_cast<double>(n);

    Theorem1Run run;
    bool audited = false;
    for (std::uint32_t r = 0; r <= cfg.reduction_retries && !audited; ++r) {
        Rng rng(derive_seed(cfg.seed, 0x7E0 + r));
        ColouredMultigraph H = reduce_theorem1(normalized, rng);
        bool ok = true;
        for (ColourId c = 0; c < n && ok; ++c)
            ok = static_cast<double>(H.colour_edges(c)) >= e_floor;
        if (ok) {
            std::vector<std::int64_t> degree(H.vertex_count(), 0);
            for (std::uint32_t ci = 0; ci < H.clique_count(); ++ci) {
                const auto verts = H.clique_vertices(ci);
                for (VertexId v : verts)
                    degree[v] += static_cast<std::int64_t>(verts.size()) - 1;
            }
            for (VertexId v = 0; v < H.vertex_count() && ok; ++v)
                ok = static_cast<double>(degree[v]) <= d_ceil;
        }
        run.reduction_attempts = r + 1;
        if (ok) {
            run.reduced = std::move(H);
            audited = true;
        }
    }
    if (!audited)
        throw GraphError(GraphError::Kind::BadConfig,
                         "ReductionAuditFailed after " +
                             std::to_string(cfg.reduction_retries + 1) + " attempts");

    cfg.sigma1 = 1.0 + delta / 8.0;
    cfg.sigma2 = 1.0 + delta / 4.0;
    auto nib = run_nibble(run.reduced, cfg);
    run.outcome = std::move(nib.outcome);
    run.trace = std::move(nib.trace);
    return run;
}

} // namespace rainbow
