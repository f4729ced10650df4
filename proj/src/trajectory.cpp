#include "rainbow/trajectory.hpp"

#include <algorithm>
#include <cmath>

namespace rainbow {

TrajectoryPrediction predict_from_trace(const NibbleTrace& trace) {
    TrajectoryPrediction p;
    p.gamma = trace.sigma1 / trace.sigma2;
    p.n_colours = trace.n_colours;
    p.initial_edges = trace.initial_colour_edges;
    return p;
}

TrajectoryPrediction predict_from_instance(const ColouredMultigraph& g,
                                           const NibbleConfig& cfg) {
    TrajectoryPrediction p;
    p.gamma = cfg.gamma();
    p.n_colours = g.colour_count();
    p.initial_edges.resize(g.colour_count());
    for (ColourId c = 0; c < g.colour_count(); ++c)
        p.initial_edges[c] = g.colour_edges(c);
    return p;
}

DeviationSeries deviation_series(const NibbleTrace& trace) {
    if (trace.initial_colour_edges.size() != trace.n_colours)
        throw TrajectoryError("InconsistentTrace: missing initial edge counts");
    const std::uint32_t tau = static_cast<std::uint32_t>(trace.chunks.size());
    const double gamma = trace.sigma1 / trace.sigma2;
    const double n = static_cast<double>(trace.n_colours);

    DeviationSeries out;
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const auto& rec = trace.records[k];
        if (rec.step != k)
            throw TrajectoryError("InconsistentTrace: record steps not contiguous");
        if (rec.colour_edges.size() != trace.n_colours ||
            rec.chunk_max_degree.size() != tau)
            throw TrajectoryError("InconsistentTrace: record " + std::to_string(k) +
                                  " lacks raw counts");

        const std::uint32_t state = rec.step + 1;
        const double x = trace.epsilon * state;
        const double dx = 1.0 - gamma * x;

        DeviationSeries::Point pt;
        pt.step = rec.step;
        for (std::uint32_t j = state; j < tau; ++j)
            for (ColourId c : trace.chunks[j]) {
                if (rec.colour_edges[c] < 0)
                    throw TrajectoryError("InconsistentTrace: colour " +
                                          std::to_string(c) + " unrecorded at step " +
                                          std::to_string(k));
                const double predicted =
                    static_cast<double>(trace.initial_colour_edges[c]) * dx * dx;
                const double dev =
                    std::abs(predicted - static_cast<double>(rec.colour_edges[c]));
                if (dev > pt.e_dev) pt.e_dev = dev;
                if (predicted > 0.0) {
                    const double rel = dev / predicted;
                    if (rel > pt.max_rel_e_dev) {
                        pt.max_rel_e_dev = rel;
                        pt.worst_colour = c;
                    }
                }
            }
        const double threshold = trace.epsilon * trace.sigma1 * dx * n;
        for (std::uint32_t j = state; j < tau; ++j) {
            const double over =
                static_cast<double>(rec.chunk_max_degree[j]) - threshold;
            if (over > pt.d_dev) pt.d_dev = over;
        }

        pt.solver_e_dev = rec.e_dev;
        pt.solver_d_dev = rec.d_dev;
        if (pt.e_dev != rec.e_dev || pt.d_dev != rec.d_dev) out.matches_solver = false;
        out.max_rel_e_dev = std::max(out.max_rel_e_dev, pt.max_rel_e_dev);
        out.points.push_back(pt);
    }
    return out;
}

CollisionReport collision_check(const NibbleTrace& trace, double threshold) {
    CollisionReport rep;
    rep.threshold = threshold;
    const double bound = threshold * trace.epsilon * trace.epsilon *
                         static_cast<double>(trace.n_colours);
    for (const auto& rec : trace.records) {
        CollisionReport::Point pt;
        pt.step = rec.step;
        pt.phi = rec.phi;
        pt.bound = bound;
        pt.within = static_cast<double>(rec.phi) <= bound;
        rep.max_phi = std::max(rep.max_phi, rec.phi);
        rep.all_within = rep.all_within && pt.within;
        rep.points.push_back(pt);
    }
    return rep;
}

RecurrenceReport recurrence_check(const NibbleTrace& trace,
                                  const RecurrenceThresholds& thresholds) {
    RecurrenceReport rep;
    const double gamma = trace.sigma1 / trace.sigma2;
    const double n = static_cast<double>(trace.n_colours);
    const double eps = trace.epsilon;
    const double t2_bound = trace.sigma2 * (1.0 - gamma) * (1.0 - gamma) / 2.0 * n;

    std::vector<double> e_seq{trace.initial_e_dev}, d_seq{trace.initial_d_dev};
    for (const auto& rec : trace.records) {
        e_seq.push_back(rec.e_dev);
        d_seq.push_back(rec.d_dev);
    }

    for (std::size_t i = 0; i + 1 < e_seq.size(); ++i) {
        RecurrenceReport::Step st;
        st.step = static_cast<std::uint32_t>(i);
        const double dx = 1.0 - gamma * (eps * static_cast<double>(i));

        st.d_lhs = d_seq[i + 1];
        st.d_rhs = d_seq[i] + thresholds.t3 * eps * eps * eps * n;
        st.d_ok = st.d_lhs <= st.d_rhs;

        st.e_lhs = e_seq[i + 1];
        st.e_rhs = e_seq[i] * (1.0 + thresholds.t4 * eps / dx) +
                   thresholds.t5 * eps * eps * n + 16.0 * d_seq[i] / trace.sigma2;
        st.e_ok = st.e_lhs <= st.e_rhs;

        st.in_regime = e_seq[i] <= t2_bound;
        rep.exited_regime = rep.exited_regime || !st.in_regime;
        rep.all_ok = rep.all_ok && st.d_ok && st.e_ok;

        const double t3_needed = (d_seq[i + 1] - d_seq[i]) / (eps * eps * eps * n);
        rep.minimal_t3 = std::max(rep.minimal_t3, t3_needed);
        const double t5_needed =
            (e_seq[i + 1] - e_seq[i] * (1.0 + thresholds.t4 * eps / dx) -
             16.0 * d_seq[i] / trace.sigma2) /
            (eps * eps * n);
        rep.minimal_t5 = std::max(rep.minimal_t5, t5_needed);
        rep.steps.push_back(st);
    }
    rep.minimal_t3 = std::max(rep.minimal_t3, 0.0);
    rep.minimal_t5 = std::max(rep.minimal_t5, 0.0);
    return rep;
}

ComponentHitStats component_hit_stats(const NibbleState& frozen, std::int64_t trials,
                                      Rng& rng) {
    const auto& g = frozen.graph();
    const auto& work = frozen.work();
    const auto& plan = frozen.plan();
    const std::uint32_t s = frozen.step();
    if (s + 1 >= plan.tau())
        throw TrajectoryError("frozen state has no future chunks to measure");
    const auto& chunk = plan.chunks[s];
    const std::uint32_t n = g.colour_count();

    const auto [p, c_corr] = step_probability(frozen);
    (void)c_corr;
    const std::vector<double> P = marking_probabilities(frozen);
    std::vector<double> Q(P.size(), p);
    for (VertexId v = 0; v < P.size(); ++v) {
        if (P[v] == 0.0) continue;
        const auto q = zap_probability(P[v], p);
        if (!q)
            throw TrajectoryError("frozen state already breaks: P(v) > p at vertex " +
                                  std::to_string(v));
        Q[v] = *q;
    }

    // static context of the frozen state
    std::vector<VertexId> alive;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (work.alive(v)) alive.push_back(v);
    std::vector<std::vector<std::pair<VertexId, VertexId>>> chunk_edges;
    chunk_edges.reserve(chunk.size());
    for (ColourId c : chunk) chunk_edges.push_back(work.edges_of_colour(c));
    std::vector<std::uint8_t> comp_size(g.clique_count(), 0);
    std::vector<std::uint8_t> comp_measured(g.clique_count(), 0);

    ComponentHitStats out;
    out.p = p;
    out.trials = trials;
    out.a_c.assign(n, 0);
    out.b_c.assign(n, 0);
    out.measured.assign(n, 0);
    out.condemned.assign(g.vertex_count(), 0);
    out.vertex_alive.assign(g.vertex_count(), 0);
    for (VertexId v : alive) out.vertex_alive[v] = 1;

    for (std::uint32_t j = s + 1; j < plan.tau(); ++j)
        for (ColourId c : plan.chunks[j]) {
            out.measured[c] = 1;
            const auto [begin, end] = g.colour_cliques(c);
            for (std::uint32_t ci = begin; ci < end; ++ci) {
                const std::uint32_t k = work.clique_alive(ci);
                if (k < 2) continue;
                comp_size[ci] = static_cast<std::uint8_t>(k);
                comp_measured[ci] = 1;
                if (k == 3) ++out.a_c[c];
                if (k == 2) ++out.b_c[c];
            }
        }

    std::vector<double> sum_L(n, 0), sum_L2(n, 0), sum_T1(n, 0), sum_T12(n, 0),
        sum_T2(n, 0), sum_T22(n, 0);

    std::vector<std::uint8_t> marked(g.vertex_count(), 0);
    std::vector<std::uint16_t> comp_hits(g.clique_count(), 0);
    std::vector<std::int64_t> trial_L(n, 0), trial_T1(n, 0), trial_T2(n, 0);
    std::vector<VertexId> condemned_list;
    std::vector<std::uint32_t> touched_comps;
    std::vector<ColourId> touched_colours;
    std::vector<std::uint8_t> colour_touched(n, 0);

    std::vector<VertexId> chosen_ends;
    for (std::int64_t t = 0; t < trials; ++t) {
        condemned_list.clear();
        chosen_ends.clear();
        // Step 1: choose one surviving edge per chunk colour
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            const auto& edges = chunk_edges[i];
            const auto& [u, v] = edges[rng.below(edges.size())];
            marked[u] = marked[v] = 1;
            chosen_ends.push_back(u);
            chosen_ends.push_back(v);
        }
        // condemned iff marked or the independent zap bit is set (every
        // marked vertex that escapes deletion was hit by a colliding edge)
        for (VertexId v : alive) {
            const bool z = rng.uniform() < Q[v];
            if (marked[v] || z) {
                ++out.condemned[v];
                condemned_list.push_back(v);
            }
        }
        // component hits among measured colours
        for (VertexId v : condemned_list) {
            for (std::uint32_t ci : g.vertex_cliques(v)) {
                if (!comp_measured[ci]) continue;
                if (comp_hits[ci]++ == 0) touched_comps.push_back(ci);
            }
        }
        for (std::uint32_t ci : touched_comps) {
            const ColourId c = g.clique_colour(ci);
            if (!colour_touched[c]) {
                colour_touched[c] = 1;
                touched_colours.push_back(c);
            }
            if (comp_size[ci] == 2) {
                ++trial_L[c];
            } else {
                ++trial_T1[c];
                if (comp_hits[ci] >= 2) ++trial_T2[c];
            }
            comp_hits[ci] = 0;
        }
        touched_comps.clear();
        for (ColourId c : touched_colours) {
            sum_L[c] += static_cast<double>(trial_L[c]);
            sum_L2[c] += static_cast<double>(trial_L[c]) * trial_L[c];
            sum_T1[c] += static_cast<double>(trial_T1[c]);
            sum_T12[c] += static_cast<double>(trial_T1[c]) * trial_T1[c];
            sum_T2[c] += static_cast<double>(trial_T2[c]);
            sum_T22[c] += static_cast<double>(trial_T2[c]) * trial_T2[c];
            trial_L[c] = trial_T1[c] = trial_T2[c] = 0;
            colour_touched[c] = 0;
        }
        touched_colours.clear();
        for (VertexId v : chosen_ends) marked[v] = 0;
    }

    const auto finish = [&](const std::vector<double>& sum,
                            const std::vector<double>& sum2, std::vector<double>& mean,
                            std::vector<double>& se) {
        mean.assign(n, std::nan(""));
        se.assign(n, std::nan(""));
        const double T = static_cast<double>(trials);
        for (ColourId c = 0; c < n; ++c) {
            if (!out.measured[c]) continue;
            const double m = sum[c] / T;
            mean[c] = m;
            const double var = T > 1 ? std::max(0.0, (sum2[c] - T * m * m) / (T - 1)) : 0.0;
            se[c] = std::sqrt(var / T);
        }
    };
    finish(sum_L, sum_L2, out.mean_L, out.se_L);
    finish(sum_T1, sum_T12, out.mean_T1, out.se_T1);
    finish(sum_T2, sum_T22, out.mean_T2, out.se_T2);
    return out;
}

} // namespace rainbow
