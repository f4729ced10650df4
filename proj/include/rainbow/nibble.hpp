#pragma once

#include "rainbow/baseline.hpp"
#include "rainbow/core.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/work_graph.hpp"

#include <optional>
#include <vector>

namespace rainbow {

struct NibbleConfig {
    // Chunk fraction; eps*n must be integral. 0 selects the derived default:
    // the paper's asymptotic range [1/(2 log log n), 1/log log n] exceeds 1
    // at any feasible n, so the default takes the largest chunk that keeps
    // the predicted final edge count sigma2(1-gamma)^2 n at least 25% above
    // the 4*eps*n greedy bound, clamped to eps <= 0.1.
    double epsilon = 0.0;
    double sigma1 = 0.5;
    double sigma2 = 1.0;
    std::uint64_t seed = 0;
    std::uint32_t max_retries = 3;     // extra attempts after an algorithm break
    bool record_stats = false;         // per-colour component-hit statistics
    std::vector<std::uint32_t> capture_steps;  // snapshot state before these steps
    std::uint32_t reduction_retries = 3;       // theorem-1 reduction audit retries

    double gamma() const { return sigma1 / sigma2; }
};

double default_epsilon(std::uint32_t n_colours, double sigma1, double sigma2);

// Validates and fills in epsilon; throws GraphError(BadConfig) on bad values.
NibbleConfig resolve_config(NibbleConfig cfg, std::uint32_t n_colours);

struct ChunkPlan {
    std::vector<std::vector<ColourId>> chunks;
    std::vector<std::uint32_t> chunk_of;  // colour -> chunk index

    std::uint32_t tau() const { return static_cast<std::uint32_t>(chunks.size()); }
};

// Random permutation of the colours split into ceil(1/eps) chunks of size
// eps*n (the last possibly smaller).
ChunkPlan plan_chunks(std::uint32_t n_colours, double epsilon, Rng& rng);

// Per-iteration record; `step` counts processed chunks, starting at 0.
struct IterationRecord {
    std::uint32_t step = 0;
    double p = 0, c_correction = 0;
    std::int64_t phi = 0, killed = 0, zapped = 0, marked = 0;
    double e_dev = 0, d_dev = 0;  // deviations of the post-step state
    std::vector<std::int64_t> colour_edges;      // e^c, -1 once processed
    std::vector<std::int64_t> chunk_max_degree;  // per chunk, -1 once processed
    // record_stats only: component hit counts for unprocessed colours and the
    // mid-step (post-zap, pre-collision-greedy) edge counts; -1 = not measured
    std::vector<std::int64_t> stat_L, stat_T1, stat_T2, colour_edges_mid;
};

struct NibbleTrace {
    std::uint32_t n_colours = 0;
    double epsilon = 0, sigma1 = 0, sigma2 = 0;
    std::uint64_t seed = 0;    // seed of the attempt that produced the records
    std::uint32_t attempt = 0;
    std::vector<std::vector<ColourId>> chunks;
    std::vector<std::int64_t> initial_colour_edges;
    double initial_e_dev = 0, initial_d_dev = 0;
    std::vector<IterationRecord> records;
};

// Live algorithm state between iterations. Copyable; frozen copies feed the
// trajectory lab's replay experiments.
class NibbleState {
public:
    NibbleState(const ColouredMultigraph& g, const NibbleConfig& cfg, ChunkPlan plan);

    const ColouredMultigraph& graph() const { return *g_; }
    const NibbleConfig& config() const { return cfg_; }
    const ChunkPlan& plan() const { return plan_; }
    const WorkGraph& work() const { return work_; }
    const RainbowMatching& matching() const { return matching_; }

    std::uint32_t step() const { return step_; }
    double e_deviation() const { return e_dev_; }
    double d_deviation() const { return d_dev_; }
    double time() const { return cfg_.epsilon * step_; }       // x = i*eps
    double predicted_density() const { return 1.0 - cfg_.gamma() * time(); }  // d(x)

    std::int64_t colour_edges(ColourId c) const { return work_.colour_edges(c); }
    std::int64_t chunk_degree(VertexId v, std::uint32_t chunk) const;
    std::int64_t chunk_max_degree(std::uint32_t chunk) const;

    // exposed for the solver and the trajectory lab
    friend struct NibbleOps;

private:
    const ColouredMultigraph* g_;
    NibbleConfig cfg_;
    ChunkPlan plan_;
    WorkGraph work_;
    RainbowMatching matching_;
    std::uint32_t step_ = 0;
    double e_dev_ = 0, d_dev_ = 0;

    // degree-per-chunk table with per-chunk bucket counters so the max over
    // alive vertices is maintained under deletions
    std::vector<std::int32_t> deg_;            // v * tau + j
    std::vector<std::vector<std::int64_t>> bucket_;  // [chunk][degree]
    std::vector<std::int64_t> max_ptr_;

    void init_degrees();
    void refresh_deviations();
    void remove_vertex_tracked(VertexId v);
};

struct StepProbability {
    double p = 0;
    double c = 0;
};

// p_i = eps*gamma/d(i*eps) + c_i with
// c_i = (2 d_i d(i*eps) + 2 eps gamma e_i) / (sigma2 d(i*eps)^3 n).
StepProbability step_probability(std::uint32_t step, double epsilon, double gamma,
                                 double sigma2, std::uint32_t n_colours, double e_dev,
                                 double d_dev);
StepProbability step_probability(const NibbleState& state);

// P_i(v): probability that a uniform independent edge choice per chunk colour
// touches v, via the exact independence product. Throws GraphError(BadConfig)
// flavoured EmptyColourClass when a chunk colour has no surviving edge.
double marking_probability(const NibbleState& state, VertexId v,
                           const std::vector<ColourId>& chunk);

// Dense P over all vertices for the state's upcoming chunk (0 for untouched).
std::vector<double> marking_probabilities(const NibbleState& state);

// Q with P + Q(1-P) = p; nullopt when no Q in [0,1] exists (the algorithm
// must break rather than clamp).
std::optional<double> zap_probability(double P, double p);

struct IterationOutcome {
    bool ok = true;
    std::string break_reason;
    IterationRecord record;
};

// One randomized iteration: choose / kill / zap / collision-greedy, then
// refreshed bookkeeping. Mutates state; on a break the state is mid-flight
// and should be discarded.
IterationOutcome run_iteration(NibbleState& state, Rng& rng);

struct NibbleRun {
    SolveOutcome outcome;
    NibbleTrace trace;
    std::vector<NibbleState> captured;  // cfg.capture_steps snapshots
};

// Full algorithm: iterations 0..tau-2 then the greedy final chunk, retrying
// with seed+attempt on breaks. Requires a normalized instance.
NibbleRun run_nibble(const ColouredMultigraph& g, const NibbleConfig& cfg);

// Random K3 thinning of Theorem 1: each monochromatic triangle is kept whole
// with probability 1/4, otherwise replaced by one of its three edges, each
// with probability 1/4. kept_out, when given, receives per-colour X_c.
ColouredMultigraph reduce_theorem1(const ColouredMultigraph& g, Rng& rng,
                                   std::vector<std::int64_t>* kept_out = nullptr);

struct Theorem1Run {
    SolveOutcome outcome;
    NibbleTrace trace;
    std::uint32_t reduction_attempts = 0;  // reductions drawn until audit passed
    ColouredMultigraph reduced;            // the audited H actually solved
};

// Theorem-1 pipeline: normalize -> reduce (audited: e_c(H) >= (1+delta/4)n,
// d_v(H) <= (1+delta/8)n, re-drawn up to cfg.reduction_retries times) ->
// nibble on H with sigma1 = 1+delta/8, sigma2 = 1+delta/4.
// Throws on hypothesis violations or audit exhaustion; nibble failures come
// back as Broke outcomes.
Theorem1Run solve_theorem1(const ColouredMultigraph& g, double delta, NibbleConfig cfg);

} // namespace rainbow
