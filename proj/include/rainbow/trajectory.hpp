#pragma once

#include "rainbow/nibble.hpp"

#include <string>
#include <vector>

namespace rainbow {

// Differential-equation predictions: d(x) = 1 - gamma*x and, per colour,
// e_c(x) = e_c(0) d(x)^2 with e_c(0) = e_c / n.
struct TrajectoryPrediction {
    double gamma = 0;
    std::uint32_t n_colours = 0;
    std::vector<std::int64_t> initial_edges;  // e_c at x = 0

    double density(double x) const { return 1.0 - gamma * x; }
    // predicted edge count e_c(x) * n = e_c * d(x)^2
    double edges(ColourId c, double x) const {
        const double d = density(x);
        return static_cast<double>(initial_edges[c]) * d * d;
    }
};

TrajectoryPrediction predict_from_trace(const NibbleTrace& trace);
TrajectoryPrediction predict_from_instance(const ColouredMultigraph& g,
                                           const NibbleConfig& cfg);

class TrajectoryError : public std::runtime_error {
public:
    explicit TrajectoryError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

struct DeviationSeries {
    struct Point {
        std::uint32_t step = 0;
        double e_dev = 0, d_dev = 0;            // recomputed from raw counts
        double solver_e_dev = 0, solver_d_dev = 0;
        double max_rel_e_dev = 0;               // max_c |e^c - pred| / pred
        ColourId worst_colour = 0;
    };
    std::vector<Point> points;
    double max_rel_e_dev = 0;  // over all steps and colours
    bool matches_solver = true;
};

// Recomputes e_i and d_i from the per-colour counts and per-chunk degree
// maxima stored in the trace and flags any disagreement with the solver's
// own bookkeeping (which must match bit-exactly). Throws InconsistentTrace
// (TrajectoryError) on malformed traces.
DeviationSeries deviation_series(const NibbleTrace& trace);

struct CollisionReport {
    struct Point {
        std::uint32_t step = 0;
        std::int64_t phi = 0;
        double bound = 0;  // threshold * eps^2 * n
        bool within = true;
    };
    std::vector<Point> points;
    double threshold = 0;
    std::int64_t max_phi = 0;
    bool all_within = true;  // informational on tiny instances
};

// Default collision threshold: calibrated as twice the ensemble p99 of
// |Phi| / (eps^2 n) over reference runs (n=5000, sigma=0.5/1.0, eps=0.05,
// 20 seeds), where the observed ratio stayed below 1.1.
inline constexpr double kDefaultCollisionThreshold = 2.2;

CollisionReport collision_check(const NibbleTrace& trace,
                                double threshold = kDefaultCollisionThreshold);

struct RecurrenceThresholds {
    double t3 = 0;
    double t4 = 0;
    double t5 = 0;
};

// Defaults derived from the same reference ensemble: t4 is pinned at the
// paper's constant 16/sigma2 - 2 evaluated at sigma2 = 1, and t3/t5 are twice
// the smallest values that pass every reference trace.
inline constexpr RecurrenceThresholds kDefaultRecurrenceThresholds{2.0, 14.0, 1.0};

struct RecurrenceReport {
    struct Step {
        std::uint32_t step = 0;       // checks the i -> i+1 transition
        double d_lhs = 0, d_rhs = 0;  // d_{i+1} vs d_i + t3 eps^3 n
        double e_lhs = 0, e_rhs = 0;  // e_{i+1} vs e_i(1+t4 eps/d) + t5 eps^2 n + 16 d_i/sigma2
        bool d_ok = true, e_ok = true;
        bool in_regime = true;        // e_i <= t2 n with t2 = sigma2 (1-gamma)^2 / 2
    };
    std::vector<Step> steps;
    bool all_ok = true;
    bool exited_regime = false;  // flagged only; the paper gives no recipe here
    // minimal constants that would make this trace pass, t4 held fixed
    double minimal_t3 = 0;
    double minimal_t5 = 0;
};

RecurrenceReport recurrence_check(const NibbleTrace& trace,
                                  const RecurrenceThresholds& thresholds);

struct ComponentHitStats {
    double p = 0;             // p_i of the frozen state
    std::int64_t trials = 0;
    // per colour; only colours in chunks after the frozen one are measured,
    // NaN elsewhere
    std::vector<double> mean_L, mean_T1, mean_T2;
    std::vector<double> se_L, se_T1, se_T2;
    std::vector<std::int64_t> a_c, b_c;  // K3 / K2 component counts at freeze
    std::vector<std::uint8_t> measured;  // colour measured?
    // per-vertex condemnation counts over all trials (alive vertices only)
    std::vector<std::int64_t> condemned;
    std::vector<std::uint8_t> vertex_alive;
};

// Replays Steps 1-3 `trials` times from a frozen state (never mutating it),
// counting condemned vertices per component type. Uses its own RNG stream so
// measurement cannot perturb the main run.
ComponentHitStats component_hit_stats(const NibbleState& frozen, std::int64_t trials,
                                      Rng& rng);

} // namespace rainbow
