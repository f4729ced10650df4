#include "rainbow/baseline.hpp"

#include "rainbow/work_graph.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

namespace {

class ExactSearch {
public:
    ExactSearch(const ColouredMultigraph& g, std::int64_t budget, bool require_full)
        : g_(g), work_(g), budget_(budget), require_full_(require_full) {
        done_.assign(g.colour_count(), 0);
    }

    SolveOutcome run() {
        best_ = current_;
        recurse();
        SolveOutcome out;
        out.matching = best_;
        out.max_size = static_cast<std::int64_t>(best_.size());
        out.exhaustive = !budget_hit_;
        const bool full = best_.size() == g_.colour_count();
        out.status = full ? SolveOutcome::Status::Found : SolveOutcome::Status::NotFound;
        if (!full) out.reason = budget_hit_ ? "budget exhausted" : "search exhausted";
        return out;
    }

private:
    // colour with >= 1 surviving edge minimising (edge count, colour index)
    bool pick_colour(ColourId& out) const {
        std::int64_t best_edges = -1;
        for (ColourId c = 0; c < g_.colour_count(); ++c) {
            if (done_[c]) continue;
            const std::int64_t e = work_.colour_edges(c);
            if (e <= 0) continue;
            if (best_edges < 0 || e < best_edges) {
                best_edges = e;
                out = c;
            }
        }
        return best_edges > 0;
    }

    std::int64_t upper_bound() const {
        std::int64_t open = 0;
        for (ColourId c = 0; c < g_.colour_count(); ++c)
            if (!done_[c] && work_.colour_edges(c) > 0) ++open;
        return static_cast<std::int64_t>(current_.size()) + open;
    }

    bool stop() const {
        return budget_hit_ ||
               (require_full_ && best_.size() == g_.colour_count());
    }

    void recurse() {
        if (stop()) return;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        if (current_.size() > best_.size()) best_ = current_;
        if (upper_bound() <= static_cast<std::int64_t>(best_.size())) return;

        ColourId c;
        if (!pick_colour(c)) return;

        // try every surviving edge of c
        for (const auto& [u, v] : work_.edges_of_colour(c)) {
            if (stop()) return;
            WorkGraph saved = work_;
            work_.remove_vertex(u);
            work_.remove_vertex(v);
            current_.add(c, u, v);
            done_[c] = 1;
            recurse();
            done_[c] = 0;
            current_.entries.erase(c);
            work_ = std::move(saved);
        }
        // or leave c unmatched
        done_[c] = 1;
        recurse();
        done_[c] = 0;
    }

    const ColouredMultigraph& g_;
    WorkGraph work_;
    std::int64_t budget_;
    bool require_full_;
    std::vector<std::uint8_t> done_;
    RainbowMatching current_, best_;
    std::int64_t nodes_ = 0;
    bool budget_hit_ = false;
};

} // namespace

SolveOutcome solve_exact_max(const ColouredMultigraph& g, std::int64_t budget,
                             bool require_full) {
    if (g.colour_count() == 0) {
        SolveOutcome out;
        out.status = SolveOutcome::Status::Found;
        out.max_size = 0;
        return out;
    }
    return ExactSearch(g, budget, require_full).run();
}

SolveOutcome solve_greedy(const ColouredMultigraph& g, const std::vector<ColourId>& order) {
    SolveOutcome out;
    WorkGraph work(g);
    for (ColourId c : order) {
        VertexId u, v;
        if (!work.smallest_edge(c, u, v)) {
            out.status = SolveOutcome::Status::NotFound;
            out.stuck_colour = c;
            out.reason = "greedy stuck at colour " + std::to_string(c);
            return out;
        }
        out.matching.add(c, u, v);
        work.remove_vertex(u);
        work.remove_vertex(v);
    }
    out.status = out.matching.size() == g.colour_count() ? SolveOutcome::Status::Found
                                                         : SolveOutcome::Status::NotFound;
    if (out.status == SolveOutcome::Status::NotFound) out.reason = "order missed some colours";
    out.max_size = static_cast<std::int64_t>(out.matching.size());
    return out;
}

SolveOutcome solve_greedy(const ColouredMultigraph& g) {
    std::vector<ColourId> order(g.colour_count());
    std::iota(order.begin(), order.end(), 0);
    return solve_greedy(g, order);
}

bool greedy_bound_check(const ColouredMultigraph& g, const std::vector<ColourId>& colours,
                        GreedyBound basis) {
    const auto need = static_cast<std::int64_t>(4 * colours.size());
    for (ColourId c : colours) {
        const std::int64_t have =
            basis == GreedyBound::Vertices ? g.colour_vertices(c) : g.colour_edges(c);
        if (have < need) return false;
    }
    return true;
}

} // namespace rainbow
