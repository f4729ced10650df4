#pragma once

#include "rainbow/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

struct SolveOutcome {
    enum class Status { Found, NotFound, Broke };

    Status status = Status::NotFound;
    RainbowMatching matching;      // full when Found, best/partial otherwise
    std::int64_t max_size = 0;     // exact solver: best rainbow size seen
    bool exhaustive = true;        // exact solver: search ran to completion
    std::string reason;            // diagnostics for NotFound / Broke
    std::int64_t iteration = -1;   // nibble: iteration at which it broke
    std::int64_t stuck_colour = -1;

    bool found() const { return status == Status::Found; }
};

inline constexpr std::int64_t kDefaultExactBudget = 10'000'000;

// Backtracking oracle. Returns a maximum-size rainbow matching; branches on
// the colour with fewest surviving edges, prunes with |M| + #colours that
// still have an edge. Deterministic for a given graph. When require_full is
// set the search stops as soon as a full matching appears.
//
// If the node budget runs out the best matching found so far is returned
// with exhaustive=false (max_size is then only a lower bound).
SolveOutcome solve_exact_max(const ColouredMultigraph& g,
                             std::int64_t budget = kDefaultExactBudget,
                             bool require_full = false);

// Deterministic greedy: processes colours in the given order, always taking
// the lexicographically smallest surviving edge. Stops at the first colour
// with no surviving edge (NotFound names it).
SolveOutcome solve_greedy(const ColouredMultigraph& g,
                          const std::vector<ColourId>& order);

// Ascending-colour convenience overload.
SolveOutcome solve_greedy(const ColouredMultigraph& g);

enum class GreedyBound { Vertices, Edges };

// Sufficient condition for greedy success on a colour subset: every class
// keeps at least 4 |subset| vertices (each greedy step costs a class at most
// four kernel vertices), or at least 4 |subset| edges for the edge variant
// used by the nibble's collision chunk.
bool greedy_bound_check(const ColouredMultigraph& g, const std::vector<ColourId>& colours,
                        GreedyBound basis = GreedyBound::Vertices);

} // namespace rainbow
