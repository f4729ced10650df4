#pragma once

#include "rainbow/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

class GeneratorError : public std::runtime_error {
public:
    enum class Kind { InfeasibleSpec, RetryExhausted };
    GeneratorError(Kind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind(kind) {}
    Kind kind;
};

enum class Family {
    Stars,
    TriangleBlowup,
    K4Pair,
    LatinAddition,
    RandomThm1,
    RandomThm2,
};

struct GeneratorSpec {
    Family family = Family::RandomThm2;
    std::uint32_t n = 0;        // colour count (or Latin order)
    double delta = 0.5;        // thm1
    double sigma1 = 0.5;       // thm2
    double sigma2 = 1.0;       // thm2
    std::uint64_t seed = 0;
};

// n-1 disjoint stars with n edges each, one edge per colour. Every colour
// class is n-1 disjoint K2's (n_c = 2n-2); the maximum rainbow matching has
// size n-1 because each star can contribute at most one edge.
ColouredMultigraph gen_disjoint_stars(std::uint32_t n);

// n-1 disjoint triangles, every colour class one K3 per triangle, so each
// in-triangle pair has multiplicity n. n_c = 3(n-1) and no rainbow matching
// of size n exists.
ColouredMultigraph gen_triangle_blowup(std::uint32_t n);

// 3-factorization of two disjoint K4's: 3 colours, each a perfect matching of
// both K4's (n_c = 8). Max rainbow matching size 2.
ColouredMultigraph gen_k4_pair();

// K_{k,k} coloured by the addition table of Z_k: edge (row i, col j) gets
// colour (i+j) mod k. Rows are vertices 0..k-1, columns k..2k-1. A transversal
// of the Latin square is exactly a full rainbow matching.
ColouredMultigraph gen_latin_addition(std::uint32_t k);

// Seeded random instance satisfying the requested theorem's hypotheses,
// audited after construction. Throws InfeasibleSpec / RetryExhausted.
ColouredMultigraph gen_random_instance(const GeneratorSpec& spec);

ColouredMultigraph gen_random_thm1(std::uint32_t n, double delta, std::uint64_t seed);
ColouredMultigraph gen_random_thm2(std::uint32_t n, double sigma1, double sigma2,
                                   std::uint64_t seed);

} // namespace rainbow
