#include "rainbow/generators.hpp"

#include "rainbow/rng.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <unordered_map>

namespace rainbow {

namespace {

std::uint64_t pack_pair(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Pair co-occurrence tracker. For the (ubiquitous at desk scale) cap of 1 a
// fingerprint table suffices: a tag collision only causes a spurious reject,
// never a missed duplicate. Larger caps fall back to exact counts.
class PairTracker {
public:
    PairTracker(std::int64_t cap, std::size_t expected_pairs) : cap_(cap) {
        if (cap_ == 1) {
            std::size_t want = std::max<std::size_t>(1024, expected_pairs * 2);
            table_.assign(std::bit_ceil(want), 0);
            mask_ = table_.size() - 1;
        }
    }

    bool would_exceed(VertexId u, VertexId v) const {
        const std::uint64_t key = pack_pair(u, v);
        if (cap_ == 1) {
            const std::uint64_t h = splitmix64(key);
            const std::uint32_t tag = static_cast<std::uint32_t>(h >> 32) | 1u;
            for (std::size_t i = h & mask_; table_[i] != 0; i = (i + 1) & mask_)
                if (table_[i] == tag) return true;
            return false;
        }
        auto it = counts_.find(key);
        return it != counts_.end() && it->second >= cap_;
    }

    void insert(VertexId u, VertexId v) {
        const std::uint64_t key = pack_pair(u, v);
        if (cap_ == 1) {
            const std::uint64_t h = splitmix64(key);
            const std::uint32_t tag = static_cast<std::uint32_t>(h >> 32) | 1u;
            std::size_t i = h & mask_;
            while (table_[i] != 0) i = (i + 1) & mask_;
            table_[i] = tag;
            return;
        }
        ++counts_[key];
    }

private:
    std::int64_t cap_;
    std::vector<std::uint32_t> table_;
    std::size_t mask_ = 0;
    std::unordered_map<std::uint64_t, std::int64_t> counts_;
};

} // namespace

ColouredMultigraph gen_disjoint_stars(std::uint32_t n) {
    if (n < 2)
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec, "stars needs n >= 2");
    std::vector<CliqueSpec> cliques;
    cliques.reserve(static_cast<std::size_t>(n - 1) * n);
    for (std::uint32_t s = 0; s < n - 1; ++s) {
        const VertexId centre = s * (n + 1);
        for (ColourId c = 0; c < n; ++c)
            cliques.push_back({c, {centre, centre + 1 + c}});
    }
    return ColouredMultigraph::build(n, std::move(cliques));
}

ColouredMultigraph gen_triangle_blowup(std::uint32_t n) {
    if (n < 2)
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec, "blowup needs n >= 2");
    std::vector<CliqueSpec> cliques;
    cliques.reserve(static_cast<std::size_t>(n - 1) * n);
    for (ColourId c = 0; c < n; ++c)
        for (std::uint32_t t = 0; t < n - 1; ++t)
            cliques.push_back({c, {3 * t, 3 * t + 1, 3 * t + 2}});
    return ColouredMultigraph::build(n, std::move(cliques));
}

ColouredMultigraph gen_k4_pair() {
    // the three perfect matchings of K4 on {a,a+1,a+2,a+3}
    static constexpr std::uint32_t factor[3][2][2] = {
        {{0, 1}, {2, 3}},
        {{0, 2}, {1, 3}},
        {{0, 3}, {1, 2}},
    };
    std::vector<CliqueSpec> cliques;
    for (ColourId c = 0; c < 3; ++c)
        for (VertexId base : {0u, 4u})
            for (const auto& pair : factor[c])
                cliques.push_back({c, {base + pair[0], base + pair[1]}});
    return ColouredMultigraph::build(3, std::move(cliques));
}

ColouredMultigraph gen_latin_addition(std::uint32_t k) {
    if (k < 1)
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec, "latin needs k >= 1");
    std::vector<CliqueSpec> cliques;
    cliques.reserve(static_cast<std::size_t>(k) * k);
    for (VertexId i = 0; i < k; ++i)
        for (VertexId j = 0; j < k; ++j)
            cliques.push_back({(i + j) % k, {i, k + j}});
    return ColouredMultigraph::build(k, std::move(cliques));
}

namespace {

struct PlacementLimits {
    std::int64_t degree_cap;       // hard per-vertex edge-degree cap, <0 = none
    std::int64_t class_vertex_cap; // n_c hard cap, <0 = none
};

// Places random components for one colour until `stop` says the class is
// big enough. Returns false if placement stalls against the constraints.
bool fill_colour(ColourId c, std::uint32_t pool, Rng& rng, PairTracker& pairs,
                 std::vector<std::int64_t>& degree, std::vector<std::uint32_t>& stamp,
                 const PlacementLimits& lim, double triangle_prob,
                 const std::vector<double>& size_weights,
                 std::int64_t& n_c, std::int64_t& e_c,
                 const std::function<bool(std::int64_t, std::int64_t)>& done,
                 std::vector<CliqueSpec>& out) {
    int stalls = 0;
    std::array<VertexId, 5> pick{};
    while (!done(n_c, e_c)) {
        std::size_t k;
        if (!size_weights.empty()) {
            double r = rng.uniform();
            k = 2;
            for (std::size_t i = 0; i < size_weights.size(); ++i) {
                if (r < size_weights[i]) {
                    k = i + 2;
                    break;
                }
                r -= size_weights[i];
            }
        } else {
            k = rng.uniform() < triangle_prob ? 3 : 2;
        }

        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            pick[i] = static_cast<VertexId>(rng.below(pool));
            for (std::size_t j = 0; j < i; ++j)
                if (pick[j] == pick[i]) ok = false;
            if (ok && stamp[pick[i]] == c) ok = false;
            if (ok && lim.degree_cap >= 0 &&
                degree[pick[i]] + static_cast<std::int64_t>(k) - 1 > lim.degree_cap)
                ok = false;
        }
        if (ok && lim.class_vertex_cap >= 0 &&
            n_c + static_cast<std::int64_t>(k) > lim.class_vertex_cap)
            ok = false;
        if (ok)
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j)
                    if (pairs.would_exceed(pick[i], pick[j])) ok = false;

        if (!ok) {
            if (++stalls > 4000) return false;
            continue;
        }
        stalls = 0;

        CliqueSpec spec;
        spec.colour = c;
        spec.vertices.assign(pick.begin(), pick.begin() + k);
        for (std::size_t i = 0; i < k; ++i) {
            stamp[pick[i]] = c;
            degree[pick[i]] += static_cast<std::int64_t>(k) - 1;
            for (std::size_t j = i + 1; j < k; ++j) pairs.insert(pick[i], pick[j]);
        }
        n_c += static_cast<std::int64_t>(k);
        e_c += static_cast<std::int64_t>(k) * (k - 1) / 2;
        out.push_back(std::move(spec));
    }
    return true;
}

} // namespace

ColouredMultigraph gen_random_thm2(std::uint32_t n, double sigma1, double sigma2,
                                   std::uint64_t seed) {
    if (n == 0 || !(sigma1 > 0.0) || !(sigma1 < sigma2))
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec,
                             "thm2 needs n >= 1 and 0 < sigma1 < sigma2");
    if (sigma2 > 4.0)
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec,
                             "sigma2 > 4 contradicts e_c <= n_c <= 4n");
    const std::int64_t degree_limit = static_cast<std::int64_t>(sigma1 * n);
    if (degree_limit < 1)
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec,
                             "sigma1*n < 1 leaves no room for edges");

    // Desk-scale knobs: edge counts run ~30% above sigma2*n and degrees stay
    // well below the sigma1*n cap, which keeps the nibble's deviation terms
    // (and hence its p_i inflation) near zero at these n.
    const std::int64_t e_target =
        std::min(static_cast<std::int64_t>(std::ceil(1.30 * sigma2 * n)),
                 static_cast<std::int64_t>(4 * static_cast<std::int64_t>(n)));
    const std::int64_t d_cap =
        std::max<std::int64_t>(1, std::min(degree_limit,
                                           static_cast<std::int64_t>(0.42 * sigma1 * n)));
    const double triangle_prob = d_cap >= 2 ? 0.12 : 0.0;
    const std::uint32_t pool = static_cast<std::uint32_t>(std::max<std::int64_t>(
        8, (2 * static_cast<std::int64_t>(n) * e_target) / std::max<std::int64_t>(1, 3 * d_cap / 4)));
    const std::int64_t mu = multiplicity_cap(n);
    const std::int64_t n_c_cap = 4 * static_cast<std::int64_t>(n);

    for (int attempt = 0; attempt < 4; ++attempt) {
        Rng rng(derive_seed(seed, 0xA2 + attempt));
        PairTracker pairs(mu, static_cast<std::size_t>(n) * e_target);
        std::vector<std::int64_t> degree(pool, 0);
        std::vector<std::uint32_t> stamp(pool, UINT32_MAX);
        std::vector<CliqueSpec> cliques;
        cliques.reserve(static_cast<std::size_t>(n) * (e_target / 2));

        bool ok = true;
        const PlacementLimits lim{d_cap, n_c_cap};
        for (ColourId c = 0; c < n && ok; ++c) {
            std::int64_t n_c = 0, e_c = 0;
            ok = fill_colour(
                c, pool, rng, pairs, degree, stamp, lim, triangle_prob, {}, n_c, e_c,
                [&](std::int64_t, std::int64_t e) { return e >= e_target; }, cliques);
        }
        if (!ok) continue;

        auto g = ColouredMultigraph::build(n, std::move(cliques));
        const auto st = instance_stats(g);
        bool certified = st.max_multiplicity <= mu && g.is_normalized();
        for (ColourId c = 0; c < n && certified; ++c)
            certified = st.colours[c].n_c <= n_c_cap &&
                        st.colours[c].e_c >= static_cast<std::int64_t>(sigma2 * n);
        for (VertexId v = 0; v < g.vertex_count() && certified; ++v)
            certified = st.degree[v] <= degree_limit;
        if (certified) return g;
    }
    throw GeneratorError(GeneratorError::Kind::RetryExhausted,
                         "thm2 generation failed to satisfy the hypotheses");
}

ColouredMultigraph gen_random_thm1(std::uint32_t n, double delta, std::uint64_t seed) {
    if (n == 0 || !(delta > 0.0))
        throw GeneratorError(GeneratorError::Kind::InfeasibleSpec,
                             "thm1 needs n >= 1 and delta > 0");
    const std::int64_t target = class_size_target(delta, n);
    const std::uint32_t pool = static_cast<std::uint32_t>(
        std::max<std::int64_t>(8, static_cast<std::int64_t>(1.9 * static_cast<double>(target))));
    const std::int64_t mu = multiplicity_cap(n);
    // component sizes 2..5 (larger cliques exercise normalization downstream)
    const std::vector<double> size_weights{0.35, 0.30, 0.20, 0.15};

    for (int attempt = 0; attempt < 4; ++attempt) {
        Rng rng(derive_seed(seed, 0xA1 + attempt));
        PairTracker pairs(mu, static_cast<std::size_t>(n) * (target * 13 / 10));
        std::vector<std::int64_t> degree(pool, 0);
        std::vector<std::uint32_t> stamp(pool, UINT32_MAX);
        std::vector<CliqueSpec> cliques;
        cliques.reserve(static_cast<std::size_t>(n) * (target / 3));

        bool ok = true;
        const PlacementLimits lim{-1, -1};
        for (ColourId c = 0; c < n && ok; ++c) {
            std::int64_t n_c = 0, e_c = 0;
            ok = fill_colour(
                c, pool, rng, pairs, degree, stamp, lim, 0.0, size_weights, n_c, e_c,
                [&](std::int64_t nc, std::int64_t) { return nc >= target; }, cliques);
        }
        if (!ok) continue;

        auto g = ColouredMultigraph::build(n, std::move(cliques));
        const auto st = instance_stats(g);
        bool certified = st.max_multiplicity <= mu;
        for (ColourId c = 0; c < n && certified; ++c)
            certified = st.colours[c].n_c >= target;
        if (certified) return g;
    }
    throw GeneratorError(GeneratorError::Kind::RetryExhausted,
                         "thm1 generation failed to satisfy the hypotheses");
}

ColouredMultigraph gen_random_instance(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::Stars:
            return gen_disjoint_stars(spec.n);
        case Family::TriangleBlowup:
            return gen_triangle_blowup(spec.n);
        case Family::K4Pair:
            return gen_k4_pair();
        case Family::LatinAddition:
            return gen_latin_addition(spec.n);
        case Family::RandomThm1:
            return gen_random_thm1(spec.n, spec.delta, spec.seed);
        case Family::RandomThm2:
            return gen_random_thm2(spec.n, spec.sigma1, spec.sigma2, spec.seed);
    }
    throw GeneratorError(GeneratorError::Kind::InfeasibleSpec, "unknown family");
}

} // namespace rainbow
