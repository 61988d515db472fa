#pragma once

// Randomized construction of [n, k] codes with hull dimension exactly t.
//
// Step 1 draws g_1..g_k in F_q^m one at a time, keeping a draw only when it is
// independent of and orthogonal to the earlier ones and every new codeword has
// weight >= d. Step 2 pads the stacked rows B so the Gram matrix becomes
// diagonal with exactly t zeros:
//
//   q even       [A | B]               A = diag(alpha_i), alpha_i^2 + g_i.g_i = 0 iff i <= t
//   q = 1 mod 4  [D | B | aB]          a^2 = -1
//   q = 3 mod 4  [D | B | aB | bB]     a^2 + b^2 = -1
//
// with D = diag(0,..,0, 1,..,1) holding t zeros.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hullcode/bounds.hpp"
#include "hullcode/codes.hpp"
#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/linalg.hpp"

namespace hullcode {

enum class ConstructionCase { Even, OneMod4, ThreeMod4 };

constexpr std::string_view to_string(ConstructionCase c) noexcept {
    switch (c) {
        case ConstructionCase::Even: return "Even";
        case ConstructionCase::OneMod4: return "OneMod4";
        case ConstructionCase::ThreeMod4: return "ThreeMod4";
    }
    return "Unknown";
}

inline ConstructionCase construction_case(std::uint64_t q) noexcept {
    if (q % 2 == 0) return ConstructionCase::Even;
    return q % 4 == 1 ? ConstructionCase::OneMod4 : ConstructionCase::ThreeMod4;
}

/// Number of copies of B in the generator: 1, 2 or 3.
inline std::size_t block_multiplicity(ConstructionCase c) noexcept {
    switch (c) {
        case ConstructionCase::Even: return 1;
        case ConstructionCase::OneMod4: return 2;
        case ConstructionCase::ThreeMod4: return 3;
    }
    return 0;
}

struct SamplerLimits {
    std::uint64_t max_attempts_per_vector = 10000;
    std::uint64_t max_restarts = 100;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct ConstructionParams {
    std::uint64_t q = 2;
    std::size_t m = 1, k = 1, t = 0, d = 1;
    std::uint64_t seed = 0;
    std::uint64_t max_attempts_per_vector = 10000;
    std::uint64_t max_restarts = 100;
};

/// Linearly independent, mutually orthogonal rows g_1..g_k spanning a code of
/// minimum distance >= d. Self-products g_i.g_i are unconstrained.
struct OrthogonalSet {
    FieldMatrix vectors;
    std::vector<Element> self_products;
    std::uint64_t attempts = 0;
    std::uint64_t restarts = 0;
};

/// The sampler gave up. Carries the effort spent and whether the existence
/// condition held for these parameters.
class SearchExhausted : public Error {
public:
    SearchExhausted(const std::string& message, std::uint64_t attempts, std::uint64_t restarts,
                    std::optional<bool> bound_holds)
        : Error(Errc::SearchExhausted, message), attempts_(attempts), restarts_(restarts), bound_holds_(bound_holds) {}

    std::uint64_t attempts() const noexcept { return attempts_; }
    std::uint64_t restarts() const noexcept { return restarts_; }
    std::optional<bool> bound_holds() const noexcept { return bound_holds_; }

private:
    std::uint64_t attempts_, restarts_;
    std::optional<bool> bound_holds_;
};

namespace detail {

/// Uniform integer in [0, n) by rejection; independent of the standard
/// library's distribution implementations so seeds reproduce everywhere.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

inline void draw_uniform(const Field& f, std::mt19937_64& rng, std::span<Element> out) {
    for (auto& e : out) e = static_cast<Element>(uniform_below(rng, f.order()));
}

inline void validate_sampler_params(std::size_t m, std::size_t k, std::size_t d) {
    if (k < 1 || m < k) throw Error(Errc::InvalidParams, "need m >= k >= 1");
    if (d < 1 || d > m) throw Error(Errc::InvalidParams, "need 1 <= d <= m");
}

/// Every word row_i + sum_{j<i} x_j row_j has weight >= d.
inline bool new_words_heavy_enough(const FieldMatrix& rows, std::size_t i, std::size_t d) {
    const FieldMatrix earlier = row_slice(rows, 0, i);
    return for_each_offset_word(earlier, rows.row(i), [d](std::span<const Element> w) { return weight(w) >= d; });
}

}  // namespace detail

/// Sequential rejection sampling of an OrthogonalSet. After
/// max_attempts_per_vector consecutive rejections at any position the whole
/// prefix is discarded; after max_restarts such restarts the search fails.
inline OrthogonalSet sample_orthogonal_set(const Field& f, std::size_t m, std::size_t k, std::size_t d,
                                           std::mt19937_64& rng, const SamplerLimits& limits = {}) {
    detail::validate_sampler_params(m, k, d);
    if (limits.max_attempts_per_vector == 0) throw Error(Errc::InvalidParams, "max attempts must be positive");
    if (projective_count(f.order(), k) > limits.enumeration_cap)
        throw Error(Errc::EnumerationCapExceeded, "distance checks for k = " + std::to_string(k) + " over " +
                                                      f.name() + " exceed the enumeration cap");
    FieldMatrix rows(f, k, m);
    std::uint64_t attempts = 0, restarts = 0;
    std::size_t i = 0;
    std::uint64_t failures_here = 0;
    while (i < k) {
        auto candidate = rows.row(i);
        detail::draw_uniform(f, rng, candidate);
        ++attempts;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = detail::dot_span(f, candidate, rows.row(j)) == 0;
        ok = ok && rank(detail::row_slice(rows, 0, i + 1)) == i + 1;
        ok = ok && detail::new_words_heavy_enough(rows, i, d);
        if (ok) {
            ++i;
            failures_here = 0;
            continue;
        }
        if (++failures_here < limits.max_attempts_per_vector) continue;
        if (restarts == limits.max_restarts)
            throw SearchExhausted("no orthogonal set found after " + std::to_string(attempts) + " draws and " +
                                      std::to_string(restarts) + " restarts",
                                  attempts, restarts, std::nullopt);
        ++restarts;
        i = 0;
        failures_here = 0;
    }
    OrthogonalSet out{std::move(rows), {}, attempts, restarts};
    for (std::size_t r = 0; r < k; ++r)
        out.self_products.push_back(detail::dot_span(f, out.vectors.row(r), out.vectors.row(r)));
    return out;
}

/// One trial of the i.i.d. scheme: draw k vectors independently and report
/// whether they are independent, mutually orthogonal, and span distance >= d.
/// Checked with the verifiers, not with the sampler's incremental tests.
inline bool iid_trial(const Field& f, std::size_t m, std::size_t k, std::size_t d, std::mt19937_64& rng) {
    FieldMatrix rows(f, k, m);
    for (std::size_t i = 0; i < k; ++i) detail::draw_uniform(f, rng, rows.row(i));
    if (rank(rows) != k) return false;
    const FieldMatrix g = gram(rows);
    if (!g.is_diagonal()) return false;
    return min_distance(LinearCode(rows)) >= d;
}

namespace detail {

inline void check_hull_target(const OrthogonalSet& s, std::size_t t) {
    if (t > s.vectors.rows())
        throw Error(Errc::InvalidParams,
                    "hull dimension " + std::to_string(t) + " exceeds k = " + std::to_string(s.vectors.rows()));
}

inline FieldMatrix delta_block(const Field& f, std::size_t k, std::size_t t) {
    FieldMatrix delta(f, k, k);
    for (std::size_t i = t; i < k; ++i) delta(i, i) = 1;
    return delta;
}

}  // namespace detail

/// [A | B] for characteristic 2. Let beta be primitive and alpha = beta^2
/// (also primitive, q - 1 being odd). For i <= t, alpha_i = beta^w with
/// alpha^w = g_i.g_i, or 0 when g_i.g_i = 0; for i > t, the smallest alpha_i
/// with alpha_i^2 + g_i.g_i != 0.
inline FieldMatrix build_even(const Field& f, const OrthogonalSet& s, std::size_t t) {
    if (f.characteristic() != 2) throw Error(Errc::WrongCharacteristic, f.name() + " is not of characteristic 2");
    detail::check_hull_target(s, t);
    const std::size_t k = s.vectors.rows();
    const Element beta = primitive_element(f);
    const Element alpha = f.square(beta);
    FieldMatrix a(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const Element self = s.self_products[i];
        Element ai = 0;
        if (i < t) {
            // -x = x in characteristic 2
            if (self != 0) ai = f.pow(beta, discrete_log(f, alpha, self));
        } else {
            while (f.add(f.square(ai), self) == 0) ++ai;
        }
        a(i, i) = ai;
    }
    const FieldMatrix blocks[] = {a, s.vectors};
    return FieldMatrix::hconcat(blocks);
}

/// [D | B | aB] with a^2 = -1.
inline FieldMatrix build_1mod4(const Field& f, const OrthogonalSet& s, std::size_t t) {
    if (f.order() % 4 != 1) throw Error(Errc::WrongResidueClass, f.name() + ": q is not 1 mod 4");
    detail::check_hull_target(s, t);
    const Element a = find_sqrt_minus_one(f);
    const FieldMatrix blocks[] = {detail::delta_block(f, s.vectors.rows(), t), s.vectors, s.vectors.scaled(a)};
    return FieldMatrix::hconcat(blocks);
}

/// [D | B | aB | bB] with a^2 + b^2 = -1, a and b nonzero.
inline FieldMatrix build_3mod4(const Field& f, const OrthogonalSet& s, std::size_t t) {
    if (f.order() % 4 != 3) throw Error(Errc::WrongResidueClass, f.name() + ": q is not 3 mod 4");
    detail::check_hull_target(s, t);
    const auto [a, b] = find_sum_two_squares_minus_one(f);
    const FieldMatrix blocks[] = {detail::delta_block(f, s.vectors.rows(), t), s.vectors, s.vectors.scaled(a),
                                  s.vectors.scaled(b)};
    return FieldMatrix::hconcat(blocks);
}

struct ConstructionResult {
    ConstructionParams params;
    LinearCode code;
    ConstructionCase kind;
    std::size_t expected_length;
    std::size_t guaranteed_distance;
    std::uint64_t attempts;
    std::uint64_t restarts;
    VerificationReport report;
    bool bound_holds;
};

inline void validate(const ConstructionParams& p) {
    if (!prime_power_decomposition(p.q)) throw Error(Errc::InvalidParams, std::to_string(p.q) + " is not a prime power");
    if (p.k < 1 || p.m < p.k) throw Error(Errc::InvalidParams, "need m >= k >= 1");
    if (p.d < 1 || p.d > p.m) throw Error(Errc::InvalidParams, "need 1 <= d <= m");
    if (p.t > p.k) throw Error(Errc::InvalidParams, "t exceeds k");
    if (p.max_attempts_per_vector == 0) throw Error(Errc::InvalidParams, "max attempts must be positive");
}

/// Samples, assembles and verifies a code with hull dimension t and minimum
/// distance at least d, 2d or 3d by the residue class of q. Deterministic in
/// (params, seed).
inline ConstructionResult construct(const ConstructionParams& params) {
    validate(params);
    const Field f = Field::of_order(params.q);
    const bool bound_holds = gv_condition(params.q, params.m, params.k, params.d).holds;
    const ConstructionCase kind = construction_case(params.q);
    const std::size_t copies = block_multiplicity(kind);

    std::mt19937_64 rng(params.seed);
    const SamplerLimits limits{params.max_attempts_per_vector, params.max_restarts, kDefaultEnumerationCap};
    OrthogonalSet set = [&] {
        try {
            return sample_orthogonal_set(f, params.m, params.k, params.d, rng, limits);
        } catch (const SearchExhausted& e) {
            throw SearchExhausted(std::string(e.what()) + "; existence condition " +
                                      (bound_holds ? "holds" : "does not hold") + " for q=" +
                                      std::to_string(params.q) + " m=" + std::to_string(params.m) +
                                      " k=" + std::to_string(params.k) + " d=" + std::to_string(params.d),
                                  e.attempts(), e.restarts(), bound_holds);
        }
    }();

    FieldMatrix generator = [&] {
        switch (kind) {
            case ConstructionCase::Even: return build_even(f, set, params.t);
            case ConstructionCase::OneMod4: return build_1mod4(f, set, params.t);
            case ConstructionCase::ThreeMod4: return build_3mod4(f, set, params.t);
        }
        throw Error(Errc::InternalInconsistency, "unhandled case");
    }();

    ConstructionResult result{params,
                              LinearCode(std::move(generator)),
                              kind,
                              copies * params.m + params.k,
                              copies * params.d,
                              set.attempts,
                              set.restarts,
                              {},
                              bound_holds};
    result.report = verify(result.code);

    const auto fail = [](const std::string& what) { throw Error(Errc::VerificationFailed, what); };
    const VerificationReport& r = result.report;
    if (result.code.length() != result.expected_length) fail("unexpected code length");
    if (result.code.dimension() != params.k) fail("unexpected dimension");
    if (r.hull_dim_gram != params.t || r.hull_dim_intersection != params.t)
        fail("hull dimension " + std::to_string(r.hull_dim_gram) + " != " + std::to_string(params.t));
    if (r.min_distance < result.guaranteed_distance)
        fail("minimum distance " + std::to_string(r.min_distance) + " < " + std::to_string(result.guaranteed_distance));
    if (!r.gram_diagonal || r.gram_diag_zero_count != params.t) fail("Gram matrix is not diagonal with t zeros");
    return result;
}

}  // namespace hullcode
