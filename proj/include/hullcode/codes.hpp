#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/linalg.hpp"

namespace hullcode {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

inline std::size_t weight(std::span<const Element> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

inline std::size_t weight(const FieldVector& v) noexcept { return weight(v.entries()); }

/// An [n, k] code over a field, presented by a full-rank k x n generator.
class LinearCode {
public:
    explicit LinearCode(FieldMatrix generator) : generator_(std::move(generator)) {
        const std::size_t r = rank(generator_);
        if (r != generator_.rows())
            throw Error(Errc::RankDeficient, "generator has " + std::to_string(generator_.rows()) +
                                                 " rows but rank " + std::to_string(r));
    }

    const Field& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const FieldMatrix& generator() const noexcept { return generator_; }

private:
    FieldMatrix generator_;
};

namespace detail {

/// Saturating q^e.
inline std::uint64_t checked_pow(std::uint64_t q, std::size_t e) noexcept {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (out > UINT64_MAX / q) return UINT64_MAX;
        out *= q;
    }
    return out;
}

/// Visits base + sum_j x_j * rows[j] for every x in F_q^{rows.rows()}, in
/// odometer order over the canonical encodings. Stops early when the visitor
/// returns false; the return value says whether the walk completed.
template <class Visitor>
bool for_each_offset_word(const FieldMatrix& rows, std::span<const Element> base, Visitor&& visit) {
    const Field& f = rows.field();
    const std::size_t depth = rows.rows();
    std::vector<Element> word(base.begin(), base.end());
    std::vector<Element> digits(depth, 0);
    // Increment of digit j from v to v + 1 adds (enc(v + 1) - enc(v)) * row_j.
    std::vector<Element> step(f.order());
    for (Element v = 0; v + 1 < f.order(); ++v) step[v] = f.sub(v + 1, v);
    const Element wrap = f.neg(f.order() - 1);
    while (true) {
        if (!visit(std::span<const Element>(word))) return false;
        std::size_t j = depth;
        while (j > 0) {
            --j;
            if (digits[j] + 1 < f.order()) {
                axpy(f, step[digits[j]], rows.row(j), word);
                ++digits[j];
                break;
            }
            axpy(f, wrap, rows.row(j), word);
            digits[j] = 0;
            if (j == 0) return true;
        }
        if (depth == 0) return true;
    }
}

/// Rows first..last-1 of m.
inline FieldMatrix row_slice(const FieldMatrix& m, std::size_t first, std::size_t last) {
    FieldMatrix out(m.field(), last - first, m.cols());
    for (std::size_t i = first; i < last; ++i) std::copy(m.row(i).begin(), m.row(i).end(), out.row(i - first).begin());
    return out;
}

}  // namespace detail

/// The [n, n - k] code generated by the nullspace of the generator.
inline LinearCode dual(const LinearCode& c) { return LinearCode(nullspace_basis(c.generator())); }

/// Hull dimension as k - rank(G G^T).
inline std::size_t hull_dimension_gram(const LinearCode& c) { return c.dimension() - rank(gram(c.generator())); }

/// Hull dimension as dim(C intersect C-dual), computed explicitly.
inline std::size_t hull_dimension_intersection(const LinearCode& c) {
    return intersect_rowspaces(c.generator(), nullspace_basis(c.generator())).rows();
}

/// Hull dimension by both routes; disagreement is an internal error.
inline std::size_t hull_dimension(const LinearCode& c) {
    const std::size_t by_gram = hull_dimension_gram(c);
    const std::size_t by_intersection = hull_dimension_intersection(c);
    if (by_gram != by_intersection)
        throw Error(Errc::InternalInconsistency, "hull dimension: gram route " + std::to_string(by_gram) +
                                                     ", intersection route " + std::to_string(by_intersection));
    return by_gram;
}

/// Number of projective codeword representatives, (q^k - 1)/(q - 1).
inline std::uint64_t projective_count(std::uint64_t q, std::size_t k) noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t term = detail::checked_pow(q, i);
        if (term == UINT64_MAX || total > UINT64_MAX - term) return UINT64_MAX;
        total += term;
    }
    return total;
}

/// Minimum weight of a nonzero codeword by exhaustive enumeration of the
/// messages whose first nonzero coordinate is 1. The zero code has no nonzero
/// codeword; it reports n + 1, which keeps the Singleton bound d <= n - k + 1.
inline std::size_t min_distance(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap) {
    const std::uint64_t count = projective_count(c.field().order(), c.dimension());
    if (count > cap)
        throw Error(Errc::EnumerationCapExceeded,
                    "enumerating " + std::to_string(c.dimension()) + "-dimensional code over " + c.field().name() +
                        " exceeds the cap of " + std::to_string(cap) + " codewords");
    const FieldMatrix& g = c.generator();
    std::size_t best = c.length() + 1;
    for (std::size_t lead = 0; lead < c.dimension() && best > 1; ++lead) {
        const FieldMatrix tail = detail::row_slice(g, lead + 1, g.rows());
        detail::for_each_offset_word(tail, g.row(lead), [&](std::span<const Element> w) {
            best = std::min(best, weight(w));
            return best > 1;
        });
    }
    return best;
}

struct VerificationReport {
    std::size_t hull_dim_gram = 0;
    std::size_t hull_dim_intersection = 0;
    std::size_t min_distance = 0;
    std::size_t dual_dim = 0;
    bool gram_diagonal = false;
    std::size_t gram_diag_zero_count = 0;
};

/// Recomputes everything the construction promises, from the generator alone.
inline VerificationReport verify(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap) {
    VerificationReport r;
    r.hull_dim_gram = hull_dimension_gram(c);
    r.hull_dim_intersection = hull_dimension_intersection(c);
    if (r.hull_dim_gram != r.hull_dim_intersection)
        throw Error(Errc::InternalInconsistency, "hull dimension routes disagree: " + std::to_string(r.hull_dim_gram) +
                                                     " vs " + std::to_string(r.hull_dim_intersection));
    r.min_distance = min_distance(c, cap);
    r.dual_dim = dual(c).dimension();
    const FieldMatrix g = gram(c.generator());
    r.gram_diagonal = g.is_diagonal();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (g(i, i) == 0) ++r.gram_diag_zero_count;
    return r;
}

}  // namespace hullcode
