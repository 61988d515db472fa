#pragma once

// Dense linear algebra over a Field. Vectors are row vectors; matrices are
// row-major. A 0-row matrix is legal and spans the zero space.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"

namespace hullcode {

class FieldVector {
public:
    FieldVector(Field field, std::size_t length) : field_(std::move(field)), entries_(length, 0) {}

    FieldVector(Field field, std::vector<Element> entries) : field_(std::move(field)), entries_(std::move(entries)) {
        for (const Element e : entries_)
            if (!field_.contains(e))
                throw Error(Errc::DomainError, std::to_string(e) + " is not an element of " + field_.name());
    }

    FieldVector(Field field, std::initializer_list<Element> entries)
        : FieldVector(std::move(field), std::vector<Element>(entries)) {}

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return entries_.size(); }
    Element operator[](std::size_t i) const noexcept { return entries_[i]; }
    Element& operator[](std::size_t i) noexcept { return entries_[i]; }
    std::span<const Element> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const FieldVector& a, const FieldVector& b) {
        return a.entries_ == b.entries_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::vector<Element> entries_;
};

namespace detail {

inline Element dot_span(const Field& f, std::span<const Element> u, std::span<const Element> v) noexcept {
    Element acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
    return acc;
}

/// dst += c * src
inline void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst) noexcept {
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

inline void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(Errc::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace detail

/// Standard bilinear form sum u_i * v_i.
inline Element dot(const FieldVector& u, const FieldVector& v) {
    detail::require_same_field(u.field(), v.field());
    if (u.size() != v.size())
        throw Error(Errc::LengthMismatch, std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    return detail::dot_span(u.field(), u.entries(), v.entries());
}

class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Rows given as encodings; `cols` fixes the width even when there are no rows.
    static FieldMatrix from_rows(Field field, const std::vector<std::vector<Element>>& rows, std::size_t cols) {
        FieldMatrix m(std::move(field), rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has length " +
                                                     std::to_string(rows[i].size()) + ", expected " +
                                                     std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j) {
                if (!m.field_.contains(rows[i][j]))
                    throw Error(Errc::DomainError,
                                std::to_string(rows[i][j]) + " is not an element of " + m.field_.name());
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static FieldMatrix from_rows(Field field, std::initializer_list<std::initializer_list<Element>> rows) {
        std::vector<std::vector<Element>> v;
        for (const auto& r : rows) v.emplace_back(r);
        const std::size_t cols = v.empty() ? 0 : v.front().size();
        return from_rows(std::move(field), v, cols);
    }

    static FieldMatrix from_vectors(Field field, std::span<const FieldVector> vectors, std::size_t cols) {
        FieldMatrix m(field, vectors.size(), cols);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            detail::require_same_field(field, vectors[i].field());
            if (vectors[i].size() != cols) throw Error(Errc::LengthMismatch, "vectors of unequal length");
            std::copy(vectors[i].begin(), vectors[i].end(), m.row(i).begin());
        }
        return m;
    }

    static FieldMatrix identity(Field field, std::size_t n) {
        FieldMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Element operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Element& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::span<const Element> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<Element> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }

    FieldVector row_vector(std::size_t i) const {
        auto r = row(i);
        return FieldVector(field_, std::vector<Element>(r.begin(), r.end()));
    }

    std::vector<std::vector<Element>> to_rows() const {
        std::vector<std::vector<Element>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
        return out;
    }

    FieldMatrix transpose() const {
        FieldMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Every entry multiplied by c.
    FieldMatrix scaled(Element c) const {
        FieldMatrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(c, data_[i]);
        return out;
    }

    /// [A | B | ...], all blocks with the same row count.
    static FieldMatrix hconcat(std::span<const FieldMatrix> blocks) {
        if (blocks.empty()) throw Error(Errc::ShapeMismatch, "nothing to concatenate");
        std::size_t cols = 0;
        for (const auto& b : blocks) {
            detail::require_same_field(blocks.front().field_, b.field_);
            if (b.rows_ != blocks.front().rows_) throw Error(Errc::ShapeMismatch, "row counts differ");
            cols += b.cols_;
        }
        FieldMatrix out(blocks.front().field_, blocks.front().rows_, cols);
        for (std::size_t i = 0; i < out.rows_; ++i) {
            auto dst = out.row(i).begin();
            for (const auto& b : blocks) dst = std::copy(b.row(i).begin(), b.row(i).end(), dst);
        }
        return out;
    }

    /// [A; B], both with the same column count.
    static FieldMatrix vconcat(const FieldMatrix& a, const FieldMatrix& b) {
        detail::require_same_field(a.field_, b.field_);
        if (a.cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "column counts differ");
        FieldMatrix out(a.field_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
        return out;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        detail::require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
        FieldMatrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) detail::axpy(a.field_, a(i, l), b.row(l), out.row(i));
        return out;
    }

    bool is_diagonal() const noexcept {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

/// x * M for a coefficient vector x of length M.rows().
inline FieldVector combine_rows(std::span<const Element> coefficients, const FieldMatrix& m) {
    if (coefficients.size() != m.rows()) throw Error(Errc::LengthMismatch, "coefficient count differs from rows");
    FieldVector out(m.field(), m.cols());
    std::vector<Element> acc(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) detail::axpy(m.field(), coefficients[i], m.row(i), acc);
    for (std::size_t j = 0; j < acc.size(); ++j) out[j] = acc[j];
    return out;
}

struct RowEchelon {
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Reduced row echelon form. Pivot = first nonzero entry at or below the
/// current row in column order; pivots are normalized to 1.
inline RowEchelon rref(const FieldMatrix& input) {
    FieldMatrix m = input;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::vector<Element> tmp(m.cols());
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
        const Element s = f.inv(m(r, c));
        for (auto& e : m.row(r)) e = f.mul(s, e);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            detail::axpy(f, f.neg(m(i, c)), m.row(r), m.row(i));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

/// Canonical basis of the row space: the nonzero rows of the RREF.
inline FieldMatrix row_basis(const FieldMatrix& m) {
    const RowEchelon e = rref(m);
    FieldMatrix out(m.field(), e.rank, m.cols());
    for (std::size_t i = 0; i < e.rank; ++i) std::copy(e.reduced.row(i).begin(), e.reduced.row(i).end(), out.row(i).begin());
    return out;
}

/// Basis of {v : M v^T = 0}, one row per free column in increasing order.
inline FieldMatrix nullspace_basis(const FieldMatrix& m) {
    const RowEchelon e = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t c : e.pivots) is_pivot[c] = true;
    FieldMatrix out(f, m.cols() - e.rank, m.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < e.rank; ++i) out(row, e.pivots[i]) = f.neg(e.reduced(i, free));
        ++row;
    }
    return out;
}

/// M * M^T.
inline FieldMatrix gram(const FieldMatrix& m) {
    FieldMatrix g(m.field(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.rows(); ++j) {
            const Element v = detail::dot_span(m.field(), m.row(i), m.row(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

/// Basis (in RREF) of rowspace(A) intersected with rowspace(B). Solves
/// x RA + y RB = 0 over reduced bases RA, RB; each solution maps to x RA.
inline FieldMatrix intersect_rowspaces(const FieldMatrix& a, const FieldMatrix& b) {
    detail::require_same_field(a.field(), b.field());
    if (a.cols() != b.cols())
        throw Error(Errc::ShapeMismatch,
                    "ambient lengths " + std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
    const FieldMatrix ra = row_basis(a);
    const FieldMatrix rb = row_basis(b);
    const FieldMatrix kernel = nullspace_basis(FieldMatrix::vconcat(ra, rb).transpose());
    FieldMatrix images(a.field(), kernel.rows(), a.cols());
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        const FieldVector v = combine_rows(kernel.row(i).first(ra.rows()), ra);
        std::copy(v.begin(), v.end(), images.row(i).begin());
    }
    return row_basis(images);
}

inline bool is_linearly_independent(std::span<const FieldVector> vectors) {
    if (vectors.empty()) return true;
    const std::size_t cols = vectors.front().size();
    return rank(FieldMatrix::from_vectors(vectors.front().field(), vectors, cols)) == vectors.size();
}

inline bool same_rowspace(const FieldMatrix& a, const FieldMatrix& b) {
    return a.cols() == b.cols() && row_basis(a) == row_basis(b);
}

}  // namespace hullcode
