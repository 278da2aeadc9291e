#pragma once

// Dense exact linear algebra over the rationals.
//
// Every routine uses the same pivot rule: columns are scanned left to right
// and, within a column, the first row (top-down) with a nonzero entry among
// the rows not yet used becomes the pivot. Kernels, images, particular
// solutions and sections are therefore reproducible bit for bit.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace prelie {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v = zero_vector(n);
    v.at(k) = 1;
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

inline Vector operator+(Vector a, const Vector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum of lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += b[k];
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference of lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] -= b[k];
    return a;
}

inline Vector operator*(const Scalar& c, Vector v) {
    for (auto& x : v)
        x *= c;
    return v;
}

/// a += c * b
inline void axpy(Vector& a, const Scalar& c, std::span<const Scalar> b) {
    if (c == 0)
        return;
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += c * b[k];
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = 1;
        return m;
    }

    /// Builds a rows x columns.size() matrix whose k-th column is columns[k].
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows)
                throw DimensionMismatch("column " + std::to_string(c) + " has length " +
                                        std::to_string(columns[c].size()) + ", expected " +
                                        std::to_string(rows));
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = columns[c][r];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const { return prelie::is_zero(entries_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(r, k);
                if (x == 0)
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out(r, c) += x * b(k, c);
            }
        return out;
    }

    friend Vector operator*(const Matrix& a, std::span<const Scalar> v) {
        if (a.cols_ != v.size())
            throw DimensionMismatch("matrix " + a.shape() + " applied to vector of length " +
                                    std::to_string(v.size()));
        Vector out = zero_vector(a.rows_);
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (v[c] == 0)
                continue;
            for (std::size_t r = 0; r < a.rows_; ++r)
                out[r] += a(r, c) * v[c];
        }
        return out;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) {
        return a * std::span<const Scalar>(v);
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("sum of " + a.shape() + " and " + b.shape());
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            a.entries_[k] += b.entries_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("difference of " + a.shape() + " and " + b.shape());
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            a.entries_[k] -= b.entries_[k];
        return a;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Linearly independent vectors in a space of dimension `ambient_dim`.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vector> vectors;

    std::size_t dim() const noexcept { return vectors.size(); }
    /// Ambient x dim matrix with the basis vectors as columns.
    Matrix as_columns() const { return Matrix::from_columns(ambient_dim, vectors); }

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

inline SubspaceBasis standard_basis(std::size_t n) {
    SubspaceBasis b{n, {}};
    for (std::size_t k = 0; k < n; ++k)
        b.vectors.push_back(unit_vector(n, k));
    return b;
}

/// Reduced row echelon form together with the row operations that produced it:
/// transform * input == reduced.
struct RowEchelon {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

inline RowEchelon row_reduce(const Matrix& m) {
    RowEchelon e{m, Matrix::identity(m.rows()), {}};
    Matrix& a = e.reduced;
    Matrix& t = e.transform;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < a.cols() && next_row < a.rows(); ++c) {
        std::size_t p = next_row;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != next_row)
            for (std::size_t k = 0; k < a.cols(); ++k)
                std::swap(a(p, k), a(next_row, k));
        if (p != next_row)
            for (std::size_t k = 0; k < t.cols(); ++k)
                std::swap(t(p, k), t(next_row, k));
        const Scalar inv = 1 / a(next_row, c);
        for (std::size_t k = 0; k < a.cols(); ++k)
            a(next_row, k) *= inv;
        for (std::size_t k = 0; k < t.cols(); ++k)
            t(next_row, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == next_row || a(r, c) == 0)
                continue;
            const Scalar f = a(r, c);
            for (std::size_t k = 0; k < a.cols(); ++k)
                a(r, k) -= f * a(next_row, k);
            for (std::size_t k = 0; k < t.cols(); ++k)
                t(r, k) -= f * t(next_row, k);
        }
        e.pivot_cols.push_back(c);
        ++next_row;
    }
    return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

struct RankKernelImage {
    std::size_t rank = 0;
    SubspaceBasis kernel;
    SubspaceBasis image;
};

/// Kernel basis has one vector per free column (1 there, zeros at the other
/// free columns); the image basis is the pivot columns of `m`.
inline RankKernelImage rank_kernel_image(const Matrix& m) {
    const RowEchelon e = row_reduce(m);
    RankKernelImage out{e.rank(), {m.cols(), {}}, {m.rows(), {}}};
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.reduced(k, f);
        out.kernel.vectors.push_back(std::move(v));
    }
    for (auto c : e.pivot_cols)
        out.image.vectors.push_back(m.column(c));
    return out;
}

/// Some x with m * x == b, free variables set to zero; nullopt when b is not
/// in the column space.
inline std::optional<Vector> solve_particular(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side of length " + std::to_string(b.size()) +
                                " for a " + m.shape() + " system");
    const RowEchelon e = row_reduce(m);
    const Vector tb = e.transform * b;
    for (std::size_t r = e.rank(); r < tb.size(); ++r)
        if (tb[r] != 0)
            return std::nullopt;
    Vector x = zero_vector(m.cols());
    for (std::size_t k = 0; k < e.rank(); ++k)
        x[e.pivot_cols[k]] = tb[k];
    return x;
}

/// S with m * S * m == m. On im(m) it returns the pivot-supported preimage;
/// it vanishes on the complement of im(m) cut out by the eliminated rows.
inline Matrix right_inverse_on_image(const Matrix& m) {
    const RowEchelon e = row_reduce(m);
    Matrix s(m.cols(), m.rows());
    for (std::size_t k = 0; k < e.rank(); ++k)
        for (std::size_t c = 0; c < m.rows(); ++c)
            s(e.pivot_cols[k], c) = e.transform(k, c);
    return s;
}

inline bool in_span(const Matrix& columns, const Vector& v) {
    return solve_particular(columns, v).has_value();
}

/// Coordinates of vectors modulo a subspace, in the complement spanned by the
/// standard basis vectors at the non-pivot positions of the subspace's RREF.
class QuotientReducer {
public:
    explicit QuotientReducer(const SubspaceBasis& sub) : ambient_(sub.ambient_dim) {
        Matrix rows(sub.dim(), ambient_);
        for (std::size_t r = 0; r < sub.dim(); ++r) {
            if (sub.vectors[r].size() != ambient_)
                throw BadBasis("vector " + std::to_string(r) + " has length " +
                               std::to_string(sub.vectors[r].size()) + ", expected " +
                               std::to_string(ambient_));
            for (std::size_t c = 0; c < ambient_; ++c)
                rows(r, c) = sub.vectors[r][c];
        }
        RowEchelon e = row_reduce(rows);
        if (e.rank() != sub.dim())
            throw BadBasis("subspace vectors are linearly dependent");
        echelon_ = std::move(e.reduced);
        pivots_ = std::move(e.pivot_cols);
        std::vector<bool> is_pivot(ambient_, false);
        for (auto c : pivots_)
            is_pivot[c] = true;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!is_pivot[c])
                complement_.push_back(c);
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t quotient_dim() const noexcept { return complement_.size(); }
    const std::vector<std::size_t>& complement_coordinates() const noexcept { return complement_; }

    Vector reduce(const Vector& v) const {
        if (v.size() != ambient_)
            throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                    " reduced in ambient dimension " + std::to_string(ambient_));
        Vector w = v;
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const Scalar f = w[pivots_[k]];
            if (f != 0)
                axpy(w, -f, echelon_.row(k));
        }
        Vector out(complement_.size());
        for (std::size_t k = 0; k < complement_.size(); ++k)
            out[k] = w[complement_[k]];
        return out;
    }

    Vector lift(const Vector& coords) const {
        if (coords.size() != complement_.size())
            throw DimensionMismatch("quotient coordinates of length " +
                                    std::to_string(coords.size()) + ", expected " +
                                    std::to_string(complement_.size()));
        Vector v = zero_vector(ambient_);
        for (std::size_t k = 0; k < complement_.size(); ++k)
            v[complement_[k]] = coords[k];
        return v;
    }

    /// quotient_dim x ambient matrix of `reduce`.
    Matrix reduction_matrix() const {
        Matrix m(quotient_dim(), ambient_);
        for (std::size_t c = 0; c < ambient_; ++c) {
            const Vector col = reduce(unit_vector(ambient_, c));
            for (std::size_t r = 0; r < col.size(); ++r)
                m(r, c) = col[r];
        }
        return m;
    }

    /// ambient x quotient_dim matrix of `lift`.
    Matrix lift_matrix() const {
        Matrix m(ambient_, quotient_dim());
        for (std::size_t k = 0; k < complement_.size(); ++k)
            m(complement_[k], k) = 1;
        return m;
    }

private:
    std::size_t ambient_;
    Matrix echelon_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> complement_;
};

inline Vector quotient_reduce(std::size_t ambient_dim, const SubspaceBasis& sub, const Vector& v) {
    if (sub.ambient_dim != ambient_dim)
        throw DimensionMismatch("subspace lives in dimension " + std::to_string(sub.ambient_dim) +
                                ", expected " + std::to_string(ambient_dim));
    return QuotientReducer(sub).reduce(v);
}

} // namespace prelie
