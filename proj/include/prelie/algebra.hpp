#pragma once

// Structure-constant pre-Lie algebras, Lie algebras, representations and
// actions, with exhaustive axiom checks over basis tuples. Multilinearity makes
// the basis sweep equivalent to the identities holding everywhere.

#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace prelie {

/// Dense three-index array of scalars; entry (i, j, k) is the k-th coordinate
/// of the bilinear product of the i-th and j-th basis vectors.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : dims_{d0, d1, d2}, entries_(d0 * d1 * d2, Scalar(0)) {}

    std::array<std::size_t, 3> dims() const noexcept { return dims_; }
    std::size_t dim(std::size_t axis) const { return dims_.at(axis); }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return entries_[(i * dims_[1] + j) * dims_[2] + k];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[(i * dims_[1] + j) * dims_[2] + k];
    }

    /// Bilinear evaluation: sum_ij x_i y_j T(i, j, .)
    Vector apply(const Vector& x, const Vector& y) const {
        if (x.size() != dims_[0] || y.size() != dims_[1])
            throw DimensionMismatch("tensor of shape " + shape() + " applied to vectors of length " +
                                    std::to_string(x.size()) + " and " + std::to_string(y.size()));
        Vector out = zero_vector(dims_[2]);
        for (std::size_t i = 0; i < dims_[0]; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dims_[1]; ++j) {
                if (y[j] == 0)
                    continue;
                const Scalar c = x[i] * y[j];
                for (std::size_t k = 0; k < dims_[2]; ++k)
                    out[k] += c * (*this)(i, j, k);
            }
        }
        return out;
    }

    /// The vector T(i, j, .)
    Vector slice(std::size_t i, std::size_t j) const {
        Vector out(dims_[2]);
        for (std::size_t k = 0; k < dims_[2]; ++k)
            out[k] = (*this)(i, j, k);
        return out;
    }

    bool is_zero() const { return prelie::is_zero(entries_); }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    std::string shape() const {
        return std::to_string(dims_[0]) + "x" + std::to_string(dims_[1]) + "x" +
               std::to_string(dims_[2]);
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<Scalar> entries_;
};

inline void require_shape(const Tensor3& t, std::size_t d0, std::size_t d1, std::size_t d2,
                          const std::string& what) {
    if (t.dims() != std::array<std::size_t, 3>{d0, d1, d2})
        throw ShapeError(what + " has shape " + t.shape() + ", expected " + std::to_string(d0) +
                         "x" + std::to_string(d1) + "x" + std::to_string(d2));
}

inline void require_shape(const Matrix& m, std::size_t rows, std::size_t cols,
                          const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw ShapeError(what + " has shape " + m.shape() + ", expected " + std::to_string(rows) +
                         "x" + std::to_string(cols));
}

/// e_i o e_j = sum_k product(i, j, k) e_k. Construction checks shape only;
/// the left-symmetry identity is the business of check_prelie.
class PreLieAlgebra {
public:
    PreLieAlgebra() = default;
    explicit PreLieAlgebra(Tensor3 product, std::vector<std::string> labels = {})
        : product_(std::move(product)), labels_(std::move(labels)) {
        const auto d = product_.dims();
        if (d[0] != d[1] || d[1] != d[2])
            throw ShapeError("product tensor must be n x n x n, got " + product_.shape());
        if (!labels_.empty() && labels_.size() != d[0])
            throw ShapeError("expected " + std::to_string(d[0]) + " basis labels, got " +
                             std::to_string(labels_.size()));
    }

    static PreLieAlgebra abelian(std::size_t n) { return PreLieAlgebra(Tensor3(n, n, n)); }

    std::size_t dim() const noexcept { return product_.dim(0); }
    const Tensor3& product() const noexcept { return product_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    Vector multiply(const Vector& x, const Vector& y) const { return product_.apply(x, y); }
    Vector multiply_basis(std::size_t i, std::size_t j) const { return product_.slice(i, j); }
    Vector commutator(const Vector& x, const Vector& y) const {
        return multiply(x, y) - multiply(y, x);
    }

    friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) {
        return a.product_ == b.product_;
    }

private:
    Tensor3 product_;
    std::vector<std::string> labels_;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(Tensor3 bracket) : bracket_(std::move(bracket)) {
        const auto d = bracket_.dims();
        if (d[0] != d[1] || d[1] != d[2])
            throw ShapeError("bracket tensor must be n x n x n, got " + bracket_.shape());
    }

    std::size_t dim() const noexcept { return bracket_.dim(0); }
    const Tensor3& structure() const noexcept { return bracket_; }
    Vector bracket(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    Tensor3 bracket_;
};

/// A pair (o_l, o_r) of a pre-Lie algebra of dimension algebra_dim on a space of
/// dimension carrier_dim: e_i o_l v_a = sum_b left(i, a, b) v_b and
/// v_a o_r e_i = sum_b right(a, i, b) v_b.
class Representation {
public:
    Representation() = default;
    Representation(Tensor3 left, Tensor3 right) : left_(std::move(left)), right_(std::move(right)) {
        const auto l = left_.dims();
        const auto r = right_.dims();
        if (l[1] != l[2])
            throw ShapeError("left action tensor must be n x v x v, got " + left_.shape());
        if (r != std::array<std::size_t, 3>{l[1], l[0], l[1]})
            throw ShapeError("right action tensor has shape " + right_.shape() + ", expected " +
                             std::to_string(l[1]) + "x" + std::to_string(l[0]) + "x" +
                             std::to_string(l[1]));
    }

    static Representation trivial(std::size_t algebra_dim, std::size_t carrier_dim) {
        return {Tensor3(algebra_dim, carrier_dim, carrier_dim),
                Tensor3(carrier_dim, algebra_dim, carrier_dim)};
    }
    /// (g, o_L, o_R): the algebra acting on itself by left and right products.
    static Representation regular(const PreLieAlgebra& a) {
        return {a.product(), a.product()};
    }
    /// (g, o_L, 0), a representation for every pre-Lie algebra.
    static Representation left_regular(const PreLieAlgebra& a) {
        return {a.product(), Tensor3(a.dim(), a.dim(), a.dim())};
    }

    std::size_t algebra_dim() const noexcept { return left_.dim(0); }
    std::size_t carrier_dim() const noexcept { return left_.dim(1); }
    const Tensor3& left() const noexcept { return left_; }
    const Tensor3& right() const noexcept { return right_; }

    Vector act_left(const Vector& x, const Vector& u) const { return left_.apply(x, u); }
    Vector act_right(const Vector& u, const Vector& x) const { return right_.apply(u, x); }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    Tensor3 left_;
    Tensor3 right_;
};

/// An action of n on m is a representation of n on the underlying space of m
/// satisfying two further identities; see check_action.
using ActionData = Representation;

/// First failing identity, the basis tuple where it fails (0-based), and the
/// two evaluated sides.
struct Violation {
    std::string axiom;
    std::vector<std::size_t> witness;
    Vector lhs;
    Vector rhs;

    std::string witness_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < witness.size(); ++k)
            os << (k ? "," : "") << witness[k] + 1;
        os << ')';
        return os.str();
    }

    std::string describe() const {
        auto vec = [](const Vector& v) {
            std::string s = "[";
            for (std::size_t k = 0; k < v.size(); ++k)
                s += (k ? ", " : "") + to_string(v[k]);
            return s + "]";
        };
        std::string out = axiom + " fails";
        if (!witness.empty())
            out += " at " + witness_string();
        if (!lhs.empty() || !rhs.empty())
            out += ": lhs = " + vec(lhs) + ", rhs = " + vec(rhs);
        return out;
    }
};

/// Valid, or the first Violation found.
class CheckResult {
public:
    CheckResult() = default;
    CheckResult(Violation v) : violation_(std::move(v)) {}

    static CheckResult valid() { return {}; }

    bool ok() const noexcept { return !violation_.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
    const Violation& violation() const { return violation_.value(); }
    std::string describe() const { return ok() ? "Valid" : violation_->describe(); }

private:
    std::optional<Violation> violation_;
};

namespace detail {

inline std::optional<Violation> compare(const char* axiom, std::vector<std::size_t> witness,
                                        Vector lhs, Vector rhs) {
    if (lhs == rhs)
        return std::nullopt;
    return Violation{axiom, std::move(witness), std::move(lhs), std::move(rhs)};
}

} // namespace detail

/// Left symmetry (x o y) o z - x o (y o z) = (y o x) o z - y o (x o z).
inline CheckResult check_prelie(const PreLieAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < n; ++k)
        basis.push_back(unit_vector(n, k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& x = basis[i];
                const auto& y = basis[j];
                const auto& z = basis[k];
                Vector lhs = a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
                Vector rhs = a.multiply(a.multiply(y, x), z) - a.multiply(y, a.multiply(x, z));
                if (auto v = detail::compare("left-symmetry", {i, j, k}, std::move(lhs),
                                             std::move(rhs)))
                    return *v;
            }
    return CheckResult::valid();
}

inline CheckResult check_lie(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = l.structure().slice(i, j);
            Vector rhs = Scalar(-1) * l.structure().slice(j, i);
            if (auto v = detail::compare("antisymmetry", {i, j}, std::move(lhs), std::move(rhs)))
                return *v;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                Vector lhs = l.bracket(x, l.bracket(y, z));
                Vector rhs = l.bracket(l.bracket(x, y), z) + l.bracket(y, l.bracket(x, z));
                if (auto v = detail::compare("Jacobi", {i, j, k}, std::move(lhs), std::move(rhs)))
                    return *v;
            }
    return CheckResult::valid();
}

/// The commutator [x, y] = x o y - y o x.
inline LieAlgebra subadjacent_lie(const PreLieAlgebra& a) {
    const std::size_t n = a.dim();
    Tensor3 b(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                b(i, j, k) = a.product()(i, j, k) - a.product()(j, i, k);
    return LieAlgebra(std::move(b));
}

namespace detail {

inline void require_rep_shape(const PreLieAlgebra& a, const Representation& rep) {
    if (rep.algebra_dim() != a.dim())
        throw ShapeError("representation is over an algebra of dimension " +
                         std::to_string(rep.algebra_dim()) + ", expected " +
                         std::to_string(a.dim()));
}

inline std::optional<Violation> representation_violation(const PreLieAlgebra& a,
                                                          const Representation& rep) {
    const std::size_t n = a.dim();
    const std::size_t v = rep.carrier_dim();
    // o_l is a representation of the sub-adjacent Lie algebra.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < v; ++s) {
                const Vector x = unit_vector(n, i), y = unit_vector(n, j), u = unit_vector(v, s);
                Vector lhs = rep.act_left(a.commutator(x, y), u);
                Vector rhs =
                    rep.act_left(x, rep.act_left(y, u)) - rep.act_left(y, rep.act_left(x, u));
                if (auto bad = compare("Lie representation [x,y] o_l u", {i, j, s},
                                       std::move(lhs), std::move(rhs)))
                    return bad;
            }
    // (x o_l u) o_r y - x o_l (u o_r y) = (u o_r x) o_r y - u o_r (x o y)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < v; ++s)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector x = unit_vector(n, i), y = unit_vector(n, j), u = unit_vector(v, s);
                Vector lhs =
                    rep.act_right(rep.act_left(x, u), y) - rep.act_left(x, rep.act_right(u, y));
                Vector rhs =
                    rep.act_right(rep.act_right(u, x), y) - rep.act_right(u, a.multiply(x, y));
                if (auto bad = compare("mixed representation identity", {i, s, j},
                                       std::move(lhs), std::move(rhs)))
                    return bad;
            }
    return std::nullopt;
}

} // namespace detail

inline CheckResult check_representation(const PreLieAlgebra& a, const Representation& rep) {
    detail::require_rep_shape(a, rep);
    if (auto bad = detail::representation_violation(a, rep))
        return *bad;
    return CheckResult::valid();
}

/// Action of `n` on `m`: a representation plus the two identities coupling the
/// action with the product of m. Witness order is (x, u, v), x in n.
inline CheckResult check_action(const PreLieAlgebra& n, const PreLieAlgebra& m,
                                const ActionData& action) {
    detail::require_rep_shape(n, action);
    if (action.carrier_dim() != m.dim())
        throw ShapeError("action carrier has dimension " + std::to_string(action.carrier_dim()) +
                         ", expected " + std::to_string(m.dim()));
    if (auto bad = detail::representation_violation(n, action))
        return *bad;
    const std::size_t dn = n.dim();
    const std::size_t dm = m.dim();
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t t = 0; t < dm; ++t) {
                const Vector x = unit_vector(dn, i), u = unit_vector(dm, s), v = unit_vector(dm, t);
                Vector lhs = m.multiply(action.act_left(x, u), v) -
                             action.act_left(x, m.multiply(u, v));
                Vector rhs = m.multiply(action.act_right(u, x), v) -
                             m.multiply(u, action.act_left(x, v));
                if (auto bad = detail::compare("action identity (x o_l u) o v", {i, s, t},
                                               std::move(lhs), std::move(rhs)))
                    return *bad;
            }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t t = 0; t < dm; ++t) {
                const Vector x = unit_vector(dn, i), u = unit_vector(dm, s), v = unit_vector(dm, t);
                Vector lhs = action.act_right(m.multiply(u, v), x) -
                             m.multiply(u, action.act_right(v, x));
                Vector rhs = action.act_right(m.multiply(v, u), x) -
                             m.multiply(v, action.act_right(u, x));
                if (auto bad = detail::compare("action identity (u o v) o_r x", {i, s, t},
                                               std::move(lhs), std::move(rhs)))
                    return *bad;
            }
    return CheckResult::valid();
}

/// f(e_i o e_j) = f(e_i) o f(e_j) for a linear map given as a
/// target.dim() x source.dim() matrix.
inline CheckResult check_morphism(const PreLieAlgebra& source, const PreLieAlgebra& target,
                                  const Matrix& f) {
    require_shape(f, target.dim(), source.dim(), "morphism matrix");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vector lhs = f * source.multiply_basis(i, j);
            Vector rhs = target.multiply(f.column(i), f.column(j));
            if (auto bad = detail::compare("homomorphism", {i, j}, std::move(lhs), std::move(rhs)))
                return *bad;
        }
    return CheckResult::valid();
}

/// Same check for the bracket of Lie algebras.
inline CheckResult check_lie_morphism(const LieAlgebra& source, const LieAlgebra& target,
                                      const Matrix& f) {
    require_shape(f, target.dim(), source.dim(), "morphism matrix");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vector lhs = f * source.structure().slice(i, j);
            Vector rhs = target.bracket(f.column(i), f.column(j));
            if (auto bad =
                    detail::compare("bracket homomorphism", {i, j}, std::move(lhs), std::move(rhs)))
                return *bad;
        }
    return CheckResult::valid();
}

/// R o g in R and g o R in R. Witness is (basis index of g, index of subspace vector).
inline CheckResult check_two_sided_ideal(const PreLieAlgebra& a, const SubspaceBasis& sub) {
    if (sub.ambient_dim != a.dim())
        throw BadBasis("subspace lives in dimension " + std::to_string(sub.ambient_dim) +
                       ", expected " + std::to_string(a.dim()));
    for (const auto& v : sub.vectors)
        if (v.size() != a.dim())
            throw BadBasis("subspace vector has the wrong length");
    const Matrix cols = sub.as_columns();
    if (rank(cols) != sub.dim())
        throw BadBasis("subspace vectors are linearly dependent");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t s = 0; s < sub.dim(); ++s) {
            const Vector e = unit_vector(a.dim(), i);
            Vector left = a.multiply(e, sub.vectors[s]);
            if (!in_span(cols, left))
                return Violation{"g o R in R", {i, s}, std::move(left), {}};
            Vector right = a.multiply(sub.vectors[s], e);
            if (!in_span(cols, right))
                return Violation{"R o g in R", {i, s}, std::move(right), {}};
        }
    return CheckResult::valid();
}

} // namespace prelie
