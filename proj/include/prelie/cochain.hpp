#pragma once

// Cochains C^n(g, V) = Hom(wedge^{n-1} g (x) g, V) of a pre-Lie algebra with
// coefficients in a representation, the pre-Lie coboundary, cohomology, and
// the Lie-side complex C^{n-1}(g^c, Hom(g, V)) together with the cochain
// isomorphism between the two.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace prelie {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Strictly increasing k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace detail {

/// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
/// when an index repeats.
inline int sort_with_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

/// Index of a strictly increasing tuple among increasing_tuples(n, k).
class TupleIndex {
public:
    TupleIndex(std::size_t n, std::size_t k) : tuples_(increasing_tuples(n, k)) {
        for (std::size_t p = 0; p < tuples_.size(); ++p)
            index_.emplace(tuples_[p], p);
    }
    const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    std::size_t at(const std::vector<std::size_t>& t) const { return index_.at(t); }

private:
    std::vector<std::vector<std::size_t>> tuples_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// Multilinear expansion of `f` over the nonzero coordinates of `args`.
template <class BasisEval>
Vector expand_multilinear(const std::vector<Vector>& args, std::size_t value_dim,
                          const BasisEval& on_basis) {
    Vector out = zero_vector(value_dim);
    std::vector<std::size_t> idx(args.size());
    auto rec = [&](auto&& self, std::size_t slot, const Scalar& coeff) -> void {
        if (slot == args.size()) {
            axpy(out, coeff, on_basis(idx));
            return;
        }
        for (std::size_t c = 0; c < args[slot].size(); ++c) {
            if (args[slot][c] == 0)
                continue;
            idx[slot] = c;
            self(self, slot + 1, coeff * args[slot][c]);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

} // namespace detail

/// Basis pairs (I, j) of wedge^{n-1} g (x) g: I strictly increasing of size
/// n - 1, j unrestricted, ordered lexicographically in (I, j).
class CochainBasis {
public:
    CochainBasis(std::size_t arity, std::size_t algebra_dim)
        : arity_(arity), dim_(algebra_dim), wedge_(algebra_dim, arity == 0 ? 0 : arity - 1) {
        if (arity == 0)
            throw ArityMismatch("cochain arity must be at least 1");
    }

    std::size_t arity() const noexcept { return arity_; }
    std::size_t algebra_dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return wedge_.size() * dim_; }

    /// The (I, j) pair at position p, flattened as I followed by j.
    std::vector<std::size_t> element(std::size_t p) const {
        std::vector<std::size_t> t = wedge_.tuples().at(p / dim_);
        t.push_back(p % dim_);
        return t;
    }
    std::size_t position(const std::vector<std::size_t>& increasing, std::size_t last) const {
        return wedge_.at(increasing) * dim_ + last;
    }

private:
    std::size_t arity_;
    std::size_t dim_;
    detail::TupleIndex wedge_;
};

/// An n-cochain; coordinates are ordered by CochainBasis position, then by
/// the basis of V.
class Cochain {
public:
    Cochain(std::size_t arity, std::size_t algebra_dim, std::size_t value_dim)
        : basis_(arity, algebra_dim), value_dim_(value_dim),
          coords_(basis_.size() * value_dim, Scalar(0)) {}

    Cochain(std::size_t arity, std::size_t algebra_dim, std::size_t value_dim, Vector coords)
        : Cochain(arity, algebra_dim, value_dim) {
        if (coords.size() != coords_.size())
            throw ShapeError("cochain of arity " + std::to_string(arity) + " needs " +
                             std::to_string(coords_.size()) + " coordinates, got " +
                             std::to_string(coords.size()));
        coords_ = std::move(coords);
    }

    std::size_t arity() const noexcept { return basis_.arity(); }
    std::size_t algebra_dim() const noexcept { return basis_.algebra_dim(); }
    std::size_t value_dim() const noexcept { return value_dim_; }
    const CochainBasis& basis() const noexcept { return basis_; }
    const Vector& coordinates() const noexcept { return coords_; }
    bool is_zero() const { return prelie::is_zero(coords_); }

    /// Sets f(e_{I_1}, ..., e_{I_{n-1}}, e_j) for strictly increasing I.
    void set(const std::vector<std::size_t>& increasing, std::size_t last, const Vector& value) {
        if (value.size() != value_dim_)
            throw ShapeError("cochain value has the wrong dimension");
        const std::size_t p = basis_.position(increasing, last) * value_dim_;
        std::copy(value.begin(), value.end(), coords_.begin() + static_cast<std::ptrdiff_t>(p));
    }

    /// Value on basis vectors; alternating in all but the last slot.
    Vector evaluate_basis(const std::vector<std::size_t>& args) const {
        if (args.size() != arity())
            throw ArityMismatch("cochain of arity " + std::to_string(arity()) + " given " +
                                std::to_string(args.size()) + " arguments");
        std::vector<std::size_t> head(args.begin(), args.end() - 1);
        const int sign = detail::sort_with_sign(head);
        if (sign == 0)
            return zero_vector(value_dim_);
        const std::size_t p = basis_.position(head, args.back()) * value_dim_;
        Vector out(coords_.begin() + static_cast<std::ptrdiff_t>(p),
                   coords_.begin() + static_cast<std::ptrdiff_t>(p + value_dim_));
        if (sign < 0)
            for (auto& x : out)
                x = -x;
        return out;
    }

    Vector evaluate(const std::vector<Vector>& args) const {
        if (args.size() != arity())
            throw ArityMismatch("cochain of arity " + std::to_string(arity()) + " given " +
                                std::to_string(args.size()) + " arguments");
        return detail::expand_multilinear(
            args, value_dim_, [&](const std::vector<std::size_t>& idx) { return evaluate_basis(idx); });
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity() == b.arity() && a.algebra_dim() == b.algebra_dim() &&
               a.value_dim_ == b.value_dim_ && a.coords_ == b.coords_;
    }

private:
    CochainBasis basis_;
    std::size_t value_dim_;
    Vector coords_;
};

/// Dimension of C^n(g, V).
inline std::size_t cochain_space_dim(std::size_t n, std::size_t algebra_dim, std::size_t value_dim) {
    return binomial(algebra_dim, n - 1) * algebra_dim * value_dim;
}

/// The coboundary formula evaluated at n + 1 abstract arguments, where n is the
/// arity of the cochain. `Ops` supplies
///   left(x, u), right(u, x)       the module actions,
///   product(x, y), bracket(x, y)  the algebra operations,
///   cochain(args)                 the value of f,
///   value_dim                     the dimension of V.
/// Used for g itself and for the truncated free algebra.
template <class Arg, class Ops>
Vector coboundary_formula(const std::vector<Arg>& x, const Ops& ops) {
    const std::size_t n = x.size() - 1;
    Vector out = zero_vector(ops.value_dim);
    auto sign = [](std::size_t i) { return (i % 2 == 0) ? Scalar(1) : Scalar(-1); };
    // 0-based i here corresponds to the 1-based x_{i+1}; (-1)^{(i+1)+1} = (-1)^i.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Arg> without;
        for (std::size_t k = 0; k <= n; ++k)
            if (k != i)
                without.push_back(x[k]);
        axpy(out, sign(i), ops.left(x[i], ops.cochain(without)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Arg> moved;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i)
                moved.push_back(x[k]);
        moved.push_back(x[i]);
        axpy(out, sign(i), ops.right(ops.cochain(moved), x[n]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Arg> args;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i)
                args.push_back(x[k]);
        args.push_back(ops.product(x[i], x[n]));
        axpy(out, -sign(i), ops.cochain(args));
    }
    // (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Arg> args{ops.bracket(x[i], x[j])};
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i && k != j)
                    args.push_back(x[k]);
            axpy(out, sign(i + j), ops.cochain(args));
        }
    return out;
}

namespace detail {

struct AlgebraOps {
    const PreLieAlgebra& algebra;
    const Representation& rep;
    const Cochain& f;
    std::size_t value_dim;

    Vector left(const Vector& x, const Vector& u) const { return rep.act_left(x, u); }
    Vector right(const Vector& u, const Vector& x) const { return rep.act_right(u, x); }
    Vector product(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
    Vector bracket(const Vector& x, const Vector& y) const { return algebra.commutator(x, y); }
    Vector cochain(const std::vector<Vector>& args) const { return f.evaluate(args); }
};

inline void require_cochain_shape(const PreLieAlgebra& a, const Representation& rep,
                                  const Cochain& f) {
    require_rep_shape(a, rep);
    if (f.algebra_dim() != a.dim() || f.value_dim() != rep.carrier_dim())
        throw ShapeError("cochain over (" + std::to_string(f.algebra_dim()) + ", " +
                         std::to_string(f.value_dim()) + ") used with algebra of dimension " +
                         std::to_string(a.dim()) + " and module of dimension " +
                         std::to_string(rep.carrier_dim()));
}

} // namespace detail

inline Cochain coboundary(const PreLieAlgebra& a, const Representation& rep, const Cochain& f) {
    detail::require_cochain_shape(a, rep, f);
    const std::size_t n = f.arity();
    const std::size_t dim = a.dim();
    Cochain df(n + 1, dim, rep.carrier_dim());
    const detail::AlgebraOps ops{a, rep, f, rep.carrier_dim()};
    const CochainBasis& basis = df.basis();
    for (std::size_t p = 0; p < basis.size(); ++p) {
        const std::vector<std::size_t> el = basis.element(p);
        std::vector<Vector> args;
        for (auto k : el)
            args.push_back(unit_vector(dim, k));
        std::vector<std::size_t> head(el.begin(), el.end() - 1);
        df.set(head, el.back(), coboundary_formula(args, ops));
    }
    return df;
}

inline Cochain basis_cochain(std::size_t arity, std::size_t algebra_dim, std::size_t value_dim,
                             std::size_t coordinate) {
    Cochain f(arity, algebra_dim, value_dim);
    return Cochain(arity, algebra_dim, value_dim,
                   unit_vector(f.coordinates().size(), coordinate));
}

/// Matrix of d: C^n -> C^{n+1}, columns indexed by C^n coordinates.
inline Matrix coboundary_matrix(const PreLieAlgebra& a, const Representation& rep, std::size_t n) {
    if (n == 0)
        throw ArityMismatch("the complex starts in degree 1");
    detail::require_rep_shape(a, rep);
    const std::size_t v = rep.carrier_dim();
    const std::size_t cols = cochain_space_dim(n, a.dim(), v);
    const std::size_t rows = cochain_space_dim(n + 1, a.dim(), v);
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Cochain df = coboundary(a, rep, basis_cochain(n, a.dim(), v, c));
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = df.coordinates()[r];
    }
    return m;
}

/// H^n as a dimension plus cocycle representatives whose classes form a basis.
struct CohomologySpace {
    std::size_t n = 0;
    std::size_t dimension = 0;
    std::vector<Cochain> representatives;
};

namespace detail {

/// Representatives: kernel basis vectors reduced modulo the image, kept when
/// independent of those already chosen.
inline std::vector<Vector> cohomology_representatives(const SubspaceBasis& kernel,
                                                      const SubspaceBasis& image) {
    const QuotientReducer quotient(image);
    std::vector<Vector> reps;
    std::vector<Vector> reduced;
    for (const auto& k : kernel.vectors) {
        Vector r = quotient.reduce(k);
        std::vector<Vector> trial = reduced;
        trial.push_back(r);
        if (rank(Matrix::from_columns(quotient.quotient_dim(), trial)) == trial.size()) {
            reduced = std::move(trial);
            reps.push_back(quotient.lift(r));
        }
    }
    return reps;
}

inline SubspaceBasis image_of_previous(const PreLieAlgebra& a, const Representation& rep,
                                       std::size_t n) {
    const std::size_t dim = cochain_space_dim(n, a.dim(), rep.carrier_dim());
    if (n < 2)
        return {dim, {}};
    return rank_kernel_image(coboundary_matrix(a, rep, n - 1)).image;
}

} // namespace detail

/// H^1 = ker d_1; H^n = ker d_n / im d_{n-1} for n >= 2.
inline CohomologySpace cohomology(const PreLieAlgebra& a, const Representation& rep, std::size_t n) {
    if (n == 0)
        throw ArityMismatch("the complex starts in degree 1");
    const std::size_t v = rep.carrier_dim();
    const SubspaceBasis kernel = rank_kernel_image(coboundary_matrix(a, rep, n)).kernel;
    const SubspaceBasis image = detail::image_of_previous(a, rep, n);
    CohomologySpace h{n, 0, {}};
    for (auto& r : detail::cohomology_representatives(kernel, image))
        h.representatives.emplace_back(n, a.dim(), v, std::move(r));
    h.dimension = h.representatives.size();
    return h;
}

/// Coordinates of [z] in the basis given by cohomology(a, rep, n).
/// Throws NotACocycle when dz != 0.
inline Vector class_coordinates(const PreLieAlgebra& a, const Representation& rep,
                                const CohomologySpace& h, const Cochain& z) {
    detail::require_cochain_shape(a, rep, z);
    if (z.arity() != h.n)
        throw ArityMismatch("cochain of arity " + std::to_string(z.arity()) +
                            " against H^" + std::to_string(h.n));
    if (!coboundary(a, rep, z).is_zero())
        throw NotACocycle("class coordinates requested for a non-cocycle");
    std::vector<Vector> cols;
    for (const auto& r : h.representatives)
        cols.push_back(r.coordinates());
    for (auto& b : detail::image_of_previous(a, rep, h.n).vectors)
        cols.push_back(std::move(b));
    const std::size_t dim = z.coordinates().size();
    const auto sol = solve_particular(Matrix::from_columns(dim, cols), z.coordinates());
    if (!sol)
        throw InternalAssertionFailed("cocycle not spanned by representatives and coboundaries");
    return Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(h.dimension));
}

/// Some beta with d beta = f1 - f2, or nullopt when the classes differ.
inline std::optional<Cochain> are_cohomologous(const PreLieAlgebra& a, const Representation& rep,
                                               const Cochain& f1, const Cochain& f2) {
    if (f1.arity() != f2.arity())
        throw ArityMismatch("cochains of arity " + std::to_string(f1.arity()) + " and " +
                            std::to_string(f2.arity()));
    if (f1.arity() < 2)
        throw ArityMismatch("there are no coboundaries in degree 1");
    detail::require_cochain_shape(a, rep, f1);
    detail::require_cochain_shape(a, rep, f2);
    const std::size_t n = f1.arity();
    const Matrix d = coboundary_matrix(a, rep, n - 1);
    auto sol = solve_particular(d, f1.coordinates() - f2.coordinates());
    if (!sol)
        return std::nullopt;
    return Cochain(n - 1, a.dim(), rep.carrier_dim(), std::move(*sol));
}

// ---------------------------------------------------------------------------
// Lie side: alternating cochains of g^c with values in W = Hom(g, V).

/// Action of a Lie algebra on a module W: e_i |> w_a = sum_b act(i, a, b) w_b.
struct LieModule {
    Tensor3 act;
    std::size_t algebra_dim() const { return act.dim(0); }
    std::size_t dim() const { return act.dim(1); }
    Vector apply(const Vector& x, const Vector& w) const { return act.apply(x, w); }
};

/// Hom(g, V) as a g^c-module, (x |> F)(y) = x o_l F(y) + F(x) o_r y - F(x o y).
/// The coordinate j * dim V + b of F is the b-th coordinate of F(e_j).
inline LieModule hom_module(const PreLieAlgebra& a, const Representation& rep) {
    detail::require_rep_shape(a, rep);
    const std::size_t n = a.dim();
    const std::size_t v = rep.carrier_dim();
    Tensor3 act(n, n * v, n * v);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t src = 0; src < n * v; ++src) {
            // F = the map sending e_{src / v} to v_{src % v}, all else to 0.
            const std::size_t fj = src / v, fb = src % v;
            auto F = [&](const Vector& y) {
                Vector out = zero_vector(v);
                out[fb] = y[fj];
                return out;
            };
            const Vector x = unit_vector(n, i);
            for (std::size_t j = 0; j < n; ++j) {
                const Vector y = unit_vector(n, j);
                const Vector val = rep.act_left(x, F(y)) + rep.act_right(F(x), y) -
                                   F(a.multiply(x, y));
                for (std::size_t b = 0; b < v; ++b)
                    act(i, src, j * v + b) = val[b];
            }
        }
    return {std::move(act)};
}

/// Alternating k-cochain of a Lie algebra with values in a module of
/// dimension module_dim; coordinates ordered by increasing k-tuple, then module basis.
class LieCochain {
public:
    LieCochain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
        : degree_(degree), algebra_dim_(algebra_dim), module_dim_(module_dim),
          tuples_(algebra_dim, degree), coords_(tuples_.size() * module_dim, Scalar(0)) {}

    LieCochain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim, Vector coords)
        : LieCochain(degree, algebra_dim, module_dim) {
        if (coords.size() != coords_.size())
            throw ShapeError("Lie cochain needs " + std::to_string(coords_.size()) +
                             " coordinates, got " + std::to_string(coords.size()));
        coords_ = std::move(coords);
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    std::size_t module_dim() const noexcept { return module_dim_; }
    const Vector& coordinates() const noexcept { return coords_; }
    const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_.tuples(); }
    bool is_zero() const { return prelie::is_zero(coords_); }

    void set(const std::vector<std::size_t>& increasing, const Vector& value) {
        const std::size_t p = tuples_.at(increasing) * module_dim_;
        std::copy(value.begin(), value.end(), coords_.begin() + static_cast<std::ptrdiff_t>(p));
    }

    Vector evaluate_basis(std::vector<std::size_t> args) const {
        if (args.size() != degree_)
            throw ArityMismatch("Lie cochain of degree " + std::to_string(degree_) + " given " +
                                std::to_string(args.size()) + " arguments");
        const int sign = detail::sort_with_sign(args);
        if (sign == 0)
            return zero_vector(module_dim_);
        const std::size_t p = tuples_.at(args) * module_dim_;
        Vector out(coords_.begin() + static_cast<std::ptrdiff_t>(p),
                   coords_.begin() + static_cast<std::ptrdiff_t>(p + module_dim_));
        if (sign < 0)
            for (auto& x : out)
                x = -x;
        return out;
    }

    Vector evaluate(const std::vector<Vector>& args) const {
        return detail::expand_multilinear(args, module_dim_,
                                          [&](const std::vector<std::size_t>& idx) {
                                              return evaluate_basis(idx);
                                          });
    }

    friend bool operator==(const LieCochain& a, const LieCochain& b) {
        return a.degree_ == b.degree_ && a.algebra_dim_ == b.algebra_dim_ &&
               a.module_dim_ == b.module_dim_ && a.coords_ == b.coords_;
    }

private:
    std::size_t degree_;
    std::size_t algebra_dim_;
    std::size_t module_dim_;
    detail::TupleIndex tuples_;
    Vector coords_;
};

/// Chevalley-Eilenberg differential
/// (dF)(x_0..x_k) = sum_i (-1)^i x_i |> F(..^x_i..)
///                + sum_{i<j} (-1)^{i+j} F([x_i,x_j], ..^x_i..^x_j..).
inline LieCochain lie_coboundary(const LieAlgebra& l, const LieModule& w, const LieCochain& f) {
    if (w.algebra_dim() != l.dim() || f.algebra_dim() != l.dim() || f.module_dim() != w.dim())
        throw ShapeError("Lie cochain, module and algebra dimensions disagree");
    const std::size_t k = f.degree();
    const std::size_t n = l.dim();
    LieCochain df(k + 1, n, w.dim());
    auto sign = [](std::size_t i) { return (i % 2 == 0) ? Scalar(1) : Scalar(-1); };
    for (const auto& t : df.tuples()) {
        Vector val = zero_vector(w.dim());
        for (std::size_t i = 0; i <= k; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t p = 0; p <= k; ++p)
                if (p != i)
                    rest.push_back(t[p]);
            axpy(val, sign(i), w.apply(unit_vector(n, t[i]), f.evaluate_basis(rest)));
        }
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                std::vector<Vector> args{l.structure().slice(t[i], t[j])};
                for (std::size_t p = 0; p <= k; ++p)
                    if (p != i && p != j)
                        args.push_back(unit_vector(n, t[p]));
                axpy(val, sign(i + j), f.evaluate(args));
            }
        df.set(t, val);
    }
    return df;
}

inline Matrix lie_coboundary_matrix(const LieAlgebra& l, const LieModule& w, std::size_t k) {
    const LieCochain shape_src(k, l.dim(), w.dim());
    const LieCochain shape_dst(k + 1, l.dim(), w.dim());
    const std::size_t cols = shape_src.coordinates().size();
    const std::size_t rows = shape_dst.coordinates().size();
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const LieCochain df =
            lie_coboundary(l, w, LieCochain(k, l.dim(), w.dim(), unit_vector(cols, c)));
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = df.coordinates()[r];
    }
    return m;
}

/// dim H^k(L, W) with H^0 = ker d_0.
inline std::size_t lie_cohomology_dim(const LieAlgebra& l, const LieModule& w, std::size_t k) {
    const Matrix dk = lie_coboundary_matrix(l, w, k);
    const std::size_t kernel = dk.cols() - rank(dk);
    const std::size_t image = k == 0 ? 0 : rank(lie_coboundary_matrix(l, w, k - 1));
    return kernel - image;
}

/// (phi f)(x_1..x_{n-1})(x_n) = f(x_1..x_n).
inline LieCochain phi_map(const Cochain& f) {
    const std::size_t n = f.arity();
    const std::size_t dim = f.algebra_dim();
    const std::size_t v = f.value_dim();
    LieCochain out(n - 1, dim, dim * v);
    for (const auto& t : out.tuples()) {
        Vector val = zero_vector(dim * v);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::size_t> args = t;
            args.push_back(j);
            const Vector fx = f.evaluate_basis(args);
            for (std::size_t b = 0; b < v; ++b)
                val[j * v + b] = fx[b];
        }
        out.set(t, val);
    }
    return out;
}

/// Matrix of phi on C^n, columns indexed by C^n coordinates.
inline Matrix phi_matrix(std::size_t n, std::size_t algebra_dim, std::size_t value_dim) {
    const std::size_t cols = cochain_space_dim(n, algebra_dim, value_dim);
    const LieCochain shape(n - 1, algebra_dim, algebra_dim * value_dim);
    Matrix m(shape.coordinates().size(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const LieCochain img = phi_map(basis_cochain(n, algebra_dim, value_dim, c));
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, c) = img.coordinates()[r];
    }
    return m;
}

} // namespace prelie
