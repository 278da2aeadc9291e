#pragma once

// Crossed modules of pre-Lie algebras, crossed module extensions
// 0 -> V -> m -> n -> g -> 0, and the construction assigning a 3-cocycle to an
// extension.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace prelie {

/// mu: m -> n with an action of n on m.
struct CrossedModule {
    PreLieAlgebra m;
    PreLieAlgebra n;
    Matrix mu; // n.dim() x m.dim()
    ActionData action;

    friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

/// 0 -> V -i-> m -mu-> n -pi-> g -> 0 with an action of n on m. V carries the
/// zero product; v_rep is the representation of g on V it is meant to induce.
struct CrossedModuleExtension {
    PreLieAlgebra g;
    Representation v_rep;
    PreLieAlgebra m;
    PreLieAlgebra n;
    Matrix i;  // m x V
    Matrix mu; // n x m
    Matrix pi; // g x n
    ActionData action;

    std::size_t v_dim() const { return v_rep.carrier_dim(); }
    CrossedModule crossed_module() const { return {m, n, mu, action}; }

    friend bool operator==(const CrossedModuleExtension&, const CrossedModuleExtension&) = default;
};

/// rho: a linear section of pi (n x g); sigma: a right inverse of mu on im mu (m x n).
struct SectionPair {
    Matrix rho;
    Matrix sigma;
};

namespace detail {

inline Violation structural(std::string axiom) { return Violation{std::move(axiom), {}, {}, {}}; }

inline Violation prefixed(std::string prefix, Violation v) {
    v.axiom = prefix + ": " + v.axiom;
    return v;
}

inline void require_xmod_shape(const CrossedModule& x) {
    require_shape(x.mu, x.n.dim(), x.m.dim(), "mu");
    if (x.action.algebra_dim() != x.n.dim() || x.action.carrier_dim() != x.m.dim())
        throw ShapeError("action must be of n (dim " + std::to_string(x.n.dim()) + ") on m (dim " +
                         std::to_string(x.m.dim()) + ")");
}

} // namespace detail

/// mu a homomorphism, the action an action, and
///   mu(u o_r x) = mu(u) o x,  mu(x o_l u) = x o mu(u),
///   mu(u) o_l v = u o v = u o_r mu(v).
inline CheckResult check_crossed_module(const CrossedModule& x) {
    detail::require_xmod_shape(x);
    if (auto r = check_prelie(x.m); !r)
        return detail::prefixed("m", r.violation());
    if (auto r = check_prelie(x.n); !r)
        return detail::prefixed("n", r.violation());
    if (auto r = check_morphism(x.m, x.n, x.mu); !r)
        return detail::prefixed("mu", r.violation());
    if (auto r = check_action(x.n, x.m, x.action); !r)
        return detail::prefixed("action", r.violation());
    const std::size_t dm = x.m.dim(), dn = x.n.dim();
    for (std::size_t s = 0; s < dm; ++s)
        for (std::size_t i = 0; i < dn; ++i) {
            const Vector u = unit_vector(dm, s), e = unit_vector(dn, i);
            if (auto bad = detail::compare("mu(u o_r x) = mu(u) o x", {s, i},
                                           x.mu * x.action.act_right(u, e),
                                           x.n.multiply(x.mu * u, e)))
                return *bad;
        }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s) {
            const Vector u = unit_vector(dm, s), e = unit_vector(dn, i);
            if (auto bad = detail::compare("mu(x o_l u) = x o mu(u)", {i, s},
                                           x.mu * x.action.act_left(e, u),
                                           x.n.multiply(e, x.mu * u)))
                return *bad;
        }
    for (std::size_t s = 0; s < dm; ++s)
        for (std::size_t t = 0; t < dm; ++t) {
            const Vector u = unit_vector(dm, s), v = unit_vector(dm, t);
            const Vector uv = x.m.multiply(u, v);
            if (auto bad = detail::compare("mu(u) o_l v = u o v", {s, t},
                                           x.action.act_left(x.mu * u, v), uv))
                return *bad;
            if (auto bad = detail::compare("u o v = u o_r mu(v)", {s, t}, uv,
                                           x.action.act_right(u, x.mu * v)))
                return *bad;
        }
    return CheckResult::valid();
}

/// R -> n for a two-sided ideal R with the restricted product and the
/// restricted left/right multiplications as the action.
inline CrossedModule ideal_inclusion_xmod(const PreLieAlgebra& n, const SubspaceBasis& sub) {
    if (auto r = check_two_sided_ideal(n, sub); !r)
        throw NotAnIdeal(r.describe());
    const Matrix cols = sub.as_columns();
    const std::size_t d = sub.dim(), dn = n.dim();
    auto coords = [&](const Vector& w) {
        auto c = solve_particular(cols, w);
        if (!c)
            throw InternalAssertionFailed("ideal product left the ideal");
        return *c;
    };
    Tensor3 prod(d, d, d), left(dn, d, d), right(d, dn, d);
    for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
            const Vector c = coords(n.multiply(sub.vectors[s], sub.vectors[t]));
            for (std::size_t k = 0; k < d; ++k)
                prod(s, t, k) = c[k];
        }
        for (std::size_t i = 0; i < dn; ++i) {
            const Vector l = coords(n.multiply(unit_vector(dn, i), sub.vectors[s]));
            const Vector r = coords(n.multiply(sub.vectors[s], unit_vector(dn, i)));
            for (std::size_t k = 0; k < d; ++k) {
                left(i, s, k) = l[k];
                right(s, i, k) = r[k];
            }
        }
    }
    return {PreLieAlgebra(std::move(prod)), n, cols, ActionData(std::move(left), std::move(right))};
}

/// ker f -> source for a homomorphism f: source -> target.
inline CrossedModule kernel_xmod(const PreLieAlgebra& source, const PreLieAlgebra& target,
                                 const Matrix& f) {
    if (auto r = check_morphism(source, target, f); !r)
        throw InvalidInput("not a homomorphism: " + r.describe());
    return ideal_inclusion_xmod(source, rank_kernel_image(f).kernel);
}

/// V -0-> g for a representation V of g, V with the zero product.
inline CrossedModule representation_xmod(const PreLieAlgebra& g, const Representation& rep) {
    detail::require_rep_shape(g, rep);
    return {PreLieAlgebra::abelian(rep.carrier_dim()), g, Matrix(g.dim(), rep.carrier_dim()), rep};
}

namespace detail {

inline void require_extension_shape(const CrossedModuleExtension& e) {
    require_rep_shape(e.g, e.v_rep);
    require_shape(e.i, e.m.dim(), e.v_dim(), "i");
    require_shape(e.pi, e.g.dim(), e.n.dim(), "pi");
    require_xmod_shape(e.crossed_module());
}

/// i^{-1}(w), or ActionEscapesKernel.
inline Vector pull_back_to_v(const Matrix& i, const Vector& w, const char* what) {
    auto c = solve_particular(i, w);
    if (!c)
        throw ActionEscapesKernel(std::string(what) + " does not land in i(V)");
    return *c;
}

inline Representation induced_with_section(const CrossedModuleExtension& e, const Matrix& rho) {
    const std::size_t dg = e.g.dim(), dv = e.v_dim();
    Tensor3 left(dg, dv, dv), right(dv, dg, dv);
    for (std::size_t k = 0; k < dg; ++k) {
        const Vector rx = rho.column(k);
        for (std::size_t a = 0; a < dv; ++a) {
            const Vector iu = e.i.column(a);
            const Vector l = pull_back_to_v(e.i, e.action.act_left(rx, iu), "rho(x) o_l i(u)");
            const Vector r = pull_back_to_v(e.i, e.action.act_right(iu, rx), "i(u) o_r rho(x)");
            for (std::size_t b = 0; b < dv; ++b) {
                left(k, a, b) = l[b];
                right(a, k, b) = r[b];
            }
        }
    }
    return {std::move(left), std::move(right)};
}

} // namespace detail

/// The representation of g on V induced through a section of pi:
/// i(x o_l u) = rho(x) o_l i(u), i(u o_r x) = i(u) o_r rho(x).
inline Representation induced_representation(const CrossedModuleExtension& e,
                                             const std::optional<Matrix>& rho = std::nullopt) {
    detail::require_extension_shape(e);
    const Matrix section = rho ? *rho : right_inverse_on_image(e.pi);
    require_shape(section, e.n.dim(), e.g.dim(), "section of pi");
    if (e.pi * section != Matrix::identity(e.g.dim()))
        throw InvalidInput("rho is not a section of pi");
    return detail::induced_with_section(e, section);
}

/// Exactness, crossed module axioms, V central with zero product, and the
/// induced representation equal to v_rep.
inline CheckResult check_extension(const CrossedModuleExtension& e) {
    detail::require_extension_shape(e);
    if (auto r = check_prelie(e.g); !r)
        return detail::prefixed("g", r.violation());
    if (auto r = check_representation(e.g, e.v_rep); !r)
        return detail::prefixed("V", r.violation());
    for (std::size_t a = 0; a < e.v_dim(); ++a)
        for (std::size_t b = 0; b < e.v_dim(); ++b) {
            Vector p = e.m.multiply(e.i.column(a), e.i.column(b));
            if (!is_zero(p))
                return Violation{"i(V) o i(V) = 0", {a, b}, std::move(p), zero_vector(e.m.dim())};
        }
    if (auto r = check_morphism(e.m, e.n, e.mu); !r)
        return detail::prefixed("mu", r.violation());
    if (auto r = check_morphism(e.n, e.g, e.pi); !r)
        return detail::prefixed("pi", r.violation());
    const std::size_t ri = rank(e.i), rmu = rank(e.mu), rpi = rank(e.pi);
    if (ri != e.v_dim())
        return detail::structural("i injective");
    if (rpi != e.g.dim())
        return detail::structural("pi surjective");
    if (!(e.mu * e.i).is_zero() || ri + rmu != e.m.dim())
        return detail::structural("im i = ker mu");
    if (!(e.pi * e.mu).is_zero() || rmu + rpi != e.n.dim())
        return detail::structural("im mu = ker pi");
    if (auto r = check_crossed_module(e.crossed_module()); !r)
        return detail::prefixed("crossed module", r.violation());
    Representation induced;
    try {
        induced = detail::induced_with_section(e, right_inverse_on_image(e.pi));
    } catch (const ActionEscapesKernel& err) {
        return detail::structural(std::string("induced representation: ") + err.what());
    }
    if (!(induced == e.v_rep))
        return detail::structural("induced representation equals the given one");
    return CheckResult::valid();
}

/// 0 -> ker mu -> m -> n -> coker mu -> 0 with the quotient product on coker mu.
inline CrossedModuleExtension canonical_extension(const CrossedModule& x) {
    if (auto r = check_crossed_module(x); !r)
        throw InvalidInput("not a crossed module: " + r.describe());
    const auto rki = rank_kernel_image(x.mu);
    const QuotientReducer quotient(rki.image);
    const std::size_t dg = quotient.quotient_dim();
    Tensor3 g_product(dg, dg, dg);
    for (std::size_t a = 0; a < dg; ++a)
        for (std::size_t b = 0; b < dg; ++b) {
            const Vector p = quotient.reduce(
                x.n.multiply(quotient.lift(unit_vector(dg, a)), quotient.lift(unit_vector(dg, b))));
            for (std::size_t k = 0; k < dg; ++k)
                g_product(a, b, k) = p[k];
        }
    CrossedModuleExtension e{PreLieAlgebra(std::move(g_product)),
                             Representation::trivial(dg, rki.kernel.dim()),
                             x.m,
                             x.n,
                             rki.kernel.as_columns(),
                             x.mu,
                             quotient.reduction_matrix(),
                             x.action};
    e.v_rep = induced_representation(e);
    if (auto r = check_extension(e); !r)
        throw InternalAssertionFailed("canonical extension fails its check: " + r.describe());
    return e;
}

/// Deterministic sections from the pivot rule.
inline SectionPair default_sections(const CrossedModuleExtension& e) {
    return {right_inverse_on_image(e.pi), right_inverse_on_image(e.mu)};
}

/// rho + mu h and sigma + i k for random integer h, k in [-2, 2]; still sections
/// because pi mu = 0 and mu i = 0.
inline SectionPair random_sections(const CrossedModuleExtension& e, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    Matrix h(e.m.dim(), e.g.dim()), k(e.v_dim(), e.n.dim());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            h(r, c) = dist(rng);
    for (std::size_t r = 0; r < k.rows(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c)
            k(r, c) = dist(rng);
    const SectionPair base = default_sections(e);
    return {base.rho + e.mu * h, base.sigma + e.i * k};
}

namespace detail {

/// theta(x, y, z) with values in m, from the failure alpha of rho to be
/// multiplicative and beta = sigma alpha.
class ThetaBuilder {
public:
    ThetaBuilder(const CrossedModuleExtension& e, const SectionPair& s) : e_(e), s_(s) {
        const std::size_t dg = e.g.dim();
        beta_.resize(dg * dg);
        for (std::size_t a = 0; a < dg; ++a)
            for (std::size_t b = 0; b < dg; ++b) {
                const Vector alpha = e.n.multiply(s.rho.column(a), s.rho.column(b)) -
                                     s.rho * e.g.multiply_basis(a, b);
                if (!is_zero(e.pi * alpha))
                    throw InternalAssertionFailed("alpha does not lie in ker pi");
                Vector beta = s.sigma * alpha;
                if (e.mu * beta != alpha)
                    throw InternalAssertionFailed("sigma is not a right inverse of mu on alpha");
                beta_[a * dg + b] = std::move(beta);
            }
    }

    Vector beta(const Vector& x, const Vector& y) const {
        const std::size_t dg = e_.g.dim();
        Vector out = zero_vector(e_.m.dim());
        for (std::size_t a = 0; a < dg; ++a) {
            if (x[a] == 0)
                continue;
            for (std::size_t b = 0; b < dg; ++b)
                if (y[b] != 0)
                    axpy(out, x[a] * y[b], beta_[a * dg + b]);
        }
        return out;
    }

    Vector theta(std::size_t a, std::size_t b, std::size_t c) const {
        const std::size_t dg = e_.g.dim();
        const Vector x = unit_vector(dg, a), y = unit_vector(dg, b), z = unit_vector(dg, c);
        const Vector rx = s_.rho * x, ry = s_.rho * y, rz = s_.rho * z;
        const ActionData& act = e_.action;
        const PreLieAlgebra& g = e_.g;
        return act.act_left(rx, beta(y, z)) - act.act_left(ry, beta(x, z)) +
               act.act_right(beta(y, x), rz) - act.act_right(beta(x, y), rz) -
               beta(y, g.multiply(x, z)) + beta(x, g.multiply(y, z)) - beta(g.commutator(x, y), z);
    }

private:
    const CrossedModuleExtension& e_;
    const SectionPair& s_;
    std::vector<Vector> beta_;
};

inline void require_sections(const CrossedModuleExtension& e, const SectionPair& s) {
    require_shape(s.rho, e.n.dim(), e.g.dim(), "rho");
    require_shape(s.sigma, e.m.dim(), e.n.dim(), "sigma");
    if (e.pi * s.rho != Matrix::identity(e.g.dim()))
        throw InvalidInput("rho is not a section of pi");
    if (e.mu * s.sigma * e.mu != e.mu)
        throw InvalidInput("sigma is not a right inverse of mu on im mu");
}

} // namespace detail

/// theta with values in m, before pulling back along i. Throws
/// InternalAssertionFailed if it is not alternating in its first two slots.
inline Cochain extension_theta_in_m(const CrossedModuleExtension& e, const SectionPair& sections) {
    if (auto r = check_extension(e); !r)
        throw InvalidExtension(r.describe());
    detail::require_sections(e, sections);
    const detail::ThetaBuilder builder(e, sections);
    const std::size_t dg = e.g.dim();
    Cochain theta(3, dg, e.m.dim());
    for (std::size_t a = 0; a < dg; ++a)
        for (std::size_t b = a + 1; b < dg; ++b)
            for (std::size_t c = 0; c < dg; ++c) {
                const Vector t = builder.theta(a, b, c);
                if (builder.theta(b, a, c) != Scalar(-1) * t)
                    throw InternalAssertionFailed("theta is not alternating in its first two slots");
                theta.set({a, b}, c, t);
            }
    return theta;
}

/// The V-valued 3-cocycle pulled back from an m-valued theta. Checks
/// mu theta = 0 and d theta = 0, throwing InternalAssertionFailed otherwise.
inline Cochain pull_back_theta(const CrossedModuleExtension& e, const Cochain& theta_m) {
    const std::size_t dg = e.g.dim(), dm = e.m.dim();
    Cochain theta(3, dg, e.v_dim());
    for (std::size_t p = 0; p < theta_m.basis().size(); ++p) {
        const Vector t(theta_m.coordinates().begin() + static_cast<std::ptrdiff_t>(p * dm),
                       theta_m.coordinates().begin() + static_cast<std::ptrdiff_t>((p + 1) * dm));
        if (!is_zero(e.mu * t))
            throw InternalAssertionFailed("mu theta != 0");
        auto v = solve_particular(e.i, t);
        if (!v)
            throw InternalAssertionFailed("theta does not lie in i(V)");
        const auto el = theta_m.basis().element(p);
        theta.set({el.begin(), el.end() - 1}, el.back(), *v);
    }
    if (!coboundary(e.g, e.v_rep, theta).is_zero())
        throw InternalAssertionFailed("d theta != 0");
    return theta;
}

/// The V-valued 3-cocycle of an extension for the given sections.
inline Cochain extension_cocycle(const CrossedModuleExtension& e, const SectionPair& sections) {
    return pull_back_theta(e, extension_theta_in_m(e, sections));
}

struct ThreeCocycleResult {
    Cochain theta;
    Cochain theta_in_m; // i theta, before the pullback
    Vector class_coordinates; // against cohomology(g, V, 3).representatives
    std::size_t h3_dimension = 0;
    SectionPair sections_used;
};

inline ThreeCocycleResult t_map(const CrossedModuleExtension& e,
                                const std::optional<SectionPair>& sections = std::nullopt) {
    SectionPair s = sections ? *sections : default_sections(e);
    Cochain theta_m = extension_theta_in_m(e, s);
    Cochain theta = pull_back_theta(e, theta_m);
    const CohomologySpace h3 = cohomology(e.g, e.v_rep, 3);
    Vector coords = class_coordinates(e.g, e.v_rep, h3, theta);
    return {std::move(theta), std::move(theta_m), std::move(coords), h3.dimension, std::move(s)};
}

/// A morphism of extensions E -> E': r: m -> m', s: n -> n'.
struct EquivalenceWitness {
    CrossedModuleExtension source;
    CrossedModuleExtension target;
    Matrix r;
    Matrix s;
};

/// r o i = i', mu' o r = s o mu, pi' o s = pi, r and s homomorphisms
/// respecting the actions.
inline CheckResult check_equivalence_witness(const EquivalenceWitness& w) {
    const auto& e = w.source;
    const auto& f = w.target;
    detail::require_extension_shape(e);
    detail::require_extension_shape(f);
    require_shape(w.r, f.m.dim(), e.m.dim(), "r");
    require_shape(w.s, f.n.dim(), e.n.dim(), "s");
    if (!(e.g == f.g) || !(e.v_rep == f.v_rep))
        return detail::structural("extensions of the same g by the same V");
    if (auto c = check_morphism(e.m, f.m, w.r); !c)
        return detail::prefixed("r", c.violation());
    if (auto c = check_morphism(e.n, f.n, w.s); !c)
        return detail::prefixed("s", c.violation());
    if (w.r * e.i != f.i)
        return detail::structural("r o i = i'");
    if (f.mu * w.r != w.s * e.mu)
        return detail::structural("mu' o r = s o mu");
    if (f.pi * w.s != e.pi)
        return detail::structural("pi' o s = pi");
    for (std::size_t a = 0; a < e.m.dim(); ++a)
        for (std::size_t x = 0; x < e.n.dim(); ++x) {
            const Vector u = unit_vector(e.m.dim(), a), y = unit_vector(e.n.dim(), x);
            if (auto bad = detail::compare("r(u o_r x) = r(u) o_r s(x)", {a, x},
                                           w.r * e.action.act_right(u, y),
                                           f.action.act_right(w.r * u, w.s * y)))
                return *bad;
            if (auto bad = detail::compare("r(x o_l u) = s(x) o_l r(u)", {x, a},
                                           w.r * e.action.act_left(y, u),
                                           f.action.act_left(w.s * y, w.r * u)))
                return *bad;
        }
    return CheckResult::valid();
}

/// g (+) V with (x, u) o (y, v) = (x o y, x o_l v + u o_r y + omega(x, y)).
/// Coordinates: g first, then V.
struct AbelianExtension {
    PreLieAlgebra algebra;
    Matrix projection; // g x (g + V)
    Matrix inclusion;  // (g + V) x V
};

inline AbelianExtension abelian_extension_from_2cocycle(const PreLieAlgebra& g,
                                                        const Representation& rep,
                                                        const Cochain& omega) {
    if (omega.arity() != 2)
        throw ArityMismatch("abelian extensions need a 2-cochain");
    if (!coboundary(g, rep, omega).is_zero())
        throw NotACocycle("d omega != 0");
    const std::size_t dg = g.dim(), dv = rep.carrier_dim(), d = dg + dv;
    Tensor3 prod(d, d, d);
    for (std::size_t a = 0; a < dg; ++a) {
        for (std::size_t b = 0; b < dg; ++b) {
            const Vector xy = g.multiply_basis(a, b);
            const Vector w = omega.evaluate_basis({a, b});
            for (std::size_t k = 0; k < dg; ++k)
                prod(a, b, k) = xy[k];
            for (std::size_t k = 0; k < dv; ++k)
                prod(a, b, dg + k) = w[k];
        }
        for (std::size_t s = 0; s < dv; ++s)
            for (std::size_t k = 0; k < dv; ++k) {
                prod(a, dg + s, dg + k) = rep.left()(a, s, k);
                prod(dg + s, a, dg + k) = rep.right()(s, a, k);
            }
    }
    AbelianExtension out{PreLieAlgebra(std::move(prod)), Matrix(dg, d), Matrix(d, dv)};
    for (std::size_t k = 0; k < dg; ++k)
        out.projection(k, k) = 1;
    for (std::size_t k = 0; k < dv; ++k)
        out.inclusion(dg + k, k) = 1;
    if (auto r = check_prelie(out.algebra); !r)
        throw InternalAssertionFailed("abelian extension is not pre-Lie: " + r.describe());
    return out;
}

} // namespace prelie
