#pragma once

// Conversions into and out of pre-Lie crossed modules: to Lie crossed modules
// through commutators, and from Rota-Baxter Lie and dendriform crossed modules.

#include <string>
#include <utility>

#include "algebra.hpp"
#include "crossed_module.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace prelie {

/// mu: m -> n of Lie algebras with n acting on m; action(i, s, .) = e_i |> e_s.
struct LieCrossedModule {
    LieAlgebra m;
    LieAlgebra n;
    Matrix mu;
    Tensor3 action;

    Vector act(const Vector& x, const Vector& u) const { return action.apply(x, u); }

    friend bool operator==(const LieCrossedModule&, const LieCrossedModule&) = default;
};

namespace detail {

inline void require_lie_xmod_shape(const LieAlgebra& m, const LieAlgebra& n, const Matrix& mu,
                                   const Tensor3& action) {
    require_shape(mu, n.dim(), m.dim(), "mu");
    require_shape(action, n.dim(), m.dim(), m.dim(), "action");
}

inline CheckResult lie_xmod_violation(const LieAlgebra& m, const LieAlgebra& n, const Matrix& mu,
                                      const Tensor3& action) {
    require_lie_xmod_shape(m, n, mu, action);
    if (auto r = check_lie(m); !r)
        return prefixed("m", r.violation());
    if (auto r = check_lie(n); !r)
        return prefixed("n", r.violation());
    if (auto r = check_lie_morphism(m, n, mu); !r)
        return prefixed("mu", r.violation());
    const std::size_t dm = m.dim(), dn = n.dim();
    auto act = [&](const Vector& x, const Vector& u) { return action.apply(x, u); };
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            for (std::size_t s = 0; s < dm; ++s) {
                const Vector x = unit_vector(dn, i), y = unit_vector(dn, j), u = unit_vector(dm, s);
                if (auto bad = compare("[x,y] |> u = x |> (y |> u) - y |> (x |> u)", {i, j, s},
                                       act(n.bracket(x, y), u),
                                       act(x, act(y, u)) - act(y, act(x, u))))
                    return *bad;
            }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t t = 0; t < dm; ++t) {
                const Vector x = unit_vector(dn, i), u = unit_vector(dm, s), v = unit_vector(dm, t);
                if (auto bad = compare("x |> [u,v] = [x |> u, v] + [u, x |> v]", {i, s, t},
                                       act(x, m.bracket(u, v)),
                                       m.bracket(act(x, u), v) + m.bracket(u, act(x, v))))
                    return *bad;
            }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s) {
            const Vector x = unit_vector(dn, i), u = unit_vector(dm, s);
            if (auto bad = compare("mu(x |> u) = [x, mu(u)]", {i, s}, mu * act(x, u),
                                   n.bracket(x, mu * u)))
                return *bad;
        }
    for (std::size_t s = 0; s < dm; ++s)
        for (std::size_t t = 0; t < dm; ++t) {
            const Vector u = unit_vector(dm, s), v = unit_vector(dm, t);
            if (auto bad = compare("mu(u) |> v = [u, v]", {s, t}, act(mu * u, v), m.bracket(u, v)))
                return *bad;
        }
    return CheckResult::valid();
}

} // namespace detail

/// Lie algebras, mu a bracket homomorphism, |> an action by derivations,
/// mu(x |> u) = [x, mu u] and the Peiffer identity mu(u) |> v = [u, v].
inline CheckResult check_lie_crossed_module(const LieCrossedModule& x) {
    return detail::lie_xmod_violation(x.m, x.n, x.mu, x.action);
}

/// Commutator Lie algebras, the same mu, and x |> u = x o_l u - u o_r x.
inline LieCrossedModule prelie_to_lie_xmod(const CrossedModule& x) {
    if (auto r = check_crossed_module(x); !r)
        throw InvalidInput("not a pre-Lie crossed module: " + r.describe());
    const std::size_t dn = x.n.dim(), dm = x.m.dim();
    Tensor3 action(dn, dm, dm);
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t k = 0; k < dm; ++k)
                action(i, s, k) = x.action.left()(i, s, k) - x.action.right()(s, i, k);
    LieCrossedModule out{subadjacent_lie(x.m), subadjacent_lie(x.n), x.mu, std::move(action)};
    if (auto r = check_lie_crossed_module(out); !r)
        throw OutputCheckFailed(r.describe());
    return out;
}

/// A Lie crossed module with weight-zero Rota-Baxter operators on m and n;
/// rho(i, s, .) = rho(e_i) e_s.
struct RotaBaxterLieCrossedModule {
    LieAlgebra m;
    LieAlgebra n;
    Matrix t_m;
    Matrix t_n;
    Matrix mu;
    Tensor3 rho;

    friend bool operator==(const RotaBaxterLieCrossedModule&,
                           const RotaBaxterLieCrossedModule&) = default;
};

/// [Tx, Ty] = T([Tx, y] + [x, Ty]) on basis pairs.
inline CheckResult check_rota_baxter(const LieAlgebra& l, const Matrix& t) {
    require_shape(t, l.dim(), l.dim(), "Rota-Baxter operator");
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) {
            const Vector x = unit_vector(l.dim(), i), y = unit_vector(l.dim(), j);
            const Vector tx = t * x, ty = t * y;
            if (auto bad = detail::compare("Rota-Baxter identity", {i, j}, l.bracket(tx, ty),
                                           t * (l.bracket(tx, y) + l.bracket(x, ty))))
                return *bad;
        }
    return CheckResult::valid();
}

/// Lie crossed module axioms for (mu, rho), Rota-Baxter identities, mu T_m = T_n mu.
inline CheckResult check_rblie_xmod(const RotaBaxterLieCrossedModule& x) {
    require_shape(x.t_m, x.m.dim(), x.m.dim(), "T_m");
    require_shape(x.t_n, x.n.dim(), x.n.dim(), "T_n");
    if (auto r = detail::lie_xmod_violation(x.m, x.n, x.mu, x.rho); !r)
        return r;
    if (auto r = check_rota_baxter(x.m, x.t_m); !r)
        return detail::prefixed("T_m", r.violation());
    if (auto r = check_rota_baxter(x.n, x.t_n); !r)
        return detail::prefixed("T_n", r.violation());
    if (x.mu * x.t_m != x.t_n * x.mu)
        return detail::structural("mu T_m = T_n mu");
    return CheckResult::valid();
}

/// x o y = [T x, y], u o v = [T u, v], x o_l u = rho(T x) u, u o_r x = -rho(x)(T u).
inline CrossedModule rblie_to_prelie_xmod(const RotaBaxterLieCrossedModule& x) {
    if (auto r = check_rblie_xmod(x); !r)
        throw InvalidInput("not a Rota-Baxter Lie crossed module: " + r.describe());
    const std::size_t dm = x.m.dim(), dn = x.n.dim();
    auto product = [](const LieAlgebra& l, const Matrix& t) {
        const std::size_t d = l.dim();
        Tensor3 p(d, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Vector v = l.bracket(t.column(i), unit_vector(d, j));
                for (std::size_t k = 0; k < d; ++k)
                    p(i, j, k) = v[k];
            }
        return p;
    };
    Tensor3 left(dn, dm, dm), right(dm, dn, dm);
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s) {
            const Vector e = unit_vector(dn, i), u = unit_vector(dm, s);
            const Vector l = x.rho.apply(x.t_n * e, u);
            const Vector r = x.rho.apply(e, x.t_m * u);
            for (std::size_t k = 0; k < dm; ++k) {
                left(i, s, k) = l[k];
                right(s, i, k) = -r[k];
            }
        }
    CrossedModule out{PreLieAlgebra(product(x.m, x.t_m)), PreLieAlgebra(product(x.n, x.t_n)), x.mu,
                      ActionData(std::move(left), std::move(right))};
    if (auto r = check_crossed_module(out); !r)
        throw OutputCheckFailed(r.describe());
    return out;
}

/// Two products succ (x > y) and prec (x < y).
struct DendriformAlgebra {
    Tensor3 succ;
    Tensor3 prec;

    std::size_t dim() const { return succ.dim(0); }

    friend bool operator==(const DendriformAlgebra&, const DendriformAlgebra&) = default;
};

/// (x < y) < z = x < (y < z + y > z), (x > y) < z = x > (y < z),
/// (x < y + x > y) > z = x > (y > z).
inline CheckResult check_dendriform(const DendriformAlgebra& a) {
    const std::size_t d = a.dim();
    require_shape(a.succ, d, d, d, "succ");
    require_shape(a.prec, d, d, d, "prec");
    auto gt = [&](const Vector& x, const Vector& y) { return a.succ.apply(x, y); };
    auto lt = [&](const Vector& x, const Vector& y) { return a.prec.apply(x, y); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, k);
                if (auto bad = detail::compare("(x < y) < z = x < (y < z + y > z)", {i, j, k},
                                               lt(lt(x, y), z), lt(x, lt(y, z) + gt(y, z))))
                    return *bad;
                if (auto bad = detail::compare("(x > y) < z = x > (y < z)", {i, j, k},
                                               lt(gt(x, y), z), gt(x, lt(y, z))))
                    return *bad;
                if (auto bad = detail::compare("(x < y + x > y) > z = x > (y > z)", {i, j, k},
                                               gt(lt(x, y) + gt(x, y), z), gt(x, gt(y, z))))
                    return *bad;
            }
    return CheckResult::valid();
}

/// mu: m -> n of dendriform algebras with mixed products
///   left_succ(i, s, .) = e_i > u_s,  left_prec(i, s, .) = e_i < u_s,
///   right_succ(s, i, .) = u_s > e_i, right_prec(s, i, .) = u_s < e_i.
struct DendriformCrossedModule {
    DendriformAlgebra m;
    DendriformAlgebra n;
    Matrix mu;
    Tensor3 left_succ;
    Tensor3 left_prec;
    Tensor3 right_succ;
    Tensor3 right_prec;

    friend bool operator==(const DendriformCrossedModule&, const DendriformCrossedModule&) = default;
};

/// Dendriform axioms on m and n and mu preserving both products. The action
/// axioms are not checked here; the converted output is verified instead.
inline CheckResult check_dendriform_xmod(const DendriformCrossedModule& x) {
    const std::size_t dm = x.m.dim(), dn = x.n.dim();
    require_shape(x.mu, dn, dm, "mu");
    require_shape(x.left_succ, dn, dm, dm, "left succ action");
    require_shape(x.left_prec, dn, dm, dm, "left prec action");
    require_shape(x.right_succ, dm, dn, dm, "right succ action");
    require_shape(x.right_prec, dm, dn, dm, "right prec action");
    if (auto r = check_dendriform(x.m); !r)
        return detail::prefixed("m", r.violation());
    if (auto r = check_dendriform(x.n); !r)
        return detail::prefixed("n", r.violation());
    for (std::size_t s = 0; s < dm; ++s)
        for (std::size_t t = 0; t < dm; ++t) {
            const Vector u = unit_vector(dm, s), v = unit_vector(dm, t);
            if (auto bad = detail::compare("mu(u > v) = mu(u) > mu(v)", {s, t},
                                           x.mu * x.m.succ.apply(u, v),
                                           x.n.succ.apply(x.mu * u, x.mu * v)))
                return *bad;
            if (auto bad = detail::compare("mu(u < v) = mu(u) < mu(v)", {s, t},
                                           x.mu * x.m.prec.apply(u, v),
                                           x.n.prec.apply(x.mu * u, x.mu * v)))
                return *bad;
        }
    return CheckResult::valid();
}

/// x o y = x > y - y < x on m and n, x o_l u = x > u - u < x, u o_r x = u > x - x < u.
inline CrossedModule dendriform_to_prelie_xmod(const DendriformCrossedModule& x) {
    if (auto r = check_dendriform_xmod(x); !r)
        throw InvalidInput("not a dendriform crossed module: " + r.describe());
    const std::size_t dm = x.m.dim(), dn = x.n.dim();
    auto product = [](const DendriformAlgebra& a) {
        const std::size_t d = a.dim();
        Tensor3 p(d, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    p(i, j, k) = a.succ(i, j, k) - a.prec(j, i, k);
        return p;
    };
    Tensor3 left(dn, dm, dm), right(dm, dn, dm);
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t k = 0; k < dm; ++k) {
                left(i, s, k) = x.left_succ(i, s, k) - x.right_prec(s, i, k);
                right(s, i, k) = x.right_succ(s, i, k) - x.left_prec(i, s, k);
            }
    CrossedModule out{PreLieAlgebra(product(x.m)), PreLieAlgebra(product(x.n)), x.mu,
                      ActionData(std::move(left), std::move(right))};
    if (auto r = check_crossed_module(out); !r)
        throw OutputCheckFailed(r.describe());
    return out;
}

} // namespace prelie
