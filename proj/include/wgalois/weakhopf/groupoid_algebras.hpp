#pragma once

#include "wgalois/groupoid.hpp"
#include "wgalois/weakhopf/weak_hopf.hpp"

namespace wgalois {

namespace detail {
inline void require_valid(const Groupoid& g) {
    if (auto v = g.validate(); !v)
        throw PreconditionError("invalid groupoid: " + v.describe());
}

inline std::vector<std::string> morphism_labels(const Groupoid& g, const std::string& prefix) {
    std::vector<std::string> out;
    for (size_t s = 0; s < g.num_morphisms(); ++s)
        out.push_back(prefix + "[" + g.name_of(s) + "]");
    return out;
}
}  // namespace detail

/// kG: u_s u_t = u_{st} when composable, else 0; Delta(u_s) = u_s (x) u_s,
/// eps(u_s) = 1, S(u_s) = u_{s^-1}; unit sum of identity morphisms.
template <class F>
WeakHopfAlgebra<F> groupoid_algebra(const Groupoid& g, const F& field) {
    detail::require_valid(g);
    size_t n = g.num_morphisms();
    Vec<F> unit = zero_vector(field, n);
    for (size_t x : g.identities())
        unit[x] = field.one();
    auto alg = FinAlgebra<F>::from_rule(
        field, n,
        [&](size_t s, size_t t) {
            Terms<F> out;
            if (auto c = g.compose(s, t))
                out.emplace_back(*c, field.one());
            return out;
        },
        unit, detail::morphism_labels(g, "u"));
    Matrix<F> delta(field, n * n, n), eps(field, 1, n), s(field, n, n);
    for (size_t i = 0; i < n; ++i) {
        delta(i * n + i, i) = field.one();
        eps(0, i) = field.one();
        s(g.inverse(i), i) = field.one();
    }
    return WeakHopfAlgebra<F>(WeakBialgebra<F>(std::move(alg), std::move(delta), std::move(eps)), std::move(s));
}

/// Gk = (kG)*: v_s v_t = delta_{s,t} v_s, unit sum of all v_s,
/// Delta(v_s) = sum over composable t r = s of v_t (x) v_r, eps(v_s) = 1 iff s
/// is an identity, S(v_s) = v_{s^-1}.
template <class F>
WeakHopfAlgebra<F> dual_groupoid_algebra(const Groupoid& g, const F& field) {
    detail::require_valid(g);
    size_t n = g.num_morphisms();
    Vec<F> unit(n, field.one());
    auto alg = FinAlgebra<F>::from_rule(
        field, n,
        [&](size_t s, size_t t) {
            Terms<F> out;
            if (s == t)
                out.emplace_back(s, field.one());
            return out;
        },
        unit, detail::morphism_labels(g, "v"));
    Matrix<F> delta(field, n * n, n), eps(field, 1, n), s(field, n, n);
    for (size_t t = 0; t < n; ++t)
        for (size_t r = 0; r < n; ++r)
            if (auto c = g.compose(t, r))
                delta(t * n + r, *c) = field.one();
    for (size_t i = 0; i < n; ++i) {
        if (g.is_identity(i))
            eps(0, i) = field.one();
        s(g.inverse(i), i) = field.one();
    }
    return WeakHopfAlgebra<F>(WeakBialgebra<F>(std::move(alg), std::move(delta), std::move(eps)), std::move(s));
}

/// Checks that <v_s, u_t> = delta_{s,t} is a Hopf pairing between d and h:
/// comultiplication of one side is dual to multiplication of the other, units
/// pair with counits, antipodes are adjoint.
template <class F>
Verdict pairing_check(const WeakHopfAlgebra<F>& h, const WeakHopfAlgebra<F>& d) {
    size_t n = h.dim();
    if (d.dim() != n)
        return Verdict::fail("pairing dimensions", std::to_string(n) + " vs " + std::to_string(d.dim()));
    const auto& ha = h.algebra();
    const auto& da = d.algebra();
    for (size_t s = 0; s < n; ++s)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                if (!(d.delta()(a * n + b, s) == ha.mul_basis(a, b)[s]))
                    return Verdict::fail("<Delta(f), a (x) b> = <f, ab>",
                                         "f = " + d.label(s) + ", a = " + h.label(a) + ", b = " + h.label(b));
                if (!(h.delta()(a * n + b, s) == da.mul_basis(a, b)[s]))
                    return Verdict::fail("<fg, a> = <f (x) g, Delta(a)>",
                                         "f = " + d.label(a) + ", g = " + d.label(b) + ", a = " + h.label(s));
            }
    for (size_t s = 0; s < n; ++s) {
        if (!(d.counit_basis(s) == ha.unit()[s]))
            return Verdict::fail("<f, 1> = eps(f)", d.label(s));
        if (!(h.counit_basis(s) == da.unit()[s]))
            return Verdict::fail("<1, a> = eps(a)", h.label(s));
        for (size_t t = 0; t < n; ++t)
            if (!(d.antipode()(t, s) == h.antipode()(s, t)))
                return Verdict::fail("<S(f), a> = <f, S(a)>", "f = " + d.label(s) + ", a = " + h.label(t));
    }
    return Verdict::pass();
}

}  // namespace wgalois
