#pragma once

#include "wgalois/comod/coring.hpp"

namespace wgalois {

/// A (x)_B A as a quotient of A (x)_k A, for B given by a basis.
template <class F>
QuotientSpace<F> tensor_over_subring(const FinAlgebra<F>& a, const Subspace<F>& b) {
    std::vector<Matrix<F>> right, left;
    for (const auto& v : b.basis()) {
        right.push_back(a.right_mult(v));
        left.push_back(a.left_mult(v));
    }
    return balanced_tensor(a.field(), a.dim(), a.dim(), right, left);
}

/// Unital subalgebra of A contained in T; throws PreconditionError otherwise.
template <class F>
void require_subring_of(const FinAlgebra<F>& a, const Subspace<F>& b, const Subspace<F>& t) {
    if (auto v = a.check_unital_subalgebra(b); !v)
        throw PreconditionError("subring: " + v.describe());
    if (!b.is_subspace_of(t))
        throw PreconditionError("subring: not contained in the coinvariants");
}

template <class F>
struct CanonicalMap {
    QuotientSpace<F> tensor;  // A (x)_B A
    Matrix<F> lifted;         // A (x)_k A -> A (x) H
    Matrix<F> induced;        // A (x)_B A -> C, carrier coordinates
    size_t image_dim = 0;
    bool surjective = false;
    bool bijective = false;
    std::string witness;
};

/// can(a (x)_B b) = ab_[0] (x) b_[1] into the coring C = Im(g).
template <class F>
CanonicalMap<F> canonical_map(const ComoduleCoring<F>& cc, const Subspace<F>& b) {
    const auto& ca = cc.comodule_algebra();
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    require_subring_of(a, b, coinvariants(ca));
    size_t na = a.dim(), nh = ca.dim_h();
    auto q = tensor_over_subring(a, b);
    Matrix<F> lifted(f, na * nh, na * na);
    for (size_t i = 0; i < na; ++i) {
        Vec<F> ai1 = ca.with_unit(a.basis(i));
        for (size_t j = 0; j < na; ++j)
            lifted.set_column(i * na + j, ca.mul_ah(ai1, ca.coact_basis(j)));
    }
    for (const auto& r : q.relations().basis())
        if (!is_zero_vector(lifted.apply(r)))
            throw InconsistencyError("canonical map does not descend to A (x)_B A");
    Matrix<F> through = lifted * q.section();
    Matrix<F> induced(f, cc.dim(), q.dim());
    for (size_t c = 0; c < q.dim(); ++c)
        induced.set_column(c, cc.coords(through.column(c)));
    CanonicalMap<F> out{q, lifted, induced};
    out.image_dim = rank(induced);
    out.surjective = out.image_dim == cc.dim();
    out.bijective = out.surjective && q.dim() == cc.dim();
    if (!out.surjective)
        out.witness = "image dim " + std::to_string(out.image_dim) + " < " + std::to_string(cc.dim());
    else if (!out.bijective)
        out.witness = "dim A (x)_B A = " + std::to_string(q.dim()) + " > dim C = " + std::to_string(cc.dim());
    return out;
}

/// can: A (x)_B A -> C respects counits and comultiplications, with the
/// source carrying the canonical coring structure.
template <class F>
Verdict check_can_coring_morphism(const CanonicalCoring<F>& d, const ComoduleCoring<F>& cc,
                                  const CanonicalMap<F>& can) {
    const auto& f = cc.comodule_algebra().field();
    size_t md = d.coring().dim(), m = cc.dim();
    std::vector<Vec<F>> image;
    for (size_t i = 0; i < md; ++i)
        image.push_back(cc.coords(can.lifted.apply(d.tensor().section().column(i))));
    for (size_t i = 0; i < md; ++i) {
        if (cc.coring().counit().apply(image[i]) != d.coring().counit().column(i))
            return Verdict::fail("can preserves counits", "d" + std::to_string(i));
        Vec<F> pushed = zero_vector(f, m * m);
        for (const auto& [idx, c] : nonzeros<F>(d.coring().delta().column(i)))
            add_scaled(pushed, tensor_vectors(f, image[idx / md], image[idx % md]), c);
        if (!cc.coring().same_in_square(pushed, cc.coring().comul(image[i])))
            return Verdict::fail("can preserves comultiplication", "d" + std::to_string(i));
    }
    return Verdict::pass();
}

/// For A = H with rho = Delta and B = H^L: the map
/// a (x) h -> a1_(1)S(h_(1)1_(2)) (x)_{H^L} h_(2)1_(3), restricted to C, is the
/// inverse of the induced canonical map.
template <class F>
Verdict verify_can_inverse_formula(const WeakHopfAlgebra<F>& h) {
    if (const auto& v = h.verify(); !v)
        throw PreconditionError("not a weak Hopf algebra: " + v.describe());
    const auto& f = h.field();
    size_t n = h.dim();
    ComoduleCoring<F> cc(regular_comodule_algebra<F>(h.bialgebra()));
    auto can = canonical_map(cc, h.target_left());
    if (!can.bijective)
        throw InconsistencyError("can is not bijective for H over H^L: " + can.witness);
    auto inv = invert(can.induced);
    if (!inv)
        throw InconsistencyError("induced canonical map is singular");
    const auto& alg = h.algebra();
    Vec<F> d2 = h.comul2(alg.unit());
    Matrix<F> phi(f, can.tensor.dim(), n * n);
    for (size_t hh = 0; hh < n; ++hh) {
        // W = (1 (x) Delta(h)) Delta^2(1)
        Vec<F> w = tensor_multiply<F>(f, {&alg.table(), &alg.table(), &alg.table()},
                                      tensor_vectors(f, alg.unit(), h.comul_basis(hh)), d2);
        auto wt = nonzeros<F>(w);
        for (size_t a = 0; a < n; ++a) {
            Vec<F> lift = zero_vector(f, n * n);
            for (const auto& [idx, c] : wt) {
                size_t p = idx / (n * n), qq = (idx / n) % n, r = idx % n;
                Vec<F> left = alg.mul(alg.mul_basis(a, p), h.antipode().column(qq));
                for (const auto& [k, v] : nonzeros<F>(left))
                    lift[k * n + r] += c * v;
            }
            phi.set_column(a * n + hh, can.tensor.project(lift));
        }
    }
    if (!(phi * cc.projection() == phi))
        return Verdict::fail("inverse formula", "formula does not factor through g");
    Matrix<F> restricted = phi * cc.carrier().inclusion();
    if (!(restricted == *inv))
        return Verdict::fail("inverse formula", "formula differs from the inverse of can");
    return Verdict::pass();
}

}  // namespace wgalois
