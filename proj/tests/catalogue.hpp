#pragma once

#include "wgalois/action.hpp"
#include "wgalois/algebras.hpp"
#include "wgalois/graded.hpp"
#include "wgalois/groupoid.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wgalois::testing {

struct NamedGroupoid {
    std::string name;
    Groupoid g;
};

/// trivial, C_2, C_3, P_2, P_3 and C_2 + P_2.
inline std::vector<NamedGroupoid> standard_groupoids() {
    return {{"trivial", trivial_groupoid()},
            {"C2", cyclic_group(2)},
            {"C3", cyclic_group(3)},
            {"P2", pair_groupoid(2)},
            {"P3", pair_groupoid(3)},
            {"C2+P2", disjoint_union(cyclic_group(2), pair_groupoid(2))}};
}

/// Grading with basis vector i in degree grade[i].
template <class F>
GradedAlgebra<F> monomial_grading(const FinAlgebra<F>& a, const Groupoid& g, const std::vector<size_t>& grade) {
    std::vector<std::vector<Vec<F>>> gens(g.num_morphisms());
    for (size_t i = 0; i < a.dim(); ++i)
        gens[grade[i]].push_back(unit_vector(a.field(), a.dim(), i));
    std::vector<Subspace<F>> comps;
    for (const auto& v : gens)
        comps.push_back(Subspace<F>::span(a.field(), a.dim(), v));
    return GradedAlgebra<F>(a, g, std::move(comps));
}

/// M_n(k) with E_ij in degree (i,j) of P_n.
template <class F>
GradedAlgebra<F> matrix_grading(const F& f, size_t n) {
    std::vector<size_t> grade;
    for (size_t i = 0; i < n * n; ++i)
        grade.push_back(i);
    return monomial_grading(matrix_algebra(f, n), pair_groupoid(n), grade);
}

/// k[x]/(x^2) with x odd over Z/2.
template <class F>
GradedAlgebra<F> dual_numbers_grading(const F& f) {
    return monomial_grading(truncated_polynomial(f, 2), cyclic_group(2), {0, 1});
}

/// kG with u_s in degree s.
template <class F>
GradedAlgebra<F> self_grading(const Groupoid& g, const F& f) {
    std::vector<size_t> grade;
    for (size_t s = 0; s < g.num_morphisms(); ++s)
        grade.push_back(s);
    return monomial_grading(groupoid_algebra(g, f).algebra(), g, grade);
}

/// G acting on k^{G_0} by moving coordinates: sigma.e_x = [x = s(sigma)] e_{t(sigma)}.
template <class F>
GModuleAlgebra<F> transport_action(const Groupoid& g, const F& f) {
    size_t n = g.num_objects();
    std::vector<Matrix<F>> act;
    for (size_t s = 0; s < g.num_morphisms(); ++s) {
        Matrix<F> m(f, n, n);
        m(g.tgt(s), g.src(s)) = f.one();
        act.push_back(std::move(m));
    }
    return GModuleAlgebra<F>(diagonal_algebra(f, n), g, std::move(act));
}

/// C_2 swapping the factors of k x k.
template <class F>
GModuleAlgebra<F> swap_action(const F& f) {
    Matrix<F> swap(f, 2, 2);
    swap(0, 1) = swap(1, 0) = f.one();
    return GModuleAlgebra<F>(diagonal_algebra(f, 2), cyclic_group(2), {Matrix<F>::identity(f, 2), swap});
}

/// Every element of the group g acting as the identity on A.
template <class F>
GModuleAlgebra<F> trivial_action(const FinAlgebra<F>& a, const Groupoid& g) {
    return GModuleAlgebra<F>(a, g, std::vector<Matrix<F>>(g.num_morphisms(), Matrix<F>::identity(a.field(), a.dim())));
}

}  // namespace wgalois::testing
