#pragma once

#include "wgalois/comod/hopf_module.hpp"
#include "wgalois/report.hpp"
#include "wgalois/weakhopf/groupoid_algebras.hpp"

namespace wgalois {

/// Projections onto the summands of V = (+)_s V_s, one d x d matrix per
/// summand. Throws PreconditionError if the sum is not direct or not all of V.
template <class F>
std::vector<Matrix<F>> summand_projections(const F& f, size_t d, const std::vector<Subspace<F>>& parts) {
    std::vector<Vec<F>> cols;
    std::vector<size_t> owner;
    for (size_t s = 0; s < parts.size(); ++s)
        for (const auto& v : parts[s].basis()) {
            cols.push_back(v);
            owner.push_back(s);
        }
    Matrix<F> basis = Matrix<F>::from_columns(f, cols, d);
    auto inv = cols.size() == d ? invert(basis) : std::nullopt;
    if (!inv)
        throw PreconditionError("components do not form a direct sum decomposition (total dim " +
                                std::to_string(cols.size()) + ", ambient " + std::to_string(d) + ")");
    std::vector<Matrix<F>> out(parts.size(), Matrix<F>(f, d, d));
    for (size_t k = 0; k < cols.size(); ++k)
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c)
                if (!is_zero(cols[k][r]) && !is_zero((*inv)(k, c)))
                    out[owner[k]](r, c) += cols[k][r] * (*inv)(k, c);
    return out;
}

/// Algebra graded by a groupoid: one component per morphism.
template <class F>
class GradedAlgebra {
public:
    GradedAlgebra(FinAlgebra<F> a, Groupoid g, std::vector<Subspace<F>> components)
        : a_(std::move(a)), g_(std::move(g)), comp_(std::move(components)) {
        if (comp_.size() != g_.num_morphisms())
            throw std::invalid_argument("graded algebra: one component per morphism");
        for (const auto& c : comp_)
            if (c.ambient_dim() != a_.dim())
                throw std::invalid_argument("graded algebra: component ambient mismatch");
    }

    const FinAlgebra<F>& algebra() const { return a_; }
    const Groupoid& groupoid() const { return g_; }
    const std::vector<Subspace<F>>& components() const { return comp_; }
    const Subspace<F>& component(size_t s) const { return comp_.at(s); }

    /// Direct sum, A_s A_t in A_{st} when composable and 0 otherwise, and
    /// 1 in the sum of the identity components.
    Verdict verify() const {
        if (auto v = a_.verify(); !v)
            return v;
        if (auto v = g_.validate(); !v)
            return v;
        try {
            summand_projections(a_.field(), a_.dim(), comp_);
        } catch (const PreconditionError& e) {
            return Verdict::fail("direct sum", e.what());
        }
        for (size_t s = 0; s < comp_.size(); ++s)
            for (size_t t = 0; t < comp_.size(); ++t) {
                auto st = g_.compose(s, t);
                for (const auto& x : comp_[s].basis())
                    for (const auto& y : comp_[t].basis()) {
                        Vec<F> xy = a_.mul(x, y);
                        bool ok = st ? comp_[*st].contains(xy) : is_zero_vector(xy);
                        if (!ok)
                            return Verdict::fail(st ? "A_s A_t in A_st" : "A_s A_t = 0 when not composable",
                                                 "(" + g_.name_of(s) + "," + g_.name_of(t) + ")");
                    }
            }
        Subspace<F> ids(a_.field(), a_.dim());
        for (size_t x : g_.identities())
            ids = ids.sum(comp_[x]);
        if (!ids.contains(a_.unit()))
            return Verdict::fail("unit in identity components", "1 has a component of non-identity degree");
        return Verdict::pass();
    }

    std::vector<Matrix<F>> projections() const { return summand_projections(a_.field(), a_.dim(), comp_); }

private:
    FinAlgebra<F> a_;
    Groupoid g_;
    std::vector<Subspace<F>> comp_;
};

/// rho(a) = sum_s a_s (x) u_s over kG.
template <class F>
ComoduleAlgebra<F> grading_to_comodule(const GradedAlgebra<F>& ga) {
    if (auto v = ga.verify(); !v)
        throw PreconditionError("grading fails verification: " + v.describe());
    const auto& a = ga.algebra();
    const auto& f = a.field();
    auto h = groupoid_algebra(ga.groupoid(), f);
    auto p = ga.projections();
    size_t n = a.dim(), nh = h.dim();
    Matrix<F> rho(f, n * nh, n);
    for (size_t s = 0; s < nh; ++s)
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (!is_zero(p[s](r, c)))
                    rho(r * nh + s, c) = p[s](r, c);
    ComoduleAlgebra<F> out(a, h.bialgebra(), rho);
    if (const auto& v = out.verify(); !v)
        throw InconsistencyError("graded algebra gave an invalid comodule algebra: " + v.describe());
    return out;
}

/// A_s = image of a -> (id (x) u_s^*) rho(a), for a kG-comodule algebra.
template <class F>
GradedAlgebra<F> comodule_to_grading(const ComoduleAlgebra<F>& ca, const Groupoid& g) {
    require_verified(ca);
    const auto& f = ca.field();
    if (!(ca.coalgebra().algebra() == groupoid_algebra(g, f).algebra()) ||
        !(ca.coalgebra().delta() == groupoid_algebra(g, f).delta()))
        throw PreconditionError("comodule_to_grading: coaction is not over kG for this groupoid");
    size_t n = ca.dim_a(), nh = ca.dim_h();
    std::vector<Subspace<F>> comps;
    for (size_t s = 0; s < nh; ++s) {
        Matrix<F> p(f, n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                p(r, c) = ca.coaction()(r * nh + s, c);
        comps.push_back(image(p));
    }
    GradedAlgebra<F> out(ca.algebra(), g, std::move(comps));
    if (auto v = out.verify(); !v)
        throw InconsistencyError("comodule algebra gave an invalid grading: " + v.describe());
    return out;
}

struct StronglyGraded {
    bool holds = true;
    std::string witness;
};

/// span(A_s A_t) = A_st for every composable pair.
template <class F>
StronglyGraded is_strongly_graded(const GradedAlgebra<F>& ga) {
    const auto& a = ga.algebra();
    const auto& g = ga.groupoid();
    for (size_t s = 0; s < g.num_morphisms(); ++s)
        for (size_t t = 0; t < g.num_morphisms(); ++t) {
            auto st = g.compose(s, t);
            if (!st)
                continue;
            Subspace<F> span(a.field(), a.dim());
            for (const auto& x : ga.component(s).basis())
                for (const auto& y : ga.component(t).basis())
                    span.insert(a.mul(x, y));
            size_t want = ga.component(*st).dim();
            if (span.dim() < want)
                return {false, "(" + g.name_of(s) + "," + g.name_of(t) + "): dim span(A_" + g.name_of(s) + "A_" +
                                   g.name_of(t) + ") = " + std::to_string(span.dim()) + " < " +
                                   std::to_string(want)};
        }
    return {};
}

/// Right A-module with a grading M_s A_t in M_st.
template <class F>
class GradedModule {
public:
    GradedModule(GradedAlgebra<F> ga, size_t d, std::vector<Matrix<F>> action, std::vector<Subspace<F>> components)
        : ga_(std::move(ga)), d_(d), action_(std::move(action)), comp_(std::move(components)) {
        if (comp_.size() != ga_.groupoid().num_morphisms() || action_.size() != ga_.algebra().dim())
            throw std::invalid_argument("graded module: shape mismatch");
    }

    static GradedModule regular(const GradedAlgebra<F>& ga) {
        std::vector<Matrix<F>> act;
        for (size_t a = 0; a < ga.algebra().dim(); ++a)
            act.push_back(ga.algebra().right_mult_basis(a));
        return GradedModule(ga, ga.algebra().dim(), std::move(act), ga.components());
    }

    Verdict verify() const {
        const auto& g = ga_.groupoid();
        try {
            summand_projections(ga_.algebra().field(), d_, comp_);
        } catch (const PreconditionError& e) {
            return Verdict::fail("direct sum", e.what());
        }
        for (size_t s = 0; s < comp_.size(); ++s)
            for (size_t t = 0; t < comp_.size(); ++t) {
                auto st = g.compose(s, t);
                for (const auto& m : comp_[s].basis())
                    for (const auto& y : ga_.component(t).basis()) {
                        Vec<F> my = zero_vector(ga_.algebra().field(), d_);
                        for (size_t a = 0; a < y.size(); ++a)
                            if (!is_zero(y[a]))
                                add_scaled(my, action_[a].apply(m), y[a]);
                        bool ok = st ? comp_[*st].contains(my) : is_zero_vector(my);
                        if (!ok)
                            return Verdict::fail("M_s A_t in M_st", "(" + g.name_of(s) + "," + g.name_of(t) + ")");
                    }
            }
        return Verdict::pass();
    }

    /// The relative Hopf module over grading_to_comodule(ga).
    RelativeHopfModule<F> to_hopf_module() const {
        if (auto v = verify(); !v)
            throw PreconditionError("graded module fails verification: " + v.describe());
        const auto& f = ga_.algebra().field();
        auto p = summand_projections(f, d_, comp_);
        size_t nh = comp_.size();
        Matrix<F> rho(f, d_ * nh, d_);
        for (size_t s = 0; s < nh; ++s)
            for (size_t r = 0; r < d_; ++r)
                for (size_t c = 0; c < d_; ++c)
                    if (!is_zero(p[s](r, c)))
                        rho(r * nh + s, c) = p[s](r, c);
        return RelativeHopfModule<F>(grading_to_comodule(ga_), d_, action_, rho);
    }

private:
    GradedAlgebra<F> ga_;
    size_t d_;
    std::vector<Matrix<F>> action_;
    std::vector<Subspace<F>> comp_;
};

/// nu_N(n) = sum_x n1_x (x)_T 1_x, compared against n (x)_T 1 from the
/// general construction.
template <class F>
AdjunctionMap<F> graded_adjunction_unit(const GradedAlgebra<F>& ga, const SubringModule<F>& n) {
    auto ca = grading_to_comodule(ga);
    auto t = coinvariants(ca);
    auto general = adjunction_unit(ca, t, n);
    auto ind = induce(ca, t, n);
    auto co = ind.module.coinvariants();
    const auto& a = ga.algebra();
    const auto& f = a.field();
    auto p = ga.projections();
    Matrix<F> nu(f, co.dim(), n.dim);
    for (size_t i = 0; i < n.dim; ++i) {
        Vec<F> lift = zero_vector(f, n.dim * a.dim());
        for (size_t x : ga.groupoid().identities()) {
            Vec<F> one_x = p[x].apply(a.unit());
            Vec<F> tc = t.coordinates_or_throw(one_x, "1_x outside T");
            Vec<F> n_x = zero_vector(f, n.dim);
            for (size_t k = 0; k < tc.size(); ++k)
                if (!is_zero(tc[k]))
                    add_scaled(n_x, n.action[k].column(i), tc[k]);
            add_scaled(lift, tensor_vectors(f, n_x, one_x), f.one());
        }
        nu.set_column(i, co.coordinates_or_throw(ind.tensor.project(lift), "nu(n) is not coinvariant"));
    }
    if (!(nu == general.map))
        throw InconsistencyError("graded and general adjunction units differ");
    return general;
}

struct Theorem35 {
    bool strongly_graded = false;
    bool can_bijective = false;
    bool can_surjective = false;
    bool sampled_equivalence = false;
    std::vector<Check> checks;
};

/// Strongly graded, can bijective and can surjective, with B = T; the
/// category equivalence is sampled on zeta_A, zeta_C, nu_T and nu_A.
template <class F>
Theorem35 theorem35_harness(const GradedAlgebra<F>& ga) {
    auto ca = grading_to_comodule(ga);
    ComoduleCoring<F> cc(ca);
    auto t = coinvariants(ca);
    auto can = canonical_map(cc, t);
    auto sg = is_strongly_graded(ga);
    Theorem35 out;
    out.strongly_graded = sg.holds;
    out.can_bijective = can.bijective;
    out.can_surjective = can.surjective;
    const auto& a = ga.algebra();
    std::vector<std::pair<std::string, bool>> samples = {
        {"zeta_A", adjunction_counit(RelativeHopfModule<F>::regular(ca), t).bijective},
        {"zeta_C", adjunction_counit(coring_as_module(cc), t).bijective},
        {"nu_T", graded_adjunction_unit(ga, subring_regular(a, t)).bijective},
        {"nu_A", graded_adjunction_unit(ga, restricted_algebra(a, t)).bijective}};
    bool all = true;
    std::string desc;
    for (const auto& [name, ok] : samples) {
        all = all && ok;
        desc += (desc.empty() ? "" : ", ") + name + (ok ? " bijective" : " not bijective");
    }
    out.sampled_equivalence = all;
    out.checks.push_back(check_of("strongly graded", "A_s A_t = A_st if t(t) = s(s)", sg.holds, sg.witness));
    out.checks.push_back({"module category equivalence", "M -> M^co (x)_T A, N -> (N (x)_T A)^co",
                          Outcome::sampled, desc});
    out.checks.push_back(check_of("can bijective", "can(a (x)_T b) = ab_[0] (x) b_[1]", can.bijective, can.witness));
    out.checks.push_back(check_of("can surjective", "can(a (x)_T b) = ab_[0] (x) b_[1]", can.surjective, can.witness));
    if (sg.holds != can.bijective || sg.holds != can.surjective)
        throw InconsistencyError("strongly graded / can bijective / can surjective disagree: " +
                                 std::to_string(sg.holds) + std::to_string(can.bijective) +
                                 std::to_string(can.surjective));
    if (sg.holds && !all)
        throw InconsistencyError("strongly graded but a sampled adjunction map is not bijective: " + desc);
    return out;
}

}  // namespace wgalois
