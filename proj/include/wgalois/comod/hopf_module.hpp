#pragma once

#include "wgalois/comod/canonical.hpp"

namespace wgalois {

/// Right A-module M (one d x d matrix per A-basis element, m.a = R_a m) with
/// a right H-coaction rho_M: M -> M (x) H such that rho(ma) = rho(m)rho(a).
template <class F>
class RelativeHopfModule {
public:
    RelativeHopfModule(ComoduleAlgebra<F> ca, size_t d, std::vector<Matrix<F>> action, Matrix<F> coaction)
        : ca_(std::move(ca)), d_(d), action_(std::move(action)), rho_(std::move(coaction)) {
        if (action_.size() != ca_.dim_a())
            throw std::invalid_argument("relative Hopf module: one action matrix per A-basis element");
        for (const auto& m : action_)
            if (m.rows() != d_ || m.cols() != d_)
                throw std::invalid_argument("relative Hopf module: action matrices must be d x d");
        if (rho_.rows() != d_ * ca_.dim_h() || rho_.cols() != d_)
            throw std::invalid_argument("relative Hopf module: coaction must be (d * dim H) x d");
    }

    /// A itself, acting by right multiplication, with rho.
    static RelativeHopfModule regular(const ComoduleAlgebra<F>& ca) {
        std::vector<Matrix<F>> act;
        for (size_t a = 0; a < ca.dim_a(); ++a)
            act.push_back(ca.algebra().right_mult_basis(a));
        return RelativeHopfModule(ca, ca.dim_a(), std::move(act), ca.coaction());
    }

    /// Direct sum of copies of modules over the same comodule algebra.
    static RelativeHopfModule direct_sum(const std::vector<RelativeHopfModule>& parts) {
        if (parts.empty())
            throw std::invalid_argument("direct_sum: no summands");
        const auto& ca = parts[0].ca_;
        const auto& f = ca.field();
        size_t nh = ca.dim_h(), d = 0;
        for (const auto& p : parts)
            d += p.d_;
        std::vector<Matrix<F>> act(ca.dim_a(), Matrix<F>(f, d, d));
        Matrix<F> rho(f, d * nh, d);
        size_t off = 0;
        for (const auto& p : parts) {
            for (size_t a = 0; a < ca.dim_a(); ++a)
                for (size_t i = 0; i < p.d_; ++i)
                    for (size_t j = 0; j < p.d_; ++j)
                        act[a](off + i, off + j) = p.action_[a](i, j);
            for (size_t j = 0; j < p.d_; ++j)
                for (size_t i = 0; i < p.d_; ++i)
                    for (size_t h = 0; h < nh; ++h)
                        rho((off + i) * nh + h, off + j) = p.rho_(i * nh + h, j);
            off += p.d_;
        }
        return RelativeHopfModule(ca, d, std::move(act), std::move(rho));
    }

    const ComoduleAlgebra<F>& comodule_algebra() const { return ca_; }
    const F& field() const { return ca_.field(); }
    size_t dim() const { return d_; }
    const Matrix<F>& action(size_t a) const { return action_.at(a); }
    const Matrix<F>& coaction() const { return rho_; }

    Matrix<F> action_by(const Vec<F>& a) const {
        Matrix<F> out(field(), d_, d_);
        for (size_t i = 0; i < a.size(); ++i)
            if (!is_zero(a[i]))
                out = out + scaled(action_[i], a[i]);
        return out;
    }

    /// x in M (x) H times y in A (x) H
    Vec<F> act_mh(const Vec<F>& x, const Vec<F>& y) const {
        size_t nh = ca_.dim_h();
        const auto& ht = ca_.coalgebra().algebra().table();
        Vec<F> out = zero_vector(field(), x.size());
        for (const auto& [ix, c] : nonzeros<F>(x)) {
            size_t i = ix / nh, k = ix % nh;
            for (const auto& [iy, e] : nonzeros<F>(y)) {
                size_t b = iy / nh, l = iy % nh;
                const auto& hk = ht.at(k, l);
                if (hk.empty())
                    continue;
                for (const auto& [j, u] : nonzeros<F>(action_[b].column(i)))
                    for (const auto& [kk, v] : hk)
                        out[j * nh + kk] += c * e * u * v;
            }
        }
        return out;
    }

    /// Module laws, comodule laws and rho(ma) = m_[0]a_[0] (x) m_[1]a_[1].
    Verdict verify() const {
        const auto& f = field();
        const auto& a = ca_.algebra();
        size_t na = a.dim(), nh = ca_.dim_h();
        if (!(action_by(a.unit()) == Matrix<F>::identity(f, d_)))
            return Verdict::fail("module unit", "1 does not act as the identity");
        for (size_t x = 0; x < na; ++x)
            for (size_t y = 0; y < na; ++y)
                if (!(action_[y] * action_[x] == action_by(a.mul_basis(x, y))))
                    return Verdict::fail("module associativity", "a = " + a.label(x) + ", b = " + a.label(y));
        const auto& h = ca_.coalgebra();
        for (size_t i = 0; i < d_; ++i) {
            Vec<F> r = rho_.column(i);
            if (apply_to_slot(rho_, r, 1, nh) != apply_to_slot(h.delta(), r, d_, 1))
                return Verdict::fail("module coassociativity", "m" + std::to_string(i));
            if (apply_to_slot(h.counit_matrix(), r, d_, 1) != unit_vector(f, d_, i))
                return Verdict::fail("module counit", "m" + std::to_string(i));
        }
        for (size_t i = 0; i < d_; ++i)
            for (size_t x = 0; x < na; ++x)
                if (rho_.apply(action_[x].column(i)) != act_mh(rho_.column(i), ca_.coact_basis(x)))
                    return Verdict::fail("rho(ma) = m_[0]a_[0] (x) m_[1]a_[1]",
                                         "m" + std::to_string(i) + ", a = " + a.label(x));
        return Verdict::pass();
    }

    /// {m : rho(m) = m1_[0] (x) 1_[1]}
    Subspace<F> coinvariants() const {
        Vec<F> r1 = ca_.rho_one();
        Matrix<F> m(field(), d_ * ca_.dim_h(), d_);
        for (size_t i = 0; i < d_; ++i) {
            Vec<F> mi1 = tensor_vectors(field(), unit_vector(field(), d_, i), ca_.coalgebra().algebra().unit());
            m.set_column(i, difference(rho_.column(i), act_mh(mi1, r1)));
        }
        return kernel(m);
    }

private:
    static Matrix<F> scaled(const Matrix<F>& m, const typename F::Scalar& s) {
        Matrix<F> out = m;
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                out(r, c) *= s;
        return out;
    }

    ComoduleAlgebra<F> ca_;
    size_t d_;
    std::vector<Matrix<F>> action_;
    Matrix<F> rho_;
};

/// A right C-comodule for C = Im(g): rho~ stored as a lift into M (x)_k C.
template <class F>
struct CoringComodule {
    size_t dim;
    Matrix<F> coaction;  // (d * m) x d
};

/// rho~(m) = m_[0] (x)_A 1_[0] (x) m_[1]1_[1], lifted as m_[0] (x) g(1 (x) m_[1]).
template <class F>
CoringComodule<F> to_coring_comodule(const RelativeHopfModule<F>& m, const ComoduleCoring<F>& cc) {
    if (auto v = m.verify(); !v)
        throw PreconditionError("relative Hopf module fails verification: " + v.describe());
    const auto& f = m.field();
    const auto& ca = m.comodule_algebra();
    size_t d = m.dim(), nh = ca.dim_h(), mc = cc.dim();
    std::vector<Vec<F>> gh;
    for (size_t h = 0; h < nh; ++h)
        gh.push_back(cc.coords(cc.projection().apply(tensor_vectors(f, ca.algebra().unit(), unit_vector(f, nh, h)))));
    Matrix<F> out(f, d * mc, d);
    for (size_t i = 0; i < d; ++i) {
        Vec<F> col = zero_vector(f, d * mc);
        for (const auto& [idx, c] : nonzeros<F>(m.coaction().column(i)))
            for (const auto& [k, v] : nonzeros<F>(gh[idx % nh]))
                col[(idx / nh) * mc + k] += c * v;
        out.set_column(i, col);
    }
    return {d, out};
}

/// m (x)_A y for y in A (x) H^s realized in M (x) H^s: sum of (m.e_a) (x) e_K.
template <class F>
Vec<F> module_join(const RelativeHopfModule<F>& m, size_t i, const Vec<F>& y) {
    const auto& f = m.field();
    size_t na = m.comodule_algebra().dim_a();
    size_t hs = y.size() / na;
    Vec<F> out = zero_vector(f, m.dim() * hs);
    for (const auto& [idx, c] : nonzeros<F>(y))
        for (const auto& [j, v] : nonzeros<F>(m.action(idx / hs).column(i)))
            out[j * hs + idx % hs] += c * v;
    return out;
}

/// Realization of the lift in M (x)_k C inside M (x) H; this is the map back
/// to a relative Hopf module coaction.
template <class F>
Vec<F> realize_module_tensor(const RelativeHopfModule<F>& m, const ComoduleCoring<F>& cc, const Vec<F>& t) {
    size_t mc = cc.dim();
    Vec<F> out = zero_vector(m.field(), m.dim() * m.comodule_algebra().dim_h());
    for (const auto& [idx, c] : nonzeros<F>(t))
        add_scaled(out, module_join(m, idx / mc, cc.embed(unit_vector(m.field(), mc, idx % mc))), c);
    return out;
}

template <class F>
Matrix<F> from_coring_comodule(const RelativeHopfModule<F>& m, const ComoduleCoring<F>& cc,
                               const CoringComodule<F>& c) {
    Matrix<F> out(m.field(), m.dim() * m.comodule_algebra().dim_h(), m.dim());
    for (size_t i = 0; i < m.dim(); ++i)
        out.set_column(i, realize_module_tensor(m, cc, c.coaction.column(i)));
    return out;
}

/// Coassociativity and counit of a C-comodule, with M (x)_A C (x)_A C realized
/// in M (x) H (x) H.
template <class F>
Verdict verify_coring_comodule(const RelativeHopfModule<F>& m, const ComoduleCoring<F>& cc,
                               const CoringComodule<F>& c) {
    const auto& f = m.field();
    const auto& cor = cc.coring();
    size_t d = m.dim(), mc = cc.dim();
    auto realize3 = [&](size_t i, const Vec<F>& y2) { return module_join(m, i, y2); };
    for (size_t i = 0; i < d; ++i) {
        Vec<F> t = c.coaction.column(i);
        Vec<F> lhs = zero_vector(f, d * m.comodule_algebra().dim_h() * m.comodule_algebra().dim_h());
        Vec<F> rhs = lhs;
        for (const auto& [idx, v] : nonzeros<F>(t)) {
            size_t j = idx / mc, k = idx % mc;
            // (rho~ (x) C): rho~(m_j) (x) c_k
            for (const auto& [idx2, w] : nonzeros<F>(c.coaction.column(j))) {
                size_t j2 = idx2 / mc, k2 = idx2 % mc;
                add_scaled(lhs, realize3(j2, cor.realize2(tensor_vectors(f, unit_vector(f, mc, k2), unit_vector(f, mc, k)))),
                           v * w);
            }
            add_scaled(rhs, realize3(j, cor.realize2(cor.delta().column(k))), v);
        }
        if (lhs != rhs)
            return Verdict::fail("comodule coassociativity", "m" + std::to_string(i));
        Vec<F> e = zero_vector(f, d);
        for (const auto& [idx, v] : nonzeros<F>(t))
            add_scaled(e, m.action_by(cor.counit().column(idx % mc)).column(idx / mc), v);
        if (e != unit_vector(f, d, i))
            return Verdict::fail("comodule counit", "m" + std::to_string(i));
    }
    return Verdict::pass();
}

/// A right B-module given by one matrix per B-basis vector (n.b = R_b n).
template <class F>
struct SubringModule {
    size_t dim;
    std::vector<Matrix<F>> action;
};

/// N (x)_B A with the relative Hopf module structure n (x) a_[0] (x) a_[1].
template <class F>
struct InducedModule {
    QuotientSpace<F> tensor;
    RelativeHopfModule<F> module;
};

template <class F>
InducedModule<F> induce(const ComoduleAlgebra<F>& ca, const Subspace<F>& b, const SubringModule<F>& n) {
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    size_t na = a.dim(), nh = ca.dim_h();
    std::vector<Matrix<F>> left;
    for (const auto& v : b.basis())
        left.push_back(a.left_mult(v));
    auto q = balanced_tensor(f, n.dim, na, n.action, left);
    size_t d = q.dim();
    std::vector<Matrix<F>> act;
    for (size_t x = 0; x < na; ++x)
        act.push_back(q.projection() * kron(Matrix<F>::identity(f, n.dim), a.right_mult_basis(x)) * q.section());
    Matrix<F> rho_lift = kron(Matrix<F>::identity(f, n.dim), ca.coaction());  // N (x) A -> N (x) A (x) H
    Matrix<F> proj_h = kron(q.projection(), Matrix<F>::identity(f, nh));
    for (const auto& r : q.relations().basis())
        if (!is_zero_vector(proj_h.apply(rho_lift.apply(r))))
            throw InconsistencyError("coaction does not descend to N (x)_B A");
    Matrix<F> rho = proj_h * rho_lift * q.section();
    return {q, RelativeHopfModule<F>(ca, d, std::move(act), std::move(rho))};
}

template <class F>
struct AdjunctionMap {
    Matrix<F> map;
    size_t source_dim = 0;
    size_t target_dim = 0;
    bool bijective = false;
};

/// nu_N(n) = n (x)_B 1 into (N (x)_B A)^coH, in coordinates of the
/// coinvariants.
template <class F>
AdjunctionMap<F> adjunction_unit(const ComoduleAlgebra<F>& ca, const Subspace<F>& b, const SubringModule<F>& n) {
    const auto& f = ca.field();
    auto ind = induce(ca, b, n);
    auto co = ind.module.coinvariants();
    Matrix<F> nu(f, co.dim(), n.dim);
    for (size_t i = 0; i < n.dim; ++i) {
        Vec<F> v = ind.tensor.project(tensor_vectors(f, unit_vector(f, n.dim, i), ca.algebra().unit()));
        nu.set_column(i, co.coordinates_or_throw(v, "n (x) 1 is not coinvariant"));
    }
    AdjunctionMap<F> out{nu, n.dim, co.dim()};
    out.bijective = n.dim == co.dim() && rank(nu) == n.dim;
    return out;
}

/// zeta_M(m (x)_B a) = ma on M^coH (x)_B A.
template <class F>
AdjunctionMap<F> adjunction_counit(const RelativeHopfModule<F>& m, const Subspace<F>& b) {
    const auto& f = m.field();
    const auto& a = m.comodule_algebra().algebra();
    size_t na = a.dim();
    auto co = m.coinvariants();
    std::vector<Matrix<F>> on_co, left;
    for (const auto& v : b.basis()) {
        Matrix<F> r(f, co.dim(), co.dim());
        Matrix<F> act = m.action_by(v);
        for (size_t i = 0; i < co.dim(); ++i)
            r.set_column(i, co.coordinates_or_throw(act.apply(co.basis_vector(i)), "coinvariants not B-stable"));
        on_co.push_back(std::move(r));
        left.push_back(a.left_mult(v));
    }
    auto q = balanced_tensor(f, co.dim(), na, on_co, left);
    Matrix<F> lifted(f, m.dim(), co.dim() * na);
    for (size_t i = 0; i < co.dim(); ++i)
        for (size_t x = 0; x < na; ++x)
            lifted.set_column(i * na + x, m.action(x).apply(co.basis_vector(i)));
    for (const auto& r : q.relations().basis())
        if (!is_zero_vector(lifted.apply(r)))
            throw InconsistencyError("zeta does not descend to M^coH (x)_B A");
    Matrix<F> zeta = lifted * q.section();
    AdjunctionMap<F> out{zeta, q.dim(), m.dim()};
    out.bijective = q.dim() == m.dim() && rank(zeta) == m.dim();
    return out;
}

/// The coring C as a relative Hopf module: x.a = x rho(a), coaction id (x) Delta.
template <class F>
RelativeHopfModule<F> coring_as_module(const ComoduleCoring<F>& cc) {
    const auto& ca = cc.comodule_algebra();
    const auto& f = ca.field();
    size_t m = cc.dim(), na = ca.dim_a(), nh = ca.dim_h();
    std::vector<Matrix<F>> act;
    for (size_t a = 0; a < ca.dim_a(); ++a)
        act.push_back(cc.coring().right_action(a));
    Matrix<F> rho(f, m * nh, m);
    for (size_t i = 0; i < m; ++i) {
        Vec<F> d = apply_to_slot(ca.coalgebra().delta(), cc.carrier().basis_vector(i), na, 1);  // A (x) H (x) H
        Vec<F> col = zero_vector(f, m * nh);
        for (size_t k = 0; k < nh; ++k) {
            Vec<F> slice = zero_vector(f, na * nh);
            for (size_t j = 0; j < na * nh; ++j)
                slice[j] = d[j * nh + k];
            Vec<F> c = cc.coords(slice);
            for (size_t j = 0; j < m; ++j)
                col[j * nh + k] = c[j];
        }
        rho.set_column(i, col);
    }
    return RelativeHopfModule<F>(ca, m, std::move(act), std::move(rho));
}

/// B as a right B-module, and A restricted to B.
template <class F>
SubringModule<F> subring_regular(const FinAlgebra<F>& a, const Subspace<F>& b) {
    SubringModule<F> out{b.dim(), {}};
    for (const auto& v : b.basis()) {
        Matrix<F> r(a.field(), b.dim(), b.dim());
        for (size_t i = 0; i < b.dim(); ++i)
            r.set_column(i, b.coordinates_or_throw(a.mul(b.basis_vector(i), v), "B not closed"));
        out.action.push_back(std::move(r));
    }
    return out;
}

template <class F>
SubringModule<F> restricted_algebra(const FinAlgebra<F>& a, const Subspace<F>& b) {
    SubringModule<F> out{a.dim(), {}};
    for (const auto& v : b.basis())
        out.action.push_back(a.right_mult(v));
    return out;
}

}  // namespace wgalois
