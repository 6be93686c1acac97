#pragma once

#include "wgalois/weakhopf/weak_hopf.hpp"

#include <utility>

namespace wgalois {

/// Right H-comodule algebra: algebra A with rho: A -> A (x) H given as an
/// (dim A * dim H) x dim A matrix in the kron ordering.
template <class F>
class ComoduleAlgebra {
public:
    using Scalar = typename F::Scalar;

    ComoduleAlgebra(FinAlgebra<F> a, WeakBialgebra<F> h, Matrix<F> rho)
        : a_(std::move(a)), h_(std::move(h)), rho_(std::move(rho)) {
        require_same_field(a_.field(), h_.field());
        if (rho_.rows() != a_.dim() * h_.dim() || rho_.cols() != a_.dim())
            throw std::invalid_argument("comodule algebra: coaction must be (dim A * dim H) x dim A");
    }

    const F& field() const { return a_.field(); }
    const FinAlgebra<F>& algebra() const { return a_; }
    const WeakBialgebra<F>& coalgebra() const { return h_; }
    const Matrix<F>& coaction() const { return rho_; }
    size_t dim_a() const { return a_.dim(); }
    size_t dim_h() const { return h_.dim(); }

    Vec<F> coact(const Vec<F>& a) const { return rho_.apply(a); }
    Vec<F> coact_basis(size_t i) const { return rho_.column(i); }
    Vec<F> rho_one() const { return coact(a_.unit()); }

    /// Product in A (x) H.
    Vec<F> mul_ah(const Vec<F>& x, const Vec<F>& y) const {
        return tensor_multiply<F>(field(), {&a_.table(), &h_.algebra().table()}, x, y);
    }
    /// a (x) 1_H
    Vec<F> with_unit(const Vec<F>& a) const { return tensor_vectors(field(), a, h_.algebra().unit()); }
    /// (rho (x) id_H) on A (x) H
    Vec<F> coact_first(const Vec<F>& x) const { return apply_to_slot(rho_, x, 1, dim_h()); }

    /// Algebra and weak bialgebra axioms, coassociativity, counit,
    /// multiplicativity and the normative unit condition
    /// rho^2(1) = 1_[0] (x) 1_[1]1_(1) (x) 1_(2).
    const Verdict& verify() const { return verdict_.get([&] { return compute(); }); }

    /// The conditions the normative unit condition is equivalent to, each
    /// checked on its own. Order: rho^2(1) with 1_[1]1_(1), rho^2(1) with
    /// 1_(1)1_[1], a_[0] (x) bar Pi^R(a_[1]), a_[0] (x) Pi^L(a_[1]),
    /// 1_[0] (x) bar Pi^R(1_[1]), 1_[0] (x) Pi^L(1_[1]), rho(1) in A (x) H^L.
    std::vector<std::pair<std::string, Verdict>> unit_conditions() const {
        std::vector<std::pair<std::string, Verdict>> out;
        const auto& f = field();
        size_t na = dim_a(), nh = dim_h();
        const auto& p = h_.projections();
        Vec<F> r1 = rho_one();
        Vec<F> rr1 = coact_first(r1);
        Vec<F> d1 = h_.delta_one();
        const BilinearTable<F>* t3[] = {&a_.table(), &h_.algebra().table(), &h_.algebra().table()};
        std::span<const BilinearTable<F>* const> tables(t3);
        Vec<F> r1_1 = tensor_vectors(f, r1, h_.algebra().unit());
        Vec<F> one_d1 = tensor_vectors(f, a_.unit(), d1);
        auto check = [&](const std::string& name, bool ok, const std::string& witness) {
            out.emplace_back(name, ok ? Verdict::pass() : Verdict::fail(name, witness));
        };
        check("rho^2(1) = 1_[0] (x) 1_[1]1_(1) (x) 1_(2)", rr1 == tensor_multiply<F>(f, tables, r1_1, one_d1),
              "unit condition fails");
        check("rho^2(1) = 1_[0] (x) 1_(1)1_[1] (x) 1_(2)", rr1 == tensor_multiply<F>(f, tables, one_d1, r1_1),
              "unit condition fails");
        std::string bad5, bad6;
        for (size_t i = 0; i < na && (bad5.empty() || bad6.empty()); ++i) {
            Vec<F> ra = coact_basis(i);
            Vec<F> ai = a_.basis(i);
            if (bad5.empty() && apply_to_slot(p.bar_right, ra, na, 1) != mul_ah(with_unit(ai), r1))
                bad5 = a_.label(i);
            if (bad6.empty() && apply_to_slot(p.left, ra, na, 1) != mul_ah(r1, with_unit(ai)))
                bad6 = a_.label(i);
        }
        check("a_[0] (x) bar Pi^R(a_[1]) = a1_[0] (x) 1_[1]", bad5.empty(), "a = " + bad5);
        check("a_[0] (x) Pi^L(a_[1]) = 1_[0]a (x) 1_[1]", bad6.empty(), "a = " + bad6);
        check("1_[0] (x) bar Pi^R(1_[1]) = rho(1)", apply_to_slot(p.bar_right, r1, na, 1) == r1, "rho(1)");
        check("1_[0] (x) Pi^L(1_[1]) = rho(1)", apply_to_slot(p.left, r1, na, 1) == r1, "rho(1)");
        // A (x) H^L as the span of e_a (x) (basis of H^L)
        auto hl = h_.target_left();
        bool in = true;
        for (size_t a = 0; a < na && in; ++a) {
            Vec<F> slice(r1.begin() + a * nh, r1.begin() + (a + 1) * nh);
            in = hl.contains(slice);
        }
        check("rho(1) in A (x) H^L", in, "rho(1) has a component outside H^L");
        return out;
    }

    /// eps(h_(1)1_[1])1_[0] (x) h_(2) = 1_[0] (x) h1_[1] and
    /// eps(h1_[1])1_[0]a = eps(ha_[1])a_[0], on all basis h, a.
    Verdict verify_unit_identities() const {
        size_t na = dim_a(), nh = dim_h();
        const auto& f = field();
        const Matrix<F>& e = h_.counit_products();
        auto r1 = nonzeros<F>(rho_one());
        for (size_t h = 0; h < nh; ++h) {
            Vec<F> lhs = zero_vector(f, na * nh), rhs = zero_vector(f, na * nh);
            auto dh = nonzeros<F>(h_.comul_basis(h));
            for (const auto& [idx, c] : r1) {
                size_t a = idx / nh, k = idx % nh;
                for (const auto& [pq, d] : dh) {
                    size_t p = pq / nh, q = pq % nh;
                    if (!is_zero(e(p, k)))
                        lhs[a * nh + q] += c * d * e(p, k);
                }
                for (const auto& [l, m] : h_.algebra().table().at(h, k))
                    rhs[a * nh + l] += c * m;
            }
            if (lhs != rhs)
                return Verdict::fail("eps(h_(1)1_[1])1_[0] (x) h_(2) = 1_[0] (x) h1_[1]", "h = " + h_.label(h));
        }
        for (size_t h = 0; h < nh; ++h) {
            // z = eps(h1_[1]) 1_[0] in A
            Vec<F> z = zero_vector(f, na);
            for (const auto& [idx, c] : r1)
                z[idx / nh] += c * e(h, idx % nh);
            for (size_t i = 0; i < na; ++i) {
                Vec<F> rhs = zero_vector(f, na);
                for (const auto& [idx, c] : nonzeros<F>(coact_basis(i)))
                    rhs[idx / nh] += c * e(h, idx % nh);
                if (a_.mul(z, a_.basis(i)) != rhs)
                    return Verdict::fail("eps(h1_[1])1_[0]a = eps(ha_[1])a_[0]",
                                         "h = " + h_.label(h) + ", a = " + a_.label(i));
            }
        }
        return Verdict::pass();
    }

    std::string label_ah(size_t idx) const {
        return a_.label(idx / dim_h()) + " (x) " + h_.label(idx % dim_h());
    }

private:
    Verdict compute() const {
        if (auto v = a_.verify(); !v)
            return v;
        if (const auto& v = h_.verify(); !v)
            return v;
        size_t na = dim_a();
        const auto& f = field();
        for (size_t i = 0; i < na; ++i) {
            Vec<F> r = coact_basis(i);
            if (coact_first(r) != apply_to_slot(h_.delta(), r, na, 1))
                return Verdict::fail("coaction coassociativity", "(rho (x) id) rho != (id (x) Delta) rho at " +
                                                                     a_.label(i));
            if (apply_to_slot(h_.counit_matrix(), r, na, 1) != a_.basis(i))
                return Verdict::fail("coaction counit", "(id (x) eps) rho != id at " + a_.label(i));
        }
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < na; ++j)
                if (coact(a_.mul_basis(i, j)) != mul_ah(coact_basis(i), coact_basis(j)))
                    return Verdict::fail("multiplicative coaction",
                                         "rho(ab) != rho(a)rho(b) at a = " + a_.label(i) + ", b = " + a_.label(j));
        Vec<F> r1 = rho_one();
        const BilinearTable<F>* t3[] = {&a_.table(), &h_.algebra().table(), &h_.algebra().table()};
        Vec<F> rhs = tensor_multiply<F>(f, std::span<const BilinearTable<F>* const>(t3),
                                        tensor_vectors(f, r1, h_.algebra().unit()),
                                        tensor_vectors(f, a_.unit(), h_.delta_one()));
        if (coact_first(r1) != rhs)
            return Verdict::fail("coaction unit condition", "rho^2(1) != 1_[0] (x) 1_[1]1_(1) (x) 1_(2)");
        return Verdict::pass();
    }

    FinAlgebra<F> a_;
    WeakBialgebra<F> h_;
    Matrix<F> rho_;
    VerdictCache verdict_;
};

/// H as a comodule algebra over itself via Delta.
template <class F>
ComoduleAlgebra<F> regular_comodule_algebra(const WeakBialgebra<F>& h) {
    return ComoduleAlgebra<F>(h.algebra(), h, h.delta());
}

template <class F>
void require_verified(const ComoduleAlgebra<F>& ca) {
    if (const auto& v = ca.verify(); !v)
        throw PreconditionError("comodule algebra fails verification: " + v.describe());
}

/// Coinvariants {a : rho(a) = a 1_[0] (x) 1_[1]}; asserted to be a unital
/// subalgebra.
template <class F>
Subspace<F> coinvariants(const ComoduleAlgebra<F>& ca) {
    require_verified(ca);
    size_t na = ca.dim_a();
    Vec<F> r1 = ca.rho_one();
    Matrix<F> m(ca.field(), na * ca.dim_h(), na);
    for (size_t i = 0; i < na; ++i)
        m.set_column(i, difference(ca.coact_basis(i), ca.mul_ah(ca.with_unit(ca.algebra().basis(i)), r1)));
    Subspace<F> t = kernel(m);
    if (auto v = ca.algebra().check_unital_subalgebra(t); !v)
        throw InconsistencyError("coinvariants are not a unital subalgebra: " + v.describe());
    return t;
}

}  // namespace wgalois
