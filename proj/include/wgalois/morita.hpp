#pragma once

#include "wgalois/comod/hopf_module.hpp"
#include "wgalois/report.hpp"

#include <algorithm>
#include <memory>

namespace wgalois {

namespace detail {

template <class F>
Vec<F> coords_or_inconsistent(const Subspace<F>& s, const Vec<F>& v, const std::string& what) {
    auto c = s.coordinates(v);
    if (!c)
        throw InconsistencyError(what);
    return *c;
}

template <class S>
std::vector<S> block(const std::vector<S>& v, size_t i, size_t len) {
    return std::vector<S>(v.begin() + i * len, v.begin() + (i + 1) * len);
}

template <class S>
void add_block(std::vector<S>& v, size_t i, const std::vector<S>& x, const std::type_identity_t<S>& c) {
    size_t len = x.size();
    for (size_t k = 0; k < len; ++k)
        if (!is_zero(x[k]))
            v[i * len + k] += c * x[k];
}

template <class F>
FinAlgebra<F> ring_on(const Subspace<F>& carrier, const std::function<Vec<F>(const Vec<F>&, const Vec<F>&)>& product,
                      const Vec<F>& unit, const std::string& what) {
    const auto& f = carrier.field();
    size_t d = carrier.dim();
    std::vector<Vec<F>> table(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            table[i * d + j] = coords_or_inconsistent(carrier, product(carrier.basis_vector(i), carrier.basis_vector(j)),
                                                      what + ": product leaves the carrier");
    return FinAlgebra<F>::from_rule(
        f, d, [&](size_t i, size_t j) { return nonzeros<F>(table[i * d + j]); },
        coords_or_inconsistent(carrier, unit, what + ": unit outside the carrier"));
}

}  // namespace detail

/// Hom(H, A) as vectors of length dim H * dim A, f(e_h) in block h. The ring
/// is the subspace {f : f(h) = 1_[0]f(h1_[1])} with
/// (f#g)(h) = f(h_(2))_[0] g(h_(1)f(h_(2))_[1]) and unit 1_[0]eps(h1_[1]).
template <class F>
class HomDual {
public:
    explicit HomDual(const ComoduleAlgebra<F>& ca) : ca_(ca), carrier_(ca.field(), 0) {
        require_verified(ca_);
        const auto& f = ca_.field();
        size_t n = ambient_dim();
        Matrix<F> ip = Matrix<F>::identity(f, n) - projection();
        carrier_ = kernel(ip);
        ring_ = std::make_shared<FinAlgebra<F>>(detail::ring_on<F>(
            carrier_, [this](const Vec<F>& x, const Vec<F>& y) { return product(x, y); }, eps_tilde(),
            "Hom(H, A)"));
    }

    const ComoduleAlgebra<F>& comodule_algebra() const { return ca_; }
    const F& field() const { return ca_.field(); }
    size_t ambient_dim() const { return ca_.dim_a() * ca_.dim_h(); }
    const Subspace<F>& carrier() const { return carrier_; }
    size_t dim() const { return carrier_.dim(); }
    /// Structure constants in carrier coordinates.
    const FinAlgebra<F>& ring() const { return *ring_; }
    Vec<F> coords(const Vec<F>& f) const {
        return detail::coords_or_inconsistent(carrier_, f, "map outside Hom(H, A) ring");
    }
    Vec<F> embed(const Vec<F>& c) const { return carrier_.from_coordinates(c); }

    Vec<F> value(const Vec<F>& fv, size_t h) const { return detail::block(fv, h, ca_.dim_a()); }

    /// 2.3.2 on all of Hom(H, A).
    Vec<F> product(const Vec<F>& fv, const Vec<F>& gv) const {
        const auto& f = field();
        const auto& a = ca_.algebra();
        const auto& h = ca_.coalgebra();
        size_t na = ca_.dim_a(), nh = ca_.dim_h();
        std::vector<Terms<F>> rf(nh), gb(nh);
        for (size_t q = 0; q < nh; ++q) {
            rf[q] = nonzeros<F>(ca_.coact(value(fv, q)));
            gb[q] = nonzeros<F>(value(gv, q));
        }
        Vec<F> out = zero_vector(f, na * nh);
        for (size_t hh = 0; hh < nh; ++hh)
            for (const auto& [pq, d] : nonzeros<F>(h.comul_basis(hh))) {
                size_t p = pq / nh, q = pq % nh;
                for (const auto& [ak, c] : rf[q])
                    for (const auto& [l, m] : h.algebra().table().at(p, ak % nh)) {
                        typename F::Scalar dcm = d * c * m;
                        for (const auto& [y, gy] : gb[l])
                            for (const auto& [z, w] : a.table().at(ak / nh, y))
                                out[hh * na + z] += dcm * gy * w;
                    }
            }
        return out;
    }

    /// f -> 1_[0]f(h1_[1]); the ring is its fixed space.
    Matrix<F> projection() const {
        const auto& f = field();
        size_t n = ambient_dim();
        Matrix<F> p(f, n, n);
        for (size_t i = 0; i < n; ++i)
            p.set_column(i, bimodule(ca_.algebra().unit(), unit_vector(f, n, i), ca_.algebra().unit(), true));
        return p;
    }

    Vec<F> eps_tilde() const { return j(ca_.algebra().unit()); }

    /// h -> eps(h)1_A
    Vec<F> eps_plain() const {
        const auto& f = field();
        Vec<F> out = zero_vector(f, ambient_dim());
        for (size_t h = 0; h < ca_.dim_h(); ++h)
            detail::add_block(out, h, ca_.algebra().unit(), ca_.coalgebra().counit_basis(h));
        return out;
    }

    /// j(a)(h) = 1_[0]eps(h1_[1])a
    Vec<F> j(const Vec<F>& av) const {
        const auto& f = field();
        const auto& a = ca_.algebra();
        const auto& e = ca_.coalgebra().counit_products();
        size_t na = ca_.dim_a(), nh = ca_.dim_h();
        Vec<F> out = zero_vector(f, na * nh);
        auto r1 = nonzeros<F>(ca_.rho_one());
        for (size_t h = 0; h < nh; ++h) {
            Vec<F> acc = zero_vector(f, na);
            for (const auto& [ak, c] : r1)
                if (!is_zero(e(h, ak % nh)))
                    add_scaled(acc, a.basis(ak / nh), c * e(h, ak % nh));
            detail::add_block(out, h, a.mul(acc, av), f.one());
        }
        return out;
    }

    /// (afb)(h) = a_[0]f(ha_[1])b; with use_rho_one the coaction of 1 is used,
    /// which gives the projection onto the ring.
    Vec<F> bimodule(const Vec<F>& av, const Vec<F>& fv, const Vec<F>& bv, bool use_rho_one = false) const {
        const auto& f = field();
        const auto& a = ca_.algebra();
        const auto& ht = ca_.coalgebra().algebra().table();
        size_t na = ca_.dim_a(), nh = ca_.dim_h();
        auto ra = nonzeros<F>(use_rho_one ? ca_.rho_one() : ca_.coact(av));
        Vec<F> out = zero_vector(f, na * nh);
        for (size_t h = 0; h < nh; ++h) {
            Vec<F> acc = zero_vector(f, na);
            for (const auto& [ck, c] : ra) {
                size_t ci = ck / nh, k = ck % nh;
                for (const auto& [l, m] : ht.at(h, k))
                    add_scaled(acc, a.mul(a.basis(ci), value(fv, l)), c * m);
            }
            detail::add_block(out, h, a.mul(acc, bv), f.one());
        }
        return out;
    }

    /// The right action of the ring on A: a.f = a_[0]f(a_[1]).
    Vec<F> act_on_algebra(const Vec<F>& av, const Vec<F>& fv) const {
        const auto& f = field();
        const auto& a = ca_.algebra();
        size_t na = ca_.dim_a(), nh = ca_.dim_h();
        Vec<F> out = zero_vector(f, na);
        for (const auto& [ck, c] : nonzeros<F>(ca_.coact(av)))
            add_scaled(out, a.mul(a.basis(ck / nh), value(fv, ck % nh)), c);
        return out;
    }

    /// af = j(a)#f and fb = f#j(b) for the bimodule structure
    /// (afb)(h) = a_[0]f(ha_[1])b, on basis elements of A and of the ring.
    Verdict verify_bimodule() const {
        const auto& a = ca_.algebra();
        const auto& r = ring();
        for (size_t x = 0; x < a.dim(); ++x) {
            Vec<F> jx = coords(j(a.basis(x)));
            for (size_t i = 0; i < dim(); ++i) {
                const auto& fv = carrier_.basis_vector(i);
                Vec<F> fi = unit_vector(field(), dim(), i);
                auto left = carrier_.coordinates(bimodule(a.basis(x), fv, a.unit()));
                if (!left || *left != r.mul(jx, fi))
                    return Verdict::fail("af = j(a)#f", "a = " + a.label(x) + ", f" + std::to_string(i));
                auto right = carrier_.coordinates(bimodule(a.unit(), fv, a.basis(x)));
                if (!right || *right != r.mul(fi, jx))
                    return Verdict::fail("fb = f#j(b)", "b = " + a.label(x) + ", f" + std::to_string(i));
            }
        }
        return Verdict::pass();
    }

    /// A basis element g of the ring with eps#g != g or g#eps != g, if any.
    /// Where the plain counit fails to be a #-unit: a witness naming either
    /// a basis map e_i of Hom(H, A) with eps#e_i != e_i or e_i#eps != e_i, or
    /// the failure of eps to lie in Hom(H, A) at all.
    std::optional<std::string> eps_unit_failure() const {
        Vec<F> e = eps_plain();
        size_t n = ambient_dim();
        for (size_t i = 0; i < n; ++i) {
            Vec<F> g = unit_vector(field(), n, i);
            if (product(e, g) != g)
                return "eps#e" + std::to_string(i) + " != e" + std::to_string(i);
            if (product(g, e) != g)
                return "e" + std::to_string(i) + "#eps != e" + std::to_string(i);
        }
        if (!carrier_.contains(e))
            return std::string("eps not in Hom(H, A)");
        return std::nullopt;
    }

private:
    ComoduleAlgebra<F> ca_;
    Subspace<F> carrier_;
    std::shared_ptr<FinAlgebra<F>> ring_;
};

/// *C = _AHom(C, A) for an A-coring C on k^m, as vectors of length m * dim A
/// with phi(c_i) in block i, and (phi#psi)(c) = psi(c_(1)phi(c_(2))).
template <class F>
class CoringDual {
public:
    explicit CoringDual(const Coring<F>& c) : c_(&c), carrier_(c.field(), 0) {
        const auto& f = c.field();
        const auto& a = c.base();
        size_t na = a.dim(), m = c.dim(), n = m * na;
        for (size_t k = 0; k < m; ++k)
            delta_terms_.push_back(nonzeros<F>(c.delta().column(k)));
        for (size_t x = 0; x < na; ++x)
            for (size_t i = 0; i < m; ++i)
                right_terms_.push_back(nonzeros<F>(c.right_action(x).column(i)));
        // phi(a c_i) - a phi(c_i) for every basis a, c_i
        Matrix<F> cons(f, na * m * na, n);
        for (size_t col = 0; col < n; ++col) {
            size_t jj = col / na, comp = col % na;
            Vec<F> r = zero_vector(f, na * m * na);
            for (size_t x = 0; x < na; ++x) {
                const Matrix<F>& lx = c.left_action(x);
                for (size_t i = 0; i < m; ++i) {
                    size_t base = (x * m + i) * na;
                    if (!is_zero(lx(jj, i)))
                        r[base + comp] += lx(jj, i);
                    if (i == jj)
                        for (const auto& [k, v] : a.table().at(x, comp))
                            r[base + k] -= v;
                }
            }
            cons.set_column(col, r);
        }
        carrier_ = kernel(cons);
        ring_ = std::make_shared<FinAlgebra<F>>(detail::ring_on<F>(
            carrier_, [this](const Vec<F>& x, const Vec<F>& y) { return product(x, y); }, unit(), "*C"));
    }

    const Coring<F>& coring() const { return *c_; }
    const Subspace<F>& carrier() const { return carrier_; }
    size_t dim() const { return carrier_.dim(); }
    const FinAlgebra<F>& ring() const { return *ring_; }
    Vec<F> coords(const Vec<F>& phi) const { return detail::coords_or_inconsistent(carrier_, phi, "map outside *C"); }

    Vec<F> value(const Vec<F>& phi, const Vec<F>& cv) const {
        size_t na = c_->base().dim();
        Vec<F> out = zero_vector(c_->field(), na);
        for (const auto& [i, v] : nonzeros<F>(cv))
            add_scaled(out, detail::block(phi, i, na), v);
        return out;
    }

    /// The counit, the unit of *C.
    Vec<F> unit() const {
        size_t na = c_->base().dim(), m = c_->dim();
        Vec<F> out = zero_vector(c_->field(), m * na);
        for (size_t i = 0; i < m; ++i)
            detail::add_block(out, i, c_->counit().column(i), c_->field().one());
        return out;
    }

    Vec<F> product(const Vec<F>& phi, const Vec<F>& psi) const {
        const auto& f = c_->field();
        size_t na = c_->base().dim(), m = c_->dim();
        // psi(c_i . e_x), computed on demand
        std::vector<std::optional<Vec<F>>> psi_ra(na * m);
        Vec<F> out = zero_vector(f, m * na);
        for (size_t k = 0; k < m; ++k) {
            Vec<F> acc = zero_vector(f, na);
            for (const auto& [ij, d] : delta_terms_[k]) {
                size_t i = ij / m, jj = ij % m;
                for (size_t x = 0; x < na; ++x) {
                    const auto& v = phi[jj * na + x];
                    if (is_zero(v))
                        continue;
                    auto& slot = psi_ra[x * m + i];
                    if (!slot) {
                        slot = zero_vector(f, na);
                        for (const auto& [r, w] : right_terms_[x * m + i])
                            for (size_t y = 0; y < na; ++y)
                                if (!is_zero(psi[r * na + y]))
                                    (*slot)[y] += w * psi[r * na + y];
                    }
                    add_scaled(acc, *slot, d * v);
                }
            }
            detail::add_block(out, k, acc, f.one());
        }
        return out;
    }

    /// Span of all phi(c): the trace ideal of C as a left A-module.
    Subspace<F> trace_ideal() const {
        size_t na = c_->base().dim();
        Subspace<F> out(c_->field(), na);
        for (const auto& phi : carrier_.basis())
            for (size_t i = 0; i < c_->dim(); ++i)
                out.insert(detail::block(phi, i, na));
        return out;
    }

private:
    const Coring<F>* c_;
    std::vector<Terms<F>> delta_terms_, right_terms_;
    Subspace<F> carrier_;
    std::shared_ptr<FinAlgebra<F>> ring_;
};

template <class F>
struct DualRingIso {
    Matrix<F> alpha;  // *C ambient -> Hom(H, A)
    Matrix<F> beta;   // Hom(H, A) -> *C ambient
    Verdict verdict;
};

/// alpha(phi)(h) = phi(1_[0] (x) h1_[1]) and beta(f)(a1_[0] (x) h1_[1]) = af(h):
/// mutually inverse ring isomorphisms between *C and Hom(H, A).
template <class F>
DualRingIso<F> dual_ring_iso(const ComoduleCoring<F>& cc, const CoringDual<F>& star, const HomDual<F>& hom) {
    const auto& ca = cc.comodule_algebra();
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    size_t na = ca.dim_a(), nh = ca.dim_h(), m = cc.dim();
    Matrix<F> alpha(f, nh * na, m * na), beta(f, m * na, nh * na);
    std::vector<Vec<F>> one_h;
    for (size_t h = 0; h < nh; ++h)
        one_h.push_back(cc.coords(cc.projection().apply(tensor_vectors(f, a.unit(), unit_vector(f, nh, h)))));
    for (size_t i = 0; i < m; ++i)
        for (size_t x = 0; x < na; ++x) {
            Vec<F> col = zero_vector(f, nh * na);
            for (size_t h = 0; h < nh; ++h)
                if (!is_zero(one_h[h][i]))
                    col[h * na + x] += one_h[h][i];
            alpha.set_column(i * na + x, col);
        }
    for (size_t h = 0; h < nh; ++h)
        for (size_t y = 0; y < na; ++y) {
            Vec<F> col = zero_vector(f, m * na);
            for (size_t i = 0; i < m; ++i) {
                Vec<F> acc = zero_vector(f, na);
                for (const auto& [ak, c] : nonzeros<F>(cc.carrier().basis_vector(i)))
                    if (ak % nh == h)
                        add_scaled(acc, a.mul_basis(ak / nh, y), c);
                detail::add_block(col, i, acc, f.one());
            }
            beta.set_column(h * na + y, col);
        }
    DualRingIso<F> out{alpha, beta, Verdict::pass()};
    auto fail = [&](const std::string& law, const std::string& w) {
        out.verdict = Verdict::fail(law, w);
        return out;
    };
    for (size_t i = 0; i < star.dim(); ++i) {
        const auto& phi = star.carrier().basis_vector(i);
        Vec<F> af = alpha.apply(phi);
        if (!hom.carrier().contains(af))
            return fail("alpha lands in Hom(H, A)", "phi" + std::to_string(i));
        if (beta.apply(af) != phi)
            return fail("beta alpha = id", "phi" + std::to_string(i));
    }
    for (size_t i = 0; i < hom.dim(); ++i) {
        const auto& fv = hom.carrier().basis_vector(i);
        Vec<F> bf = beta.apply(fv);
        if (!star.carrier().contains(bf))
            return fail("beta lands in *C", "f" + std::to_string(i));
        if (alpha.apply(bf) != fv)
            return fail("alpha beta = id", "f" + std::to_string(i));
    }
    // on structure constants: alpha in ring coordinates is multiplicative
    Matrix<F> ac(f, hom.dim(), star.dim());
    for (size_t i = 0; i < star.dim(); ++i)
        ac.set_column(i, hom.coords(alpha.apply(star.carrier().basis_vector(i))));
    for (size_t i = 0; i < star.dim(); ++i)
        for (size_t k = 0; k < star.dim(); ++k)
            if (ac.apply(star.ring().mul_basis(i, k)) != hom.ring().mul(ac.column(i), ac.column(k)))
                return fail("alpha(phi#psi) = alpha(phi)#alpha(psi)",
                            "phi" + std::to_string(i) + ", psi" + std::to_string(k));
    if (alpha.apply(star.unit()) != hom.eps_tilde())
        return fail("alpha(eps_C) = eps~", "unit");
    return out;
}

/// Q = {q in *C : c_(1)q(c_(2)) = q(c)x}, in the ambient of *C.
template <class F>
Subspace<F> compute_Q(const CoringDual<F>& star, const Vec<F>& x) {
    const auto& c = star.coring();
    if (auto v = c.check_grouplike(x); !v)
        throw PreconditionError("Q needs a grouplike: " + v.describe());
    const auto& f = c.field();
    size_t na = c.base().dim(), m = c.dim();
    Matrix<F> sys(f, m * m, star.dim());
    for (size_t s = 0; s < star.dim(); ++s) {
        const auto& q = star.carrier().basis_vector(s);
        Vec<F> col = zero_vector(f, m * m);
        for (size_t k = 0; k < m; ++k) {
            Vec<F> lhs = zero_vector(f, m);
            for (const auto& [ij, d] : nonzeros<F>(c.delta().column(k))) {
                size_t i = ij / m, jj = ij % m;
                add_scaled(lhs, c.right_by(detail::block(q, jj, na)).column(i), d);
            }
            Vec<F> diff = difference(lhs, c.left_by(detail::block(q, k, na)).apply(x));
            detail::add_block(col, k, diff, f.one());
        }
        sys.set_column(s, col);
    }
    std::vector<Vec<F>> out;
    auto sol = kernel(sys);
    for (const auto& v : sol.basis())
        out.push_back(star.carrier().from_coordinates(v));
    return Subspace<F>::span(f, m * na, out);
}

/// Q inside Hom(H, A): f(h_(2))_[0] (x) h_(1)f(h_(2))_[1] = f(h)1_[0] (x) 1_[1].
template <class F>
Subspace<F> compute_Q(const HomDual<F>& hom) {
    const auto& ca = hom.comodule_algebra();
    const auto& f = ca.field();
    const auto& h = ca.coalgebra();
    const auto& ht = h.algebra().table();
    size_t na = ca.dim_a(), nh = ca.dim_h();
    Vec<F> r1 = ca.rho_one();
    Matrix<F> sys(f, nh * na * nh, hom.dim());
    for (size_t s = 0; s < hom.dim(); ++s) {
        const auto& fv = hom.carrier().basis_vector(s);
        std::vector<Terms<F>> rf(nh);
        for (size_t q = 0; q < nh; ++q)
            rf[q] = nonzeros<F>(ca.coact(hom.value(fv, q)));
        Vec<F> col = zero_vector(f, nh * na * nh);
        for (size_t hh = 0; hh < nh; ++hh) {
            Vec<F> lhs = zero_vector(f, na * nh);
            for (const auto& [pq, d] : nonzeros<F>(h.comul_basis(hh))) {
                size_t p = pq / nh, q = pq % nh;
                for (const auto& [ak, c] : rf[q])
                    for (const auto& [l, mm] : ht.at(p, ak % nh))
                        lhs[(ak / nh) * nh + l] += d * c * mm;
            }
            Vec<F> rhs = ca.mul_ah(ca.with_unit(hom.value(fv, hh)), r1);
            detail::add_block(col, hh, difference(lhs, rhs), f.one());
        }
        sys.set_column(s, col);
    }
    std::vector<Vec<F>> out;
    auto sol = kernel(sys);
    for (const auto& v : sol.basis())
        out.push_back(hom.embed(v));
    return Subspace<F>::span(f, hom.ambient_dim(), out);
}

template <class F>
struct MoritaContext {
    Subspace<F> t;  // T inside A
    Subspace<F> q;  // Q inside Hom(H, A)
    bool b_is_t = false;
    size_t tau_image_dim = 0;
    size_t mu_image_dim = 0;
    bool tau_surjective = false;
    bool mu_surjective = false;
    bool strict = false;
    std::optional<Vec<F>> unit_preimage;  // q in Q with 1_[0]q(1_[1]) = 1
    Verdict laws;
    std::string witness;
};

/// The context (T, Hom(H, A), A, Q, tau, mu) with tau(a (x) q) = a_[0]q(a_[1])
/// and mu(q (x) a)(h) = q(h)a. Surjectivity of tau is decided by the rank of
/// tau and by solving 1_[0]q(1_[1]) = 1 over Q; the two must agree.
template <class F>
MoritaContext<F> morita_context(const HomDual<F>& hom, const Subspace<F>& b) {
    const auto& ca = hom.comodule_algebra();
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    size_t na = a.dim(), nh = ca.dim_h();
    auto t = coinvariants(ca);
    require_subring_of(a, b, t);
    auto q = compute_Q(hom);
    MoritaContext<F> out{t, q};
    out.b_is_t = b.dim() == t.dim();
    auto tau = [&](const Vec<F>& av, const Vec<F>& qv) { return hom.act_on_algebra(av, qv); };
    auto mu = [&](const Vec<F>& qv, const Vec<F>& av) {
        Vec<F> r = zero_vector(f, nh * na);
        for (size_t h = 0; h < nh; ++h)
            detail::add_block(r, h, a.mul(hom.value(qv, h), av), f.one());
        return r;
    };
    Subspace<F> tau_img(f, na), mu_img(f, hom.ambient_dim());
    for (size_t x = 0; x < na; ++x)
        for (const auto& qv : q.basis()) {
            Vec<F> tv = tau(a.basis(x), qv);
            if (!t.contains(tv))
                throw InconsistencyError("tau leaves T");
            tau_img.insert(tv);
            Vec<F> mv = mu(qv, a.basis(x));
            if (!hom.carrier().contains(mv))
                throw InconsistencyError("mu leaves Hom(H, A)");
            mu_img.insert(mv);
        }
    out.tau_image_dim = tau_img.dim();
    out.mu_image_dim = mu_img.dim();
    out.tau_surjective = tau_img.dim() == t.dim();
    out.mu_surjective = mu_img.dim() == hom.dim();
    out.strict = out.tau_surjective && out.mu_surjective;
    Matrix<F> at_one(f, na, q.dim());
    for (size_t s = 0; s < q.dim(); ++s)
        at_one.set_column(s, tau(a.unit(), q.basis_vector(s)));
    if (auto sol = solve(at_one, a.unit()))
        out.unit_preimage = q.inclusion().apply(*sol);
    if (out.unit_preimage.has_value() != out.tau_surjective)
        throw InconsistencyError("tau surjectivity: rank says " + std::to_string(out.tau_surjective) +
                                 ", existential criterion says " + std::to_string(out.unit_preimage.has_value()));
    if (!out.tau_surjective)
        out.witness = "tau image dim " + std::to_string(tau_img.dim()) + " < dim T = " + std::to_string(t.dim());
    else if (!out.mu_surjective)
        out.witness = "mu image dim " + std::to_string(mu_img.dim()) + " < " + std::to_string(hom.dim());
    // Q is a (Hom(H, A), T)-bimodule; the context laws on basis triples
    for (size_t i = 0; i < hom.dim() && out.laws; ++i)
        for (size_t s = 0; s < q.dim(); ++s)
            if (!q.contains(hom.product(hom.carrier().basis_vector(i), q.basis_vector(s)))) {
                out.laws = Verdict::fail("Q is a left ideal", "f" + std::to_string(i) + ", q" + std::to_string(s));
                break;
            }
    for (size_t s = 0; s < q.dim() && out.laws; ++s)
        for (const auto& tv : t.basis())
            if (!q.contains(mu(q.basis_vector(s), tv))) {
                out.laws = Verdict::fail("Q is a right T-module", "q" + std::to_string(s));
                break;
            }
    for (size_t x = 0; x < na && out.laws; ++x)
        for (size_t s = 0; s < q.dim() && out.laws; ++s) {
            const auto& qs = q.basis_vector(s);
            for (size_t y = 0; y < na; ++y) {
                if (a.mul(tau(a.basis(x), qs), a.basis(y)) != hom.act_on_algebra(a.basis(x), mu(qs, a.basis(y)))) {
                    out.laws = Verdict::fail("tau(a (x) q)a' = a.mu(q (x) a')",
                                             a.label(x) + ", q" + std::to_string(s) + ", " + a.label(y));
                    break;
                }
            }
            for (size_t u = 0; u < q.dim() && out.laws; ++u) {
                const auto& qu = q.basis_vector(u);
                if (hom.product(mu(qs, a.basis(x)), qu) != mu(qs, tau(a.basis(x), qu)))
                    out.laws = Verdict::fail("mu(q (x) a)#q' = q.tau(a (x) q')",
                                             "q" + std::to_string(s) + ", " + a.label(x) + ", q" + std::to_string(u));
            }
        }
    return out;
}

template <class F>
struct StarCan {
    Matrix<F> map;       // ring coordinates -> End(A), block i = E(e_i)
    Subspace<F> end_b;   // B-linear endomorphisms of A
    size_t rank = 0;
    bool bijective = false;
    std::string witness;
};

/// *can(f)(a) = a_[0]f(a_[1]) into _BEnd(A).
template <class F>
StarCan<F> star_can(const HomDual<F>& hom, const Subspace<F>& b) {
    const auto& ca = hom.comodule_algebra();
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    size_t na = a.dim();
    Matrix<F> cons(f, b.dim() * na * na, na * na);
    std::vector<Matrix<F>> lb;
    for (const auto& v : b.basis())
        lb.push_back(a.left_mult(v));
    for (size_t col = 0; col < na * na; ++col) {
        Matrix<F> e(f, na, na);
        e(col % na, col / na) = f.one();
        Vec<F> r = zero_vector(f, b.dim() * na * na);
        for (size_t s = 0; s < lb.size(); ++s) {
            Matrix<F> d = e * lb[s] - lb[s] * e;
            for (size_t i = 0; i < na; ++i)
                for (size_t k = 0; k < na; ++k)
                    r[(s * na + i) * na + k] = d(k, i);
        }
        cons.set_column(col, r);
    }
    StarCan<F> out{Matrix<F>(f, na * na, hom.dim()), kernel(cons)};
    for (size_t i = 0; i < hom.dim(); ++i) {
        Vec<F> col = zero_vector(f, na * na);
        for (size_t x = 0; x < na; ++x)
            detail::add_block(col, x, hom.act_on_algebra(a.basis(x), hom.carrier().basis_vector(i)), f.one());
        if (!out.end_b.contains(col))
            throw InconsistencyError("*can(f) is not B-linear");
        out.map.set_column(i, col);
    }
    out.rank = rank(out.map);
    out.bijective = out.rank == hom.dim() && out.end_b.dim() == hom.dim();
    if (out.rank < hom.dim())
        out.witness = "rank " + std::to_string(out.rank) + " < dim Hom(H, A) = " + std::to_string(hom.dim());
    else if (!out.bijective)
        out.witness = "rank " + std::to_string(out.rank) + " < dim _BEnd(A) = " + std::to_string(out.end_b.dim());
    return out;
}

struct Progenerator {
    bool projective = false;
    bool generator = false;
    std::string witness;
    bool holds() const { return projective && generator; }
};

/// A as a left B-module: generator when the images of all f in Hom_B(A, B)
/// span B, projective when sum_k f_k(a)m_k = a has a solution (dual basis).
template <class F>
Progenerator left_progenerator(const FinAlgebra<F>& a, const Subspace<F>& b) {
    const auto& f = a.field();
    size_t na = a.dim(), db = b.dim();
    // f: A -> B in B coordinates, block i = f(e_i)
    std::vector<Matrix<F>> la, lbb;
    for (const auto& v : b.basis()) {
        la.push_back(a.left_mult(v));
        Matrix<F> m(f, db, db);
        for (size_t k = 0; k < db; ++k)
            m.set_column(k, b.coordinates_or_throw(a.mul(v, b.basis_vector(k)), "B not closed"));
        lbb.push_back(std::move(m));
    }
    Matrix<F> cons(f, db * na * db, na * db);
    for (size_t col = 0; col < na * db; ++col) {
        size_t jj = col / db, comp = col % db;
        Vec<F> r = zero_vector(f, db * na * db);
        for (size_t s = 0; s < db; ++s)
            for (size_t i = 0; i < na; ++i) {
                size_t base = (s * na + i) * db;
                if (!is_zero(la[s](jj, i)))
                    r[base + comp] += la[s](jj, i);
                if (i == jj)
                    for (size_t k = 0; k < db; ++k)
                        if (!is_zero(lbb[s](k, comp)))
                            r[base + k] -= lbb[s](k, comp);
            }
        cons.set_column(col, r);
    }
    auto hom = kernel(cons);
    Progenerator out;
    Subspace<F> trace(f, db);
    for (const auto& h : hom.basis())
        for (size_t i = 0; i < na; ++i)
            trace.insert(detail::block(h, i, db));
    out.generator = trace.dim() == db;
    // unknowns m_k in A for each Hom basis element; equations per e_i
    size_t nk = hom.dim();
    Matrix<F> sys(f, na * na, nk * na);
    Vec<F> rhs = zero_vector(f, na * na);
    for (size_t i = 0; i < na; ++i) {
        rhs[i * na + i] = f.one();
        for (size_t k = 0; k < nk; ++k) {
            Matrix<F> l = a.left_mult(b.from_coordinates(detail::block(hom.basis_vector(k), i, db)));
            for (size_t r = 0; r < na; ++r)
                for (size_t c = 0; c < na; ++c)
                    if (!is_zero(l(r, c)))
                        sys(i * na + r, k * na + c) += l(r, c);
        }
    }
    out.projective = solve(sys, rhs).has_value();
    if (!out.projective)
        out.witness = "no dual basis";
    else if (!out.generator)
        out.witness = "trace ideal dim " + std::to_string(trace.dim()) + " < dim B = " + std::to_string(db);
    return out;
}

/// C = Im(g) is a direct summand of the free left A-module A (x) H when g is
/// left A-linear, and a generator when the trace ideal of *C is A.
template <class F>
Progenerator coring_progenerator(const ComoduleCoring<F>& cc, const CoringDual<F>& star) {
    const auto& ca = cc.comodule_algebra();
    const auto& f = ca.field();
    const auto& a = ca.algebra();
    Progenerator out;
    out.projective = true;
    for (size_t x = 0; x < a.dim() && out.projective; ++x) {
        Matrix<F> lx = kron(a.left_mult_basis(x), Matrix<F>::identity(f, ca.dim_h()));
        out.projective = lx * cc.projection() == cc.projection() * lx;
    }
    auto trace = star.trace_ideal();
    out.generator = trace.contains(a.unit());
    if (!out.projective)
        out.witness = "g is not left A-linear";
    else if (!out.generator)
        out.witness = "trace ideal dim " + std::to_string(trace.dim()) + " < dim A = " + std::to_string(a.dim());
    return out;
}

struct Theorem25 {
    bool c_progenerator = false;
    bool b_is_t = false;
    bool item1 = false;  // can bijective, A left B-progenerator
    bool item2 = false;  // *can bijective, A left B-progenerator
    bool item3 = false;  // B = T, strict context
    bool item4 = false;  // B = T, sampled equivalence
    bool tau_surjective = false;
    std::vector<Check> checks;
};

inline std::string b_versus_t(size_t db, size_t dt) {
    return "B ≠ T: dim B = " + std::to_string(db) + " < dim T = " + std::to_string(dt);
}

inline const std::vector<std::string>& equivalence_samples() {
    static const std::vector<std::string> all = {"zeta_A", "zeta_C", "nu_B", "nu_A"};
    return all;
}

/// The four equivalent conditions for B in T. Items (1), (2) and (3) must agree
/// whenever C is a left A-progenerator; item (4) is sampled on the named
/// adjunction maps, a subset of zeta_A, zeta_C, nu_B and nu_A.
template <class F>
Theorem25 theorem25_harness(const ComoduleAlgebra<F>& ca, const Subspace<F>& b,
                            const std::vector<std::string>& sample_names = equivalence_samples()) {
    for (const auto& n : sample_names)
        if (std::find(equivalence_samples().begin(), equivalence_samples().end(), n) == equivalence_samples().end())
            throw PreconditionError("unknown sample " + n);
    const auto& a = ca.algebra();
    auto t = coinvariants(ca);
    require_subring_of(a, b, t);
    ComoduleCoring<F> cc(ca);
    CoringDual<F> star(cc.coring());
    HomDual<F> hom(ca);
    auto can = canonical_map(cc, b);
    auto sc = star_can(hom, b);
    auto pa = left_progenerator(a, b);
    auto pc = coring_progenerator(cc, star);
    auto ctx = morita_context(hom, b);
    if (can.bijective && !sc.bijective)
        throw InconsistencyError("can is bijective but *can is not");
    Theorem25 out;
    out.c_progenerator = pc.holds();
    out.b_is_t = ctx.b_is_t;
    out.tau_surjective = ctx.tau_surjective;
    out.item1 = can.bijective && pa.holds();
    out.item2 = sc.bijective && pa.holds();
    out.item3 = ctx.b_is_t && ctx.strict;
    std::vector<std::pair<std::string, bool>> samples;
    for (const auto& n : sample_names) {
        bool ok = n == "zeta_A"   ? adjunction_counit(RelativeHopfModule<F>::regular(ca), b).bijective
                  : n == "zeta_C" ? adjunction_counit(coring_as_module(cc), b).bijective
                  : n == "nu_B"   ? adjunction_unit(ca, b, subring_regular(a, b)).bijective
                                  : adjunction_unit(ca, b, restricted_algebra(a, b)).bijective;
        samples.emplace_back(n, ok);
    }
    bool all = true;
    std::string desc;
    for (const auto& [name, ok] : samples) {
        all = all && ok;
        desc += (desc.empty() ? "" : ", ") + name + (ok ? " bijective" : " not bijective");
    }
    out.item4 = ctx.b_is_t && all;
    std::string bt = ctx.b_is_t ? "" : b_versus_t(b.dim(), t.dim());
    auto first = [](std::initializer_list<std::string> ws) {
        for (const auto& w : ws)
            if (!w.empty())
                return w;
        return std::string();
    };
    out.checks.push_back(check_of("C left A-progenerator", "C = Im(g) summand of A (x) H, sum phi(C) = A",
                                  pc.holds(), pc.witness));
    out.checks.push_back(check_of("B = T", "T = A^coH", ctx.b_is_t, bt));
    out.checks.push_back(check_of("can bijective", "can(a (x)_B b) = ab_[0] (x) b_[1]", can.bijective, can.witness));
    out.checks.push_back(check_of("A left B-progenerator", "sum_k f_k(a)m_k = a, sum f(A) = B", pa.holds(),
                                  pa.witness));
    out.checks.push_back(check_of("*can bijective", "*can(f)(a) = a_[0]f(a_[1])", sc.bijective, sc.witness));
    out.checks.push_back(check_of("tau surjective", "1_[0]q(1_[1]) = 1 for some q in Q", ctx.tau_surjective,
                                  ctx.tau_surjective ? "" : ctx.witness));
    out.checks.push_back(check_of("Morita context strict", "tau(a (x) q) = a_[0]q(a_[1]), mu(q (x) a) = q#j(a)",
                                  ctx.strict, ctx.witness));
    out.checks.push_back(check_of("Morita context laws", "tau(a (x) q)a' = a.mu(q (x) a')", ctx.laws.ok(),
                                  ctx.laws.ok() ? "" : ctx.laws.describe()));
    out.checks.push_back(check_of("Galois and A left B-progenerator", "can bijective, A left B-progenerator",
                                  out.item1, first({can.witness, pa.witness})));
    out.checks.push_back(check_of("*can bijective and A left B-progenerator",
                                  "*can bijective, A left B-progenerator", out.item2, first({sc.witness, pa.witness})));
    out.checks.push_back(check_of("B = T and strict context", "B = T, (B, Hom(H, A), A, Q, tau, mu) strict",
                                  out.item3, first({bt, ctx.witness})));
    out.checks.push_back({"B = T and module category equivalence", "M -> M^co (x)_B A, N -> (N (x)_B A)^co",
                          Outcome::sampled, ctx.b_is_t ? desc : bt + "; " + desc});
    if (!ctx.laws)
        throw InconsistencyError("Morita context laws fail: " + ctx.laws.describe());
    if (out.c_progenerator && (out.item1 != out.item2 || out.item1 != out.item3))
        throw InconsistencyError("equivalent conditions disagree: " + std::to_string(out.item1) +
                                 std::to_string(out.item2) + std::to_string(out.item3));
    return out;
}

}  // namespace wgalois
