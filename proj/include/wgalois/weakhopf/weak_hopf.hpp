#pragma once

#include "wgalois/weakhopf/algebra.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace wgalois {

/// Write-once memo shared between copies of an immutable value.
class VerdictCache {
public:
    template <class Fn>
    const Verdict& get(Fn&& compute) const {
        std::call_once(state_->once, [&] { state_->value = compute(); });
        return *state_->value;
    }

private:
    struct State {
        std::once_flag once;
        std::optional<Verdict> value;
    };
    std::shared_ptr<State> state_ = std::make_shared<State>();
};

template <class F>
struct Projections {
    Matrix<F> left;       // h -> eps(1_(1) h) 1_(2)
    Matrix<F> right;      // h -> 1_(1) eps(h 1_(2))
    Matrix<F> bar_left;   // h -> 1_(1) eps(1_(2) h)
    Matrix<F> bar_right;  // h -> eps(h 1_(1)) 1_(2)
};

/// Algebra plus coalgebra on the same basis. Delta is an n^2 x n matrix in the
/// kron ordering, the counit a 1 x n matrix. Constructed unverified; verify()
/// evaluates every axiom on basis tuples and memoizes the verdict.
template <class F>
class WeakBialgebra {
public:
    using Scalar = typename F::Scalar;

    WeakBialgebra(FinAlgebra<F> alg, Matrix<F> delta, Matrix<F> eps)
        : alg_(std::move(alg)), delta_(std::move(delta)), eps_(std::move(eps)) {
        size_t n = alg_.dim();
        if (delta_.rows() != n * n || delta_.cols() != n)
            throw std::invalid_argument("weak bialgebra: comultiplication must be n^2 x n");
        if (eps_.rows() != 1 || eps_.cols() != n)
            throw std::invalid_argument("weak bialgebra: counit must be 1 x n");
    }

    const F& field() const { return alg_.field(); }
    size_t dim() const { return alg_.dim(); }
    const FinAlgebra<F>& algebra() const { return alg_; }
    const Matrix<F>& delta() const { return delta_; }
    const Matrix<F>& counit_matrix() const { return eps_; }
    const std::vector<std::string>& labels() const { return alg_.labels(); }

    Vec<F> comul(const Vec<F>& h) const { return delta_.apply(h); }
    Vec<F> comul_basis(size_t i) const { return delta_.column(i); }
    Scalar counit(const Vec<F>& h) const { return eps_.apply(h)[0]; }
    Scalar counit_basis(size_t i) const { return eps_(0, i); }
    Vec<F> delta_one() const { return comul(alg_.unit()); }

    /// (Delta (x) id) Delta, i.e. the double comultiplication into H^{(x)3}.
    Vec<F> comul2(const Vec<F>& h) const { return apply_to_slot(delta_, comul(h), 1, dim()); }

    /// E(i, j) = eps(e_i e_j)
    const Matrix<F>& counit_products() const {
        std::call_once(cache_->e_once, [&] {
            size_t n = dim();
            Matrix<F> e(field(), n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (const auto& [k, c] : alg_.table().at(i, j))
                        e(i, j) += c * eps_(0, k);
            cache_->e = std::make_unique<Matrix<F>>(std::move(e));
        });
        return *cache_->e;
    }

    const Verdict& verify() const { return bialgebra_verdict_.get([&] { return compute_verdict(); }); }

    const Projections<F>& projections() const {
        std::call_once(cache_->p_once, [&] { cache_->p = std::make_unique<Projections<F>>(compute_projections()); });
        return *cache_->p;
    }

    /// Idempotency of the four projections and Im(Pi^L) = Im(bar Pi^R),
    /// Im(Pi^R) = Im(bar Pi^L).
    Verdict verify_projections() const {
        const auto& p = projections();
        const std::pair<const char*, const Matrix<F>*> all[] = {
            {"Pi^L", &p.left}, {"Pi^R", &p.right}, {"bar Pi^L", &p.bar_left}, {"bar Pi^R", &p.bar_right}};
        for (const auto& [name, m] : all)
            if (!(*m * *m == *m))
                return Verdict::fail("projection idempotency", std::string(name) + " is not idempotent");
        if (!(image(p.left) == image(p.bar_right)))
            return Verdict::fail("target subalgebra", "Im(Pi^L) != Im(bar Pi^R)");
        if (!(image(p.right) == image(p.bar_left)))
            return Verdict::fail("source subalgebra", "Im(Pi^R) != Im(bar Pi^L)");
        return Verdict::pass();
    }

    Subspace<F> target_left() const { return image(projections().left); }
    Subspace<F> target_right() const { return image(projections().right); }

    std::string label(size_t i) const { return alg_.label(i); }

private:
    Verdict compute_verdict() const {
        if (auto v = alg_.verify(); !v)
            return v;
        size_t n = dim();
        const auto& f = field();
        for (size_t i = 0; i < n; ++i) {
            Vec<F> h = alg_.basis(i);
            if (apply_to_slot(delta_, comul(h), 1, n) != apply_to_slot(delta_, comul(h), n, 1))
                return Verdict::fail("coassociativity", "(Delta (x) id) Delta != (id (x) Delta) Delta at " + label(i));
        }
        for (size_t i = 0; i < n; ++i) {
            Vec<F> d = comul_basis(i);
            Vec<F> l = apply_to_slot(eps_, d, 1, n), r = apply_to_slot(eps_, d, n, 1);
            if (l != alg_.basis(i) || r != alg_.basis(i))
                return Verdict::fail("counit law", "(eps (x) id) Delta or (id (x) eps) Delta differs from id at " +
                                                       label(i));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<F> lhs = comul(alg_.mul_basis(i, j));
                Vec<F> rhs = tensor_multiply<F>(f, {&alg_.table(), &alg_.table()}, comul_basis(i), comul_basis(j));
                if (lhs != rhs)
                    return Verdict::fail("multiplicative comultiplication",
                                         "Delta(hk) != Delta(h)Delta(k) at h = " + label(i) + ", k = " + label(j));
            }
        {
            Vec<F> d1 = delta_one();
            Vec<F> one = alg_.unit();
            Vec<F> dd = comul2(one);
            Vec<F> d1_1 = tensor_vectors(f, d1, one);  // Delta(1) (x) 1
            Vec<F> one_d1 = tensor_vectors(f, one, d1);  // 1 (x) Delta(1)
            const BilinearTable<F>* t3[] = {&alg_.table(), &alg_.table(), &alg_.table()};
            std::span<const BilinearTable<F>* const> tables(t3);
            if (dd != tensor_multiply<F>(f, tables, d1_1, one_d1))
                return Verdict::fail("weak unit (first form)", "Delta^2(1) != (Delta(1) (x) 1)(1 (x) Delta(1))");
            if (dd != tensor_multiply<F>(f, tables, one_d1, d1_1))
                return Verdict::fail("weak unit (second form)", "Delta^2(1) != (1 (x) Delta(1))(Delta(1) (x) 1)");
        }
        {
            const Matrix<F>& e = counit_products();
            for (size_t k = 0; k < n; ++k) {
                auto dk = nonzeros<F>(comul_basis(k));
                for (size_t h = 0; h < n; ++h) {
                    Vec<F> hk = alg_.mul_basis(h, k);
                    for (size_t l = 0; l < n; ++l) {
                        Scalar lhs = f.zero();
                        for (size_t m = 0; m < n; ++m)
                            if (!is_zero(hk[m]))
                                lhs += hk[m] * e(m, l);
                        Scalar first = f.zero(), second = f.zero();
                        for (const auto& [idx, c] : dk) {
                            size_t a = idx / n, b = idx % n;
                            first += c * e(h, a) * e(b, l);
                            second += c * e(h, b) * e(a, l);
                        }
                        if (!(lhs == first) || !(lhs == second))
                            return Verdict::fail("weak counit",
                                                 "eps(hkl) identity fails at h = " + label(h) + ", k = " + label(k) +
                                                     ", l = " + label(l));
                    }
                }
            }
        }
        return Verdict::pass();
    }

    Projections<F> compute_projections() const {
        size_t n = dim();
        const auto& f = field();
        const Matrix<F>& e = counit_products();
        auto d1 = nonzeros<F>(delta_one());
        Projections<F> p{Matrix<F>(f, n, n), Matrix<F>(f, n, n), Matrix<F>(f, n, n), Matrix<F>(f, n, n)};
        for (size_t h = 0; h < n; ++h)
            for (const auto& [idx, c] : d1) {
                size_t a = idx / n, b = idx % n;
                p.left(b, h) += c * e(a, h);
                p.right(a, h) += c * e(h, b);
                p.bar_left(a, h) += c * e(b, h);
                p.bar_right(b, h) += c * e(h, a);
            }
        return p;
    }

    struct Cache {
        std::once_flag e_once, p_once;
        std::unique_ptr<Matrix<F>> e;
        std::unique_ptr<Projections<F>> p;
    };

    FinAlgebra<F> alg_;
    Matrix<F> delta_;
    Matrix<F> eps_;
    VerdictCache bialgebra_verdict_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Weak bialgebra with an antipode.
template <class F>
class WeakHopfAlgebra : public WeakBialgebra<F> {
public:
    WeakHopfAlgebra(WeakBialgebra<F> wba, Matrix<F> antipode)
        : WeakBialgebra<F>(std::move(wba)), s_(std::move(antipode)) {
        if (s_.rows() != this->dim() || s_.cols() != this->dim())
            throw std::invalid_argument("weak Hopf algebra: antipode must be n x n");
    }

    const Matrix<F>& antipode() const { return s_; }
    const WeakBialgebra<F>& bialgebra() const { return *this; }

    /// Weak bialgebra axioms, then h_(1)S(h_(2)) = Pi^L(h), S(h_(1))h_(2) = Pi^R(h)
    /// and S(h_(1))h_(2)S(h_(3)) = S(h) on every basis element.
    const Verdict& verify() const { return hopf_verdict_.get([&] { return compute(); }); }

private:
    Verdict compute() const {
        if (auto v = WeakBialgebra<F>::verify(); !v)
            return v;
        size_t n = this->dim();
        const auto& alg = this->algebra();
        const auto& p = this->projections();
        for (size_t i = 0; i < n; ++i) {
            Vec<F> d = this->comul_basis(i);
            Vec<F> h1sh2 = alg.multiply_out(apply_to_slot(s_, d, n, 1), 2);
            if (h1sh2 != p.left.column(i))
                return Verdict::fail("antipode (left)", "h_(1)S(h_(2)) != Pi^L(h) at " + this->label(i));
            Vec<F> sh1h2 = alg.multiply_out(apply_to_slot(s_, d, 1, n), 2);
            if (sh1h2 != p.right.column(i))
                return Verdict::fail("antipode (right)", "S(h_(1))h_(2) != Pi^R(h) at " + this->label(i));
            Vec<F> d2 = this->comul2(alg.basis(i));
            d2 = apply_to_slot(s_, d2, 1, n * n);
            d2 = apply_to_slot(s_, d2, n * n, 1);
            if (alg.multiply_out(d2, 3) != s_.column(i))
                return Verdict::fail("antipode (triple)", "S(h_(1))h_(2)S(h_(3)) != S(h) at " + this->label(i));
        }
        return Verdict::pass();
    }

    Matrix<F> s_;
    VerdictCache hopf_verdict_;
};

}  // namespace wgalois
