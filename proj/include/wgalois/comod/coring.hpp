#pragma once

#include "wgalois/comod/comodule_algebra.hpp"

#include <functional>
#include <map>

namespace wgalois {

/// A-coring on a carrier k^m. Actions are one m x m matrix per A-basis
/// element. Delta is stored as a lift into C (x)_k C (m^2 x m, kron
/// ordering). Tensors over A are realized by injective maps
/// square(i, j) = [c_i (x)_A c_j] and cube(i, j, k) into concrete spaces.
template <class F>
class Coring {
public:
    using Square = std::function<Vec<F>(size_t, size_t)>;
    using Cube = std::function<Vec<F>(size_t, size_t, size_t)>;

    Coring(FinAlgebra<F> base, size_t m, std::vector<Matrix<F>> left, std::vector<Matrix<F>> right, Matrix<F> counit,
           Matrix<F> delta, Square square, Cube cube)
        : base_(std::move(base)),
          m_(m),
          left_(std::move(left)),
          right_(std::move(right)),
          counit_(std::move(counit)),
          delta_(std::move(delta)),
          square_(std::move(square)),
          cube_(std::move(cube)) {
        if (left_.size() != base_.dim() || right_.size() != base_.dim())
            throw std::invalid_argument("coring: one action matrix per base element");
        if (counit_.rows() != base_.dim() || counit_.cols() != m_ || delta_.rows() != m_ * m_ || delta_.cols() != m_)
            throw std::invalid_argument("coring: structure map shapes");
    }

    const F& field() const { return base_.field(); }
    const FinAlgebra<F>& base() const { return base_; }
    size_t dim() const { return m_; }
    const Matrix<F>& counit() const { return counit_; }
    const Matrix<F>& delta() const { return delta_; }
    const Matrix<F>& left_action(size_t a) const { return left_.at(a); }
    const Matrix<F>& right_action(size_t a) const { return right_.at(a); }

    Matrix<F> left_by(const Vec<F>& a) const { return combine(left_, a); }
    Matrix<F> right_by(const Vec<F>& a) const { return combine(right_, a); }

    Vec<F> comul(const Vec<F>& c) const { return delta_.apply(c); }

    /// Class of a lift in C (x)_k C inside the realization of C (x)_A C.
    Vec<F> realize2(const Vec<F>& t) const {
        Vec<F> out;
        for (const auto& [idx, c] : nonzeros<F>(t)) {
            const Vec<F>& s = square_cached(idx / m_, idx % m_);
            if (out.empty())
                out = zero_vector(field(), s.size());
            add_scaled(out, s, c);
        }
        return out;
    }

    Vec<F> realize3(const Vec<F>& t) const {
        Vec<F> out;
        for (const auto& [idx, c] : nonzeros<F>(t)) {
            Vec<F> s = cube_(idx / (m_ * m_), (idx / m_) % m_, idx % m_);
            if (out.empty())
                out = zero_vector(field(), s.size());
            add_scaled(out, s, c);
        }
        return out;
    }

    bool same_in_square(const Vec<F>& t, const Vec<F>& u) const { return equal_or_both_zero(realize2(t), realize2(u)); }
    bool same_in_cube(const Vec<F>& t, const Vec<F>& u) const { return equal_or_both_zero(realize3(t), realize3(u)); }

    /// C (x)_A C as C (x)_k C modulo the kernel of the realization.
    const QuotientSpace<F>& tensor_square() const {
        std::call_once(cache_->q_once, [&] {
            size_t n = m_ * m_;
            size_t len = square_cached(0, 0).size();
            Matrix<F> r(field(), len, n);
            for (size_t i = 0; i < m_; ++i)
                for (size_t j = 0; j < m_; ++j)
                    r.set_column(i * m_ + j, square_cached(i, j));
            cache_->q = std::make_unique<QuotientSpace<F>>(quotient_by(kernel(r), n));
        });
        return *cache_->q;
    }

    /// Bimodule laws, counit and comultiplication are bimodule maps,
    /// coassociativity and the counit law.
    const Verdict& verify() const { return verdict_.get([&] { return compute(); }); }

    /// Delta(x) = x (x)_A x and eps(x) = 1.
    Verdict check_grouplike(const Vec<F>& x) const {
        if (!same_in_square(comul(x), tensor_vectors(field(), x, x)))
            return Verdict::fail("grouplike", "Delta(x) != x (x) x");
        if (counit_.apply(x) != base_.unit())
            return Verdict::fail("grouplike", "eps(x) != 1");
        return Verdict::pass();
    }

private:
    static bool equal_or_both_zero(const Vec<F>& a, const Vec<F>& b) {
        if (a.empty() || b.empty())
            return (a.empty() || is_zero_vector(a)) && (b.empty() || is_zero_vector(b));
        return a == b;
    }

    Matrix<F> combine(const std::vector<Matrix<F>>& ms, const Vec<F>& a) const {
        Matrix<F> out(field(), m_, m_);
        for (size_t i = 0; i < a.size(); ++i)
            if (!is_zero(a[i]))
                for (size_t r = 0; r < m_; ++r)
                    for (size_t c = 0; c < m_; ++c)
                        if (!is_zero(ms[i](r, c)))
                            out(r, c) += a[i] * ms[i](r, c);
        return out;
    }

    const Vec<F>& square_cached(size_t i, size_t j) const {
        std::lock_guard lock(cache_->mu);
        auto it = cache_->squares.find({i, j});
        if (it == cache_->squares.end())
            it = cache_->squares.emplace(std::pair{i, j}, square_(i, j)).first;
        return it->second;
    }

    Verdict compute() const {
        size_t na = base_.dim();
        const auto& f = field();
        Matrix<F> id = Matrix<F>::identity(f, m_);
        if (!(left_by(base_.unit()) == id) || !(right_by(base_.unit()) == id))
            return Verdict::fail("bimodule unit", "1 does not act as the identity");
        for (size_t a = 0; a < na; ++a)
            for (size_t b = 0; b < na; ++b) {
                Vec<F> ab = base_.mul_basis(a, b);
                std::string w = "a = " + base_.label(a) + ", b = " + base_.label(b);
                if (!(left_[a] * left_[b] == left_by(ab)))
                    return Verdict::fail("left module associativity", w);
                if (!(right_[b] * right_[a] == right_by(ab)))
                    return Verdict::fail("right module associativity", w);
                if (!(left_[a] * right_[b] == right_[b] * left_[a]))
                    return Verdict::fail("bimodule commutation", w);
            }
        for (size_t a = 0; a < na; ++a) {
            if (!(counit_ * left_[a] == base_.left_mult_basis(a) * counit_))
                return Verdict::fail("counit is left linear", "a = " + base_.label(a));
            if (!(counit_ * right_[a] == base_.right_mult_basis(a) * counit_))
                return Verdict::fail("counit is right linear", "a = " + base_.label(a));
        }
        for (size_t a = 0; a < na; ++a)
            for (size_t k = 0; k < m_; ++k) {
                Vec<F> dk = delta_.column(k);
                if (!same_in_square(comul(left_[a].column(k)), apply_to_slot(left_[a], dk, 1, m_)))
                    return Verdict::fail("comultiplication is left linear", "a = " + base_.label(a) + ", c" +
                                                                                 std::to_string(k));
                if (!same_in_square(comul(right_[a].column(k)), apply_to_slot(right_[a], dk, m_, 1)))
                    return Verdict::fail("comultiplication is right linear", "a = " + base_.label(a) + ", c" +
                                                                                  std::to_string(k));
            }
        for (size_t k = 0; k < m_; ++k) {
            Vec<F> dk = delta_.column(k);
            if (!same_in_cube(apply_to_slot(delta_, dk, 1, m_), apply_to_slot(delta_, dk, m_, 1)))
                return Verdict::fail("coring coassociativity", "c" + std::to_string(k));
            Vec<F> l = zero_vector(f, m_), r = zero_vector(f, m_);
            for (const auto& [idx, c] : nonzeros<F>(dk)) {
                size_t i = idx / m_, j = idx % m_;
                Vec<F> ej = counit_.column(j), ei = counit_.column(i);
                add_scaled(l, right_by(ej).column(i), c);
                add_scaled(r, left_by(ei).column(j), c);
            }
            Vec<F> ck = unit_vector(f, m_, k);
            if (l != ck || r != ck)
                return Verdict::fail("coring counit law", "c" + std::to_string(k));
        }
        return Verdict::pass();
    }

    struct Cache {
        std::once_flag q_once;
        std::unique_ptr<QuotientSpace<F>> q;
        std::mutex mu;
        std::map<std::pair<size_t, size_t>, Vec<F>> squares;
    };

    FinAlgebra<F> base_;
    size_t m_;
    std::vector<Matrix<F>> left_, right_;
    Matrix<F> counit_;
    Matrix<F> delta_;
    Square square_;
    Cube cube_;
    VerdictCache verdict_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The coring C = Im(g) inside A (x) H, g(a (x) h) = a1_[0] (x) h1_[1], with
/// the grouplike rho(1).
template <class F>
class ComoduleCoring {
public:
    explicit ComoduleCoring(const ComoduleAlgebra<F>& ca) : ca_(ca), g_(ca.field(), 0, 0), carrier_(ca.field(), 0) {
        require_verified(ca_);
        const auto& f = ca_.field();
        size_t na = ca_.dim_a(), nh = ca_.dim_h(), n = na * nh;
        Vec<F> r1 = ca_.rho_one();
        g_ = Matrix<F>(f, n, n);
        for (size_t i = 0; i < n; ++i)
            g_.set_column(i, ca_.mul_ah(unit_vector(f, n, i), r1));
        if (!(g_ * g_ == g_))
            throw InconsistencyError("g is not idempotent");
        carrier_ = image(g_);
        for (size_t a = 0; a < na; ++a)
            if (!carrier_.contains(ca_.coact_basis(a)))
                throw InconsistencyError("rho(a) is not in Im(g)");
        size_t m = carrier_.dim();
        std::vector<Matrix<F>> left, right;
        for (size_t a = 0; a < na; ++a) {
            Matrix<F> l(f, m, m), r(f, m, m);
            Vec<F> ea1 = ca_.with_unit(ca_.algebra().basis(a));
            Vec<F> ra = ca_.coact_basis(a);
            for (size_t i = 0; i < m; ++i) {
                l.set_column(i, coords(ca_.mul_ah(ea1, carrier_.basis_vector(i))));
                r.set_column(i, coords(ca_.mul_ah(carrier_.basis_vector(i), ra)));
            }
            left.push_back(std::move(l));
            right.push_back(std::move(r));
        }
        Matrix<F> counit(f, na, m);
        for (size_t i = 0; i < m; ++i)
            counit.set_column(i, apply_to_slot(ca_.coalgebra().counit_matrix(), carrier_.basis_vector(i), na, 1));
        // (a (x) h_(1)) (x)_A (1 (x) h_(2)), each factor pushed into C by g
        Matrix<F> delta(f, m * m, m);
        std::map<size_t, Vec<F>> g_coords;
        auto gc = [&](size_t idx) -> const Vec<F>& {
            auto it = g_coords.find(idx);
            if (it == g_coords.end())
                it = g_coords.emplace(idx, coords(g_.column(idx))).first;
            return it->second;
        };
        const auto& h = ca_.coalgebra();
        std::vector<Vec<F>> dh, one_h;
        for (size_t q = 0; q < nh; ++q) {
            dh.push_back(h.comul_basis(q));
            one_h.push_back(coords(g_.apply(tensor_vectors(f, ca_.algebra().unit(), unit_vector(f, nh, q)))));
        }
        for (size_t i = 0; i < m; ++i) {
            Vec<F> col = zero_vector(f, m * m);
            for (const auto& [idx, c] : nonzeros<F>(carrier_.basis_vector(i))) {
                size_t a = idx / nh, hh = idx % nh;
                for (const auto& [pq, d] : nonzeros<F>(dh[hh])) {
                    size_t p = pq / nh, q = pq % nh;
                    add_scaled(col, tensor_vectors(f, gc(a * nh + p), one_h[q]), c * d);
                }
            }
            delta.set_column(i, col);
        }
        coring_ = std::make_shared<Coring<F>>(
            ca_.algebra(), m, std::move(left), std::move(right), std::move(counit), std::move(delta),
            [this](size_t i, size_t j) { return join(carrier_.basis_vector(i), 1, carrier_.basis_vector(j)); },
            [this](size_t i, size_t j, size_t k) {
                return join(join(carrier_.basis_vector(i), 1, carrier_.basis_vector(j)), 2,
                            carrier_.basis_vector(k));
            });
        grouplike_ = coords(r1);
    }

    ComoduleCoring(const ComoduleCoring&) = delete;
    ComoduleCoring& operator=(const ComoduleCoring&) = delete;

    const ComoduleAlgebra<F>& comodule_algebra() const { return ca_; }
    const Coring<F>& coring() const { return *coring_; }
    /// g as a matrix on A (x) H
    const Matrix<F>& projection() const { return g_; }
    const Subspace<F>& carrier() const { return carrier_; }
    size_t dim() const { return carrier_.dim(); }
    const Vec<F>& grouplike() const { return grouplike_; }

    Vec<F> coords(const Vec<F>& x) const { return carrier_.coordinates_or_throw(x, "element outside C"); }
    Vec<F> embed(const Vec<F>& c) const { return carrier_.from_coordinates(c); }

    /// x (x)_A y for x in A (x) H^r, y in A (x) H^s, realized in A (x) H^{r+s}:
    /// sum over y = e_b (x) e_K of x (id (x) Delta^{r-1}) rho(e_b) (x) e_K.
    Vec<F> join(const Vec<F>& x, size_t r, const Vec<F>& y) const {
        const auto& f = ca_.field();
        size_t na = ca_.dim_a(), nh = ca_.dim_h();
        size_t hr = power(nh, r);
        size_t hs = y.size() / na;
        Vec<F> out = zero_vector(f, na * hr * hs);
        std::vector<const BilinearTable<F>*> tables{&ca_.algebra().table()};
        for (size_t i = 0; i < r; ++i)
            tables.push_back(&ca_.coalgebra().algebra().table());
        std::span<const BilinearTable<F>* const> ts(tables);
        std::map<size_t, Vec<F>> xb;
        for (const auto& [idx, c] : nonzeros<F>(y)) {
            size_t b = idx / hs, kk = idx % hs;
            auto it = xb.find(b);
            if (it == xb.end())
                it = xb.emplace(b, tensor_multiply<F>(f, ts, x, iterated_coaction(b, r))).first;
            for (const auto& [j, v] : nonzeros<F>(it->second))
                out[j * hs + kk] += c * v;
        }
        return out;
    }

    /// (id (x) Delta^{r-1}) rho(e_b) in A (x) H^r
    Vec<F> iterated_coaction(size_t b, size_t r) const {
        Vec<F> v = ca_.coact_basis(b);
        for (size_t i = 1; i < r; ++i)
            v = apply_to_slot(ca_.coalgebra().delta(), v, ca_.dim_a() * power(ca_.dim_h(), i - 1), 1);
        return v;
    }

    /// The comultiplication written without the outer g, compared against the
    /// stored lift in the realization.
    Verdict check_delta_formula() const {
        const auto& f = ca_.field();
        size_t nh = ca_.dim_h();
        for (size_t i = 0; i < dim(); ++i) {
            Vec<F> direct;
            for (const auto& [idx, c] : nonzeros<F>(carrier_.basis_vector(i))) {
                size_t a = idx / nh, h = idx % nh;
                for (const auto& [pq, d] : nonzeros<F>(ca_.coalgebra().comul_basis(h))) {
                    size_t p = pq / nh, q = pq % nh;
                    Vec<F> x = unit_vector(f, ca_.dim_a() * nh, a * nh + p);
                    Vec<F> y = tensor_vectors(f, ca_.algebra().unit(), unit_vector(f, nh, q));
                    Vec<F> j = join(x, 1, y);
                    if (direct.empty())
                        direct = zero_vector(f, j.size());
                    add_scaled(direct, j, c * d);
                }
            }
            Vec<F> stored = coring_->realize2(coring_->delta().column(i));
            if (direct.empty())
                direct = zero_vector(f, stored.size());
            if (stored.empty())
                stored = zero_vector(f, direct.size());
            if (direct != stored)
                return Verdict::fail("coring comultiplication", "(a (x) h_(1)) (x) (1 (x) h_(2)) differs at c" +
                                                                     std::to_string(i));
        }
        return Verdict::pass();
    }

    Verdict verify() const {
        if (const auto& v = coring_->verify(); !v)
            return v;
        if (auto v = check_delta_formula(); !v)
            return v;
        return coring_->check_grouplike(grouplike_);
    }

private:
    static size_t power(size_t b, size_t e) {
        size_t r = 1;
        while (e--)
            r *= b;
        return r;
    }

    ComoduleAlgebra<F> ca_;
    Matrix<F> g_;
    Subspace<F> carrier_;
    std::shared_ptr<Coring<F>> coring_;
    Vec<F> grouplike_;
};

template <class F>
std::unique_ptr<ComoduleCoring<F>> build_coring(const ComoduleAlgebra<F>& ca) {
    return std::make_unique<ComoduleCoring<F>>(ca);
}

/// The canonical (Sweedler) coring A (x)_B A for a unital subalgebra B:
/// Delta(a (x) a') = (a (x) 1) (x)_A (1 (x) a'), eps(a (x) a') = aa'.
/// C (x)_A C and its cube are realized as A (x)_B A (x)_B A and the
/// fourfold analogue.
template <class F>
class CanonicalCoring {
public:
    CanonicalCoring(const FinAlgebra<F>& a, const Subspace<F>& b) : a_(a), b_(b) {
        if (auto v = a_.check_unital_subalgebra(b_); !v)
            throw PreconditionError("canonical coring: " + v.describe());
        const auto& f = a_.field();
        size_t n = a_.dim();
        d2_ = std::make_shared<QuotientSpace<F>>(tensor_over_b(2));
        d3_ = std::make_shared<QuotientSpace<F>>(tensor_over_b(3));
        d4_ = std::make_shared<QuotientSpace<F>>(tensor_over_b(4));
        size_t m = d2_->dim();
        Matrix<F> lift = d2_->section();
        std::vector<Matrix<F>> left, right;
        for (size_t x = 0; x < n; ++x) {
            Matrix<F> lx = kron(a_.left_mult_basis(x), Matrix<F>::identity(f, n));
            Matrix<F> rx = kron(Matrix<F>::identity(f, n), a_.right_mult_basis(x));
            left.push_back(d2_->projection() * lx * lift);
            right.push_back(d2_->projection() * rx * lift);
        }
        Matrix<F> counit = a_.mult_matrix() * lift;
        Matrix<F> delta(f, m * m, m);
        for (size_t i = 0; i < m; ++i) {
            Vec<F> col = zero_vector(f, m * m);
            for (const auto& [idx, c] : nonzeros<F>(lift.column(i))) {
                Vec<F> x = d2_->project(tensor_vectors(f, a_.basis(idx / n), a_.unit()));
                Vec<F> y = d2_->project(tensor_vectors(f, a_.unit(), a_.basis(idx % n)));
                add_scaled(col, tensor_vectors(f, x, y), c);
            }
            delta.set_column(i, col);
        }
        coring_ = std::make_shared<Coring<F>>(
            a_, m, std::move(left), std::move(right), std::move(counit), std::move(delta),
            [this](size_t i, size_t j) {
                return d3_->project(glue(element(i), element(j), 2));
            },
            [this](size_t i, size_t j, size_t k) {
                return d4_->project(glue(glue(element(i), element(j), 2), element(k), 2));
            });
    }

    CanonicalCoring(const CanonicalCoring&) = delete;
    CanonicalCoring& operator=(const CanonicalCoring&) = delete;

    const Coring<F>& coring() const { return *coring_; }
    const QuotientSpace<F>& tensor() const { return *d2_; }
    /// Class of 1 (x) 1, a grouplike.
    Vec<F> grouplike() const { return d2_->project(tensor_vectors(a_.field(), a_.unit(), a_.unit())); }

private:
    Vec<F> element(size_t i) const { return d2_->section().column(i); }

    /// x in A^{(x)r}, y in A^{(x)s}: multiply the last factor of x into the
    /// first factor of y, giving A^{(x)(r+s-1)}.
    Vec<F> glue(const Vec<F>& x, const Vec<F>& y, size_t s) const {
        const auto& f = a_.field();
        size_t n = a_.dim();
        size_t ys = 1;
        for (size_t i = 1; i < s; ++i)
            ys *= n;
        Vec<F> out = zero_vector(f, x.size() / n * y.size());
        for (const auto& [ix, c] : nonzeros<F>(x)) {
            size_t head = ix / n, last = ix % n;
            for (const auto& [iy, d] : nonzeros<F>(y)) {
                size_t first = iy / ys, tail = iy % ys;
                for (const auto& [k, e] : a_.table().at(last, first))
                    out[(head * n + k) * ys + tail] += c * d * e;
            }
        }
        return out;
    }

    /// A^{(x)r} modulo the B-balancing relations between consecutive factors.
    QuotientSpace<F> tensor_over_b(size_t r) const {
        const auto& f = a_.field();
        size_t n = a_.dim();
        size_t total = 1;
        for (size_t i = 0; i < r; ++i)
            total *= n;
        Subspace<F> rel(f, total);
        for (size_t slot = 0; slot + 1 < r; ++slot) {
            size_t outer = 1, inner = 1;
            for (size_t i = 0; i < slot; ++i)
                outer *= n;
            for (size_t i = slot + 2; i < r; ++i)
                inner *= n;
            for (const auto& bv : b_.basis()) {
                Matrix<F> d = kron(a_.right_mult(bv), Matrix<F>::identity(f, n)) -
                              kron(Matrix<F>::identity(f, n), a_.left_mult(bv));
                for (size_t j = 0; j < total; ++j) {
                    Vec<F> v = apply_to_slot(d, unit_vector(f, total, j), outer, inner);
                    if (!is_zero_vector(v))
                        rel.insert(std::move(v));
                }
            }
        }
        return QuotientSpace<F>(rel);
    }

    FinAlgebra<F> a_;
    Subspace<F> b_;
    std::shared_ptr<QuotientSpace<F>> d2_, d3_, d4_;
    std::shared_ptr<Coring<F>> coring_;
};

}  // namespace wgalois
