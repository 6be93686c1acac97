#pragma once

#include "wgalois/exactla/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wgalois {

template <class F>
struct Echelon {
    Matrix<F> reduced;
    std::vector<size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form. Entries are exact;
/// the row space is preserved.
template <class F>
Echelon<F> rref(Matrix<F> m) {
    using S = typename F::Scalar;
    const F& field = m.field();
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        size_t p = lead;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != lead)
            for (size_t j = c; j < m.cols(); ++j)
                std::swap(m(p, j), m(lead, j));
        S inv = inverse(m(lead, c));
        for (size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(lead, j)))
                m(lead, j) *= inv;
        std::vector<size_t> nz;
        for (size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(lead, j)))
                nz.push_back(j);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || is_zero(m(r, c)))
                continue;
            S f = m(r, c);
            for (size_t j : nz)
                m(r, j) -= f * m(lead, j);
        }
        pivots.push_back(c);
        ++lead;
    }
    (void)field;
    return {std::move(m), std::move(pivots)};
}

template <class F>
size_t rank(const Matrix<F>& m) {
    return rref(m).pivots.size();
}

/// A linear subspace of k^n stored by its reduced echelon basis: each basis
/// vector has a 1 in its pivot column and zeros in every other pivot column.
template <class F>
class Subspace {
public:
    using Scalar = typename F::Scalar;

    Subspace(F field, size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    static Subspace zero(const F& field, size_t ambient) { return Subspace(field, ambient); }
    static Subspace full(const F& field, size_t ambient) {
        Subspace s(field, ambient);
        for (size_t i = 0; i < ambient; ++i)
            s.insert(unit_vector(field, ambient, i));
        return s;
    }
    static Subspace span(const F& field, size_t ambient, const std::vector<Vec<F>>& vectors) {
        Subspace s(field, ambient);
        for (const auto& v : vectors)
            s.insert(v);
        return s;
    }
    static Subspace row_space(const Matrix<F>& m) {
        auto e = rref(m);
        Subspace s(m.field(), m.cols());
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            s.basis_.push_back(e.reduced.row(i));
            s.pivots_.push_back(e.pivots[i]);
        }
        return s;
    }

    const F& field() const { return field_; }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const Vec<F>& basis_vector(size_t i) const { return basis_.at(i); }
    const std::vector<Vec<F>>& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Rows are the basis vectors.
    Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(field_, basis_, ambient_); }
    /// Columns are the basis vectors: maps subspace coordinates to ambient.
    Matrix<F> inclusion() const { return Matrix<F>::from_columns(field_, basis_, ambient_); }

    /// Reduce v against the basis; the result vanishes iff v lies in the span.
    Vec<F> reduce(Vec<F> v) const {
        check_length(v);
        for (size_t i = 0; i < basis_.size(); ++i) {
            Scalar c = v[pivots_[i]];
            if (!is_zero(c))
                add_scaled(v, basis_[i], Scalar(-c));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vector(reduce(v)); }

    /// Coordinates of a member vector in the echelon basis (its pivot entries).
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        if (!contains(v))
            return std::nullopt;
        Vec<F> c;
        c.reserve(pivots_.size());
        for (size_t p : pivots_)
            c.push_back(v[p]);
        return c;
    }

    Vec<F> coordinates_or_throw(const Vec<F>& v, const char* what) const {
        auto c = coordinates(v);
        if (!c)
            throw std::logic_error(std::string(what) + ": vector outside subspace");
        return *c;
    }

    Vec<F> from_coordinates(const Vec<F>& c) const {
        if (c.size() != basis_.size())
            throw std::invalid_argument("from_coordinates: length mismatch");
        Vec<F> v = zero_vector(field_, ambient_);
        for (size_t i = 0; i < c.size(); ++i)
            add_scaled(v, basis_[i], c[i]);
        return v;
    }

    /// Adds v to the spanning set. Returns true when the dimension grew.
    bool insert(Vec<F> v) {
        v = reduce(std::move(v));
        size_t q = 0;
        while (q < v.size() && is_zero(v[q]))
            ++q;
        if (q == v.size())
            return false;
        Scalar inv = inverse(v[q]);
        for (auto& x : v)
            if (!is_zero(x))
                x *= inv;
        for (auto& row : basis_) {
            Scalar c = row[q];
            if (!is_zero(c))
                add_scaled(row, v, Scalar(-c));
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), q) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, q);
        basis_.insert(basis_.begin() + pos, std::move(v));
        return true;
    }

    bool is_subspace_of(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            return false;
        for (const auto& b : basis_)
            if (!o.contains(b))
                return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw std::invalid_argument("subspace sum: ambient mismatch");
        Subspace s(*this);
        for (const auto& b : o.basis_)
            s.insert(b);
        return s;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
    }

private:
    void check_length(const Vec<F>& v) const {
        if (v.size() != ambient_)
            throw std::invalid_argument("subspace: vector of length " + std::to_string(v.size()) +
                                        " in ambient of dimension " + std::to_string(ambient_));
    }

    F field_;
    size_t ambient_;
    std::vector<Vec<F>> basis_;
    std::vector<size_t> pivots_;
};

/// Null space of m as a subspace of k^cols.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    auto e = rref(m);
    const F& field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vec<F>> vectors;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec<F> v = zero_vector(field, m.cols());
        v[free] = field.one();
        for (size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        vectors.push_back(std::move(v));
    }
    return Subspace<F>::span(field, m.cols(), vectors);
}

/// Column space of m as a subspace of k^rows.
template <class F>
Subspace<F> image(const Matrix<F>& m) {
    return Subspace<F>::row_space(m.transpose());
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    const F& field = m.field();
    Matrix<F> aug(field, m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vec<F> x = zero_vector(field, m.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> invert(const Matrix<F>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("invert: matrix is not square");
    size_t n = m.rows();
    Matrix<F> aug(m.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<F> inv(m.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// k^n modulo a subspace of relations. Quotient coordinates are the entries
/// at the non-pivot columns after reduction against the relations.
template <class F>
class QuotientSpace {
public:
    QuotientSpace(Subspace<F> relations)
        : relations_(std::move(relations)),
          projection_(relations_.field(), 0, 0),
          section_(relations_.field(), 0, 0) {
        const F& field = relations_.field();
        size_t n = relations_.ambient_dim();
        std::vector<bool> is_pivot(n, false);
        for (size_t p : relations_.pivots())
            is_pivot[p] = true;
        for (size_t j = 0; j < n; ++j)
            if (!is_pivot[j])
                free_.push_back(j);
        projection_ = Matrix<F>(field, free_.size(), n);
        section_ = Matrix<F>(field, n, free_.size());
        for (size_t q = 0; q < free_.size(); ++q) {
            projection_(q, free_[q]) = field.one();
            section_(free_[q], q) = field.one();
        }
        // v_j - sum_p v_p R_p[j]: subtract pivot contributions
        for (size_t i = 0; i < relations_.dim(); ++i) {
            const auto& row = relations_.basis_vector(i);
            size_t p = relations_.pivots()[i];
            for (size_t q = 0; q < free_.size(); ++q)
                if (!is_zero(row[free_[q]]))
                    projection_(q, p) -= row[free_[q]];
        }
    }

    const Subspace<F>& relations() const { return relations_; }
    size_t ambient_dim() const { return relations_.ambient_dim(); }
    size_t dim() const { return free_.size(); }
    const Matrix<F>& projection() const { return projection_; }
    const Matrix<F>& section() const { return section_; }

    Vec<F> project(const Vec<F>& v) const { return projection_.apply(v); }
    Vec<F> lift(const Vec<F>& q) const { return section_.apply(q); }
    bool same_class(const Vec<F>& a, const Vec<F>& b) const {
        return relations_.contains(difference(a, b));
    }

private:
    Subspace<F> relations_;
    std::vector<size_t> free_;
    Matrix<F> projection_;
    Matrix<F> section_;
};

template <class F>
QuotientSpace<F> quotient_by(const Subspace<F>& relations, size_t ambient) {
    if (relations.ambient_dim() != ambient)
        throw std::invalid_argument("quotient_by: relations live in a different ambient");
    return QuotientSpace<F>(relations);
}

/// M (x)_R N for a right R-module M and a left R-module N, each given by one
/// action matrix per R-basis element, realized as a quotient of M (x)_k N.
template <class F>
QuotientSpace<F> balanced_tensor(const F& field, size_t dim_m, size_t dim_n,
                                 const std::vector<Matrix<F>>& right_on_m,
                                 const std::vector<Matrix<F>>& left_on_n) {
    if (right_on_m.size() != left_on_n.size())
        throw std::invalid_argument("balanced_tensor: ring basis mismatch");
    size_t n = dim_m * dim_n;
    Subspace<F> rel(field, n);
    for (size_t r = 0; r < right_on_m.size(); ++r)
        for (size_t i = 0; i < dim_m; ++i)
            for (size_t j = 0; j < dim_n; ++j) {
                Vec<F> v = zero_vector(field, n);
                for (size_t k = 0; k < dim_m; ++k)
                    if (!is_zero(right_on_m[r](k, i)))
                        v[k * dim_n + j] += right_on_m[r](k, i);
                for (size_t l = 0; l < dim_n; ++l)
                    if (!is_zero(left_on_n[r](l, j)))
                        v[i * dim_n + l] -= left_on_n[r](l, j);
                rel.insert(std::move(v));
                if (rel.dim() == n)
                    return QuotientSpace<F>(rel);
            }
    return QuotientSpace<F>(rel);
}

}  // namespace wgalois
