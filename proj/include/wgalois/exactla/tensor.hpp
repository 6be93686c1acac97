#pragma once

#include "wgalois/exactla/matrix.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wgalois {

template <class F>
using Terms = std::vector<std::pair<size_t, typename F::Scalar>>;

template <class F>
Terms<F> nonzeros(const Vec<F>& v) {
    Terms<F> t;
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i]))
            t.emplace_back(i, v[i]);
    return t;
}

/// Bilinear map k^left x k^right -> k^out stored as sparse images of basis
/// pairs. Algebra multiplications and right module actions are both of this
/// form.
template <class F>
struct BilinearTable {
    size_t left = 0;
    size_t right = 0;
    size_t out = 0;
    std::vector<Terms<F>> table;  // index i * right + j

    const Terms<F>& at(size_t i, size_t j) const { return table[i * right + j]; }

    /// From a matrix of shape out x (left * right).
    static BilinearTable from_matrix(const Matrix<F>& m, size_t left, size_t right) {
        if (m.cols() != left * right)
            throw std::invalid_argument("bilinear table: shape mismatch");
        BilinearTable b;
        b.left = left;
        b.right = right;
        b.out = m.rows();
        b.table.resize(left * right);
        for (size_t c = 0; c < m.cols(); ++c)
            for (size_t r = 0; r < m.rows(); ++r)
                if (!is_zero(m(r, c)))
                    b.table[c].emplace_back(r, m(r, c));
        return b;
    }

    Vec<F> apply(const F& field, const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> res = zero_vector(field, out);
        auto xs = nonzeros<F>(x);
        auto ys = nonzeros<F>(y);
        for (const auto& [i, a] : xs)
            for (const auto& [j, b] : ys) {
                typename F::Scalar ab = a * b;
                for (const auto& [k, c] : at(i, j))
                    res[k] += ab * c;
            }
        return res;
    }
};

/// Factorwise product of tensors: x in (x)_f left_f, y in (x)_f right_f, the
/// result in (x)_f out_f, where factor f multiplies through tables[f]. Flat
/// indices use the outer-to-inner ordering of the factor list.
template <class F>
Vec<F> tensor_multiply(const F& field, std::span<const BilinearTable<F>* const> tables,
                       const Vec<F>& x, const Vec<F>& y) {
    size_t nf = tables.size();
    size_t lx = 1, ly = 1, lo = 1;
    for (auto* t : tables) {
        lx *= t->left;
        ly *= t->right;
        lo *= t->out;
    }
    if (x.size() != lx || y.size() != ly)
        throw std::invalid_argument("tensor_multiply: operand length mismatch");
    Vec<F> res = zero_vector(field, lo);
    auto xs = nonzeros<F>(x);
    auto ys = nonzeros<F>(y);
    std::vector<size_t> xi(nf), yi(nf);
    std::vector<const Terms<F>*> parts(nf);
    for (const auto& [ix, a] : xs) {
        size_t rem = ix;
        for (size_t f = nf; f-- > 0;) {
            xi[f] = rem % tables[f]->left;
            rem /= tables[f]->left;
        }
        for (const auto& [iy, b] : ys) {
            size_t r2 = iy;
            bool empty = false;
            for (size_t f = nf; f-- > 0;) {
                yi[f] = r2 % tables[f]->right;
                r2 /= tables[f]->right;
            }
            for (size_t f = 0; f < nf; ++f) {
                parts[f] = &tables[f]->at(xi[f], yi[f]);
                if (parts[f]->empty())
                    empty = true;
            }
            if (empty)
                continue;
            typename F::Scalar ab = a * b;
            // cartesian product over the factor images
            std::function<void(size_t, size_t, typename F::Scalar)> rec =
                [&](size_t f, size_t idx, typename F::Scalar coeff) {
                    if (f == nf) {
                        res[idx] += coeff;
                        return;
                    }
                    for (const auto& [k, c] : *parts[f])
                        rec(f + 1, idx * tables[f]->out + k, coeff * c);
                };
            rec(0, 0, ab);
        }
    }
    return res;
}

template <class F>
Vec<F> tensor_multiply(const F& field, std::initializer_list<const BilinearTable<F>*> tables,
                       const Vec<F>& x, const Vec<F>& y) {
    std::vector<const BilinearTable<F>*> t(tables);
    return tensor_multiply<F>(field, std::span<const BilinearTable<F>* const>(t), x, y);
}

/// Flat tensor of two vectors (i outer, j inner).
template <class F>
Vec<F> tensor_vectors(const F& field, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> out = zero_vector(field, a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i]))
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!is_zero(b[j]))
                out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

/// Applies a linear map to one tensor slot: v in k^outer (x) k^n (x) k^inner,
/// m of shape n' x n, result in k^outer (x) k^n' (x) k^inner.
template <class F>
Vec<F> apply_to_slot(const Matrix<F>& m, const Vec<F>& v, size_t outer, size_t inner) {
    size_t n = m.cols(), n2 = m.rows();
    if (v.size() != outer * n * inner)
        throw std::invalid_argument("apply_to_slot: length mismatch");
    Vec<F> out = zero_vector(m.field(), outer * n2 * inner);
    for (size_t o = 0; o < outer; ++o)
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < inner; ++i) {
                const auto& x = v[(o * n + j) * inner + i];
                if (is_zero(x))
                    continue;
                for (size_t r = 0; r < n2; ++r)
                    if (!is_zero(m(r, j)))
                        out[(o * n2 + r) * inner + i] += m(r, j) * x;
            }
    return out;
}

}  // namespace wgalois
