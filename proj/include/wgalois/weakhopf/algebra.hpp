#pragma once

#include "wgalois/exactla/linalg.hpp"
#include "wgalois/exactla/tensor.hpp"
#include "wgalois/verdict.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wgalois {

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_k c_ij^k e_k and a unit vector.
template <class F>
class FinAlgebra {
public:
    using Scalar = typename F::Scalar;

    FinAlgebra(F field, BilinearTable<F> table, Vec<F> unit, std::vector<std::string> labels = {})
        : field_(std::move(field)), table_(std::move(table)), unit_(std::move(unit)), labels_(std::move(labels)) {
        size_t n = table_.out;
        if (table_.left != n || table_.right != n || table_.table.size() != n * n)
            throw std::invalid_argument("algebra: structure constants are not n x n -> n");
        if (unit_.size() != n)
            throw std::invalid_argument("algebra: unit has wrong length");
        if (labels_.empty())
            for (size_t i = 0; i < n; ++i)
                labels_.push_back("e" + std::to_string(i));
        if (labels_.size() != n)
            throw std::invalid_argument("algebra: label count mismatch");
    }

    /// Builds the table from a rule giving the product of two basis elements.
    static FinAlgebra from_rule(const F& field, size_t n, const std::function<Terms<F>(size_t, size_t)>& rule,
                                Vec<F> unit, std::vector<std::string> labels = {}) {
        BilinearTable<F> t;
        t.left = t.right = t.out = n;
        t.table.resize(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                t.table[i * n + j] = rule(i, j);
        return FinAlgebra(field, std::move(t), std::move(unit), std::move(labels));
    }

    const F& field() const { return field_; }
    size_t dim() const { return table_.out; }
    const BilinearTable<F>& table() const { return table_; }
    const Vec<F>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(size_t i) const { return labels_.at(i); }

    Vec<F> basis(size_t i) const { return unit_vector(field_, dim(), i); }
    Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const { return table_.apply(field_, x, y); }
    Vec<F> mul_basis(size_t i, size_t j) const {
        Vec<F> out = zero_vector(field_, dim());
        for (const auto& [k, c] : table_.at(i, j))
            out[k] += c;
        return out;
    }

    /// y -> x y
    Matrix<F> left_mult(const Vec<F>& x) const {
        Matrix<F> m(field_, dim(), dim());
        for (size_t i = 0; i < dim(); ++i) {
            if (is_zero(x[i]))
                continue;
            for (size_t j = 0; j < dim(); ++j)
                for (const auto& [k, c] : table_.at(i, j))
                    m(k, j) += x[i] * c;
        }
        return m;
    }
    /// y -> y x
    Matrix<F> right_mult(const Vec<F>& x) const {
        Matrix<F> m(field_, dim(), dim());
        for (size_t i = 0; i < dim(); ++i) {
            if (is_zero(x[i]))
                continue;
            for (size_t j = 0; j < dim(); ++j)
                for (const auto& [k, c] : table_.at(j, i))
                    m(k, j) += x[i] * c;
        }
        return m;
    }
    Matrix<F> left_mult_basis(size_t i) const { return left_mult(basis(i)); }
    Matrix<F> right_mult_basis(size_t i) const { return right_mult(basis(i)); }

    /// Multiplication as a linear map A (x) A -> A.
    Matrix<F> mult_matrix() const {
        size_t n = dim();
        Matrix<F> m(field_, n, n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : table_.at(i, j))
                    m(k, i * n + j) = c;
        return m;
    }

    /// Multiplies out an element of A^{(x) r} into A.
    Vec<F> multiply_out(const Vec<F>& t, size_t r) const {
        size_t n = dim();
        Vec<F> out = zero_vector(field_, n);
        for (const auto& [idx, c] : nonzeros<F>(t)) {
            std::vector<size_t> f(r);
            size_t rem = idx;
            for (size_t s = r; s-- > 0;) {
                f[s] = rem % n;
                rem /= n;
            }
            Vec<F> acc = basis(f[0]);
            for (size_t s = 1; s < r; ++s)
                acc = mul(acc, basis(f[s]));
            add_scaled(out, acc, c);
        }
        return out;
    }

    Verdict verify() const {
        size_t n = dim();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<F> ij = mul_basis(i, j);
                for (size_t l = 0; l < n; ++l) {
                    Vec<F> lhs = mul(ij, basis(l));
                    Vec<F> rhs = mul(basis(i), mul_basis(j, l));
                    if (lhs != rhs)
                        return Verdict::fail("associativity",
                                             "(" + label(i) + " " + label(j) + ") " + label(l));
                }
            }
        for (size_t i = 0; i < n; ++i) {
            if (mul(unit_, basis(i)) != basis(i))
                return Verdict::fail("left unit law", "1 " + label(i));
            if (mul(basis(i), unit_) != basis(i))
                return Verdict::fail("right unit law", label(i) + " 1");
        }
        return Verdict::pass();
    }

    /// A subspace that contains 1 and is closed under multiplication.
    Verdict check_unital_subalgebra(const Subspace<F>& b) const {
        if (b.ambient_dim() != dim())
            return Verdict::fail("subring ambient", "subspace lives in dimension " + std::to_string(b.ambient_dim()));
        if (!b.contains(unit_))
            return Verdict::fail("subring unit", "1 is not in the subspace");
        for (size_t i = 0; i < b.dim(); ++i)
            for (size_t j = 0; j < b.dim(); ++j)
                if (!b.contains(mul(b.basis_vector(i), b.basis_vector(j))))
                    return Verdict::fail("subring closure",
                                         "product of basis vectors " + std::to_string(i) + " and " +
                                             std::to_string(j) + " leaves the subspace");
        return Verdict::pass();
    }

    bool operator==(const FinAlgebra& o) const {
        if (dim() != o.dim() || unit_ != o.unit_)
            return false;
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j)
                if (mul_basis(i, j) != o.mul_basis(i, j))
                    return false;
        return true;
    }

private:
    F field_;
    BilinearTable<F> table_;
    Vec<F> unit_;
    std::vector<std::string> labels_;
};

/// Formats a vector as a sparse combination of labelled basis elements.
template <class F>
std::string format_vector(const F& field, const Vec<F>& v, const std::vector<std::string>& labels = {}) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i]))
            continue;
        if (!s.empty())
            s += " + ";
        std::string c = field.to_string(v[i]);
        std::string lab = i < labels.size() ? labels[i] : "e" + std::to_string(i);
        s += (c == "1" ? "" : c + "*") + lab;
    }
    return s.empty() ? "0" : s;
}

}  // namespace wgalois
