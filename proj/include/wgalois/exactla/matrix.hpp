#pragma once

#include "wgalois/exactla/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgalois {

/// Dense row-major matrix over an exact field. A matrix with `rows` rows and
/// `cols` columns represents a linear map k^cols -> k^rows acting on column
/// vectors.
template <class F>
class Matrix {
public:
    using Scalar = typename F::Scalar;

    Matrix(F field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, size_t n) {
        Matrix m(field, n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const F& field, const std::vector<std::vector<Scalar>>& rows,
                            size_t cols_if_empty = 0) {
        size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(field, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("from_rows: ragged rows");
            for (size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const F& field, const std::vector<std::vector<Scalar>>& columns,
                               size_t rows_if_empty = 0) {
        size_t rows = columns.empty() ? rows_if_empty : columns.front().size();
        Matrix m(field, rows, columns.size());
        for (size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw std::invalid_argument("from_columns: ragged columns");
            for (size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    const F& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> row(size_t r) const {
        return std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    std::vector<Scalar> column(size_t c) const {
        std::vector<Scalar> out;
        out.reserve(rows_);
        for (size_t r = 0; r < rows_; ++r)
            out.push_back((*this)(r, c));
        return out;
    }
    void set_column(size_t c, const std::vector<Scalar>& v) {
        if (v.size() != rows_)
            throw std::invalid_argument("set_column: length mismatch");
        for (size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = v[r];
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("apply: expected vector of length " + std::to_string(cols_) +
                                        ", got " + std::to_string(v.size()));
        std::vector<Scalar> out(rows_, field_.zero());
        for (size_t c = 0; c < cols_; ++c) {
            if (is_zero(v[c]))
                continue;
            for (size_t r = 0; r < rows_; ++r) {
                const Scalar& a = (*this)(r, c);
                if (!is_zero(a))
                    out[r] += a * v[c];
            }
        }
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(field_, o.field_);
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product: inner dimensions " + std::to_string(cols_) +
                                        " and " + std::to_string(o.rows_));
        Matrix out(field_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(i, k);
                if (is_zero(a))
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& b = o(k, j);
                    if (!is_zero(b))
                        out(i, j) += a * b;
                }
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const { return combine(o, true); }
    Matrix operator-(const Matrix& o) const { return combine(o, false); }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x))
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Matrix combine(const Matrix& o, bool add) const {
        require_same_field(field_, o.field_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix out(*this);
        for (size_t i = 0; i < data_.size(); ++i) {
            if (add)
                out.data_[i] += o.data_[i];
            else
                out.data_[i] -= o.data_[i];
        }
        return out;
    }

    F field_;
    size_t rows_;
    size_t cols_;
    std::vector<Scalar> data_;
};

/// Kronecker product. The basis of V (x) W is ordered v_i (x) w_j with i outer
/// and j inner, i.e. index i * dim W + j.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    require_same_field(a.field(), b.field());
    Matrix<F> out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a(i, j);
            if (is_zero(x))
                continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    if (!is_zero(b(k, l)))
                        out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return out;
}

}  // namespace wgalois
