#pragma once

#include "wgalois/weakhopf/algebra.hpp"

namespace wgalois {

/// M_n(k) on matrix units E_ij (id i * n + j), E_ij E_kl = delta_jk E_il.
template <class F>
FinAlgebra<F> matrix_algebra(const F& field, size_t n) {
    if (n == 0)
        throw std::invalid_argument("matrix_algebra: n must be positive");
    Vec<F> unit = zero_vector(field, n * n);
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) {
        unit[i * n + i] = field.one();
        for (size_t j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
    return FinAlgebra<F>::from_rule(
        field, n * n,
        [&](size_t a, size_t b) {
            Terms<F> t;
            if (a % n == b / n)
                t.emplace_back((a / n) * n + b % n, field.one());
            return t;
        },
        unit, labels);
}

/// k[x]/(x^n) on monomials 1, x, ..., x^{n-1}.
template <class F>
FinAlgebra<F> truncated_polynomial(const F& field, size_t n) {
    if (n == 0)
        throw std::invalid_argument("truncated_polynomial: n must be positive");
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    return FinAlgebra<F>::from_rule(
        field, n,
        [&](size_t a, size_t b) {
            Terms<F> t;
            if (a + b < n)
                t.emplace_back(a + b, field.one());
            return t;
        },
        unit_vector(field, n, 0), labels);
}

/// k^n with coordinatewise multiplication, basis of primitive idempotents.
template <class F>
FinAlgebra<F> diagonal_algebra(const F& field, size_t n) {
    if (n == 0)
        throw std::invalid_argument("diagonal_algebra: n must be positive");
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        labels.push_back("p" + std::to_string(i));
    return FinAlgebra<F>::from_rule(
        field, n,
        [&](size_t a, size_t b) {
            Terms<F> t;
            if (a == b)
                t.emplace_back(a, field.one());
            return t;
        },
        Vec<F>(n, field.one()), labels);
}

}  // namespace wgalois
