#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace wgalois {

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ScalarParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The field of rational numbers. Scalars are GMP rationals kept in lowest
/// terms with a positive denominator.
class Rationals {
public:
    using Scalar = mpq_class;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const { return Scalar(v); }

    Scalar parse(std::string_view text) const {
        std::string s(text);
        if (s.empty())
            throw ScalarParseError("empty scalar");
        Scalar q;
        auto slash = s.find('/');
        auto valid_int = [](std::string_view t) {
            if (t.empty())
                return false;
            size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size())
                return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9')
                    return false;
            return true;
        };
        if (slash == std::string::npos) {
            if (!valid_int(s))
                throw ScalarParseError("malformed rational '" + s + "'");
            q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s));
        } else {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
                throw ScalarParseError("malformed rational '" + s + "'");
            mpz_class d(den);
            if (d == 0)
                throw ScalarParseError("zero denominator in '" + s + "'");
            q = mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
            q.canonicalize();
        }
        return q;
    }

    std::string to_string(const Scalar& s) const { return s.get_str(); }
    std::string name() const { return "rationals"; }
    std::uint64_t characteristic() const { return 0; }

    bool operator==(const Rationals&) const { return true; }
};

inline bool is_zero(const mpq_class& s) { return sgn(s) == 0; }
inline mpq_class inverse(const mpq_class& s) {
    if (is_zero(s))
        throw std::domain_error("inverse of zero");
    return mpq_class(1) / s;
}

/// Residue class modulo a prime. Each value remembers its modulus so that
/// mixing residues of different fields is caught at runtime.
class Residue {
public:
    Residue() = default;
    Residue(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Residue operator+(Residue a, Residue b) {
        check(a, b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_)
            s -= a.p_;
        return raw(s, a.p_);
    }
    friend Residue operator-(Residue a, Residue b) {
        check(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Residue operator*(Residue a, Residue b) {
        check(a, b);
        auto prod = static_cast<unsigned __int128>(a.v_) * b.v_;
        return raw(static_cast<std::uint64_t>(prod % a.p_), a.p_);
    }
    friend Residue operator/(Residue a, Residue b) { return a * inverse(b); }
    Residue operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Residue& operator+=(Residue b) { return *this = *this + b; }
    Residue& operator-=(Residue b) { return *this = *this - b; }
    Residue& operator*=(Residue b) { return *this = *this * b; }
    friend bool operator==(Residue a, Residue b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    friend bool is_zero(Residue a) { return a.v_ == 0; }
    friend Residue inverse(Residue a) {
        if (a.v_ == 0)
            throw std::domain_error("inverse of zero");
        // extended Euclid on signed 128-bit values
        __int128 t = 0, new_t = 1, r = a.p_, new_r = a.v_;
        while (new_r != 0) {
            __int128 q = r / new_r;
            __int128 tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += a.p_;
        return raw(static_cast<std::uint64_t>(t), a.p_);
    }

private:
    static Residue raw(std::uint64_t v, std::uint64_t p) {
        Residue r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static void check(const Residue& a, const Residue& b) {
        if (a.p_ != b.p_)
            throw FieldMismatch("residues modulo " + std::to_string(a.p_) + " and " +
                                std::to_string(b.p_) + " mixed");
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// The prime field F_p for a runtime prime p < 2^32.
class PrimeField {
public:
    using Scalar = Residue;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 32))
            throw std::invalid_argument("modulus " + std::to_string(p) + " too large");
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }
    Scalar zero() const { return Scalar(0, p_); }
    Scalar one() const { return Scalar(1, p_); }
    Scalar from_int(long v) const {
        long m = v % static_cast<long>(p_);
        if (m < 0)
            m += static_cast<long>(p_);
        return Scalar(static_cast<std::uint64_t>(m), p_);
    }

    Scalar parse(std::string_view text) const {
        mpq_class q = Rationals{}.parse(text);
        mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
        mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
        if (num < 0)
            num += static_cast<unsigned long>(p_);
        if (den == 0)
            throw ScalarParseError("denominator of '" + std::string(text) + "' vanishes mod " +
                                   std::to_string(p_));
        return Scalar(num.get_ui(), p_) * inverse(Scalar(den.get_ui(), p_));
    }

    std::string to_string(const Scalar& s) const { return std::to_string(s.value()); }
    std::string name() const { return "F_" + std::to_string(p_); }
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

template <class F>
void require_same_field(const F& a, const F& b) {
    if (!(a == b))
        throw FieldMismatch("operands over " + a.name() + " and " + b.name());
}

template <class F>
using Vec = std::vector<typename F::Scalar>;

template <class F>
Vec<F> zero_vector(const F& field, size_t n) {
    return Vec<F>(n, field.zero());
}

template <class F>
Vec<F> unit_vector(const F& field, size_t n, size_t i) {
    Vec<F> v(n, field.zero());
    v.at(i) = field.one();
    return v;
}

template <class S>
bool is_zero_vector(const std::vector<S>& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

/// dst += c * src
template <class S>
void add_scaled(std::vector<S>& dst, const std::vector<S>& src, const std::type_identity_t<S>& c) {
    if (dst.size() != src.size())
        throw std::invalid_argument("add_scaled: length mismatch");
    if (is_zero(c))
        return;
    for (size_t i = 0; i < dst.size(); ++i)
        if (!is_zero(src[i]))
            dst[i] += c * src[i];
}

template <class S>
std::vector<S> difference(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("difference: length mismatch");
    std::vector<S> out(a);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

}  // namespace wgalois
