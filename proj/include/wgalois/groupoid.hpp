#pragma once

#include "wgalois/verdict.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgalois {

struct Morphism {
    size_t src = 0;
    size_t tgt = 0;
    std::string name;
};

/// A finite groupoid given by tables. Composition follows the convention that
/// `compose(s, t)` is "t then s": it is defined exactly when tgt(t) == src(s),
/// and then runs from src(t) to tgt(s).
///
/// Objects and morphisms are dense integer ids; names are metadata only.
class Groupoid {
public:
    Groupoid() = default;
    Groupoid(size_t objects, std::vector<Morphism> morphisms,
             std::vector<std::optional<size_t>> compose_table, std::vector<size_t> inverse,
             std::vector<size_t> identity)
        : objects_(objects),
          morphisms_(std::move(morphisms)),
          compose_(std::move(compose_table)),
          inverse_(std::move(inverse)),
          identity_(std::move(identity)) {
        size_t n = morphisms_.size();
        if (compose_.size() != n * n || inverse_.size() != n || identity_.size() != objects_)
            throw std::invalid_argument("groupoid: table sizes do not match morphism count");
        for (const auto& m : morphisms_)
            if (m.src >= objects_ || m.tgt >= objects_)
                throw std::invalid_argument("groupoid: morphism endpoint out of range");
        for (size_t v : inverse_)
            if (v >= n)
                throw std::invalid_argument("groupoid: inverse out of range");
        for (size_t v : identity_)
            if (v >= n)
                throw std::invalid_argument("groupoid: identity out of range");
        for (const auto& c : compose_)
            if (c && *c >= n)
                throw std::invalid_argument("groupoid: composite out of range");
    }

    size_t num_objects() const { return objects_; }
    size_t num_morphisms() const { return morphisms_.size(); }
    const Morphism& morphism(size_t s) const { return morphisms_.at(s); }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    size_t src(size_t s) const { return morphisms_.at(s).src; }
    size_t tgt(size_t s) const { return morphisms_.at(s).tgt; }
    size_t inverse(size_t s) const { return inverse_.at(s); }
    size_t identity(size_t x) const { return identity_.at(x); }
    const std::vector<size_t>& identities() const { return identity_; }
    bool is_identity(size_t s) const {
        const auto& m = morphisms_.at(s);
        return m.src == m.tgt && identity_.at(m.src) == s;
    }
    bool composable(size_t s, size_t t) const { return tgt(t) == src(s); }
    /// s after t
    std::optional<size_t> compose(size_t s, size_t t) const {
        return compose_.at(s * morphisms_.size() + t);
    }
    const std::vector<std::optional<size_t>>& compose_table() const { return compose_; }
    const std::vector<size_t>& inverse_table() const { return inverse_; }

    /// Checks the composition domain, endpoints, associativity, identity and
    /// inverse laws. Reports the first violation with its witnesses.
    Verdict validate() const {
        size_t n = morphisms_.size();
        auto nm = [&](size_t s) { return name_of(s); };
        for (size_t x = 0; x < objects_; ++x) {
            size_t e = identity_[x];
            if (src(e) != x || tgt(e) != x)
                return Verdict::fail("identity endpoints", "identity of object " + std::to_string(x) +
                                                               " is " + nm(e));
        }
        for (size_t s = 0; s < n; ++s)
            for (size_t t = 0; t < n; ++t) {
                auto c = compose(s, t);
                if (c.has_value() != composable(s, t))
                    return Verdict::fail("composition domain",
                                         nm(s) + " o " + nm(t) +
                                             (c ? " defined but not composable" : " composable but undefined"));
                if (c && (src(*c) != src(t) || tgt(*c) != tgt(s)))
                    return Verdict::fail("composite endpoints", nm(s) + " o " + nm(t) + " = " + nm(*c));
            }
        for (size_t s = 0; s < n; ++s)
            for (size_t t = 0; t < n; ++t) {
                auto st = compose(s, t);
                if (!st)
                    continue;
                for (size_t u = 0; u < n; ++u) {
                    auto tu = compose(t, u);
                    if (!tu)
                        continue;
                    auto l = compose(*st, u), r = compose(s, *tu);
                    if (l != r)
                        return Verdict::fail("associativity", "(" + nm(s) + " o " + nm(t) + ") o " + nm(u));
                }
            }
        for (size_t s = 0; s < n; ++s) {
            if (compose(identity_[tgt(s)], s) != s || compose(s, identity_[src(s)]) != s)
                return Verdict::fail("identity law", nm(s));
        }
        for (size_t s = 0; s < n; ++s) {
            size_t i = inverse_[s];
            if (compose(s, i) != identity_[tgt(s)])
                return Verdict::fail("inverse law", nm(s) + " o " + nm(i) + " is not the identity of its target");
            if (compose(i, s) != identity_[src(s)])
                return Verdict::fail("inverse law", nm(i) + " o " + nm(s) + " is not the identity of its source");
        }
        return Verdict::pass();
    }

    std::string name_of(size_t s) const {
        const auto& m = morphisms_.at(s);
        return m.name.empty() ? "#" + std::to_string(s) : m.name;
    }

    bool operator==(const Groupoid& o) const {
        if (objects_ != o.objects_ || morphisms_.size() != o.morphisms_.size())
            return false;
        for (size_t i = 0; i < morphisms_.size(); ++i)
            if (morphisms_[i].src != o.morphisms_[i].src || morphisms_[i].tgt != o.morphisms_[i].tgt)
                return false;
        return compose_ == o.compose_ && inverse_ == o.inverse_ && identity_ == o.identity_;
    }

private:
    size_t objects_ = 0;
    std::vector<Morphism> morphisms_;
    std::vector<std::optional<size_t>> compose_;
    std::vector<size_t> inverse_;
    std::vector<size_t> identity_;
};

/// Builds composition, inverse and identity tables from morphism endpoints and
/// a composition rule, so constructors only describe the rule.
template <class ComposeFn, class InverseFn>
Groupoid make_groupoid(size_t objects, std::vector<Morphism> morphisms, std::vector<size_t> identity,
                       ComposeFn&& compose, InverseFn&& inverse) {
    size_t n = morphisms.size();
    std::vector<std::optional<size_t>> table(n * n);
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            if (morphisms[t].tgt == morphisms[s].src)
                table[s * n + t] = compose(s, t);
    std::vector<size_t> inv(n);
    for (size_t s = 0; s < n; ++s)
        inv[s] = inverse(s);
    return Groupoid(objects, std::move(morphisms), std::move(table), std::move(inv), std::move(identity));
}

/// Pair groupoid on n objects: one morphism (i,j): j -> i for every pair,
/// with (i,j)(j,l) = (i,l). Morphism (i,j) has id i * n + j.
inline Groupoid pair_groupoid(size_t n) {
    if (n == 0)
        throw std::invalid_argument("pair_groupoid: need at least one object");
    std::vector<Morphism> ms;
    std::vector<size_t> ids(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            ms.push_back({j, i, "(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    for (size_t i = 0; i < n; ++i)
        ids[i] = i * n + i;
    return make_groupoid(
        n, std::move(ms), std::move(ids),
        [n](size_t s, size_t t) { return (s / n) * n + (t % n); },
        [n](size_t s) { return (s % n) * n + s / n; });
}

/// One-object groupoid from a group multiplication table; table[a][b] = ab.
inline Groupoid from_group(const std::vector<std::vector<size_t>>& table) {
    size_t n = table.size();
    if (n == 0)
        throw std::invalid_argument("from_group: empty table");
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("from_group: table is not square");
        for (size_t v : row)
            if (v >= n)
                throw std::invalid_argument("from_group: entry out of range");
    }
    std::optional<size_t> e;
    for (size_t a = 0; a < n && !e; ++a) {
        bool neutral = true;
        for (size_t b = 0; b < n; ++b)
            if (table[a][b] != b || table[b][a] != b)
                neutral = false;
        if (neutral)
            e = a;
    }
    if (!e)
        throw std::invalid_argument("from_group: no identity element");
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("from_group: not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    std::vector<size_t> inv(n);
    for (size_t a = 0; a < n; ++a) {
        std::optional<size_t> found;
        for (size_t b = 0; b < n; ++b)
            if (table[a][b] == *e && table[b][a] == *e)
                found = b;
        if (!found)
            throw std::invalid_argument("from_group: element " + std::to_string(a) + " has no inverse");
        inv[a] = *found;
    }
    std::vector<Morphism> ms;
    for (size_t a = 0; a < n; ++a)
        ms.push_back({0, 0, a == *e ? "e" : "g" + std::to_string(a)});
    return make_groupoid(
        1, std::move(ms), {*e}, [&](size_t s, size_t t) { return table[s][t]; },
        [&](size_t s) { return inv[s]; });
}

/// Cyclic group Z/n as a one-object groupoid; element k has id k.
inline Groupoid cyclic_group(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return from_group(t);
}

inline Groupoid trivial_groupoid() { return pair_groupoid(1); }

/// Disjoint union; objects and morphisms of g2 are shifted past those of g1.
inline Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2) {
    size_t n1 = g1.num_morphisms(), o1 = g1.num_objects();
    std::vector<Morphism> ms = g1.morphisms();
    for (auto m : g2.morphisms()) {
        m.src += o1;
        m.tgt += o1;
        ms.push_back(m);
    }
    std::vector<size_t> ids = g1.identities();
    for (size_t v : g2.identities())
        ids.push_back(v + n1);
    return make_groupoid(
        o1 + g2.num_objects(), std::move(ms), std::move(ids),
        [&](size_t s, size_t t) -> size_t {
            if (s < n1)
                return *g1.compose(s, t);
            return *g2.compose(s - n1, t - n1) + n1;
        },
        [&](size_t s) { return s < n1 ? g1.inverse(s) : g2.inverse(s - n1) + n1; });
}

}  // namespace wgalois
