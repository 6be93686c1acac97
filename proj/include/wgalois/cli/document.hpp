#pragma once

#include "wgalois/action.hpp"
#include "wgalois/algebras.hpp"
#include "wgalois/graded.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wgalois::cli {

using json = nlohmann::ordered_json;

/// Bad input: malformed syntax, a schema violation or a dimension mismatch.
/// The message starts with the key path of the offending value.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& path, const std::string& msg)
        : std::runtime_error((path.empty() ? std::string("document") : path) + ": " + msg) {}
};

struct FieldSpec {
    std::uint64_t prime = 0;  // 0 for the rationals

    std::string name() const { return prime ? "F_" + std::to_string(prime) : "rationals"; }
};

inline std::string at(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}
inline std::string at(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const json& member(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object())
        throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(at(path, key), "missing");
    return *it;
}

inline void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
    if (!j.is_object())
        throw InputError(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys)
            known = known || k == key;
        if (!known)
            throw InputError(at(path, k), "unknown key");
    }
}

inline size_t count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(path, "expected a non-negative integer");
    return j.get<size_t>();
}

inline const json& array_of(const json& j, const std::string& path, std::optional<size_t> len = {}) {
    if (!j.is_array())
        throw InputError(path, "expected an array");
    if (len && j.size() != *len)
        throw InputError(path, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
    return j;
}

inline std::string text(const json& j, const std::string& path) {
    if (!j.is_string())
        throw InputError(path, "expected a string");
    return j.get<std::string>();
}

inline FieldSpec parse_field(const json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() != "rationals")
            throw InputError(path, "unknown field '" + j.get<std::string>() + "'");
        return {};
    }
    only_keys(j, path, {"prime"});
    auto p = count(member(j, path, "prime"), at(path, "prime"));
    if (!is_prime(p))
        throw InputError(at(path, "prime"), std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 32))
        throw InputError(at(path, "prime"), "modulus too large");
    return {p};
}

/// --field value: "rationals" or a prime such as "5".
inline FieldSpec parse_field_flag(const std::string& s) {
    if (s == "rationals")
        return {};
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("--field", "expected 'rationals' or a prime, got '" + s + "'");
    return parse_field(json{{"prime", std::stoull(s)}}, "--field");
}

inline Groupoid parse_groupoid(const json& j, const std::string& path) {
    if (j.contains("builder")) {
        auto b = text(j["builder"], at(path, "builder"));
        if (b == "pair" || b == "cyclic") {
            only_keys(j, path, {"builder", "n"});
            size_t n = count(member(j, path, "n"), at(path, "n"));
            if (n == 0)
                throw InputError(at(path, "n"), "must be positive");
            return b == "pair" ? pair_groupoid(n) : cyclic_group(n);
        }
        if (b == "group") {
            only_keys(j, path, {"builder", "table"});
            std::string tp = at(path, "table");
            const auto& t = array_of(member(j, path, "table"), tp);
            std::vector<std::vector<size_t>> table;
            for (size_t i = 0; i < t.size(); ++i) {
                const auto& row = array_of(t[i], at(tp, i), t.size());
                table.emplace_back();
                for (size_t k = 0; k < row.size(); ++k)
                    table.back().push_back(count(row[k], at(at(tp, i), k)));
            }
            try {
                return from_group(table);
            } catch (const std::invalid_argument& e) {
                throw InputError(tp, e.what());
            }
        }
        if (b == "union") {
            only_keys(j, path, {"builder", "of"});
            std::string op = at(path, "of");
            const auto& parts = array_of(member(j, path, "of"), op);
            if (parts.empty())
                throw InputError(op, "needs at least one groupoid");
            Groupoid g = parse_groupoid(parts[0], at(op, 0));
            for (size_t i = 1; i < parts.size(); ++i)
                g = disjoint_union(g, parse_groupoid(parts[i], at(op, i)));
            return g;
        }
        throw InputError(at(path, "builder"), "unknown builder '" + b + "'");
    }
    only_keys(j, path, {"objects", "morphisms", "compose", "inverse", "identity"});
    size_t objects = count(member(j, path, "objects"), at(path, "objects"));
    std::string mp = at(path, "morphisms");
    const auto& ms = array_of(member(j, path, "morphisms"), mp);
    size_t n = ms.size();
    std::vector<Morphism> morphisms;
    for (size_t i = 0; i < n; ++i) {
        std::string p = at(mp, i);
        only_keys(ms[i], p, {"src", "tgt", "name"});
        Morphism m{count(member(ms[i], p, "src"), at(p, "src")), count(member(ms[i], p, "tgt"), at(p, "tgt"))};
        if (ms[i].contains("name"))
            m.name = text(ms[i]["name"], at(p, "name"));
        if (m.src >= objects || m.tgt >= objects)
            throw InputError(p, "endpoint out of range");
        morphisms.push_back(m);
    }
    std::string cp = at(path, "compose");
    const auto& ct = array_of(member(j, path, "compose"), cp, n);
    std::vector<std::optional<size_t>> compose;
    for (size_t s = 0; s < n; ++s) {
        const auto& row = array_of(ct[s], at(cp, s), n);
        for (size_t t = 0; t < n; ++t) {
            if (row[t].is_null())
                compose.emplace_back();
            else if (size_t c = count(row[t], at(at(cp, s), t)); c < n)
                compose.emplace_back(c);
            else
                throw InputError(at(at(cp, s), t), "morphism out of range");
        }
    }
    auto ids = [&](const std::string& key, size_t len) {
        std::string p = at(path, key);
        const auto& a = array_of(member(j, path, key), p, len);
        std::vector<size_t> out;
        for (size_t i = 0; i < len; ++i)
            if (size_t v = count(a[i], at(p, i)); v < n)
                out.push_back(v);
            else
                throw InputError(at(p, i), "morphism out of range");
        return out;
    };
    Groupoid g(objects, morphisms, compose, ids("inverse", n), ids("identity", objects));
    if (auto v = g.validate(); !v)
        throw InputError(path, "not a groupoid: " + v.describe());
    return g;
}

/// Explicit tables, the form parse_groupoid reads back to an equal groupoid.
inline json groupoid_to_json(const Groupoid& g) {
    json ms = json::array(), compose = json::array();
    for (const auto& m : g.morphisms()) {
        json e{{"src", m.src}, {"tgt", m.tgt}};
        if (!m.name.empty())
            e["name"] = m.name;
        ms.push_back(e);
    }
    size_t n = g.num_morphisms();
    for (size_t s = 0; s < n; ++s) {
        json row = json::array();
        for (size_t t = 0; t < n; ++t) {
            auto c = g.compose(s, t);
            row.push_back(c ? json(*c) : json(nullptr));
        }
        compose.push_back(row);
    }
    return {{"objects", g.num_objects()},
            {"morphisms", ms},
            {"compose", compose},
            {"inverse", g.inverse_table()},
            {"identity", g.identities()}};
}

template <class F>
typename F::Scalar parse_scalar(const json& j, const F& f, const std::string& path) {
    try {
        if (j.is_number_integer())
            return f.from_int(j.get<long>());
        if (j.is_string())
            return f.parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(path, e.what());
    }
    throw InputError(path, "expected an integer or a rational string");
}

template <class F>
Vec<F> parse_vector(const json& j, const F& f, size_t len, const std::string& path) {
    const auto& a = array_of(j, path, len);
    Vec<F> v;
    for (size_t i = 0; i < len; ++i)
        v.push_back(parse_scalar(a[i], f, at(path, i)));
    return v;
}

/// A list of rows.
template <class F>
Matrix<F> parse_matrix(const json& j, const F& f, size_t rows, size_t cols, const std::string& path) {
    if (!j.is_array())
        throw InputError(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    size_t c = j.empty() || !j[0].is_array() ? 0 : j[0].size();
    if (j.size() != rows || c != cols)
        throw InputError(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                                   std::to_string(j.size()) + "x" + std::to_string(c));
    std::vector<Vec<F>> out;
    for (size_t r = 0; r < rows; ++r)
        out.push_back(parse_vector(j[r], f, cols, at(path, r)));
    return Matrix<F>::from_rows(f, out, cols);
}

template <class F>
std::vector<Vec<F>> parse_vectors(const json& j, const F& f, size_t len, const std::string& path) {
    const auto& a = array_of(j, path);
    std::vector<Vec<F>> out;
    for (size_t i = 0; i < a.size(); ++i)
        out.push_back(parse_vector(a[i], f, len, at(path, i)));
    return out;
}

template <class F>
FinAlgebra<F> parse_algebra(const json& j, const F& f, const Groupoid& g, const std::string& path) {
    if (j.contains("builder")) {
        auto b = text(j["builder"], at(path, "builder"));
        if (b == "groupoid-algebra" || b == "dual-groupoid-algebra") {
            only_keys(j, path, {"builder"});
            return b == "groupoid-algebra" ? groupoid_algebra(g, f).algebra() : dual_groupoid_algebra(g, f).algebra();
        }
        only_keys(j, path, {"builder", "n"});
        size_t n = count(member(j, path, "n"), at(path, "n"));
        if (n == 0)
            throw InputError(at(path, "n"), "must be positive");
        if (b == "matrix")
            return matrix_algebra(f, n);
        if (b == "diagonal")
            return diagonal_algebra(f, n);
        if (b == "truncated")
            return truncated_polynomial(f, n);
        throw InputError(at(path, "builder"), "unknown builder '" + b + "'");
    }
    only_keys(j, path, {"dim", "mult", "unit", "labels"});
    size_t n = count(member(j, path, "dim"), at(path, "dim"));
    std::string mp = at(path, "mult");
    const auto& m = array_of(member(j, path, "mult"), mp, n);
    std::vector<Vec<F>> table;
    for (size_t i = 0; i < n; ++i) {
        const auto& row = array_of(m[i], at(mp, i), n);
        for (size_t k = 0; k < n; ++k)
            table.push_back(parse_vector(row[k], f, n, at(at(mp, i), k)));
    }
    Vec<F> unit = parse_vector(member(j, path, "unit"), f, n, at(path, "unit"));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& l = array_of(j["labels"], at(path, "labels"), n);
        for (size_t i = 0; i < n; ++i)
            labels.push_back(text(l[i], at(at(path, "labels"), i)));
    }
    return FinAlgebra<F>::from_rule(
        f, n, [&](size_t a, size_t b) { return nonzeros<F>(table[a * n + b]); }, unit, labels);
}

template <class F>
WeakHopfAlgebra<F> parse_weak_hopf(const json& j, const F& f, const Groupoid& g, const std::string& path) {
    if (j.contains("builder")) {
        only_keys(j, path, {"kind", "builder"});
        auto b = text(j["builder"], at(path, "builder"));
        if (b == "kG")
            return groupoid_algebra(g, f);
        if (b == "Gk")
            return dual_groupoid_algebra(g, f);
        throw InputError(at(path, "builder"), "unknown builder '" + b + "'");
    }
    only_keys(j, path, {"kind", "algebra", "delta", "counit", "antipode"});
    auto a = parse_algebra(member(j, path, "algebra"), f, g, at(path, "algebra"));
    size_t n = a.dim();
    auto delta = parse_matrix(member(j, path, "delta"), f, n * n, n, at(path, "delta"));
    auto eps = parse_matrix(member(j, path, "counit"), f, 1, n, at(path, "counit"));
    auto s = parse_matrix(member(j, path, "antipode"), f, n, n, at(path, "antipode"));
    return WeakHopfAlgebra<F>(WeakBialgebra<F>(std::move(a), std::move(delta), std::move(eps)), std::move(s));
}

enum class Kind { weakhopf, graded, action, comodule };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::weakhopf:
            return "weakhopf";
        case Kind::graded:
            return "graded";
        case Kind::action:
            return "action";
        case Kind::comodule:
            return "comodule";
    }
    return "?";
}

template <class F>
struct Subject {
    Kind kind = Kind::weakhopf;
    std::optional<WeakHopfAlgebra<F>> weak_hopf;  // the subject, or the coalgebra of a comodule
    std::optional<GradedAlgebra<F>> graded;
    std::optional<GModuleAlgebra<F>> action;
    std::optional<ComoduleAlgebra<F>> comodule;
};

template <class F>
Subject<F> parse_subject(const json& j, const F& f, const Groupoid& g, const std::string& path) {
    auto kind = text(member(j, path, "kind"), at(path, "kind"));
    Subject<F> s;
    if (kind == "weakhopf") {
        s.weak_hopf = parse_weak_hopf(j, f, g, path);
        return s;
    }
    if (kind == "graded") {
        s.kind = Kind::graded;
        only_keys(j, path, {"kind", "algebra", "components"});
        auto a = parse_algebra(member(j, path, "algebra"), f, g, at(path, "algebra"));
        std::string cp = at(path, "components");
        const auto& cs = array_of(member(j, path, "components"), cp, g.num_morphisms());
        std::vector<Subspace<F>> comps;
        for (size_t i = 0; i < cs.size(); ++i)
            comps.push_back(Subspace<F>::span(f, a.dim(), parse_vectors(cs[i], f, a.dim(), at(cp, i))));
        s.graded.emplace(std::move(a), g, std::move(comps));
        return s;
    }
    if (kind == "action") {
        s.kind = Kind::action;
        only_keys(j, path, {"kind", "algebra", "act"});
        auto a = parse_algebra(member(j, path, "algebra"), f, g, at(path, "algebra"));
        std::string ap = at(path, "act");
        const auto& as = array_of(member(j, path, "act"), ap, g.num_morphisms());
        std::vector<Matrix<F>> act;
        for (size_t i = 0; i < as.size(); ++i)
            act.push_back(parse_matrix(as[i], f, a.dim(), a.dim(), at(ap, i)));
        s.action.emplace(std::move(a), g, std::move(act));
        return s;
    }
    if (kind == "comodule") {
        s.kind = Kind::comodule;
        only_keys(j, path, {"kind", "algebra", "coalgebra", "rho"});
        auto a = parse_algebra(member(j, path, "algebra"), f, g, at(path, "algebra"));
        auto h = parse_weak_hopf(member(j, path, "coalgebra"), f, g, at(path, "coalgebra"));
        auto rho = parse_matrix(member(j, path, "rho"), f, a.dim() * h.dim(), a.dim(), at(path, "rho"));
        s.comodule.emplace(std::move(a), h.bialgebra(), std::move(rho));
        s.weak_hopf = std::move(h);
        return s;
    }
    throw InputError(at(path, "kind"), "unknown subject kind '" + kind + "'");
}

/// The document without its field-dependent parts decoded.
struct Document {
    json raw;
    FieldSpec field;
    Groupoid groupoid;
};

inline Document parse_document(const std::string& contents) {
    json j;
    try {
        j = json::parse(contents);
    } catch (const json::parse_error& e) {
        throw InputError("", e.what());
    }
    only_keys(j, "", {"field", "groupoid", "subject", "subrings", "samples"});
    Document d{j};
    if (j.contains("field"))
        d.field = parse_field(j["field"], "field");
    d.groupoid = parse_groupoid(member(j, "", "groupoid"), "groupoid");
    member(j, "", "subject");
    return d;
}

inline Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

}  // namespace wgalois::cli
