#pragma once

#include "wgalois/cli/document.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>

namespace wgalois::cli {

struct Record {
    Check check;
    double millis = 0;
};

struct Report {
    std::string command;
    std::string field;
    std::string subject;
    std::vector<Record> records;
    std::map<std::string, std::string> summary;  // key -> pass | fail | not run

    bool failed() const {
        return std::any_of(records.begin(), records.end(),
                           [](const Record& r) { return r.check.outcome == Outcome::fail; });
    }
    int exit_status() const { return failed() ? 1 : 0; }
};

inline const std::vector<std::string>& summary_keys() {
    static const std::vector<std::string> keys = {"weak-Hopf-valid", "Galois", "strongly-graded", "Morita-strict",
                                                  "Frobenius-ok"};
    return keys;
}

inline json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& rec : r.records)
        checks.push_back({{"name", rec.check.name},
                          {"anchor", rec.check.anchor},
                          {"verdict", outcome_name(rec.check.outcome)},
                          {"witness", rec.check.witness}});
    json summary = json::object();
    for (const auto& k : summary_keys())
        summary[k] = r.summary.count(k) ? r.summary.at(k) : "not run";
    return {{"command", r.command},   {"field", r.field},     {"subject", r.subject},
            {"checks", checks},       {"summary", summary},   {"exit_status", r.exit_status()}};
}

inline std::string render_machine(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_pretty(const Report& r) {
    std::ostringstream os;
    os << r.command << " on " << r.subject << " subject over " << r.field << "\n";
    size_t width = 0;
    for (const auto& rec : r.records)
        width = std::max(width, rec.check.name.size());
    for (const auto& rec : r.records) {
        const auto& c = rec.check;
        os << "  " << std::left << std::setw(10) << ("[" + std::string(outcome_name(c.outcome)) + "]")
           << std::setw(static_cast<int>(width) + 2) << c.name << std::right << std::fixed << std::setprecision(2)
           << std::setw(10) << rec.millis << " ms\n";
        os << "            " << c.anchor << "\n";
        if (!c.witness.empty())
            os << "            witness: " << c.witness << "\n";
    }
    os << "summary:";
    for (const auto& k : summary_keys())
        os << " " << k << "=" << (r.summary.count(k) ? r.summary.at(k) : "not run");
    os << "\nexit status " << r.exit_status() << "\n";
    return os.str();
}

/// Subject/command combinations that make no sense.
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string command;
    std::string path;
    std::optional<std::string> field;
    std::string format = "machine";
    std::optional<std::string> subring;
    std::optional<std::string> samples;
};

template <class F>
class Runner {
public:
    Runner(const F& f, const Document& doc, const Options& opt)
        : f_(f), doc_(doc), opt_(opt), s_(parse_subject(doc.raw["subject"], f, doc.groupoid, "subject")) {
        report_.command = opt.command;
        report_.field = f.name();
        report_.subject = kind_name(s_.kind);
        if (opt.samples) {
            std::string p = at("samples", *opt.samples);
            const auto& list = array_of(member(member(doc.raw, "", "samples"), "samples", *opt.samples), p);
            samples_.clear();
            for (size_t i = 0; i < list.size(); ++i)
                samples_.push_back(text(list[i], at(p, i)));
            for (size_t i = 0; i < samples_.size(); ++i)
                if (std::find(equivalence_samples().begin(), equivalence_samples().end(), samples_[i]) ==
                    equivalence_samples().end())
                    throw InputError(at(p, i), "unknown sample '" + samples_[i] + "'");
        }
    }

    Report run() {
        const auto& c = opt_.command;
        if (c == "strongly-graded" && s_.kind != Kind::graded)
            throw MismatchError("strongly-graded needs a graded subject, got " + report_.subject);
        if (c == "frobenius" && s_.kind != Kind::action)
            throw MismatchError("frobenius needs an action subject, got " + report_.subject);
        bool valid = verify();
        if (!valid || c == "verify")
            return report_;
        auto b = subring();
        if (c == "galois" || c == "all")
            galois(b);
        if (c == "strongly-graded" || (c == "all" && s_.kind == Kind::graded))
            strongly_graded();
        if (c == "morita" || c == "all")
            morita(b);
        if (c == "frobenius" || (c == "all" && s_.kind == Kind::action))
            frobenius();
        return report_;
    }

private:
    using Clock = std::chrono::steady_clock;

    void section(const std::function<std::vector<Check>()>& body, const std::string& key = {},
                 const std::string& decisive = {}) {
        auto t0 = Clock::now();
        auto checks = body();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        size_t first = report_.records.size();
        for (auto& c : checks) {
            bool seen = std::any_of(report_.records.begin(), report_.records.end(), [&](const Record& r) {
                return r.check.name == c.name && r.check.anchor == c.anchor;
            });
            if (!seen)
                report_.records.push_back({std::move(c), ms / static_cast<double>(checks.size())});
        }
        if (key.empty())
            return;
        bool ok = true;
        for (size_t i = first; i < report_.records.size(); ++i) {
            const auto& chk = report_.records[i].check;
            if ((decisive.empty() || chk.name == decisive) && chk.outcome == Outcome::fail)
                ok = false;
        }
        report_.summary[key] = ok ? "pass" : "fail";
    }

    static Check of(std::string name, std::string anchor, const Verdict& v) {
        return check_of(std::move(name), std::move(anchor), v.ok(), v.ok() ? "" : v.describe());
    }

    const WeakHopfAlgebra<F>& hopf() {
        if (!hopf_) {
            if (s_.weak_hopf)
                hopf_ = *s_.weak_hopf;
            else if (s_.kind == Kind::graded)
                hopf_ = groupoid_algebra(doc_.groupoid, f_);
            else
                hopf_ = dual_groupoid_algebra(doc_.groupoid, f_);
        }
        return *hopf_;
    }

    bool builder_hopf() const {
        const auto& sub = doc_.raw["subject"];
        if (s_.kind == Kind::weakhopf)
            return sub.contains("builder");
        if (s_.kind == Kind::comodule)
            return sub["coalgebra"].contains("builder");
        return true;
    }

    bool verify() {
        bool ok = true;
        section(
            [&] {
                std::vector<Check> out;
                const auto& h = hopf();
                auto v = h.verify();
                out.push_back(of("weak Hopf axioms", "Delta, eps, S satisfy the weak bialgebra and antipode laws", v));
                if (v) {
                    out.push_back(of("source and target projections", "Pi^L, Pi^R idempotent, Im(Pi^L) = Im(bar Pi^R)",
                                     h.verify_projections()));
                    if (builder_hopf()) {
                        size_t d = h.target_left().dim(), n = doc_.groupoid.num_objects();
                        out.push_back(check_of("dim H^L = |G_0|", "(kG)^L = (+)_x k u_x", d == n,
                                               d == n ? "" : "dim H^L = " + std::to_string(d) + " != " +
                                                                 std::to_string(n)));
                    }
                }
                ok = v.ok();
                return out;
            },
            "weak-Hopf-valid");
        if (!ok)
            return false;
        std::vector<Check> subject;
        auto t0 = Clock::now();
        switch (s_.kind) {
            case Kind::weakhopf:
                break;
            case Kind::graded: {
                auto v = s_.graded->verify();
                subject.push_back(of("graded algebra", "A = (+)_s A_s, A_s A_t in A_st, A_s A_t = 0 otherwise", v));
                break;
            }
            case Kind::action: {
                auto v = s_.action->verify();
                subject.push_back(of("module algebra", "sigma.(ab) = (sigma.a)(sigma.b), sigma.1 = t(sigma).1", v));
                break;
            }
            case Kind::comodule: {
                auto v = s_.comodule->verify();
                subject.push_back(of("comodule algebra", "rho(ab) = rho(a)rho(b), rho^2(1) = 1_[0] (x) 1_[1]1_(1) (x) 1_(2)", v));
                break;
            }
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        for (auto& c : subject) {
            ok = ok && c.outcome != Outcome::fail;
            report_.records.push_back({std::move(c), ms});
        }
        return ok;
    }

    const ComoduleAlgebra<F>& comodule() {
        if (!ca_) {
            switch (s_.kind) {
                case Kind::weakhopf:
                    ca_ = regular_comodule_algebra(s_.weak_hopf->bialgebra());
                    break;
                case Kind::graded:
                    ca_ = grading_to_comodule(*s_.graded);
                    break;
                case Kind::action:
                    ca_ = action_to_comodule(*s_.action);
                    break;
                case Kind::comodule:
                    ca_ = *s_.comodule;
                    break;
            }
        }
        return *ca_;
    }

    const FinAlgebra<F>& algebra() { return comodule().algebra(); }

    Subspace<F> subring() {
        if (!opt_.subring)
            return s_.kind == Kind::action ? fixed_ring(*s_.action) : coinvariants(comodule());
        std::string p = "subrings";
        const auto& all = member(doc_.raw, "", p);
        auto vs = parse_vectors(member(all, p, *opt_.subring), f_, algebra().dim(), at(p, *opt_.subring));
        return Subspace<F>::span(f_, algebra().dim(), vs);
    }

    void galois(const Subspace<F>& b) {
        section(
            [&] {
                std::vector<Check> out;
                if (s_.kind == Kind::action) {
                    require_subring_of(algebra(), b, fixed_ring(*s_.action));
                    auto ac = action_can(*s_.action, b);
                    out.push_back(check_of("can bijective", "can(a (x) b) = sum_sigma a(sigma.b) (x) v_sigma",
                                           ac.can.bijective, ac.can.witness));
                    return out;
                }
                const auto& ca = comodule();
                require_subring_of(ca.algebra(), b, coinvariants(ca));
                ComoduleCoring<F> cc(ca);
                auto can = canonical_map(cc, b);
                out.push_back(
                    check_of("can bijective", "can(a (x)_B b) = ab_[0] (x) b_[1]", can.bijective, can.witness));
                if (s_.kind == Kind::weakhopf && !opt_.subring && can.bijective)
                    out.push_back(of("can inverse formula", "can^-1(a (x) h) = aS(h_(1)) (x)_{H^L} h_(2)",
                                     verify_can_inverse_formula(*s_.weak_hopf)));
                return out;
            },
            "Galois", "can bijective");
    }

    void strongly_graded() {
        section([&] { return theorem35_harness(*s_.graded).checks; }, "strongly-graded", "strongly graded");
    }

    void morita(const Subspace<F>& b) {
        section(
            [&] {
                if (s_.kind == Kind::action)
                    return theorem45_harness(*s_.action, b, samples_).checks;
                return theorem25_harness(comodule(), b, samples_).checks;
            },
            "Morita-strict", "Morita context strict");
    }

    void frobenius() {
        section(
            [&] {
                std::vector<Check> out;
                const auto& ma = *s_.action;
                auto fs = frobenius_system(ma);
                auto residual = [](size_t r) { return r ? "residual " + std::to_string(r) : std::string(); };
                out.push_back(check_of("casimir element", "re1 (x)_A e2 = e1 (x)_A e2r", fs.residual_commute == 0,
                                       residual(fs.residual_commute)));
                out.push_back(check_of("Frobenius unit", "nu(e1)e2 = 1 = e1nu(e2)", fs.residual_unit == 0,
                                       residual(fs.residual_unit)));
                out.push_back(of("Frobenius system", "nu(arb) = a nu(r) b, e = sum U_{sigma^-1} (x)_A U_sigma",
                                 fs.verdict));
                HomDual<F> hom(comodule());
                out.push_back(of("dual ring product table", "U_sigma#U_tau = U_{tau sigma}",
                                 DualRingBasis<F>(ma).compare(hom)));
                return out;
            },
            "Frobenius-ok");
    }

    F f_;
    const Document& doc_;
    const Options& opt_;
    Subject<F> s_;
    std::vector<std::string> samples_ = equivalence_samples();
    std::optional<WeakHopfAlgebra<F>> hopf_;
    std::optional<ComoduleAlgebra<F>> ca_;
    Report report_;
};

struct Execution {
    int exit = 0;
    std::string out;
    std::string err;
};

inline Execution error_result(const Options& opt, const std::string& kind, const std::string& msg, int code) {
    if (opt.format == "pretty")
        return {code, "", kind + " error: " + msg + "\n"};
    json j = {{"error", kind}, {"message", msg}, {"exit_status", code}};
    return {code, j.dump(2) + "\n", ""};
}

inline Report run_document(const Document& doc, const Options& opt) {
    FieldSpec fs = opt.field ? parse_field_flag(*opt.field) : doc.field;
    if (fs.prime)
        return Runner<PrimeField>(PrimeField(fs.prime), doc, opt).run();
    return Runner<Rationals>(Rationals(), doc, opt).run();
}

/// The whole command line, without the program name.
inline Execution execute(std::vector<std::string> args) {
    CLI::App app("Exact checks for finite weak Hopf algebras, comodule algebras and Galois extensions", "wgalois");
    Options opt;
    app.add_option("command", opt.command, "verify | galois | strongly-graded | morita | frobenius | all")
        ->required()
        ->check(CLI::IsMember({"verify", "galois", "strongly-graded", "morita", "frobenius", "all"}));
    app.add_option("document", opt.path, "input document")->required();
    app.add_option("--field", opt.field, "override the document field: rationals or a prime");
    app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"pretty", "machine"}));
    app.add_option("--subring", opt.subring, "key under \"subrings\" to use as B instead of the coinvariants");
    app.add_option("--samples", opt.samples, "key under \"samples\" naming the adjunction maps to sample");
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }
    try {
        auto doc = read_document(opt.path);
        auto report = run_document(doc, opt);
        return {report.exit_status(), opt.format == "pretty" ? render_pretty(report) : render_machine(report), ""};
    } catch (const InputError& e) {
        return error_result(opt, "input", e.what(), 2);
    } catch (const MismatchError& e) {
        return error_result(opt, "mismatch", e.what(), 2);
    } catch (const InconsistencyError& e) {
        return error_result(opt, "inconsistency", e.what(), 3);
    } catch (const std::invalid_argument& e) {
        return error_result(opt, "input", e.what(), 2);
    } catch (const std::exception& e) {
        return error_result(opt, "internal", e.what(), 3);
    }
}

}  // namespace wgalois::cli
