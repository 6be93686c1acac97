#include "catalogue.hpp"
#include "corpus.hpp"
#include "wgalois/cli/app.hpp"

#include <gtest/gtest.h>

#include <cstdio>

using namespace wgalois;
using namespace wgalois::cli;
using namespace wgalois::testing;

namespace {

const Rationals Q;

std::string message_of(const std::string& doc) {
    try {
        parse_document(doc);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

template <class F>
Subject<F> subject_of(const std::string& text, const F& f) {
    auto d = parse_document(text);
    return parse_subject(d.raw["subject"], f, d.groupoid, "subject");
}

std::string write_temp(const std::string& name, const std::string& contents) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << contents;
    return p.string();
}

const char* swap_doc = R"({
  "groupoid": {"builder": "cyclic", "n": 2},
  "subject": {"kind": "action", "algebra": {"builder": "diagonal", "n": 2},
              "act": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]}
})";

}  // namespace

TEST(Parse, PairGroupoidAlgebra) {
    auto d = parse_document(R"({"groupoid": {"builder": "pair", "n": 2},
                                "subject": {"kind": "weakhopf", "builder": "kG"}})");
    EXPECT_EQ(d.groupoid, pair_groupoid(2));
    EXPECT_EQ(d.field.name(), "rationals");
    auto s = parse_subject(d.raw["subject"], Q, d.groupoid, "subject");
    ASSERT_TRUE(s.weak_hopf);
    EXPECT_EQ(s.weak_hopf->dim(), 4u);
    EXPECT_TRUE(s.weak_hopf->verify());
}

TEST(Parse, DimensionErrorNamesKey) {
    std::string doc = R"({"groupoid": {"builder": "cyclic", "n": 2},
        "subject": {"kind": "action", "algebra": {"builder": "diagonal", "n": 2},
                    "act": [[[1, 0], [0, 1]], [[0, 1, 0], [1, 0, 0]]]}})";
    try {
        subject_of(doc, Q);
        FAIL() << "accepted a 2x3 matrix";
    } catch (const InputError& e) {
        EXPECT_EQ(std::string(e.what()), "subject.act[1]: expected a 2x2 matrix, got 2x3");
    }
}

TEST(Parse, PrimeFour) {
    auto m = message_of(R"({"field": {"prime": 4}, "groupoid": {"builder": "pair", "n": 2},
                            "subject": {"kind": "weakhopf", "builder": "kG"}})");
    EXPECT_NE(m.find("not prime"), std::string::npos) << m;
    EXPECT_NE(m.find("field.prime"), std::string::npos) << m;
    EXPECT_THROW(parse_field_flag("9"), InputError);
    EXPECT_EQ(parse_field_flag("7").prime, 7u);
}

TEST(Parse, SyntaxErrorHasPosition) {
    auto m = message_of("{\n  \"groupoid\": {\"builder\": \"pair\", \"n\": 2},\n  \"subject\": [\n}");
    EXPECT_NE(m.find("line 4, column 1"), std::string::npos) << m;
}

TEST(Parse, UnknownBuilderAndKeys) {
    EXPECT_NE(message_of(R"({"groupoid": {"builder": "cube", "n": 2}, "subject": {}})").find("groupoid.builder"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"groupoid": {"builder": "pair", "n": 2}, "subject": {}, "extra": 1})")
                  .find("extra: unknown key"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"groupoid": {"builder": "pair", "n": 2}})").find("subject: missing"),
              std::string::npos);
    EXPECT_THROW(subject_of(R"({"groupoid": {"builder": "pair", "n": 2},
                                "subject": {"kind": "weakhopf", "builder": "Hk"}})",
                            Q),
                 InputError);
}

TEST(Parse, ExplicitGroupoidMustBeValid) {
    // C_2 written out, then with a broken inverse.
    json g = {{"objects", 1},
              {"morphisms", {{{"src", 0}, {"tgt", 0}}, {{"src", 0}, {"tgt", 0}}}},
              {"compose", {{0, 1}, {1, 0}}},
              {"inverse", {0, 1}},
              {"identity", {0}}};
    EXPECT_EQ(parse_groupoid(g, "groupoid").num_morphisms(), 2u);
    g["inverse"] = {0, 0};
    EXPECT_THROW(parse_groupoid(g, "groupoid"), InputError);
    g["inverse"] = {0, 5};
    EXPECT_THROW(parse_groupoid(g, "groupoid"), InputError);
}

TEST(Parse, Scalars) {
    EXPECT_EQ(parse_scalar(json("-3/6"), Q, "x"), Rationals::Scalar(-1, 2));
    PrimeField f5(5);
    EXPECT_EQ(parse_scalar(json("1/2"), f5, "x"), f5.from_int(3));
    EXPECT_EQ(parse_scalar(json(-1), f5, "x"), f5.from_int(4));
    EXPECT_THROW(parse_scalar(json(0.5), Q, "x"), InputError);
    EXPECT_THROW(parse_scalar(json("1/0"), Q, "x"), InputError);
    EXPECT_THROW(parse_scalar(json("1/5"), f5, "x"), InputError);
}

TEST(Parse, ExplicitStructuresMatchBuilders) {
    auto h = groupoid_algebra(cyclic_group(2), Q);
    json alg = {{"dim", 2}, {"mult", {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}}, {"unit", {1, 0}}};
    json delta = json::array(), counit = json::array(), antipode = json::array();
    for (size_t r = 0; r < 4; ++r) {
        delta.push_back(json::array());
        for (size_t c = 0; c < 2; ++c)
            delta.back().push_back(h.delta()(r, c).get_num().get_si());
    }
    counit.push_back({1, 1});
    antipode = {{1, 0}, {0, 1}};
    json doc = {{"groupoid", {{"builder", "cyclic"}, {"n", 2}}},
                {"subject", {{"kind", "weakhopf"}, {"algebra", alg}, {"delta", delta}, {"counit", counit},
                             {"antipode", antipode}}}};
    auto s = subject_of(doc.dump(), Q);
    EXPECT_TRUE(s.weak_hopf->verify());
    EXPECT_EQ(s.weak_hopf->delta(), h.delta());
    EXPECT_EQ(s.weak_hopf->algebra().unit(), h.algebra().unit());
}

TEST(RoundTrip, BuilderGroupoids) {
    for (const auto& [name, g] : standard_groupoids()) {
        auto j = groupoid_to_json(g);
        auto back = parse_groupoid(json::parse(j.dump()), "groupoid");
        EXPECT_EQ(back, g) << name;
        EXPECT_EQ(groupoid_to_json(back), j) << name;
    }
    auto u = parse_groupoid(json::parse(R"({"builder": "union", "of": [{"builder": "cyclic", "n": 2},
                                                                      {"builder": "pair", "n": 2}]})"),
                            "groupoid");
    EXPECT_EQ(u, disjoint_union(cyclic_group(2), pair_groupoid(2)));
    auto c3 = parse_groupoid(json::parse(R"({"builder": "group", "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})"),
                             "groupoid");
    EXPECT_EQ(c3.num_morphisms(), 3u);
    EXPECT_TRUE(c3.validate());
}

TEST(Execute, ExitCodes) {
    auto doc = write_temp("wgalois_swap.json", swap_doc);
    EXPECT_EQ(execute({"all", doc}).exit, 0);
    EXPECT_EQ(execute({"strongly-graded", doc}).exit, 2);
    EXPECT_EQ(execute({"verify", doc, "--field", "2"}).exit, 0);
    EXPECT_EQ(execute({"galois", doc, "--field", "2"}).exit, 0);
    EXPECT_EQ(execute({"galois", doc, "--field", "6"}).exit, 2);
    EXPECT_EQ(execute({"galois", "/nonexistent/doc.json"}).exit, 2);
    EXPECT_EQ(execute({"explode", doc}).exit, 2);
    EXPECT_EQ(execute({"all", doc, "--subring", "missing"}).exit, 2);
    EXPECT_EQ(execute({"--help"}).exit, 0);
}

TEST(Execute, BrokenActionFailsVerify) {
    auto doc = write_temp("wgalois_broken.json", R"({
      "groupoid": {"builder": "cyclic", "n": 2},
      "subject": {"kind": "action", "algebra": {"builder": "diagonal", "n": 2},
                  "act": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]}})");
    auto r = execute({"all", doc});
    EXPECT_EQ(r.exit, 1);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["checks"].back()["name"], "module algebra");
    EXPECT_EQ(j["checks"].back()["verdict"], "fail");
    EXPECT_EQ(j["summary"]["Galois"], "not run");
}

TEST(Execute, Deterministic) {
    auto doc = write_temp("wgalois_swap.json", swap_doc);
    auto a = execute({"all", doc}), b = execute({"all", doc});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find(" ms\n"), std::string::npos);
}

TEST(Execute, PrettyAgreesWithMachine) {
    for (const auto& c : corpus_cases(WGALOIS_CORPUS_DIR)) {
        auto machine = execute(c.args);
        auto args = c.args;
        args.push_back("--format");
        args.push_back("pretty");
        auto pretty = execute(args);
        EXPECT_EQ(machine.exit, pretty.exit) << c.stem;
        auto j = json::parse(machine.out);
        if (j.contains("error")) {
            EXPECT_NE(pretty.err.find(j["message"].get<std::string>()), std::string::npos) << c.stem;
            continue;
        }
        size_t pos = 0;
        for (const auto& chk : j["checks"]) {
            std::string line = "[" + chk["verdict"].get<std::string>() + "]";
            pos = pretty.out.find(line, pos);
            ASSERT_NE(pos, std::string::npos) << c.stem << " " << chk["name"];
            EXPECT_EQ(pretty.out.compare(pos + 10, chk["name"].get<std::string>().size(), chk["name"]), 0) << c.stem;
            ++pos;
        }
        for (const auto& [k, v] : j["summary"].items())
            EXPECT_NE(pretty.out.find(k + "=" + v.get<std::string>()), std::string::npos) << c.stem;
    }
}

TEST(Corpus, InProcess) {
    auto cases = corpus_cases(WGALOIS_CORPUS_DIR);
    EXPECT_GE(cases.size(), 10u);
    for (const auto& c : cases) {
        auto r = execute(c.args);
        EXPECT_EQ(r.out, c.expected) << c.stem;
        EXPECT_EQ(r.exit, json::parse(c.expected)["exit_status"].get<int>()) << c.stem;
    }
}

TEST(Corpus, Binary) {
    for (const auto& c : corpus_cases(WGALOIS_CORPUS_DIR)) {
        std::string cmd = std::string("'") + WGALOIS_CLI + "'";
        for (const auto& a : c.args)
            cmd += " '" + a + "'";
        FILE* p = popen(cmd.c_str(), "r");
        ASSERT_NE(p, nullptr);
        std::string out;
        char buf[4096];
        while (size_t n = fread(buf, 1, sizeof buf, p))
            out.append(buf, n);
        int status = pclose(p);
        EXPECT_EQ(out, c.expected) << c.stem;
        EXPECT_EQ(WEXITSTATUS(status), json::parse(c.expected)["exit_status"].get<int>()) << c.stem;
    }
}
