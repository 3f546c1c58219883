#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "idg/cli.hpp"
#include "idg/expr.hpp"
#include "schema_check.hpp"

using namespace idg;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    json report;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(args, out, err);
    o.err = err.str();
    if (!out.str().empty() && out.str().front() == '{') o.report = json::parse(out.str());
    return o;
}

std::string temp_file(const std::string &name, const json &j)
{
    const std::string path = std::string(IDG_BINARY_DIR) + "/" + name;
    std::ofstream(path) << j.dump();
    return path;
}

void require_valid(const Outcome &o)
{
    static const json schema = load_report_schema();
    CAPTURE(o.report.dump());
    CHECK(schema_violation(schema, o.report) == "");
}

} // namespace

TEST_CASE("parser examples")
{
    const auto F = make_field(3, 1, squares_oracle(), 8);
    const auto t = MonoElem::t(F), x = MonoElem::param(F), one = MonoElem::one(F);
    CHECK(parse_expr("t^2*x/(1-t)", F) == t * t * x / (one - t));
    CHECK(parse_expr("(t^2-1)/(t-1)", F) == t + one);
    CHECK(parse_expr("-t^2", F) == -(t * t));
    CHECK(parse_expr("2*t^2 + 1", F) == t * t * MonoElem::from_int(F, 2) + one);
    CHECK(parse_expr("t^-1", F) == t.inverse());
    CHECK(parse_expr("t^(-2)*x", F) == x / (t * t));
    CHECK(parse_expr("t - t - t", F) == -t);
    CHECK(parse_expr("t/t/t", F) == t.inverse());
    CHECK(parse_expr("  ( t + x ) ^ 3 ", F) == (t + x).pow(3));
    try {
        parse_expr("x^t", F);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_expr("t +", F), ParseError);
    CHECK_THROWS_AS(parse_expr("(t", F), ParseError);
    CHECK_THROWS_AS(parse_expr("tx", F), ParseError);
    CHECK_THROWS_AS(parse_expr("y", F), ParseError);
    CHECK_THROWS_AS(parse_expr("1/(t-t)", F), ParseError);
    CHECK_THROWS_AS(parse_expr("x", make_field(3, 1, nullptr, 8)), ParseError);
}

TEST_CASE("y is in scope inside an extension")
{
    const auto L = make_field(2, 1, nullptr, 8);
    const auto ext = artin_schreier(MonoElem::t(L));
    const auto y = ExtElem::gen(ext);
    CHECK(parse_expr("y^2 + y", ext) == ExtElem::from_base(ext, MonoElem::t(L)));
    CHECK(parse_expr(to_string(y / (y + y.one_like())), ext) == y / (y + y.one_like()));
    const auto m = parse_poly_in_y("y^2 + y + t", L);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == MonoElem::t(L));
}

TEST_CASE("print then parse is the identity on 100 random elements")
{
    std::mt19937_64 rng(99);
    int count = 0;
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {3, 2}}) {
        const auto F = make_field(p, k, squares_oracle(), 8);
        for (int i = 0; i < 25; ++i, ++count) {
            const MonoElem x = sample_element(F, rng);
            CAPTURE(to_string(x));
            CHECK(parse_expr(to_string(x), F) == x);
        }
    }
    CHECK(count == 100);
}

TEST_CASE("printing is canonical")
{
    const auto F = make_field(3, 2, squares_oracle(), 8);
    CHECK(to_string(MonoElem::zero(F)) == "0");
    CHECK(to_string(parse_expr("t*x + 2", F)) == "t*x + 2");
    CHECK(to_string(parse_expr("1/t", F)) == "t^-1");
    CHECK(to_string(parse_expr("z*t", F)) == "z^1*t");
    CHECK(to_string(parse_expr("1/(1+t)", F)) == "(1)/(t + 1)");
}

TEST_CASE("derive reports binom(alpha, n) coefficients")
{
    // alpha = 1 + 3 + 3^4 + ... so alpha = 4 mod 9: binom(4, 1) = 1, binom(4, 2) = 6 = 0 mod 3
    auto o = run_cli({"derive", "--p", "3", "--q", "3", "--alpha", "squares", "--order", "6", "--expr", "x", "--n", "2"});
    CHECK(o.code == 0);
    require_valid(o);
    CHECK(o.report["result"]["coefficients"][0]["value"] == "0");
    o = run_cli({"derive", "--p", "3", "--order", "6", "--expr", "x", "--n", "1"});
    CHECK(o.report["result"]["coefficients"][0]["value"] == "t^-1*x");
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({"derive", "--expr", "x^t"}).code == 2);
    CHECK(run_cli({"derive", "--expr", "x", "--bogus"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"derive", "--expr", "x", "--n", "9", "--order", "4"}).code == 2);
    CHECK(run_cli({"derive", "--p", "4", "--expr", "t"}).code == 2);
    CHECK(run_cli({"derive", "--q", "6", "--expr", "t"}).code == 2);
    CHECK(run_cli({"derive", "--alpha", "explicit:1,5", "--expr", "t"}).code == 2);
    CHECK(run_cli({"selftest", "--p", "2", "--order", "12"}).code == 0);
}

TEST_CASE("every subcommand emits a schema-valid report")
{
    const auto F = make_field(2, 1, squares_oracle(), 6);
    // the G_m equation: Y = (x), A_k = binom(alpha, k) t^-k
    json A{{"n", 1}, {"trunc", 6}, {"entries", json::array()}};
    for (int k = 0; k <= 6; ++k) {
        const auto c = F->binom(0, 1, static_cast<std::uint64_t>(k));
        if (c != 0) A["entries"].push_back({k, 0, 0, "t^" + std::to_string(-k)});
    }
    const auto a_path = temp_file("gm_A.json", A);
    const auto y_path = temp_file("gm_Y.json", json{{"n", 1}, {"entries", {{0, 0, "x"}}}});
    json broken = A;
    broken["entries"].push_back({1, 0, 0, "t"});
    const auto b_path = temp_file("broken_A.json", broken);

    const std::vector<std::vector<std::string>> ok_runs = {
        {"derive", "--expr", "t^2*x/(1-t)"},
        {"verify-ide", "--order", "6", "--matrix", a_path},
        {"verify-solution", "--order", "6", "--matrix", a_path, "--solution", y_path},
        {"tower", "--p", "2", "--level", "3"},
        {"tower", "--p", "3", "--level", "2", "--alpha", "none"},
        {"l1check", "--p", "3"},
        {"l1check", "--p", "3", "--alpha", "none"},
        {"classical", "--p", "2", "--alpha", "none", "--order", "12", "--m", "y^2 + y + t"},
        {"classical", "--p", "5", "--alpha", "none", "--order", "6", "--m", "y^4 - t"},
        {"galois-kummer", "--p", "3", "--level", "1"},
        {"realize", "--p", "2", "--level", "1", "--as-rhs", "t"},
        {"selftest", "--p", "3", "--order", "9"},
    };
    for (const auto &args : ok_runs) {
        CAPTURE(args[0]);
        const auto o = run_cli(args);
        CAPTURE(o.err);
        CHECK(o.code == 0);
        require_valid(o);
        CHECK(o.report["command"] == args[0]);
    }

    const auto bad = run_cli({"verify-ide", "--order", "6", "--matrix", b_path});
    CHECK(bad.code == 1);
    require_valid(bad);

    const auto rational = run_cli({"galois-kummer", "--p", "2", "--level", "1", "--alpha", "ones"});
    CHECK(rational.code == 0);
    require_valid(rational);
    bool bound_only = false;
    for (const auto &c : rational.report["checks"]) bound_only |= c["status"] == "bound-only";
    CHECK(bound_only);
}

TEST_CASE("tower reports the index fields")
{
    const auto o = run_cli({"tower", "--p", "2", "--level", "3"});
    CHECK(o.report["result"]["index_F_over_Fell"] == 8);
    CHECK(o.report["result"]["index_Fbracket_over_F"] == 8);
    CHECK(o.report["result"]["alpha_ell"] == 3);
}

TEST_CASE("classical emits the Dedekind solution")
{
    const auto o = run_cli({"classical", "--p", "2", "--alpha", "none", "--order", "12", "--m", "y^2 + y + t"});
    REQUIRE(o.code == 0);
    const auto &Y = o.report["result"]["Y"];
    CHECK(Y["n"] == 2);
    CHECK(Y["entries"] == json::parse(R"([[0,0,"1"],[0,1,"1"],[1,0,"y"],[1,1,"1 + y"]])"));
    std::vector<int> ones;
    for (const auto &e : o.report["result"]["theta_y"]) {
        if (e["value"] == "1") ones.push_back(e["n"]);
    }
    CHECK(ones == std::vector<int>{1, 2, 4, 8});
}
