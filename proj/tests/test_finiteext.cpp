#include "doctest.h"
#include "idg/finiteext.hpp"

using namespace idg;

namespace {

bool is_power_of(int n, int p)
{
    while (n > 1 && n % p == 0) n /= p;
    return n == 1;
}

} // namespace

TEST_CASE("Artin-Schreier y^2 + y = t over F_2(t)")
{
    auto F = make_field(2, 1, nullptr, 12);
    auto t = MonoElem::t(F);
    auto E = artin_schreier(t);
    CHECK(E->degree() == 2);
    const auto S = extend_derivation(E, 12);
    CHECK(S[0] == ExtElem::gen(E));
    for (int n = 1; n <= 12; ++n) {
        CHECK(S[n].in_base());
        CHECK(S[n] == (is_power_of(n, 2) ? ExtElem::one(E) : ExtElem::zero(E)));
    }
    CHECK(check_minpoly_substitution(E, 12));
    CHECK(verify_iterativity(ExtElem::gen(E), 12).all_pass());

    const auto autos = artin_schreier_automorphisms(E);
    REQUIRE(autos.size() == 2);
    for (const auto &s : autos) CHECK(verify_id_automorphism(s, 12));

    const auto sol = dedekind_solution(E, autos, 12);
    const auto y = ExtElem::gen(E);
    CHECK(sol.Y(0, 0) == ExtElem::one(E));
    CHECK(sol.Y(0, 1) == ExtElem::one(E));
    CHECK(sol.Y(1, 0) == y);
    CHECK(sol.Y(1, 1) == y + ExtElem::one(E));
    CHECK(sol.det == ExtElem::one(E));
    CHECK(sol.report.all_pass());
    for (int n = 1; n <= 12; ++n) {
        CHECK(sol.A.A[n](0, 0).is_zero());
        CHECK(sol.A.A[n](0, 1).is_zero());
        CHECK(sol.A.A[n](1, 1).is_zero());
        CHECK(sol.A.A[n](1, 0) == S[n]);
    }
}

TEST_CASE("extension over the two-variable field")
{
    auto F = make_field(3, 1, squares_oracle(), 6);
    auto x = MonoElem::param(F);
    auto t = MonoElem::t(F);
    auto E = artin_schreier(x * t);
    CHECK(check_minpoly_substitution(E, 6));
    CHECK(verify_iterativity(ExtElem::gen(E), 6).all_pass());
    const auto autos = artin_schreier_automorphisms(E);
    CHECK(autos.size() == 3);
    const auto sol = dedekind_solution(E, autos, 6);
    CHECK(sol.report.all_pass());
    // arithmetic in E
    const auto y = ExtElem::gen(E);
    const auto z = y * y + ExtElem::from_base(E, t);
    CHECK(z * z.inverse() == ExtElem::one(E));
    CHECK(verify_homomorphism(y, z, 6).all_pass());
}

TEST_CASE("uniqueness across truncations")
{
    auto F6 = make_field(2, 1, nullptr, 6);
    auto F12 = make_field(2, 1, nullptr, 12);
    auto f6 = MonoElem::t(F6).pow(3) + MonoElem::t(F6);
    auto f12 = MonoElem::t(F12).pow(3) + MonoElem::t(F12);
    auto E6 = artin_schreier(f6), E12 = artin_schreier(f12);
    for (int n = 0; n <= 6; ++n) {
        for (int i = 0; i < 2; ++i) {
            const auto a = E6->theta_y(n)[i], b = E12->theta_y(n)[i];
            const auto ta = a.numerator_terms(), tb = b.numerator_terms();
            const auto da = a.denominator_terms(), db = b.denominator_terms();
            REQUIRE(ta.size() == tb.size());
            REQUIRE(da.size() == db.size());
            for (std::size_t k = 0; k < ta.size(); ++k) {
                CHECK(ta[k].a == tb[k].a);
                CHECK(ta[k].c == tb[k].c);
            }
            for (std::size_t k = 0; k < da.size(); ++k) {
                CHECK(da[k].a == db[k].a);
                CHECK(da[k].c == db[k].c);
            }
        }
    }
}

TEST_CASE("Kummer extensions")
{
    for (auto [p, d] : {std::pair{3, 2}, {5, 4}, {7, 3}}) {
        auto F = make_field(p, 1, squares_oracle(), 6);
        auto t = MonoElem::t(F);
        auto E = kummer(t, d);
        CHECK(check_minpoly_substitution(E, 6));
        const auto autos = kummer_automorphisms(E);
        CHECK(static_cast<int>(autos.size()) == d);
        for (const auto &s : autos) CHECK(verify_id_automorphism(s, 6));
        const auto sol = dedekind_solution(E, autos, 6);
        CHECK_FALSE(sol.det.is_zero());
        CHECK(sol.report.all_pass());
    }
    auto F9 = make_field(3, 2, nullptr, 4);
    auto E = kummer(MonoElem::t(F9), 8);
    CHECK(dedekind_solution(E, kummer_automorphisms(E), 4).report.all_pass());
}

TEST_CASE("degree one")
{
    auto F = make_field(3, 1, squares_oracle(), 5);
    auto f = MonoElem::param(F) / (MonoElem::t(F) + MonoElem::one(F));
    auto E = FiniteExt::make(F, {-f, MonoElem::one(F)});
    const auto tf = theta_series(f, 5);
    for (int n = 0; n <= 5; ++n) CHECK(E->theta_y(n) == ExtElem::from_base(E, tf[n]));
    const auto sol = dedekind_solution(E, {ExtAutomorphism(ExtElem::gen(E))}, 5);
    CHECK(sol.Y(0, 0) == ExtElem::one(E));
    CHECK(sol.A.A[0](0, 0) == ExtElem::one(E));
    for (int n = 1; n <= 5; ++n) CHECK(sol.A.A[n].is_zero());
}

TEST_CASE("rejections")
{
    auto F = make_field(2, 1, nullptr, 6);
    auto t = MonoElem::t(F);
    auto one = MonoElem::one(F);
    auto zero = MonoElem::zero(F);
    // inseparable
    CHECK_THROWS_WITH_AS(FiniteExt::make(F, {-t, zero, one}), doctest::Contains("inseparable"), std::invalid_argument);
    // constant extension
    CHECK_THROWS_AS(FiniteExt::make(F, {one, one, one}), std::invalid_argument);
    // not monic
    CHECK_THROWS_AS(FiniteExt::make(F, {t, t}), std::invalid_argument);
    // certificates
    CHECK_THROWS_AS(artin_schreier(t * t), std::invalid_argument);
    CHECK_THROWS_AS(artin_schreier(one), std::invalid_argument);
    CHECK_THROWS_AS(kummer(t, 3), std::invalid_argument);
    auto F5 = make_field(5, 1, nullptr, 4);
    CHECK_THROWS_AS(kummer(MonoElem::t(F5).pow(2), 4), std::invalid_argument);

    auto E = artin_schreier(t);
    const auto y = ExtElem::gen(E);
    CHECK_THROWS_AS(ExtAutomorphism(y + ExtElem::from_base(E, t)), std::invalid_argument);
    CHECK(verify_id_automorphism(ExtAutomorphism(y), 6));
    CHECK_THROWS_AS(dedekind_solution(E, {ExtAutomorphism(y), ExtAutomorphism(y)}, 4), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_solution(E, {ExtAutomorphism(y)}, 4), std::invalid_argument);
}

TEST_CASE("lex valuation")
{
    auto F = make_field(3, 1, squares_oracle(), 4);
    auto t = MonoElem::t(F);
    auto x = MonoElem::param(F);
    CHECK(lex_valuation(t) == std::pair<std::int64_t, std::int64_t>{-1, 0});
    CHECK(lex_valuation(x) == std::pair<std::int64_t, std::int64_t>{0, -1});
    CHECK(lex_valuation(t * t + x) == std::pair<std::int64_t, std::int64_t>{-2, 0});
    CHECK(lex_valuation((t * t + x) / (t * x + MonoElem::one(F))) == std::pair<std::int64_t, std::int64_t>{-1, 1});
}
