#include <random>

#include "doctest.h"
#include "idg/monofield.hpp"

using namespace idg;

namespace {

MonoElem c(const CtxPtr &ctx, long long v) { return MonoElem::from_int(ctx, v); }

} // namespace

TEST_CASE("make_field")
{
    auto F = make_field(2, 1, squares_oracle(), 16);
    CHECK(F->gf().q() == 2);
    CHECK(F->imperfection_degree() == 2);
    auto F9 = make_field(3, 2, squares_oracle(), 12);
    CHECK(F9->gf().q() == 9);
    auto L = make_field(3, 1, nullptr, 12);
    CHECK(L->imperfection_degree() == 1);
    CHECK_THROWS_AS(make_field(6, 1, nullptr, 4), std::invalid_argument);
    CHECK_THROWS_AS(MonoElem::param(L), std::invalid_argument);
}

TEST_CASE("arithmetic examples")
{
    auto F = make_field(5, 1, squares_oracle(), 8);
    auto t = MonoElem::t(F);
    auto x = MonoElem::param(F);
    auto one = MonoElem::one(F);
    CHECK((t * t - one) / (t - one) == t + one);
    CHECK(x / x == one);
    auto lhs = (t * t * x * x - t * t) / (t * x - t);
    CHECK(lhs == t * x + t);
    CHECK((t * x - t) * (t * x + t) == t * t * x * x - t * t);
    CHECK_THROWS_AS(x / MonoElem::zero(F), std::domain_error);
}

TEST_CASE("is_constant")
{
    auto F7 = make_field(7, 1, squares_oracle(), 4);
    CHECK(c(F7, 5).is_constant());
    CHECK_FALSE(MonoElem::t(F7).is_constant());
    auto t = MonoElem::t(F7);
    auto x = MonoElem::param(F7);
    auto r = (t * x) / (x * t);
    CHECK(r.is_constant());
    CHECK(r.is_one());
}

TEST_CASE("p_root examples")
{
    auto F = make_field(3, 2, squares_oracle(), 8);
    auto t = MonoElem::t(F);
    CHECK(p_root(t.pow(3)) == t);
    CHECK_THROWS_WITH_AS(p_root(MonoElem::param(F)), doctest::Contains("b=1"), std::domain_error);
    const auto z = F->gf().generator();
    const auto cz = MonoElem::constant(F, z);
    const auto expected = MonoElem::constant(F, F->gf().pow(z, 3)) * t * t;
    CHECK(p_root(cz * t.pow(6)) == expected);
    CHECK(F->gf().pow(F->gf().pow(z, 3), 3) == z);
}

TEST_CASE("normal form properties on random elements")
{
    std::mt19937_64 rng(11);
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 1}}) {
        auto F = make_field(p, k, squares_oracle(), 6);
        for (int i = 0; i < 60; ++i) {
            auto a = sample_element(F, rng);
            auto b = sample_element(F, rng);
            auto cc = sample_element(F, rng);
            CHECK(a.is_normalized());
            auto s = a + b;
            auto m = a * b;
            CHECK(s.is_normalized());
            CHECK(m.is_normalized());
            CHECK(a * (b + cc) == a * b + a * cc);
            CHECK(s - b == a);
            if (!b.is_zero()) {
                CHECK((m / b) == a);
                CHECK((a / b).is_normalized());
            }
            // re-normalizing a normalized representation is a no-op
            auto again = MonoElem::from_parts(F, a.shift_t(), a.shift_x(), a.num(), a.den());
            CHECK(again == a);
            CHECK(p_root(a.pow(p)) == a);
        }
    }
}

TEST_CASE("monomial multiplicativity")
{
    auto F = make_field(3, 1, squares_oracle(), 6);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        std::int64_t a1 = static_cast<std::int64_t>(rng() % 11) - 5, b1 = static_cast<std::int64_t>(rng() % 7) - 3;
        std::int64_t a2 = static_cast<std::int64_t>(rng() % 11) - 5, b2 = static_cast<std::int64_t>(rng() % 7) - 3;
        auto lhs = MonoElem::monomial(F, 1, a1, b1) * MonoElem::monomial(F, 1, a2, b2);
        auto sum = exponent_combine(1, PadicExponent{F->session_ptr(), a1, b1}, 1, PadicExponent{F->session_ptr(), a2, b2});
        CHECK(lhs == MonoElem::monomial(F, 1, sum.a, sum.b));
    }
}

TEST_CASE("constants are exactly F_q")
{
    std::mt19937_64 rng(99);
    for (auto [p, k] : {std::pair{2, 2}, {3, 1}, {5, 1}}) {
        auto F = make_field(p, k, squares_oracle(), 6);
        for (int v = 0; v < F->gf().q(); ++v) {
            CHECK(MonoElem::constant(F, static_cast<GaloisField::Elem>(v)).is_constant());
        }
        int tested = 0;
        while (tested < 100) {
            auto e = sample_element(F, rng);
            if (e.shift_t() == 0 && e.shift_x() == 0 && poly::is_constant(e.num()) && poly::is_constant(e.den())) continue;
            CHECK_FALSE(e.is_constant());
            ++tested;
        }
    }
}
