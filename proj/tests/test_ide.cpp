#include <random>

#include "doctest.h"
#include "idg/ide.hpp"

using namespace idg;

namespace {

Matrix<MonoElem> mat(int n, const std::vector<MonoElem> &v)
{
    Matrix<MonoElem> m(n, v.front().zero_like());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
    }
    return m;
}

} // namespace

TEST_CASE("multiplicative group example")
{
    auto F = make_field(3, 1, squares_oracle(), 20);
    auto x = MonoElem::param(F);
    auto t = MonoElem::t(F);
    const auto Y = mat(1, {x});
    const auto A = derive_matrix(Y, 20);
    for (int n = 0; n <= 20; ++n) CHECK(A.A[n](0, 0) == t.pow(-n).mul_int(F->binom(0, 1, n)));
    const auto rep = verify_ide(A, 20);
    CHECK(rep.a0_identity);
    CHECK(rep.checks.size() == 231);
    CHECK(rep.all_pass());
    const auto sol = verify_solution(A, Y, 20);
    CHECK(sol.solution_pass());
    CHECK(sol.iterativity_pass());
    CHECK(sol.equivalence_holds());
    // alpha has low digit 1, so A_1 = 1/t and the level is 0
    const auto fl = frobenius_level(A);
    CHECK(fl.level == 0);
    CHECK_FALSE(fl.unbounded);
}

TEST_CASE("identity solution")
{
    auto F = make_field(2, 1, squares_oracle(), 8);
    const auto I = Matrix<MonoElem>::identity(2, MonoElem::one(F));
    const auto A = derive_matrix(I, 8);
    CHECK(A.A[0] == I);
    for (int k = 1; k <= 8; ++k) CHECK(A.A[k].is_zero());
    const auto fl = frobenius_level(A);
    CHECK(fl.unbounded);
    CHECK(fl.level == 4);
    CHECK(verify_ide(A, 8).all_pass());

    // identity A does not solve theta(y) = A y for y = t
    const auto Y = mat(1, {MonoElem::t(F)});
    IdeMatrix<MonoElem> A1;
    A1.A.push_back(Matrix<MonoElem>::identity(1, MonoElem::one(F)));
    for (int k = 1; k <= 4; ++k) A1.A.emplace_back(1, MonoElem::zero(F));
    const auto sol = verify_solution(A1, Y, 4);
    CHECK(sol.solution[0].pass);
    CHECK_FALSE(sol.solution[1].pass);
    CHECK(sol.equivalence_holds());
}

TEST_CASE("broken coefficient matrices are detected")
{
    auto F = make_field(3, 1, squares_oracle(), 9);
    auto t = MonoElem::t(F);
    auto x = MonoElem::param(F);
    const auto Y = mat(2, {x, t, MonoElem::zero(F), t + MonoElem::one(F)});
    auto A = derive_matrix(Y, 9);
    CHECK(verify_ide(A, 9).all_pass());

    auto bad0 = A;
    bad0.A[0](0, 1) = MonoElem::one(F);
    const auto r0 = verify_ide(bad0, 9);
    CHECK_FALSE(r0.a0_identity);
    CHECK_FALSE(r0.all_pass());

    auto bad = A;
    bad.A[3](1, 0) = bad.A[3](1, 0) + MonoElem::one(F);
    CHECK(verify_ide(bad, 9).failures() > 0);
    CHECK_FALSE(verify_solution(bad, Y, 9).solution_pass());
}

TEST_CASE("scaling a solution by a constant")
{
    auto F = make_field(5, 1, squares_oracle(), 6);
    auto t = MonoElem::t(F);
    auto x = MonoElem::param(F);
    const auto Y = mat(2, {x, t, t.pow(2), x / (t + MonoElem::one(F))});
    const auto A = derive_matrix(Y, 6);
    Matrix<MonoElem> Yc = Y;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) Yc(i, j) = Y(i, j).mul_int(3);
    }
    CHECK(verify_solution(A, Y, 6).all_pass());
    CHECK(verify_solution(A, Yc, 6).all_pass());
    CHECK(determinant(Yc) == determinant(Y).mul_int(9));
}

TEST_CASE("equivalence of iterative A and iterative entries on random matrices")
{
    std::mt19937_64 rng(8);
    const SampleOptions small{2, 1, 1, true};
    int tested = 0;
    for (int p : {2, 3}) {
        auto F = make_field(p, 1, squares_oracle(), 5);
        for (int n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<MonoElem> v;
                for (int i = 0; i < n * n; ++i) v.push_back(sample_element(F, rng, small));
                const auto Y = mat(n, v);
                const auto det = determinant(Y);
                if (det.is_zero()) continue;
                CHECK_FALSE(det.inverse().is_zero());
                const auto A = derive_matrix(Y, 5);
                const auto sol = verify_solution(A, Y, 5);
                CHECK(sol.solution_pass());
                CHECK(sol.ide_pass);
                CHECK(sol.iterativity_pass());
                CHECK(sol.equivalence_holds());
                ++tested;
            }
        }
    }
    CHECK(tested >= 10);
}

TEST_CASE("frobenius pullback at level 1")
{
    for (int p : {2, 3}) {
        auto F = make_field(p, 1, squares_oracle(), 12, 12);
        auto t = MonoElem::t(F);
        auto x = MonoElem::param(F);
        const auto a1 = F->session().param_residue(1);
        // entries in F_1
        const auto Y = mat(2, {x * t.pow(-a1), MonoElem::zero(F), t.pow(p), MonoElem::one(F)});
        const auto A = derive_matrix(Y, 12);
        const auto fl = frobenius_level(A);
        CHECK(fl.level >= 1);
        CHECK(fl.entries_in_level);
        const auto tower = f_bracket(F, 1);
        const auto pb = frobenius_pullback(A, Y, tower);
        CHECK(pb.A.order() == 12 / p);
        CHECK(pb.Y(0, 0) == MonoElem::param(tower.bracket()));
        CHECK(pb.Y(1, 0) == MonoElem::t(tower.bracket()));
        const auto sol = verify_solution(pb.A, pb.Y, pb.A.order());
        CHECK(sol.all_pass());
        CHECK(sol.equivalence_holds());
        // a matrix outside F_1 has no p-th root
        const auto Yx = mat(1, {x});
        CHECK_THROWS_AS(frobenius_pullback(derive_matrix(Yx, 4), Yx, tower), std::domain_error);
    }
}
