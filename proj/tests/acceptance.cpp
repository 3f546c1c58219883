// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "idg/cli.hpp"
#include "idg/expr.hpp"
#include "idg/finiteext.hpp"
#include "idg/galois.hpp"
#include "idg/hasse.hpp"
#include "idg/ide.hpp"
#include "idg/tower.hpp"
#include "schema_check.hpp"

using namespace idg;
using boost::multiprecision::cpp_int;

namespace {

struct Outcome {
    bool pass = false;
    std::string details;
};

// binom(m, n) mod p from factorials.
int factorial_binom(std::int64_t m, std::int64_t n, int p)
{
    if (n < 0 || n > m) return 0;
    cpp_int num = 1, den = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return static_cast<int>(static_cast<cpp_int>(num / den) % p);
}

Outcome axiom_suite()
{
    std::mt19937_64 rng(1);
    std::size_t checks = 0, failures = 0;
    for (int p : {2, 3, 5}) {
        const auto F = make_field(p, 1, squares_oracle(), 12);
        std::vector<MonoElem> xs;
        for (int i = 0; i < 200; ++i) xs.push_back(sample_element(F, rng));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto &x = xs[i], &y = xs[(i + 1) % xs.size()];
            failures += theta_series(x, 12)[0] == x ? 0 : 1;
            const auto a = verify_additivity(x, y, 12);
            const auto h = verify_homomorphism(x, y, 12);
            const auto it = verify_iterativity(x, 12);
            failures += a.failures() + h.failures() + it.failures();
            checks += 1 + a.orders.size() + h.orders.size() + it.pairs.size();
        }
    }
    return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(checks) + " checks"};
}

Outcome lucas_oracle()
{
    std::size_t bad = 0, total = 0;
    for (int p : {2, 3, 5}) {
        auto s = std::make_shared<const PadicSession>(p, nullptr, 8);
        for (std::int64_t b = 0; b <= 60; ++b) {
            for (std::int64_t n = 0; n <= b; ++n, ++total) {
                bad += lucas_binom(*s, b, 0, static_cast<std::uint64_t>(n)) == factorial_binom(b, n, p) ? 0 : 1;
            }
        }
    }
    // Vandermonde on exponents a + b*alpha, compared with integer representatives mod p^M.
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> small(-6, 6);
    std::size_t vbad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[trial % 3];
        const int M = 8;
        auto s = std::make_shared<const PadicSession>(p, squares_oracle(), M);
        const std::int64_t pm = ipow(p, M);
        const std::int64_t a1 = small(rng), b1 = small(rng), a2 = small(rng), b2 = small(rng);
        const auto rep = [&](std::int64_t a, std::int64_t b) {
            const std::int64_t r = (a + b * s->param_residue(M)) % pm;
            return r < 0 ? r + pm : r;
        };
        const std::int64_t r1 = rep(a1, b1), r2 = rep(a2, b2), r12 = rep(a1 + a2, b1 + b2);
        for (std::uint64_t n = 0; n <= 12; ++n) {
            int sum = 0;
            for (std::uint64_t i = 0; i <= n; ++i) {
                const int x = lucas_binom(*s, a1, b1, i), y = lucas_binom(*s, a2, b2, n - i);
                vbad += x == factorial_binom(r1, static_cast<std::int64_t>(i), p) ? 0 : 1;
                vbad += y == factorial_binom(r2, static_cast<std::int64_t>(n - i), p) ? 0 : 1;
                sum = (sum + x * y) % p;
            }
            const int whole = lucas_binom(*s, a1 + a2, b1 + b2, n);
            vbad += whole == sum ? 0 : 1;
            vbad += whole == factorial_binom(r12, static_cast<std::int64_t>(n), p) ? 0 : 1;
        }
    }
    return {bad == 0 && vbad == 0, std::to_string(total) + " binomials against factorials (" + std::to_string(bad) +
                                       " off), 100 Vandermonde triples (" + std::to_string(vbad) + " off)"};
}

Outcome tower_degrees()
{
    std::ostringstream os;
    bool ok = true;
    for (int p : {2, 3}) {
        const auto F = make_field(p, 1, squares_oracle(), 8);
        for (int l = 1; l <= 3; ++l) {
            const auto low = lattice_index(kernel_lattice(*F, l), field_lattice(*F));
            const auto high = lattice_index(field_lattice(*F), f_bracket(F, l).bracket_lattice());
            ok &= low == ipow(p, l) && high == ipow(p, l);
            os << "p=" << p << " l=" << l << ": " << low << "," << high << "; ";
        }
        for (int l = 0; l <= 2; ++l) ok &= lattice_index(kernel_lattice(*F, l + 1), kernel_lattice(*F, l)) == p;
    }
    os << "steps [F_l : F_(l+1)] = p for l <= 2";
    return {ok, os.str()};
}

Outcome l1_criterion()
{
    bool ok = true;
    for (int p : {2, 3, 5}) {
        ok &= check_L1_eq_Lp(*make_field(p, 1, nullptr, 8));
        ok &= !check_L1_eq_Lp(*make_field(p, 1, squares_oracle(), 8));
    }
    return {ok, "true for F_q(t), false for F_q(t, t^alpha), p = 2, 3, 5"};
}

Outcome multiplicative_group()
{
    bool ok = true;
    std::size_t pairs = 0;
    for (int p : {2, 3}) {
        const auto F = make_field(p, 1, squares_oracle(), 20);
        const Matrix<MonoElem> Y(1, MonoElem::param(F));
        const auto A = derive_matrix(Y, 20);
        const auto ide = verify_ide(A, 20);
        pairs += ide.checks.size();
        const auto sol = verify_solution(A, Y, 20);
        ok &= ide.all_pass() && sol.solution_pass() && sol.iterativity_pass() && sol.ide_pass && sol.equivalence_holds();
    }
    return {ok, std::to_string(pairs) + " compatibility pairs k + l <= 20; solution and entrywise iterativity agree"};
}

Outcome frobenius()
{
    bool ok = true;
    for (int p : {2, 3}) {
        const auto F = make_field(p, 1, squares_oracle(), 12, 12);
        const auto t = MonoElem::t(F), x = MonoElem::param(F);
        Matrix<MonoElem> Y(2, MonoElem::zero(F));
        Y(0, 0) = x * t.pow(-F->session().param_residue(1));
        Y(1, 0) = t.pow(p);
        Y(1, 1) = MonoElem::one(F);
        const auto A = derive_matrix(Y, 12);
        const auto fl = frobenius_level(A);
        const auto pb = frobenius_pullback(A, Y, f_bracket(F, 1));
        const auto sol = verify_solution(pb.A, pb.Y, pb.A.order());
        ok &= fl.level >= 1 && fl.entries_in_level && sol.all_pass();
    }
    return {ok, "frobenius level >= 1 and the p-th-root system solves in F_[1], p = 2, 3"};
}

Outcome classical()
{
    const auto L = make_field(2, 1, nullptr, 12);
    const auto ext = artin_schreier(MonoElem::t(L));
    const auto th = extend_derivation(ext, 12);
    bool ok = check_minpoly_substitution(ext, 12);
    for (int n = 1; n <= 12; ++n) {
        const bool power = n == 1 || n == 2 || n == 4 || n == 8;
        ok &= th[n] == (power ? th[n].one_like() : th[n].zero_like());
    }
    const auto autos = artin_schreier_automorphisms(ext);
    for (const auto &s : autos) ok &= verify_id_automorphism(s, 12);
    const auto sol = dedekind_solution(ext, autos, 12);
    ok &= sol.det == sol.det.one_like() && verify_ide(sol.A, 12).all_pass() && sol.report.all_pass();
    return {ok, "d_n = 1 at n = 1, 2, 4, 8; 2 ID-automorphisms; det Y = 1; A compatible"};
}

Outcome roots_of_unity()
{
    bool ok = true;
    std::ostringstream os;
    for (auto [p, l] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        const auto F = make_field(p, 1, squares_oracle(), 8, 16);
        const auto g = grouplike_verify(F, l, 8);
        const auto cs = constants_search(tensor_square(F, l), default_window(p, l), 8);
        const bool good = g.all_pass() && cs.exact && cs.verified && static_cast<std::int64_t>(cs.basis.size()) == ipow(p, l);
        ok &= good;
        os << "(" << p << "," << l << "):" << cs.basis.size() << " ";
    }
    return {ok, "constants dimensions " + os.str()};
}

Outcome product()
{
    const auto F = make_field(2, 1, squares_oracle(), 8, 16);
    const auto r = product_realization(F, 1, MonoElem::t(F), 8);
    const bool ok = r.all_pass() && r.dimension == 4 && r.grouplike_count == 2 && r.id_automorphisms == 2 &&
                    r.constants_dimension == 1;
    return {ok, "dimension " + std::to_string(r.dimension) + ", group-likes " + std::to_string(r.grouplike_count) +
                    ", ID-automorphisms " + std::to_string(r.id_automorphisms) + ", constants dimension " +
                    std::to_string(r.constants_dimension)};
}

Outcome cli_checks()
{
    const auto schema = load_report_schema();
    bool ok = true;
    std::string first_violation;
    auto run = [&](std::vector<std::string> args, int expected) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        ok &= code == expected;
        const auto v = schema_violation(schema, nlohmann::json::parse(out.str()));
        if (!v.empty() && first_violation.empty()) first_violation = args[0] + " " + v;
    };
    run({"selftest", "--p", "2", "--order", "12"}, 0);
    run({"selftest", "--p", "3", "--order", "12"}, 0);
    run({"tower", "--p", "2", "--level", "3"}, 0);
    run({"galois-kummer", "--p", "2", "--level", "2"}, 0);
    run({"realize", "--p", "2", "--level", "1", "--as-rhs", "t"}, 0);
    run({"classical", "--p", "2", "--alpha", "none", "--order", "12", "--m", "y^2 + y + t"}, 0);
    ok &= first_violation.empty();

    std::mt19937_64 rng(3);
    int bad = 0;
    const auto F = make_field(3, 2, squares_oracle(), 8);
    for (int i = 0; i < 100; ++i) {
        const auto x = sample_element(F, rng);
        bad += parse_expr(to_string(x), F) == x ? 0 : 1;
    }
    ok &= bad == 0;
    return {ok, "selftest exit 0; " + std::to_string(100 - bad) + "/100 round-trips; schema " +
                    (first_violation.empty() ? std::string("valid") : first_violation)};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char *name;
        double limit_s;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "axiom suite", 30, axiom_suite},
        {2, "lucas oracle", 0, lucas_oracle},
        {3, "tower degrees", 0, tower_degrees},
        {4, "L_1 = L^p criterion", 0, l1_criterion},
        {5, "multiplicative group equation", 0, multiplicative_group},
        {6, "frobenius pullback", 0, frobenius},
        {7, "classical Artin-Schreier", 0, classical},
        {8, "roots of unity", 60, roots_of_unity},
        {9, "product realization", 0, product},
        {10, "command line", 0, cli_checks},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.details += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] criterion %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.details.c_str(), secs);
    }
    return failed == 0 ? 0 : 1;
}
