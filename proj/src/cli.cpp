#include "idg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "idg/expr.hpp"
#include "idg/finiteext.hpp"
#include "idg/galois.hpp"
#include "idg/hasse.hpp"
#include "idg/ide.hpp"
#include "idg/tower.hpp"

namespace idg::cli {

using nlohmann::json;

const char *status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::BoundOnly:
        return "bound-only";
    }
    return "fail";
}

void Report::add(std::string name, bool pass, std::string details)
{
    add(std::move(name), pass ? Status::Pass : Status::Fail, std::move(details));
}

void Report::add(std::string name, Status status, std::string details)
{
    checks.push_back(CheckResult{std::move(name), status, std::move(details)});
}

int Report::exit_code() const
{
    for (const auto &c : checks) {
        if (c.status == Status::Fail) return 1;
    }
    return 0;
}

json Report::to_json() const
{
    json j;
    j["command"] = command;
    j["params"] = params;
    j["checks"] = json::array();
    for (const auto &c : checks) j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
    j["result"] = result;
    return j;
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int p = 2;
    int k = 1;
    int q = 0;
    std::string alpha = "squares";
    int order = 8;
    int digits = 0;
    int level = 1;
    int n = -1;
    std::string expr;
    std::string m;
    std::string as_rhs;
    std::string matrix;
    std::string solution;
};

int field_degree(const Options &o)
{
    if (o.q == 0) return o.k;
    long long pw = 1;
    for (int k = 1; k <= 20; ++k) {
        pw *= o.p;
        if (pw == o.q) return k;
        if (pw > o.q) break;
    }
    throw UsageError("--q " + std::to_string(o.q) + " is not a power of --p " + std::to_string(o.p));
}

CtxPtr make_ctx(const Options &o, Report &rep, int min_digits = 0)
{
    if (o.order < 1) throw UsageError("--order must be >= 1");
    const int k = field_degree(o);
    OraclePtr oracle = o.alpha == "none" ? nullptr : parse_oracle(o.alpha, o.p);
    int digits = o.digits;
    if (digits == 0 && min_digits > 0) digits = std::max(min_digits, PadicSession::default_budget(o.p, o.order));
    auto ctx = make_field(o.p, k, oracle, o.order, digits);
    rep.params["p"] = o.p;
    rep.params["k"] = k;
    rep.params["q"] = ctx->gf().q();
    rep.params["alpha"] = oracle ? oracle->describe() : "none";
    rep.params["order"] = o.order;
    rep.params["digits"] = ctx->session().budget();
    if (oracle) rep.params["alpha_declared_irrational"] = oracle->declared_irrational();
    return ctx;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string &path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

int json_int(const json &j, const char *key)
{
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw UsageError(std::string("matrix JSON needs integer field '") + key + "'");
    }
    return j[key].get<int>();
}

IdeMatrix<MonoElem> read_ide(const std::string &path, const CtxPtr &ctx)
{
    const json j = parse_json_file(path);
    const int n = json_int(j, "n"), trunc = json_int(j, "trunc");
    if (n < 1 || trunc < 0) throw UsageError("matrix JSON: n must be >= 1 and trunc >= 0");
    IdeMatrix<MonoElem> A;
    A.A.assign(static_cast<std::size_t>(trunc) + 1, Matrix<MonoElem>(n, MonoElem::zero(ctx)));
    for (const auto &e : j.at("entries")) {
        if (!e.is_array() || e.size() != 4) throw UsageError("matrix JSON entries are [k, i, j, \"element\"]");
        const int k = e[0].get<int>(), r = e[1].get<int>(), c = e[2].get<int>();
        if (k < 0 || k > trunc || r < 0 || r >= n || c < 0 || c >= n) throw UsageError("matrix JSON entry out of range");
        A.A[k](r, c) = parse_expr(e[3].get<std::string>(), ctx);
    }
    return A;
}

Matrix<MonoElem> read_solution(const std::string &path, const CtxPtr &ctx)
{
    const json j = parse_json_file(path);
    const int n = json_int(j, "n");
    if (n < 1) throw UsageError("solution JSON: n must be >= 1");
    Matrix<MonoElem> Y(n, MonoElem::zero(ctx));
    for (const auto &e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw UsageError("solution JSON entries are [i, j, \"element\"]");
        const int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= n || c < 0 || c >= n) throw UsageError("solution JSON entry out of range");
        Y(r, c) = parse_expr(e[2].get<std::string>(), ctx);
    }
    return Y;
}

template <class T>
json ide_json(const IdeMatrix<T> &A)
{
    json j{{"n", A.size()}, {"trunc", A.order()}, {"entries", json::array()}};
    for (int k = 0; k <= A.order(); ++k) {
        for (int r = 0; r < A.size(); ++r) {
            for (int c = 0; c < A.size(); ++c) {
                if (!A.A[k](r, c).is_zero()) j["entries"].push_back({k, r, c, to_string(A.A[k](r, c))});
            }
        }
    }
    return j;
}

template <class T>
json matrix_json(const Matrix<T> &Y)
{
    json j{{"n", Y.size()}, {"entries", json::array()}};
    for (int r = 0; r < Y.size(); ++r) {
        for (int c = 0; c < Y.size(); ++c) {
            if (!Y(r, c).is_zero()) j["entries"].push_back({r, c, to_string(Y(r, c))});
        }
    }
    return j;
}

std::string count_failures(std::size_t failures, std::size_t total)
{
    return std::to_string(total - failures) + "/" + std::to_string(total) + " passed";
}

std::int64_t power(int p, int e) { return ipow(p, e); }

// ------------------------------------------------------------ commands

void cmd_derive(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    if (o.expr.empty()) throw UsageError("derive needs --expr");
    if (o.n > o.order) throw UsageError("--n exceeds --order");
    rep.params["expr"] = o.expr;
    const MonoElem x = parse_expr(o.expr, ctx);
    rep.result["element"] = to_string(x);
    const auto s = theta_series(x, o.order);
    json coeffs = json::array();
    bool round_trip = true;
    for (int n = 0; n <= o.order; ++n) {
        if (o.n >= 0 && n != o.n) continue;
        const std::string v = to_string(s[n]);
        round_trip &= parse_expr(v, ctx) == s[n];
        coeffs.push_back({{"n", n}, {"value", v}});
    }
    if (o.n >= 0) rep.params["n"] = o.n;
    rep.result["coefficients"] = coeffs;
    rep.add("identity at order 0", s[0] == x, "theta^(0)(x) = x");
    rep.add("round-trip", round_trip, "printed coefficients parse back to the same elements");
    const auto it = verify_iterativity(x, o.order);
    rep.add("iterativity", it.all_pass(), count_failures(it.failures(), it.pairs.size()) + " pairs i + j <= " +
                                              std::to_string(o.order));
}

void cmd_tower(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    if (o.level < 0) throw UsageError("--level must be >= 0");
    rep.params["level"] = o.level;
    const int l = o.level;
    const TowerLevel tower = f_bracket(ctx, l);
    const auto index_low = lattice_index(kernel_lattice(*ctx, l), field_lattice(*ctx));
    const auto index_high = lattice_index(field_lattice(*ctx), tower.bracket_lattice());
    const int m = ctx->imperfection_degree();
    rep.result["level"] = l;
    rep.result["alpha_ell"] = tower.alpha_low();
    rep.result["gamma_digits_prefix"] = ctx->has_param() ? json(tower.gamma_digits(16)) : json::array();
    rep.result["index_F_over_Fell"] = index_low;
    rep.result["index_Fbracket_over_F"] = index_high;
    rep.add("index of F_l in F", index_low == power(o.p, l),
            "[F : F_l] = " + std::to_string(index_low) + ", expected p^l = " + std::to_string(power(o.p, l)));
    const auto expected = power(o.p, l * (m - 1));
    rep.add("index of F in F_[l]", index_high == expected,
            "[F_[l] : F] = " + std::to_string(index_high) + ", expected p^(l(m-1)) = " + std::to_string(expected));
    if (l > 0) {
        const auto step = lattice_index(kernel_lattice(*ctx, l), kernel_lattice(*ctx, l - 1));
        rep.add("step index", step == o.p, "[F_(l-1) : F_l] = " + std::to_string(step));
    }
    if (ctx->has_param()) {
        const auto inner = tower.to_base_coordinates(kernel_lattice(*tower.bracket(), l));
        const auto outer = kernel_lattice(*ctx, 2 * l).scaled(Rational(1, power(o.p, l)));
        rep.add("consistency", inner == outer, "level-l kernel of F_[l] equals p^-l F_(2l) on exponents");
    }
}

void cmd_l1check(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    const bool holds = check_L1_eq_Lp(*ctx);
    const int m = ctx->imperfection_degree();
    rep.result["L1_equals_Lp"] = holds;
    rep.result["imperfection_degree"] = m;
    rep.add("level-1 kernel against p-th powers", holds == (m == 1),
            std::string("L_1 ") + (holds ? "=" : "!=") + " L^p with degree of imperfection " + std::to_string(m));
}

void cmd_verify_ide(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    if (o.matrix.empty()) throw UsageError("verify-ide needs --matrix");
    rep.params["matrix"] = o.matrix;
    const auto A = read_ide(o.matrix, ctx);
    const int N = std::min(A.order(), o.order);
    const auto r = verify_ide(A, N);
    std::size_t bad = 0;
    for (const auto &c : r.checks) bad += c.pass ? 0 : 1;
    rep.add("A_0 is the identity", r.a0_identity);
    rep.add("compatibility", bad == 0, count_failures(bad, r.checks.size()) + " pairs k + l <= " + std::to_string(N));
    const auto f = frobenius_level(A);
    rep.result["frobenius_level"] = f.level;
    rep.result["frobenius_level_unbounded"] = f.unbounded;
}

void cmd_verify_solution(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    if (o.matrix.empty() || o.solution.empty()) throw UsageError("verify-solution needs --matrix and --solution");
    rep.params["matrix"] = o.matrix;
    rep.params["solution"] = o.solution;
    const auto A = read_ide(o.matrix, ctx);
    const auto Y = read_solution(o.solution, ctx);
    const int N = std::min(A.order(), o.order);
    const auto r = verify_solution(A, Y, N);
    std::size_t bad = 0;
    for (const auto &c : r.solution) bad += c.pass ? 0 : 1;
    rep.add("solution", r.solution_pass(), "theta^(k)(Y) = A_k Y: " + count_failures(bad, r.solution.size()));
    rep.add("entrywise iterativity", r.iterativity_pass(),
            std::to_string(r.iterativity_failures) + " failing pairs over all entries");
    rep.add("ide", r.ide_pass, "A satisfies the compatibility conditions");
    rep.add("equivalence", r.equivalence_holds(), "for a solution, A is iterative iff the entries of Y are");
    rep.result["determinant"] = to_string(determinant(Y));
}

void cmd_classical(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    if (o.m.empty()) throw UsageError("classical needs --m");
    rep.params["m"] = o.m;
    const BasePoly m = parse_poly_in_y(o.m, ctx);
    const int d = static_cast<int>(m.size()) - 1;
    if (d < 1 || !m.back().is_one()) throw UsageError("--m must be a monic polynomial in y of degree >= 1");
    auto only = [&](std::initializer_list<int> keep) {
        for (int i = 1; i < d; ++i) {
            if (std::find(keep.begin(), keep.end(), i) == keep.end() && !m[i].is_zero()) return false;
        }
        return true;
    };
    ExtPtr ext;
    std::vector<ExtAutomorphism> autos;
    std::string family = "general";
    if (d == o.p && m[1] == MonoElem::from_int(ctx, -1) && only({1})) {
        family = "artin-schreier";
        ext = artin_schreier(-m[0]);
        autos = artin_schreier_automorphisms(ext);
    } else if ((ctx->gf().q() - 1) % d == 0 && only({})) {
        family = "kummer";
        ext = kummer(-m[0], d);
        autos = kummer_automorphisms(ext);
    } else {
        ext = FiniteExt::make(ctx, m);
    }
    rep.result["family"] = family;
    rep.result["degree"] = d;
    const auto th = extend_derivation(ext, o.order);
    json series = json::array();
    for (int n = 0; n <= o.order; ++n) series.push_back({{"n", n}, {"value", to_string(th[n])}});
    rep.result["theta_y"] = series;
    rep.add("minimal polynomial substitution", check_minpoly_substitution(ext, o.order),
            "m(theta(y)) = 0 mod T^" + std::to_string(o.order + 1));
    if (autos.empty()) {
        rep.add("automorphisms", Status::BoundOnly,
                "automorphisms are built in for Artin-Schreier and Kummer polynomials only");
        return;
    }
    for (std::size_t i = 0; i < autos.size(); ++i) {
        rep.add("id-automorphism y -> " + to_string(autos[i].image()), verify_id_automorphism(autos[i], o.order));
    }
    const auto sol = dedekind_solution(ext, autos, o.order);
    rep.add("determinant", sol.report.det_nonzero, "det Y = " + to_string(sol.det));
    rep.add("solution", sol.report.solution, "theta(Y) = A Y");
    rep.add("ide", sol.report.ide, "A satisfies the compatibility conditions");
    rep.add("base entries", sol.report.base_entries, "A has entries in the base field");
    rep.add("automorphism count", sol.report.count_matches_degree,
            std::to_string(autos.size()) + " automorphisms for degree " + std::to_string(d));
    rep.result["Y"] = matrix_json(sol.Y);
    rep.result["A"] = ide_json(sol.A);
}

void cmd_galois_kummer(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep, 16);
    if (o.level < 0) throw UsageError("--level must be >= 0");
    rep.params["level"] = o.level;
    const auto alg = tensor_square(ctx, o.level);
    const auto g = grouplike_verify(ctx, o.level, o.order);
    for (const auto &c : g.checks) rep.add(c.name, c.pass, c.details);
    const auto window = default_window(o.p, o.level);
    const auto cs = constants_search(alg, window, o.order);
    const auto dim = static_cast<std::int64_t>(cs.basis.size());
    const std::string details = "dimension " + std::to_string(dim) + " in the window |a| <= " +
                                std::to_string(window.a_max) + ", |b| <= " + std::to_string(window.b_max) +
                                " using theta^(p^i), i < " + std::to_string(cs.orders);
    if (!cs.exact) {
        rep.add("constants dimension", Status::BoundOnly, details + "; parameter not declared irrational");
    } else {
        rep.add("constants dimension", dim == alg->rank() && cs.verified, details);
    }
    rep.result["w"] = to_string(g.w);
    rep.result["order"] = g.order;
    rep.result["constants_dimension"] = dim;
    rep.result["window"] = {{"a_max", window.a_max}, {"b_max", window.b_max}};
    json basis = json::array();
    for (const auto &c : cs.basis) basis.push_back(to_string(c));
    rep.result["constants_basis"] = basis;
    rep.result["group"] = "mu_" + std::to_string(g.order);
}

void cmd_realize(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep, 16);
    if (o.as_rhs.empty()) throw UsageError("realize needs --as-rhs");
    if (o.level < 0) throw UsageError("--level must be >= 0");
    rep.params["level"] = o.level;
    rep.params["as_rhs"] = o.as_rhs;
    const MonoElem f = parse_expr(o.as_rhs, ctx);
    const auto r = product_realization(ctx, o.level, f, o.order);
    for (const auto &c : r.checks) rep.add(c.name, c.pass, c.details);
    rep.result["dimension"] = r.dimension;
    rep.result["grouplike_count"] = r.grouplike_count;
    rep.result["id_automorphisms"] = r.id_automorphisms;
    rep.result["constants_dimension"] = r.constants_dimension;
    rep.result["subtower_orders"] = r.subtower_orders;
    rep.result["conclusion"] = r.conclusion;
}

void cmd_selftest(const Options &o, Report &rep)
{
    const auto ctx = make_ctx(o, rep);
    const int p = o.p, N = o.order;
    std::mt19937_64 rng(20240601);

    {
        std::vector<MonoElem> xs;
        for (int i = 0; i < 10; ++i) xs.push_back(sample_element(ctx, rng));
        std::size_t bad = 0, total = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto &x = xs[i], &y = xs[(i + 1) % xs.size()];
            const auto it = verify_iterativity(x, N);
            const auto hom = verify_homomorphism(x, y, N);
            const auto add = verify_additivity(x, y, N);
            bad += it.failures() + hom.failures() + add.failures() + (theta_series(x, 0)[0] == x ? 0 : 1);
            total += it.pairs.size() + hom.orders.size() + add.orders.size() + 1;
        }
        rep.add("axioms", bad == 0, count_failures(bad, total) + " on 10 random elements, N = " + std::to_string(N));
    }
    {
        // binomials mod p from Pascal's rule
        std::vector<std::vector<int>> pascal(41);
        std::size_t bad = 0, total = 0;
        for (int b = 0; b <= 40; ++b) {
            pascal[b].assign(b + 1, 1);
            for (int n = 1; n < b; ++n) pascal[b][n] = (pascal[b - 1][n - 1] + pascal[b - 1][n]) % p;
            for (int n = 0; n <= b; ++n, ++total) {
                bad += static_cast<int>(ctx->binom(b, 0, static_cast<std::uint64_t>(n))) == pascal[b][n] ? 0 : 1;
            }
        }
        rep.add("lucas", bad == 0, count_failures(bad, total) + " binomials with 0 <= n <= beta <= 40");
    }
    if (ctx->has_param()) {
        bool ok = true;
        for (int l = 1; l <= 2; ++l) {
            ok &= lattice_index(kernel_lattice(*ctx, l), field_lattice(*ctx)) == power(p, l);
            ok &= lattice_index(field_lattice(*ctx), f_bracket(ctx, l).bracket_lattice()) == power(p, l);
        }
        rep.add("tower degrees", ok, "[F : F_l] = [F_[l] : F] = p^l for l = 1, 2");
        const auto L = make_field(p, ctx->k(), nullptr, N);
        rep.add("L_1 = L^p criterion", check_L1_eq_Lp(*L) && !check_L1_eq_Lp(*ctx), "true for F_q(t), false for F");

        Matrix<MonoElem> Y(1, MonoElem::param(ctx));
        const auto A = derive_matrix(Y, N);
        const auto sol = verify_solution(A, Y, N);
        rep.add("multiplicative-group equation", sol.all_pass() && sol.equivalence_holds(),
                "Y = (x): solution, entrywise iterativity and compatibility");
    }
    {
        const auto L = make_field(p, ctx->k(), nullptr, N);
        const auto ext = artin_schreier(MonoElem::t(L));
        const auto sol = dedekind_solution(ext, artin_schreier_automorphisms(ext), N);
        rep.add("artin-schreier", check_minpoly_substitution(ext, N) && sol.report.all_pass(),
                "y^p - y = t: derivation extension, ID-automorphisms and Dedekind solution");
    }
    if (ctx->has_param() && ctx->session().param()->declared_irrational()) {
        const auto G = make_field(p, ctx->k(), ctx->session().param(), std::min(N, 8), 16);
        const auto g = grouplike_verify(G, 1, G->order());
        const auto cs = constants_search(tensor_square(G, 1), default_window(p, 1), G->order());
        rep.add("roots of unity at level 1", g.all_pass() && static_cast<int>(cs.basis.size()) == p && cs.verified,
                "w group-like of order p, constants of dimension " + std::to_string(cs.basis.size()));
    }
    {
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
            const MonoElem x = sample_element(ctx, rng);
            bad += parse_expr(to_string(x), ctx) == x ? 0 : 1;
        }
        rep.add("round-trip", bad == 0, count_failures(static_cast<std::size_t>(bad), 100) + " random elements");
    }
}

void add_field_options(CLI::App *sub, Options &o)
{
    sub->add_option("--p", o.p, "characteristic")->capture_default_str();
    sub->add_option("--k", o.k, "degree of F_q over F_p")->capture_default_str();
    sub->add_option("--q", o.q, "size of the constant field (alternative to --k)");
    sub->add_option("--alpha", o.alpha, "parameter digits: squares | ones | explicit:<d0,d1,...> | none")
        ->capture_default_str();
    sub->add_option("--order", o.order, "truncation order N")->capture_default_str();
    sub->add_option("--digits", o.digits, "p-adic digit budget (0: derived from the order)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Iterative derivations over F_q(t, t^alpha)", "idg"};
    app.require_subcommand(1);
    Options o;
    struct Sub {
        const char *name;
        const char *help;
        void (*fn)(const Options &, Report &);
    };
    const Sub subs[] = {
        {"derive", "theta^(n) of an element", cmd_derive},
        {"verify-ide", "check the compatibility conditions of a matrix series", cmd_verify_ide},
        {"verify-solution", "check theta(Y) = A Y", cmd_verify_solution},
        {"tower", "degrees of the subfield tower", cmd_tower},
        {"l1check", "level-1 kernel against p-th powers", cmd_l1check},
        {"classical", "derivation, automorphisms and solution matrix of F[y]/(m)", cmd_classical},
        {"galois-kummer", "group-likes and constants of F_[l] (x)_F F_[l]", cmd_galois_kummer},
        {"realize", "F_[l] (x)_F F[y]/(y^p - y - f)", cmd_realize},
        {"selftest", "run the built-in checks", cmd_selftest},
    };
    std::vector<CLI::App *> apps;
    for (const auto &s : subs) {
        auto *sub = app.add_subcommand(s.name, s.help);
        add_field_options(sub, o);
        apps.push_back(sub);
    }
    apps[0]->add_option("--expr", o.expr, "element")->required();
    apps[0]->add_option("--n", o.n, "single order to print");
    apps[1]->add_option("--matrix", o.matrix, "matrix series JSON")->required();
    apps[2]->add_option("--matrix", o.matrix, "matrix series JSON")->required();
    apps[2]->add_option("--solution", o.solution, "solution matrix JSON")->required();
    apps[3]->add_option("--level", o.level, "tower level")->capture_default_str();
    apps[5]->add_option("--m", o.m, "monic polynomial in y")->required();
    apps[6]->add_option("--level", o.level, "tower level")->capture_default_str();
    apps[7]->add_option("--level", o.level, "tower level")->capture_default_str();
    apps[7]->add_option("--as-rhs", o.as_rhs, "right-hand side f of y^p - y = f")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    for (std::size_t i = 0; i < apps.size(); ++i) {
        if (!apps[i]->parsed()) continue;
        Report rep;
        rep.command = subs[i].name;
        try {
            subs[i].fn(o, rep);
        } catch (const UsageError &e) {
            err << "usage error: " << e.what() << "\n";
            return 2;
        } catch (const ParseError &e) {
            err << "parse error: " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument &e) {
            err << "invalid input: " << e.what() << "\n";
            return 2;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        out << rep.to_json().dump(2) << "\n";
        for (const auto &c : rep.checks) err << "[" << status_name(c.status) << "] " << c.name << ": " << c.details << "\n";
        return rep.exit_code();
    }
    return 2;
}

} // namespace idg::cli
