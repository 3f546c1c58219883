#include "idg/hasse.hpp"

#include <string>

namespace idg {

using poly::Poly2;

namespace {

// Scale every term c t^(st+a) x^(sx+b) of t^st x^sx * p by binom(st + a + (sx + b) pi, n).
Poly2 binom_weighted(const FieldCtx &ctx, const Poly2 &p, std::int64_t st, std::int64_t sx, std::uint64_t n)
{
    const GaloisField &F = ctx.gf();
    Poly2 r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i].assign(p[i].size(), 0);
        for (std::size_t j = 0; j < p[i].size(); ++j) {
            if (p[i][j] == 0) continue;
            const auto b = ctx.binom(st + static_cast<std::int64_t>(j), sx + static_cast<std::int64_t>(i), n);
            r[i][j] = F.mul(p[i][j], b);
        }
    }
    poly::trim(r);
    return r;
}

void check_order(const MonoElem &x, std::uint64_t N)
{
    if (N > static_cast<std::uint64_t>(x.ctx()->order())) {
        throw std::invalid_argument("derivation order " + std::to_string(N) + " exceeds context truncation " +
                                    std::to_string(x.ctx()->order()));
    }
}

} // namespace

MonoElem theta_coeff(const MonoElem &x, std::uint64_t n)
{
    if (x.is_zero() || n == 0) return x;
    if (x.has_unit_denominator()) {
        Poly2 r = binom_weighted(*x.ctx(), x.num(), x.shift_t(), x.shift_x(), n);
        return MonoElem::from_parts(x.ctx(), x.shift_t() - static_cast<std::int64_t>(n), x.shift_x(), std::move(r),
                                    poly::constant(1));
    }
    check_order(x, n);
    return theta_series(x, static_cast<int>(n))[n];
}

ThetaExpansion theta_expansion(const MonoElem &x, int N)
{
    if (N < 0) throw std::invalid_argument("theta_series: negative order");
    check_order(x, static_cast<std::uint64_t>(N));
    const auto &ctx = x.ctx();
    const GaloisField &F = ctx->gf();
    ThetaExpansion out;
    out.shift_t = x.shift_t();
    out.shift_x = x.shift_x();
    out.base = x.den();
    out.num.reserve(N + 1);
    out.num.push_back(x.num());
    if (x.is_zero()) {
        out.num.resize(N + 1);
        return out;
    }
    if (x.has_unit_denominator()) {
        for (int n = 1; n <= N; ++n) out.num.push_back(binom_weighted(*ctx, x.num(), x.shift_t(), x.shift_x(), n));
        return out;
    }

    // With x = t^st x^sx N / D, write theta^(n)(x) = t^(st - n) x^sx R_n / D^(n+1)
    // where, for DT_i = t^i theta^(i)(D) and NT_i likewise (both polynomials),
    //   Q_0 = 1,  Q_n = -sum_{i=1..n} DT_i Q_{n-i} D^(i-1)      (t^n D^(n+1) theta^(n)(1/D))
    //   R_n = sum_{i+j=n} NT_i Q_j D^i.
    const Poly2 &D = x.den();
    const Poly2 &Nm = x.num();
    std::vector<Poly2> dpow{poly::constant(1)};
    for (int i = 1; i <= N; ++i) dpow.push_back(poly::mul(F, dpow.back(), D));
    std::vector<Poly2> dt(N + 1), nt(N + 1), q(N + 1);
    for (int i = 0; i <= N; ++i) {
        dt[i] = i == 0 ? D : binom_weighted(*ctx, D, 0, 0, i);
        nt[i] = i == 0 ? Nm : binom_weighted(*ctx, Nm, x.shift_t(), x.shift_x(), i);
    }
    q[0] = poly::constant(1);
    for (int n = 1; n <= N; ++n) {
        Poly2 acc;
        for (int i = 1; i <= n; ++i) {
            if (dt[i].empty() || q[n - i].empty()) continue;
            acc = poly::add(F, acc, poly::mul(F, poly::mul(F, dt[i], q[n - i]), dpow[i - 1]));
        }
        q[n] = poly::scale(F, acc, F.neg(1));
    }
    for (int n = 1; n <= N; ++n) {
        Poly2 r;
        for (int i = 0; i <= n; ++i) {
            if (nt[i].empty() || q[n - i].empty()) continue;
            r = poly::add(F, r, poly::mul(F, poly::mul(F, nt[i], q[n - i]), dpow[i]));
        }
        out.num.push_back(std::move(r));
    }
    return out;
}

TruncSeries<MonoElem> theta_series(const MonoElem &x, int N)
{
    ThetaExpansion e = theta_expansion(x, N);
    TruncSeries<MonoElem> out;
    out.coeffs.reserve(N + 1);
    out.coeffs.push_back(x);
    if (x.is_zero()) {
        for (int n = 1; n <= N; ++n) out.coeffs.push_back(x);
        return out;
    }
    const auto &ctx = x.ctx();
    if (x.has_unit_denominator()) {
        for (int n = 1; n <= N; ++n) {
            out.coeffs.push_back(MonoElem::from_parts(ctx, e.shift_t - n, e.shift_x, std::move(e.num[n]), poly::constant(1)));
        }
        return out;
    }
    const GaloisField &F = ctx->gf();
    Poly2 q = e.base;
    for (int n = 1; n <= N; ++n) {
        q = poly::mul(F, q, e.base);
        out.coeffs.push_back(MonoElem::from_parts_dividing(ctx, e.shift_t - n, e.shift_x, std::move(e.num[n]), q, e.base));
    }
    return out;
}

namespace {

std::vector<Poly2> powers(const GaloisField &F, const Poly2 &b, int n)
{
    std::vector<Poly2> r{poly::constant(1)};
    for (int i = 1; i <= n; ++i) r.push_back(poly::mul(F, r.back(), b));
    return r;
}

// t^st1 x^sx1 n1 / d1 == t^st2 x^sx2 n2 / d2, by cross-multiplication.
bool cross_equal(const GaloisField &F, std::int64_t st1, std::int64_t sx1, const Poly2 &n1, const Poly2 &d1,
                 std::int64_t st2, std::int64_t sx2, const Poly2 &n2, const Poly2 &d2)
{
    if (n1.empty() || n2.empty()) return n1.empty() && n2.empty();
    const auto mt = std::min(st1, st2), mx = std::min(sx1, sx2);
    const Poly2 lhs = poly::shift(poly::mul(F, n1, d2), static_cast<int>(st1 - mt), static_cast<int>(sx1 - mx));
    const Poly2 rhs = poly::shift(poly::mul(F, n2, d1), static_cast<int>(st2 - mt), static_cast<int>(sx2 - mx));
    return lhs == rhs;
}

} // namespace

HomomorphismReport verify_additivity(const MonoElem &x, const MonoElem &y, int N)
{
    const GaloisField &F = x.ctx()->gf();
    const auto ex = theta_expansion(x, N), ey = theta_expansion(y, N), es = theta_expansion(x + y, N);
    const auto px = powers(F, ex.base, N + 1), py = powers(F, ey.base, N + 1), ps = powers(F, es.base, N + 1);
    HomomorphismReport rep;
    for (int n = 0; n <= N; ++n) {
        // bring both summands to t^mt x^mx * (.) / (Dx Dy)^(n+1)
        const auto mt = std::min(ex.shift_t, ey.shift_t), mx = std::min(ex.shift_x, ey.shift_x);
        const Poly2 a = poly::shift(poly::mul(F, ex.num[n], py[n + 1]), static_cast<int>(ex.shift_t - mt),
                                    static_cast<int>(ex.shift_x - mx));
        const Poly2 b = poly::shift(poly::mul(F, ey.num[n], px[n + 1]), static_cast<int>(ey.shift_t - mt),
                                    static_cast<int>(ey.shift_x - mx));
        const bool ok = cross_equal(F, mt, mx, poly::add(F, a, b), poly::mul(F, px[n + 1], py[n + 1]), es.shift_t,
                                    es.shift_x, es.num[n], ps[n + 1]);
        rep.orders.push_back(OrderCheck{n, ok});
    }
    return rep;
}

HomomorphismReport verify_homomorphism(const MonoElem &x, const MonoElem &y, int N)
{
    const GaloisField &F = x.ctx()->gf();
    const auto ex = theta_expansion(x, N), ey = theta_expansion(y, N), ep = theta_expansion(x * y, N);
    const auto px = powers(F, ex.base, N + 1), py = powers(F, ey.base, N + 1), pp = powers(F, ep.base, N + 1);
    HomomorphismReport rep;
    for (int k = 0; k <= N; ++k) {
        // theta^(i)(x) theta^(k-i)(y) over the common denominator (Dx Dy)^(k+1)
        Poly2 sum;
        for (int i = 0; i <= k; ++i) {
            if (ex.num[i].empty() || ey.num[k - i].empty()) continue;
            sum = poly::add(F, sum,
                            poly::mul(F, poly::mul(F, ex.num[i], ey.num[k - i]), poly::mul(F, px[k - i], py[i])));
        }
        const bool ok = cross_equal(F, ex.shift_t + ey.shift_t, ex.shift_x + ey.shift_x, sum,
                                    poly::mul(F, px[k + 1], py[k + 1]), ep.shift_t, ep.shift_x, ep.num[k], pp[k + 1]);
        rep.orders.push_back(OrderCheck{k, ok});
    }
    return rep;
}

} // namespace idg
