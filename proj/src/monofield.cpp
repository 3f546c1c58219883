#include "idg/monofield.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace idg {

using poly::Poly2;
using Elem = GaloisField::Elem;

FieldCtx::FieldCtx(std::shared_ptr<const GaloisField> gf, SessionPtr session, int order, std::string param_symbol)
    : gf_(std::move(gf)), session_(std::move(session)), order_(order), param_symbol_(std::move(param_symbol))
{
    if (gf_->p() != session_->p()) throw std::invalid_argument("FieldCtx: prime mismatch");
    if (order_ < 1) throw std::invalid_argument("FieldCtx: truncation order must be >= 1");
    // Non-degeneracy: theta^(1)(t) = binom(1, 1) = 1.
    if (binom(1, 0, 1) != 1) throw std::logic_error("FieldCtx: derivation is degenerate");
}

CtxPtr make_field(int p, int k, OraclePtr oracle, int order, int digits, std::string param_symbol)
{
    if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("make_field: k must be >= 1");
    if (order < 1) throw std::invalid_argument("make_field: order must be >= 1");
    const int budget = digits > 0 ? digits : PadicSession::default_budget(p, order);
    auto session = std::make_shared<const PadicSession>(p, std::move(oracle), budget);
    return std::make_shared<const FieldCtx>(GaloisField::make(p, k), std::move(session), order,
                                            std::move(param_symbol));
}

namespace {

void require_same(const MonoElem &x, const MonoElem &y)
{
    if (!x.ctx() || x.ctx() != y.ctx()) throw std::invalid_argument("MonoElem: operands from different fields");
}

bool is_one_poly(const Poly2 &p) { return p.size() == 1 && p[0].size() == 1 && p[0][0] == 1; }

Poly2 from_term_list(const GaloisField &F, const std::vector<Term> &terms, std::int64_t &st, std::int64_t &sx)
{
    st = std::numeric_limits<std::int64_t>::max();
    sx = std::numeric_limits<std::int64_t>::max();
    for (const auto &tm : terms) {
        if (tm.c == 0) continue;
        st = std::min(st, tm.a);
        sx = std::min(sx, tm.b);
    }
    if (st == std::numeric_limits<std::int64_t>::max()) {
        st = sx = 0;
        return {};
    }
    Poly2 r;
    for (const auto &tm : terms) {
        if (tm.c == 0) continue;
        const auto i = static_cast<std::size_t>(tm.b - sx);
        const auto j = static_cast<std::size_t>(tm.a - st);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= j) r[i].resize(j + 1, 0);
        r[i][j] = F.add(r[i][j], tm.c);
    }
    poly::trim(r);
    return r;
}

std::vector<Term> to_terms(const Poly2 &p, std::int64_t st, std::int64_t sx)
{
    std::vector<Term> out;
    for (std::size_t i = p.size(); i-- > 0;) {
        for (std::size_t j = p[i].size(); j-- > 0;) {
            if (p[i][j] != 0) {
                out.push_back(Term{st + static_cast<std::int64_t>(j), sx + static_cast<std::int64_t>(i), p[i][j]});
            }
        }
    }
    return out;
}

} // namespace

MonoElem MonoElem::zero(CtxPtr ctx) { return MonoElem(std::move(ctx), 0, 0, {}, poly::constant(1)); }
MonoElem MonoElem::one(CtxPtr ctx) { return MonoElem(std::move(ctx), 0, 0, poly::constant(1), poly::constant(1)); }

MonoElem MonoElem::constant(CtxPtr ctx, Elem c)
{
    if (c == 0) return zero(std::move(ctx));
    return MonoElem(std::move(ctx), 0, 0, poly::constant(c), poly::constant(1));
}

MonoElem MonoElem::from_int(CtxPtr ctx, long long v)
{
    const Elem c = ctx->gf().from_int(v);
    return constant(std::move(ctx), c);
}

MonoElem MonoElem::t(CtxPtr ctx) { return monomial(std::move(ctx), 1, 1, 0); }

MonoElem MonoElem::param(CtxPtr ctx)
{
    if (!ctx->has_param()) throw std::invalid_argument("this field has no parameter monomial t^alpha");
    return monomial(std::move(ctx), 1, 0, 1);
}

MonoElem MonoElem::monomial(CtxPtr ctx, Elem c, std::int64_t a, std::int64_t b)
{
    if (b != 0 && !ctx->has_param()) throw std::invalid_argument("this field has no parameter monomial t^alpha");
    if (c == 0) return zero(std::move(ctx));
    return MonoElem(std::move(ctx), a, b, poly::constant(c), poly::constant(1));
}

MonoElem MonoElem::from_terms(CtxPtr ctx, const std::vector<Term> &num, const std::vector<Term> &den)
{
    for (const auto *list : {&num, &den}) {
        for (const auto &tm : *list) {
            if (tm.b != 0 && tm.c != 0 && !ctx->has_param()) {
                throw std::invalid_argument("this field has no parameter monomial t^alpha");
            }
        }
    }
    std::int64_t nt = 0, nx = 0, dt = 0, dx = 0;
    Poly2 n = from_term_list(ctx->gf(), num, nt, nx);
    Poly2 d = from_term_list(ctx->gf(), den, dt, dx);
    return from_parts(std::move(ctx), nt - dt, nx - dx, std::move(n), std::move(d));
}

MonoElem MonoElem::from_parts(CtxPtr ctx, std::int64_t st, std::int64_t sx, Poly2 num, Poly2 den)
{
    const GaloisField &F = ctx->gf();
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) throw std::domain_error("division by zero");
    if (num.empty()) return zero(std::move(ctx));
    auto [nt, nx] = poly::monomial_content(num);
    auto [dt, dx] = poly::monomial_content(den);
    if (nt || nx) num = poly::unshift(num, nt, nx);
    if (dt || dx) den = poly::unshift(den, dt, dx);
    st += nt - dt;
    sx += nx - dx;
    if (!poly::is_constant(den) && !poly::is_constant(num)) {
        const Poly2 g = poly::gcd(F, num, den);
        if (!poly::is_constant(g)) {
            num = poly::div_exact(F, num, g);
            den = poly::div_exact(F, den, g);
        }
    }
    const Elem lc = poly::leading_coeff(den);
    if (lc != 1) {
        const Elem inv = F.inv(lc);
        num = poly::scale(F, num, inv);
        den = poly::scale(F, den, inv);
    }
    if (sx != 0 && !ctx->has_param()) throw std::invalid_argument("this field has no parameter monomial t^alpha");
    return MonoElem(std::move(ctx), st, sx, std::move(num), std::move(den));
}

MonoElem MonoElem::from_parts_dividing(CtxPtr ctx, std::int64_t st, std::int64_t sx, Poly2 num, Poly2 q,
                                       const Poly2 &base)
{
    const GaloisField &F = ctx->gf();
    poly::trim(num);
    if (num.empty()) return zero(std::move(ctx));
    auto [nt, nx] = poly::monomial_content(num);
    if (nt || nx) num = poly::unshift(num, nt, nx);
    st += nt;
    sx += nx;
    while (!poly::is_constant(q) && !poly::is_constant(num)) {
        const Poly2 h = poly::gcd(F, num, base);
        if (poly::is_constant(h)) break;
        const Poly2 g = poly::gcd(F, h, q);
        if (poly::is_constant(g)) break;
        num = poly::div_exact(F, num, g);
        q = poly::div_exact(F, q, g);
    }
    const Elem lc = poly::leading_coeff(q);
    if (lc != 1) {
        const Elem inv = F.inv(lc);
        num = poly::scale(F, num, inv);
        q = poly::scale(F, q, inv);
    }
    return MonoElem(std::move(ctx), st, sx, std::move(num), std::move(q));
}

bool MonoElem::is_one() const noexcept { return st_ == 0 && sx_ == 0 && is_one_poly(num_) && is_one_poly(den_); }

bool MonoElem::is_constant() const noexcept
{
    if (is_zero()) return true;
    return st_ == 0 && sx_ == 0 && poly::is_constant(num_) && is_one_poly(den_);
}

Elem MonoElem::constant_value() const
{
    if (!is_constant()) throw std::logic_error("MonoElem::constant_value: element is not constant");
    return is_zero() ? 0 : num_[0][0];
}

std::vector<Term> MonoElem::numerator_terms() const { return to_terms(num_, st_, sx_); }
std::vector<Term> MonoElem::denominator_terms() const { return to_terms(den_, 0, 0); }

MonoElem MonoElem::operator-() const { return mul_scalar(ctx_->gf().neg(1)); }

MonoElem MonoElem::mul_scalar(Elem c) const
{
    if (c == 0) return zero(ctx_);
    if (c == 1) return *this;
    return MonoElem(ctx_, st_, sx_, poly::scale(ctx_->gf(), num_, c), den_);
}

MonoElem MonoElem::mul_int(long long v) const { return mul_scalar(ctx_->gf().from_int(v)); }

MonoElem operator+(const MonoElem &x, const MonoElem &y)
{
    require_same(x, y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const GaloisField &F = x.ctx_->gf();
    const std::int64_t st = std::min(x.st_, y.st_);
    const std::int64_t sx = std::min(x.sx_, y.sx_);
    auto lift = [&](const MonoElem &e) { return poly::shift(e.num_, static_cast<int>(e.st_ - st), static_cast<int>(e.sx_ - sx)); };
    if (x.den_ == y.den_) {
        Poly2 n = poly::add(F, lift(x), lift(y));
        if (is_one_poly(x.den_)) return MonoElem::from_parts(x.ctx_, st, sx, std::move(n), x.den_);
        return MonoElem::from_parts_dividing(x.ctx_, st, sx, std::move(n), x.den_, x.den_);
    }
    const Poly2 g = poly::gcd(F, x.den_, y.den_);
    const Poly2 cx = poly::div_exact(F, y.den_, g); // cofactor for x
    const Poly2 cy = poly::div_exact(F, x.den_, g);
    Poly2 n = poly::add(F, poly::mul(F, lift(x), cx), poly::mul(F, lift(y), cy));
    Poly2 d = poly::mul(F, x.den_, cx);
    return MonoElem::from_parts_dividing(x.ctx_, st, sx, std::move(n), std::move(d), d);
}

MonoElem operator-(const MonoElem &x, const MonoElem &y) { return x + (-y); }

MonoElem operator*(const MonoElem &x, const MonoElem &y)
{
    require_same(x, y);
    if (x.is_zero() || y.is_zero()) return MonoElem::zero(x.ctx_);
    const GaloisField &F = x.ctx_->gf();
    Poly2 n1 = x.num_, n2 = y.num_, d1 = x.den_, d2 = y.den_;
    if (!is_one_poly(d2) && !poly::is_constant(n1)) {
        const Poly2 g = poly::gcd(F, n1, d2);
        if (!poly::is_constant(g)) {
            n1 = poly::div_exact(F, n1, g);
            d2 = poly::div_exact(F, d2, g);
        }
    }
    if (!is_one_poly(d1) && !poly::is_constant(n2)) {
        const Poly2 g = poly::gcd(F, n2, d1);
        if (!poly::is_constant(g)) {
            n2 = poly::div_exact(F, n2, g);
            d1 = poly::div_exact(F, d1, g);
        }
    }
    Poly2 n = poly::mul(F, n1, n2);
    Poly2 d = poly::mul(F, d1, d2);
    const Elem lc = poly::leading_coeff(d);
    if (lc != 1) {
        const Elem inv = F.inv(lc);
        n = poly::scale(F, n, inv);
        d = poly::scale(F, d, inv);
    }
    return MonoElem(x.ctx_, x.st_ + y.st_, x.sx_ + y.sx_, std::move(n), std::move(d));
}

MonoElem MonoElem::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    const GaloisField &F = ctx_->gf();
    const Elem inv = F.inv(poly::leading_coeff(num_));
    return MonoElem(ctx_, -st_, -sx_, poly::scale(F, den_, inv), poly::scale(F, num_, inv));
}

MonoElem operator/(const MonoElem &x, const MonoElem &y)
{
    require_same(x, y);
    return x * y.inverse();
}

MonoElem MonoElem::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return one(ctx_);
    if (is_zero()) return *this;
    const GaloisField &F = ctx_->gf();
    return MonoElem(ctx_, st_ * e, sx_ * e, poly::pow(F, num_, static_cast<int>(e)),
                    poly::pow(F, den_, static_cast<int>(e)));
}

bool operator==(const MonoElem &x, const MonoElem &y)
{
    if (x.ctx_ != y.ctx_) return false;
    return x.st_ == y.st_ && x.sx_ == y.sx_ && x.num_ == y.num_ && x.den_ == y.den_;
}

bool MonoElem::is_normalized() const
{
    if (!ctx_) return false;
    if (den_.empty()) return false;
    if (poly::leading_coeff(den_) != 1) return false;
    if (num_.empty()) return st_ == 0 && sx_ == 0 && is_one_poly(den_);
    if (poly::monomial_content(num_) != std::pair<int, int>{0, 0}) return false;
    if (poly::monomial_content(den_) != std::pair<int, int>{0, 0}) return false;
    return poly::is_constant(poly::gcd(ctx_->gf(), num_, den_));
}

MonoElem p_root(const MonoElem &x)
{
    const auto &ctx = x.ctx();
    const GaloisField &F = ctx->gf();
    const int p = F.p();
    auto check = [&](const std::vector<Term> &terms) {
        for (const auto &tm : terms) {
            if (tm.a % p != 0 || tm.b % p != 0) {
                std::ostringstream os;
                os << "not a p-th power: monomial t^" << tm.a << "*" << ctx->param_symbol() << "^" << tm.b
                   << " has exponent coordinate " << (tm.a % p != 0 ? "a=" + std::to_string(tm.a) : "b=" + std::to_string(tm.b))
                   << " not divisible by p=" << p;
                throw std::domain_error(os.str());
            }
        }
    };
    const auto num = x.numerator_terms();
    const auto den = x.denominator_terms();
    check(num);
    check(den);
    auto root = [&](std::vector<Term> terms) {
        for (auto &tm : terms) {
            tm.a /= p;
            tm.b /= p;
            tm.c = F.p_root(tm.c);
        }
        return terms;
    };
    if (x.is_zero()) return x;
    return MonoElem::from_terms(ctx, root(num), root(den));
}

MonoElem sample_element(const CtxPtr &ctx, std::mt19937_64 &rng, const SampleOptions &opts)
{
    const GaloisField &F = ctx->gf();
    const bool param = opts.allow_param && ctx->has_param();
    std::uniform_int_distribution<int> exp_dist(-opts.max_exp, opts.max_exp);
    std::uniform_int_distribution<int> coeff_dist(1, F.q() - 1);
    auto terms = [&](int max_terms) {
        std::uniform_int_distribution<int> count(1, max_terms);
        std::vector<Term> out;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            out.push_back(Term{exp_dist(rng), param ? exp_dist(rng) : 0, static_cast<Elem>(coeff_dist(rng))});
        }
        return out;
    };
    while (true) {
        auto num = terms(opts.max_terms);
        auto den = terms(opts.max_den_terms);
        std::int64_t a = 0, b = 0;
        if (from_term_list(F, den, a, b).empty() || from_term_list(F, num, a, b).empty()) continue;
        return MonoElem::from_terms(ctx, num, den);
    }
}

} // namespace idg
