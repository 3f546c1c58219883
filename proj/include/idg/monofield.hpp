#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "idg/gf.hpp"
#include "idg/padic.hpp"
#include "idg/poly.hpp"

namespace idg {

/// Field context for F_q(t, t^pi): constants F_q, the parameter digit
/// stream pi (absent for F_q(t) alone), the truncation order N of derivation
/// expansions and the p-adic digit budget.
class FieldCtx {
public:
    FieldCtx(std::shared_ptr<const GaloisField> gf, SessionPtr session, int order, std::string param_symbol);

    const GaloisField &gf() const noexcept { return *gf_; }
    const std::shared_ptr<const GaloisField> &gf_ptr() const noexcept { return gf_; }
    const PadicSession &session() const noexcept { return *session_; }
    const SessionPtr &session_ptr() const noexcept { return session_; }
    int p() const noexcept { return gf_->p(); }
    int k() const noexcept { return gf_->k(); }
    int order() const noexcept { return order_; }
    bool has_param() const noexcept { return session_->has_param(); }
    /// log_p [F : F^p]: 1 for F_q(t), 2 for F_q(t, t^pi).
    int imperfection_degree() const noexcept { return has_param() ? 2 : 1; }
    const std::string &param_symbol() const noexcept { return param_symbol_; }

    /// binom(a + b*pi, n) as an element of the prime field.
    GaloisField::Elem binom(std::int64_t a, std::int64_t b, std::uint64_t n) const
    {
        return static_cast<GaloisField::Elem>(lucas_binom(*session_, a, b, n));
    }

private:
    std::shared_ptr<const GaloisField> gf_;
    SessionPtr session_;
    int order_;
    std::string param_symbol_;
};

using CtxPtr = std::shared_ptr<const FieldCtx>;

/// F_q(t, t^alpha) (or F_q(t) when `oracle` is null) with derivation orders up
/// to `order`. A zero digit budget selects the default for `order`.
CtxPtr make_field(int p, int k, OraclePtr oracle, int order, int digits = 0, std::string param_symbol = "x");

/// A monomial term c * t^a * x^b of a Laurent polynomial.
struct Term {
    std::int64_t a = 0;
    std::int64_t b = 0;
    GaloisField::Elem c = 0;
};

/// An element of F_q(t, x), x = t^pi, kept in the normal form
///
///     t^a x^b * N / D
///
/// where N, D in F_q[t, x] are not divisible by t or x, gcd(N, D) = 1 and D
/// has leading coefficient 1 in x-major order. Zero is N = 0, D = 1, a = b = 0.
/// Equal elements have identical representations.
class MonoElem {
public:
    using Elem = GaloisField::Elem;
    using Poly2 = poly::Poly2;

    MonoElem() = default;

    static MonoElem zero(CtxPtr ctx);
    static MonoElem one(CtxPtr ctx);
    static MonoElem constant(CtxPtr ctx, Elem c);
    static MonoElem from_int(CtxPtr ctx, long long v);
    static MonoElem t(CtxPtr ctx);
    /// t^pi; throws for a context without parameter.
    static MonoElem param(CtxPtr ctx);
    static MonoElem monomial(CtxPtr ctx, Elem c, std::int64_t a, std::int64_t b);
    static MonoElem from_terms(CtxPtr ctx, const std::vector<Term> &num, const std::vector<Term> &den);
    /// t^st x^sx * num / den with num, den arbitrary polynomials (den != 0).
    static MonoElem from_parts(CtxPtr ctx, std::int64_t st, std::int64_t sx, Poly2 num, Poly2 den);

    const CtxPtr &ctx() const noexcept { return ctx_; }
    std::int64_t shift_t() const noexcept { return st_; }
    std::int64_t shift_x() const noexcept { return sx_; }
    const Poly2 &num() const noexcept { return num_; }
    const Poly2 &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.empty(); }
    bool is_one() const noexcept;
    /// Exact: the normal form is c / 1 with c in F_q.
    bool is_constant() const noexcept;
    Elem constant_value() const;
    bool has_unit_denominator() const noexcept { return den_.size() == 1 && den_[0].size() == 1; }

    std::vector<Term> numerator_terms() const;
    std::vector<Term> denominator_terms() const;

    MonoElem zero_like() const { return zero(ctx_); }
    MonoElem one_like() const { return one(ctx_); }

    MonoElem operator-() const;
    friend MonoElem operator+(const MonoElem &x, const MonoElem &y);
    friend MonoElem operator-(const MonoElem &x, const MonoElem &y);
    friend MonoElem operator*(const MonoElem &x, const MonoElem &y);
    friend MonoElem operator/(const MonoElem &x, const MonoElem &y);
    MonoElem &operator+=(const MonoElem &y) { return *this = *this + y; }
    MonoElem &operator-=(const MonoElem &y) { return *this = *this - y; }
    MonoElem &operator*=(const MonoElem &y) { return *this = *this * y; }
    MonoElem mul_scalar(Elem c) const;
    MonoElem mul_int(long long v) const;
    MonoElem inverse() const;
    MonoElem pow(long long e) const;
    friend bool operator==(const MonoElem &x, const MonoElem &y);
    friend bool operator!=(const MonoElem &x, const MonoElem &y) { return !(x == y); }

    /// Normalizes t^st x^sx * num / q where q is known to divide base^m for a
    /// polynomial base coprime to t and x. Cheaper than a general gcd because
    /// only factors of base can cancel.
    static MonoElem from_parts_dividing(CtxPtr ctx, std::int64_t st, std::int64_t sx, Poly2 num, Poly2 q,
                                        const Poly2 &base);

    /// Internal consistency of the normal form (used by tests).
    bool is_normalized() const;

private:
    MonoElem(CtxPtr ctx, std::int64_t st, std::int64_t sx, Poly2 num, Poly2 den)
        : ctx_(std::move(ctx)), st_(st), sx_(sx), num_(std::move(num)), den_(std::move(den))
    {
    }

    CtxPtr ctx_;
    std::int64_t st_ = 0;
    std::int64_t sx_ = 0;
    Poly2 num_;
    Poly2 den_;
};

/// The unique y with y^p = x; throws std::domain_error naming the first
/// monomial whose exponent is not divisible by p.
MonoElem p_root(const MonoElem &x);

/// Random element: quotient of two sparse Laurent polynomials with small
/// exponents (num_terms in [1, max_terms], den with up to max_den_terms).
struct SampleOptions {
    int max_terms = 3;
    int max_den_terms = 2;
    int max_exp = 2;
    bool allow_param = true;
};
MonoElem sample_element(const CtxPtr &ctx, std::mt19937_64 &rng, const SampleOptions &opts = {});

} // namespace idg
