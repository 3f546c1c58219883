#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "idg/monofield.hpp"

// The iterative derivation theta: R -> R[[T]] on F_q(t, t^alpha), given on
// monomials by theta^(n)(t^beta) = binom(beta, n) t^(beta - n) and extended to
// quotients by theta(r/s) = theta(r) theta(s)^(-1).
//
// Generic helpers here work for any element type T providing +, -, *, /,
// ==, zero_like(), one_like(), mul_int(), characteristic() and a free
// function theta_series(const T &, int) found by ADL.
namespace idg {

/// theta(r) truncated after T^N: coeffs[n] = theta^(n)(r) for n <= N.
template <class T>
struct TruncSeries {
    std::vector<T> coeffs;

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    const T &operator[](std::size_t n) const { return coeffs.at(n); }
    T &operator[](std::size_t n) { return coeffs.at(n); }
    bool operator==(const TruncSeries &o) const { return coeffs == o.coeffs; }
};

template <class T>
TruncSeries<T> series_mul(const TruncSeries<T> &a, const TruncSeries<T> &b)
{
    const int n = std::min(a.order(), b.order());
    TruncSeries<T> r;
    r.coeffs.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        T acc = a[0].zero_like();
        for (int i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) continue;
            acc += a[i] * b[k - i];
        }
        r.coeffs.push_back(std::move(acc));
    }
    return r;
}

/// s * s^(-1) = 1 mod T^(N+1). Throws std::domain_error when s_0 = 0.
template <class T>
TruncSeries<T> series_invert(const TruncSeries<T> &s)
{
    if (s.coeffs.empty() || s[0].is_zero()) {
        throw std::domain_error("series_invert: constant term is not invertible");
    }
    const T inv0 = s[0].one_like() / s[0];
    TruncSeries<T> r;
    r.coeffs.push_back(inv0);
    for (int n = 1; n <= s.order(); ++n) {
        T acc = s[0].zero_like();
        for (int i = 1; i <= n; ++i) {
            if (s[i].is_zero() || r[n - i].is_zero()) continue;
            acc += s[i] * r[n - i];
        }
        r.coeffs.push_back(-(acc * inv0));
    }
    return r;
}

/// theta(x) up to T^N; N must not exceed the context truncation order.
TruncSeries<MonoElem> theta_series(const MonoElem &x, int N);

/// Unreduced form of theta(x): theta^(n)(x) = t^(shift_t - n) x^shift_x num[n] / base^(n+1)
/// where base is the denominator of x.
struct ThetaExpansion {
    std::int64_t shift_t = 0;
    std::int64_t shift_x = 0;
    poly::Poly2 base;
    std::vector<poly::Poly2> num;
};
ThetaExpansion theta_expansion(const MonoElem &x, int N);

/// theta^(n)(x) alone. Unbounded n for Laurent polynomials (subject to the
/// digit budget); otherwise n must not exceed the context order.
MonoElem theta_coeff(const MonoElem &x, std::uint64_t n);

inline int characteristic(const MonoElem &x) { return x.ctx()->p(); }

struct PairCheck {
    int i = 0;
    int j = 0;
    bool pass = false;
};

struct IterativityReport {
    std::vector<PairCheck> pairs;

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &c : pairs) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

struct OrderCheck {
    int k = 0;
    bool pass = false;
};

struct HomomorphismReport {
    std::vector<OrderCheck> orders;

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &c : orders) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

/// theta^(i)(theta^(j)(x)) = binom(i+j, i) theta^(i+j)(x) for all i + j <= N.
template <class T>
IterativityReport verify_iterativity(const T &x, int N)
{
    IterativityReport rep;
    const int p = characteristic(x);
    const auto s = theta_series(x, N);
    for (int j = 0; j <= N; ++j) {
        const auto inner = theta_series(s[j], N - j);
        for (int i = 0; i + j <= N; ++i) {
            const T rhs = s[i + j].mul_int(lucas_binom_int(static_cast<std::uint64_t>(i + j), static_cast<std::uint64_t>(i), p));
            rep.pairs.push_back(PairCheck{i, j, inner[i] == rhs});
        }
    }
    return rep;
}

/// theta^(n)(x + y) = theta^(n)(x) + theta^(n)(y) for all n <= N.
template <class T>
HomomorphismReport verify_additivity(const T &x, const T &y, int N)
{
    HomomorphismReport rep;
    const auto sx = theta_series(x, N);
    const auto sy = theta_series(y, N);
    const auto ss = theta_series(x + y, N);
    for (int k = 0; k <= N; ++k) rep.orders.push_back(OrderCheck{k, sx[k] + sy[k] == ss[k]});
    return rep;
}

/// theta^(k)(xy) = sum_{i+j=k} theta^(i)(x) theta^(j)(y) for all k <= N.
template <class T>
HomomorphismReport verify_homomorphism(const T &x, const T &y, int N)
{
    HomomorphismReport rep;
    const auto sx = theta_series(x, N);
    const auto sy = theta_series(y, N);
    const auto sxy = theta_series(x * y, N);
    const auto prod = series_mul(sx, sy);
    for (int k = 0; k <= N; ++k) rep.orders.push_back(OrderCheck{k, prod[k] == sxy[k]});
    return rep;
}

// Specializations for F_q(t, x) compare both sides by cross-multiplying
// unreduced expansions, which avoids reducing large intermediate sums.
HomomorphismReport verify_additivity(const MonoElem &x, const MonoElem &y, int N);
HomomorphismReport verify_homomorphism(const MonoElem &x, const MonoElem &y, int N);

} // namespace idg
