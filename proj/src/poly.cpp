#include "idg/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace idg::poly {

void trim(UPoly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly &a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const GaloisField &F, const UPoly &a, const UPoly &b)
{
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

UPoly sub(const GaloisField &F, const UPoly &a, const UPoly &b)
{
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

UPoly mul(const GaloisField &F, const UPoly &a, const UPoly &b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

UPoly scale(const GaloisField &F, const UPoly &a, Elem c)
{
    if (c == 0) return {};
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return r;
}

UPoly shift(const UPoly &a, int n)
{
    if (a.empty()) return {};
    UPoly r(n, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

std::pair<UPoly, UPoly> divmod(const GaloisField &F, const UPoly &a, const UPoly &b)
{
    if (b.empty()) throw std::domain_error("poly::divmod: division by zero polynomial");
    UPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    UPoly q(r.size() - b.size() + 1, 0);
    const Elem lc_inv = F.inv(b.back());
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        const Elem c = F.mul(r[i], lc_inv);
        if (c == 0) continue;
        const int off = i - (static_cast<int>(b.size()) - 1);
        q[off] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[off + j] = F.sub(r[off + j], F.mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

UPoly gcd(const GaloisField &F, UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

int low_order(const UPoly &a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

void trim(Poly2 &a)
{
    for (auto &c : a) trim(c);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg_x(const Poly2 &a) { return static_cast<int>(a.size()) - 1; }

int deg_t(const Poly2 &a)
{
    int d = -1;
    for (const auto &c : a) d = std::max(d, deg(c));
    return d;
}

bool is_zero(const Poly2 &a) { return a.empty(); }

Poly2 constant(Elem c)
{
    if (c == 0) return {};
    return Poly2{UPoly{c}};
}

Poly2 add(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    Poly2 r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i >= a.size()) r[i] = b[i];
        else if (i >= b.size()) r[i] = a[i];
        else r[i] = add(F, a[i], b[i]);
    }
    trim(r);
    return r;
}

Poly2 sub(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    Poly2 r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i >= b.size()) r[i] = a[i];
        else if (i >= a.size()) r[i] = sub(F, UPoly{}, b[i]);
        else r[i] = sub(F, a[i], b[i]);
    }
    trim(r);
    return r;
}

Poly2 mul(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    if (a.empty() || b.empty()) return {};
    const int dt = deg_t(a) + deg_t(b) + 1;
    Poly2 r(a.size() + b.size() - 1, UPoly(dt, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t ti = 0; ti < a[i].size(); ++ti) {
            const Elem c = a[i][ti];
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto &row = r[i + j];
                const auto &bj = b[j];
                for (std::size_t tj = 0; tj < bj.size(); ++tj) {
                    if (bj[tj] != 0) row[ti + tj] = F.add(row[ti + tj], F.mul(c, bj[tj]));
                }
            }
        }
    }
    trim(r);
    return r;
}

Poly2 scale(const GaloisField &F, const Poly2 &a, Elem c)
{
    if (c == 0) return {};
    Poly2 r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = scale(F, a[i], c);
    return r;
}

Poly2 mul_upoly(const GaloisField &F, const Poly2 &a, const UPoly &c)
{
    Poly2 r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(F, a[i], c);
    trim(r);
    return r;
}

Poly2 pow(const GaloisField &F, const Poly2 &a, int e)
{
    if (e < 0) throw std::domain_error("poly::pow: negative exponent");
    Poly2 r = constant(1);
    Poly2 base = a;
    while (e > 0) {
        if (e & 1) r = mul(F, r, base);
        e >>= 1;
        if (e) base = mul(F, base, base);
    }
    return r;
}

Poly2 shift(const Poly2 &a, int dt, int dx)
{
    if (a.empty()) return {};
    Poly2 r(dx);
    for (const auto &c : a) r.push_back(shift(c, dt));
    return r;
}

std::pair<int, int> monomial_content(const Poly2 &a)
{
    if (a.empty()) return {0, 0};
    int vx = 0;
    while (a[vx].empty()) ++vx;
    int vt = -1;
    for (const auto &c : a) {
        if (c.empty()) continue;
        const int v = low_order(c);
        vt = vt < 0 ? v : std::min(vt, v);
    }
    return {vt, vx};
}

Poly2 unshift(const Poly2 &a, int vt, int vx)
{
    if (a.empty()) return {};
    Poly2 r(a.begin() + vx, a.end());
    for (auto &c : r) {
        if (!c.empty()) c.erase(c.begin(), c.begin() + vt);
    }
    return r;
}

Elem leading_coeff(const Poly2 &a)
{
    if (a.empty()) return 0;
    return a.back().back();
}

Poly2 make_monic(const GaloisField &F, const Poly2 &a)
{
    if (a.empty()) return a;
    return scale(F, a, F.inv(leading_coeff(a)));
}

UPoly content(const GaloisField &F, const Poly2 &a)
{
    UPoly g;
    for (const auto &c : a) {
        if (c.empty()) continue;
        g = gcd(F, g, c);
        if (g.size() == 1) break;
    }
    return g;
}

Poly2 div_exact_upoly(const GaloisField &F, const Poly2 &a, const UPoly &c)
{
    Poly2 r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [q, rem] = divmod(F, a[i], c);
        if (!rem.empty()) throw std::logic_error("poly::div_exact_upoly: inexact division");
        r[i] = std::move(q);
    }
    trim(r);
    return r;
}

Poly2 div_exact(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    if (b.empty()) throw std::domain_error("poly::div_exact: division by zero polynomial");
    if (b.size() == 1) return div_exact_upoly(F, a, b[0]);
    Poly2 r = a;
    const int db = deg_x(b);
    Poly2 q(std::max(0, deg_x(a) - db + 1));
    while (!r.empty()) {
        const int dr = deg_x(r);
        if (dr < db) throw std::logic_error("poly::div_exact: inexact division");
        auto [qc, rem] = divmod(F, r.back(), b.back());
        if (!rem.empty()) throw std::logic_error("poly::div_exact: inexact division");
        q[dr - db] = qc;
        for (int j = 0; j <= db; ++j) r[dr - db + j] = sub(F, r[dr - db + j], mul(F, qc, b[j]));
        trim(r);
    }
    trim(q);
    return q;
}

namespace {

Poly2 primitive_part(const GaloisField &F, const Poly2 &a)
{
    if (a.empty()) return a;
    const UPoly c = content(F, a);
    if (c.size() == 1) return a;
    return div_exact_upoly(F, a, c);
}

// Pseudo-remainder of a by b with respect to x (deg_x(b) >= 1).
Poly2 prem(const GaloisField &F, Poly2 a, const Poly2 &b)
{
    const int db = deg_x(b);
    const UPoly &lb = b.back();
    while (!a.empty() && deg_x(a) >= db) {
        const int da = deg_x(a);
        const UPoly la = a.back();
        Poly2 r = mul_upoly(F, a, lb);
        for (int j = 0; j <= db; ++j) r[da - db + j] = sub(F, r[da - db + j], mul(F, la, b[j]));
        trim(r);
        a = primitive_part(F, r);
    }
    return a;
}

// Field used for evaluation points: a larger field containing F_p when
// q = p, otherwise F_q itself.
const GaloisField &evaluation_field(const GaloisField &F)
{
    if (F.k() != 1 || F.p() > 64) return F;
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[F.p()];
    if (!slot) {
        int e = 1;
        long long q = F.p();
        while (q * F.p() <= 256) {
            q *= F.p();
            ++e;
        }
        slot = GaloisField::make(F.p(), e);
    }
    return *slot;
}

UPoly eval_t(const GaloisField &E, const Poly2 &a, Elem tau)
{
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Elem acc = 0;
        for (std::size_t j = a[i].size(); j-- > 0;) acc = E.add(E.mul(acc, tau), a[i][j]);
        r[i] = acc;
    }
    return r;
}

// For primitive a, b with positive x-degree: true when some evaluation t = tau
// keeps deg_x(a) and makes the images coprime, which rules out a common factor
// of positive x-degree. False means "unknown".
bool certainly_coprime(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    const GaloisField &E = evaluation_field(F);
    const int tries = std::min(4, E.q() - 1);
    for (int i = 0; i < tries; ++i) {
        const Elem tau = E.exp(1 + 5 * i);
        UPoly ea = eval_t(E, a, tau);
        if (ea.empty() || ea.back() == 0) continue;
        UPoly eb = eval_t(E, b, tau);
        trim(eb);
        if (eb.empty()) continue;
        if (deg(gcd(E, ea, eb)) == 0) return true;
    }
    return false;
}

} // namespace

Poly2 gcd(const GaloisField &F, const Poly2 &a, const Poly2 &b)
{
    if (a.empty()) return make_monic(F, b);
    if (b.empty()) return make_monic(F, a);
    const UPoly ca = content(F, a);
    const UPoly cb = content(F, b);
    const UPoly c = gcd(F, ca, cb);
    Poly2 pa = div_exact_upoly(F, a, ca);
    Poly2 pb = div_exact_upoly(F, b, cb);
    if (deg_x(pa) < deg_x(pb)) std::swap(pa, pb);
    if (deg_x(pb) == 0) return Poly2{c};
    if (certainly_coprime(F, pa, pb)) return Poly2{c};
    while (true) {
        Poly2 r = prem(F, pa, pb);
        if (r.empty()) break;
        if (deg_x(r) == 0) return Poly2{c};
        pa = std::move(pb);
        pb = primitive_part(F, r);
    }
    return make_monic(F, mul_upoly(F, primitive_part(F, pb), c));
}

bool is_constant(const Poly2 &a) { return a.empty() || (a.size() == 1 && a[0].size() == 1); }

} // namespace idg::poly
