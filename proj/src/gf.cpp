#include "idg/gf.hpp"

#include <stdexcept>

namespace idg {

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

// Multiply coordinate vector by z modulo the monic polynomial f (low to high).
std::vector<int> mul_by_z(const std::vector<int> &c, const std::vector<int> &f, int p)
{
    const auto k = c.size();
    std::vector<int> r(k, 0);
    const int top = c[k - 1];
    for (std::size_t i = k - 1; i > 0; --i) r[i] = c[i - 1];
    r[0] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        r[i] = ((r[i] - top * f[i]) % p + p) % p;
    }
    return r;
}

int encode(const std::vector<int> &c, int p)
{
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

} // namespace

std::shared_ptr<const GaloisField> GaloisField::make(int p, int k)
{
    return std::make_shared<const GaloisField>(p, k);
}

GaloisField::GaloisField(int p, int k) : p_(p), k_(k), q_(1)
{
    if (!is_prime(p)) throw std::invalid_argument("GaloisField: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("GaloisField: extension degree must be >= 1");
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > max_order) throw std::invalid_argument("GaloisField: q exceeds supported order");
    }

    // Search monic primitive polynomials in increasing code order of (f_0, ..., f_{k-1}).
    bool found = false;
    for (int code = 1; code < q_ && !found; ++code) {
        std::vector<int> f(k + 1, 0);
        int c = code;
        for (int i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        if (f[0] == 0) continue;

        std::vector<int> cur(k, 0);
        cur[0] = 1;
        std::vector<Elem> powers;
        powers.reserve(q_ - 1);
        bool primitive = true;
        for (int i = 0; i < q_ - 1; ++i) {
            const int v = encode(cur, p);
            if (i > 0 && v == 1) {
                primitive = false;
                break;
            }
            powers.push_back(static_cast<Elem>(v));
            cur = mul_by_z(cur, f, p);
        }
        if (!primitive || encode(cur, p) != 1) continue;
        modulus_ = f;
        exp_ = std::move(powers);
        found = true;
    }
    if (!found) throw std::logic_error("GaloisField: no primitive polynomial found");

    log_.assign(q_, -1);
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        const auto ca = coords(static_cast<Elem>(a));
        std::vector<int> cn(k);
        for (int i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = static_cast<Elem>(encode(cn, p));
        for (int b = 0; b < q_; ++b) {
            const auto cb = coords(static_cast<Elem>(b));
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            add_[a * q_ + b] = static_cast<Elem>(encode(s, p));
        }
    }
}

GaloisField::Elem GaloisField::from_int(long long v) const noexcept
{
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::inv(Elem a) const
{
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    const int l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const
{
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw std::domain_error("GaloisField: negative power of zero");
        return 0;
    }
    const long long n = q_ - 1;
    long long r = (static_cast<long long>(log_[a]) * (((e % n) + n) % n)) % n;
    return exp_[r];
}

GaloisField::Elem GaloisField::p_root(Elem a) const
{
    long long e = 1;
    for (int i = 1; i < k_; ++i) e *= p_;
    return pow(a, e);
}

std::vector<int> GaloisField::coords(Elem a) const
{
    std::vector<int> c(k_);
    int v = a;
    for (int i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

int GaloisField::log(Elem a) const
{
    if (a == 0) throw std::domain_error("GaloisField: log of zero");
    return log_[a];
}

GaloisField::Elem GaloisField::exp(long long e) const
{
    const long long n = q_ - 1;
    return exp_[((e % n) + n) % n];
}

} // namespace idg
