#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace idg {

/// The finite constant field F_q, q = p^k.
///
/// Elements are encoded as integers in [0, q): the code of
/// c_0 + c_1 z + ... + c_{k-1} z^{k-1} is sum c_i p^i, where z is a root of
/// the modulus. The modulus is the lexicographically first monic primitive
/// polynomial of degree k over F_p, so z generates the multiplicative group
/// and every (p, k) yields the same encoding.
class GaloisField {
public:
    using Elem = std::uint16_t;

    static constexpr int max_order = 1024;

    static std::shared_ptr<const GaloisField> make(int p, int k);

    GaloisField(int p, int k);

    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// The fixed primitive element z (for k = 1 a primitive root mod p).
    Elem generator() const noexcept { return exp_[1 % (q_ - 1)]; }

    Elem from_int(long long v) const noexcept;
    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept
    {
        if (a == 0 || b == 0) return 0;
        int e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    /// x -> x^p.
    Elem frobenius(Elem a) const noexcept { return pow(a, p_); }
    /// The unique y with y^p = x, namely x^{p^{k-1}}.
    Elem p_root(Elem a) const;

    /// Base-p coordinates of a (length k).
    std::vector<int> coords(Elem a) const;
    /// Coefficients of the modulus, low to high (length k + 1).
    const std::vector<int> &modulus() const noexcept { return modulus_; }
    /// Discrete log base the generator; throws on zero.
    int log(Elem a) const;
    Elem exp(long long e) const;

    bool is_prime_subfield(Elem a) const noexcept { return a < p_; }

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_, neg_, exp_;
    std::vector<int> log_;
};

bool is_prime(long long n);

} // namespace idg
