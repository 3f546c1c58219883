#include "idg/padic.hpp"

#include <cmath>
#include <sstream>

#include "idg/gf.hpp"

namespace idg {

namespace {

class SquaresOracle final : public DigitOracle {
public:
    int digit(std::size_t i) const override
    {
        auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(i)));
        while (r * r > i) --r;
        while ((r + 1) * (r + 1) <= i) ++r;
        return r * r == i ? 1 : 0;
    }
    bool declared_irrational() const override { return true; }
    std::string describe() const override { return "squares"; }
};

class OnesOracle final : public DigitOracle {
public:
    int digit(std::size_t) const override { return 1; }
    bool declared_irrational() const override { return false; }
    std::string describe() const override { return "ones"; }
};

class ExplicitOracle final : public DigitOracle {
public:
    explicit ExplicitOracle(std::vector<int> d) : digits_(std::move(d)) {}
    int digit(std::size_t i) const override { return i < digits_.size() ? digits_[i] : 0; }
    bool declared_irrational() const override { return false; }
    std::string describe() const override
    {
        std::ostringstream os;
        os << "explicit:";
        for (std::size_t i = 0; i < digits_.size(); ++i) os << (i ? "," : "") << digits_[i];
        return os.str();
    }

private:
    std::vector<int> digits_;
};

class ShiftedOracle final : public DigitOracle {
public:
    ShiftedOracle(OraclePtr base, std::size_t shift) : base_(std::move(base)), shift_(shift) {}
    int digit(std::size_t i) const override { return base_->digit(i + shift_); }
    bool declared_irrational() const override { return base_->declared_irrational(); }
    std::string describe() const override
    {
        return "shift(" + base_->describe() + "," + std::to_string(shift_) + ")";
    }

private:
    OraclePtr base_;
    std::size_t shift_;
};

std::int64_t floor_mod(std::int64_t v, std::int64_t p)
{
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

} // namespace

OraclePtr squares_oracle() { return std::make_shared<const SquaresOracle>(); }
OraclePtr ones_oracle() { return std::make_shared<const OnesOracle>(); }
OraclePtr explicit_oracle(std::vector<int> digits)
{
    return std::make_shared<const ExplicitOracle>(std::move(digits));
}

OraclePtr shifted_oracle(OraclePtr base, std::size_t shift)
{
    if (shift == 0) return base;
    return std::make_shared<const ShiftedOracle>(std::move(base), shift);
}

OraclePtr parse_oracle(const std::string &spec, int p)
{
    if (spec == "squares") return squares_oracle();
    if (spec == "ones") return ones_oracle();
    const std::string prefix = "explicit:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<int> digits;
        std::stringstream ss(spec.substr(prefix.size()));
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            int d = 0;
            try {
                d = std::stoi(item, &pos);
            } catch (const std::exception &) {
                throw std::invalid_argument("bad digit '" + item + "' in oracle spec");
            }
            if (pos != item.size() || d < 0 || d >= p) {
                throw std::invalid_argument("digit '" + item + "' out of range [0, p)");
            }
            digits.push_back(d);
        }
        return explicit_oracle(std::move(digits));
    }
    throw std::invalid_argument("unknown digit oracle '" + spec + "' (expected squares | ones | explicit:<digits>)");
}

bool looks_eventually_periodic(const DigitOracle &oracle, int, std::size_t bound)
{
    std::vector<int> d(bound);
    for (std::size_t i = 0; i < bound; ++i) d[i] = oracle.digit(i);
    for (std::size_t s = 0; s <= bound / 2; ++s) {
        for (std::size_t period = 1; period <= bound / 4; ++period) {
            bool periodic = true;
            for (std::size_t i = s; i + period < bound; ++i) {
                if (d[i] != d[i + period]) {
                    periodic = false;
                    break;
                }
            }
            if (periodic) return true;
        }
    }
    return false;
}

int lucas_binom_int(std::uint64_t m, std::uint64_t k, int p)
{
    long long r = 1;
    while (k > 0 || m > 0) {
        const auto md = static_cast<long long>(m % p);
        const auto kd = static_cast<long long>(k % p);
        if (kd > md) return 0;
        // binom(md, kd) for single digits via multiplicative formula mod p.
        long long num = 1, den = 1;
        for (long long i = 0; i < kd; ++i) {
            num = num * (md - i) % p;
            den = den * (i + 1) % p;
        }
        long long inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        r = r * num % p * inv % p;
        m /= p;
        k /= p;
    }
    return static_cast<int>(r);
}

std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

PadicSession::PadicSession(int p, OraclePtr param, int budget)
    : p_(p), param_(std::move(param)), budget_(budget)
{
    if (!is_prime(p)) throw std::invalid_argument("PadicSession: p must be prime");
    if (budget < 1) throw std::invalid_argument("PadicSession: digit budget must be >= 1");
    if (param_) {
        cached_digits_.resize(static_cast<std::size_t>(budget) + 64);
        for (std::size_t i = 0; i < cached_digits_.size(); ++i) {
            const int d = param_->digit(i);
            if (d < 0 || d >= p) throw std::invalid_argument("PadicSession: oracle digit out of range");
            cached_digits_[i] = d;
        }
    }
    pascal_.assign(static_cast<std::size_t>(p) * p, 0);
    for (int a = 0; a < p; ++a) {
        pascal_[a * p] = 1;
        for (int b = 1; b <= a; ++b) {
            pascal_[a * p + b] = (pascal_[(a - 1) * p + b - 1] + (b <= a - 1 ? pascal_[(a - 1) * p + b] : 0)) % p;
        }
    }
}

int PadicSession::param_digit(std::size_t i) const
{
    if (!param_) return 0;
    if (i < cached_digits_.size()) return cached_digits_[i];
    return param_->digit(i);
}

std::int64_t PadicSession::param_residue(int m) const
{
    std::int64_t r = 0;
    std::int64_t pw = 1;
    for (int i = 0; i < m; ++i) {
        if (pw > (std::int64_t{1} << 40) / p_) throw InsufficientPrecision("param_residue: modulus too large");
        r += param_digit(i) * pw;
        pw *= p_;
    }
    return r;
}

int PadicSession::default_budget(int p, long long max_order)
{
    int digits = 0;
    long long pw = 1;
    while (pw <= max_order) {
        pw *= p;
        ++digits;
    }
    return digits + 4;
}

std::vector<int> PadicExponent::digits(std::size_t count) const
{
    const int p = session->p();
    std::vector<int> out(count);
    std::int64_t carry = a;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t s = carry + b * session->param_digit(i);
        const std::int64_t d = floor_mod(s, p);
        out[i] = static_cast<int>(d);
        carry = (s - d) / p;
    }
    return out;
}

std::vector<int> combination_digits(std::int64_t c1, const PadicExponent &b1, std::int64_t c2,
                                    const PadicExponent &b2, std::size_t count)
{
    if (b1.session->p() != b2.session->p()) throw std::invalid_argument("combination_digits: mismatched primes");
    const int p = b1.session->p();
    // Digit-by-digit sum with a signed carry; position i only sees positions <= i.
    const auto d1 = b1.digits(count);
    const auto d2 = b2.digits(count);
    std::vector<int> out(count);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t s = carry + c1 * d1[i] + c2 * d2[i];
        const std::int64_t d = floor_mod(s, p);
        out[i] = static_cast<int>(d);
        carry = (s - d) / p;
    }
    return out;
}

PadicExponent exponent_combine(std::int64_t c1, const PadicExponent &b1, std::int64_t c2, const PadicExponent &b2)
{
    if (b1.session != b2.session) throw std::invalid_argument("exponent_combine: exponents over different sessions");
    return PadicExponent{b1.session, c1 * b1.a + c2 * b2.a, c1 * b1.b + c2 * b2.b};
}

int lucas_binom(const PadicSession &s, std::int64_t a, std::int64_t b, std::uint64_t n)
{
    if (n == 0) return 1;
    const int p = s.p();
    std::int64_t carry = a;
    int result = 1;
    int pos = 0;
    while (n > 0) {
        if (pos >= s.budget()) {
            throw InsufficientPrecision("lucas_binom: order exceeds p^" + std::to_string(s.budget()) +
                                        " (digit budget exhausted)");
        }
        const std::int64_t v = carry + b * s.param_digit(pos);
        const std::int64_t d = floor_mod(v, p);
        carry = (v - d) / p;
        const int nd = static_cast<int>(n % p);
        n /= p;
        if (nd > d) return 0;
        result = (result * s.small_binom(static_cast<int>(d), nd)) % p;
        ++pos;
    }
    return result;
}

int lucas_binom(const PadicExponent &beta, std::uint64_t n)
{
    return lucas_binom(*beta.session, beta.a, beta.b, n);
}

} // namespace idg
