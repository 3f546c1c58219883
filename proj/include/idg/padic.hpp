#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace idg {

/// Raised whenever a computation would need more p-adic digits than the
/// session budget allows. Never silently truncated.
class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A deterministic stream of base-p digits d_0, d_1, ... of a p-adic integer.
class DigitOracle {
public:
    virtual ~DigitOracle() = default;
    virtual int digit(std::size_t i) const = 0;
    /// True when the stream is declared not eventually periodic (alpha not in Q).
    virtual bool declared_irrational() const = 0;
    virtual std::string describe() const = 0;
};

using OraclePtr = std::shared_ptr<const DigitOracle>;

/// d_i = 1 iff i is a perfect square. Not eventually periodic.
OraclePtr squares_oracle();
/// d_i = 1 for all i, i.e. -1/(p-1). Rational.
OraclePtr ones_oracle();
/// Given digits, zero-extended. Flagged rational.
OraclePtr explicit_oracle(std::vector<int> digits);
/// d'_i = d_{i+shift}.
OraclePtr shifted_oracle(OraclePtr base, std::size_t shift);
/// Parses "squares" | "ones" | "explicit:<d0,d1,...>".
OraclePtr parse_oracle(const std::string &spec, int p);

/// Heuristic: does the stream look eventually periodic within [0, bound)?
/// A period P <= bound/4 starting at s <= bound/2 must repeat through bound.
bool looks_eventually_periodic(const DigitOracle &oracle, int p, std::size_t bound);

/// The shared setting for exponent arithmetic: the prime, the parameter
/// digit stream pi (may be null for the pure lattice Z) and the digit budget.
class PadicSession {
public:
    PadicSession(int p, OraclePtr param, int budget);

    int p() const noexcept { return p_; }
    int budget() const noexcept { return budget_; }
    const OraclePtr &param() const noexcept { return param_; }
    bool has_param() const noexcept { return param_ != nullptr; }
    int param_digit(std::size_t i) const;
    /// pi mod p^m as an integer in [0, p^m); m <= 40 / log2(p) is enforced.
    std::int64_t param_residue(int m) const;
    /// binom(a, b) mod p for single digits a, b < p.
    int small_binom(int a, int b) const noexcept { return pascal_[a * p_ + b]; }

    /// Smallest budget covering derivation orders up to max_order, plus four guard digits.
    static int default_budget(int p, long long max_order);

private:
    int p_;
    OraclePtr param_;
    int budget_;
    std::vector<int> cached_digits_;
    std::vector<int> pascal_;
};

using SessionPtr = std::shared_ptr<const PadicSession>;

/// beta = a + b * pi inside Z + Z pi, a sub-group of Z_p.
struct PadicExponent {
    SessionPtr session;
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool operator==(const PadicExponent &o) const noexcept { return a == o.a && b == o.b; }

    /// Base-p digits of a + b*pi, count of them, with full carry propagation.
    std::vector<int> digits(std::size_t count) const;
};

/// Digits of c1*beta1 + c2*beta2 where the two exponents may live over
/// different parameter streams (same p).
std::vector<int> combination_digits(std::int64_t c1, const PadicExponent &b1, std::int64_t c2,
                                    const PadicExponent &b2, std::size_t count);

/// c1*beta1 + c2*beta2 over a common session.
PadicExponent exponent_combine(std::int64_t c1, const PadicExponent &b1, std::int64_t c2,
                               const PadicExponent &b2);

/// binom(beta, n) mod p by Lucas' product over base-p digits.
/// Throws InsufficientPrecision if n >= p^budget.
int lucas_binom(const PadicExponent &beta, std::uint64_t n);

/// Same, for a raw (a, b) pair.
int lucas_binom(const PadicSession &s, std::int64_t a, std::int64_t b, std::uint64_t n);

/// binom(m, k) mod p for nonnegative integers, by Lucas.
int lucas_binom_int(std::uint64_t m, std::uint64_t k, int p);

std::int64_t ipow(std::int64_t base, int e);

} // namespace idg
