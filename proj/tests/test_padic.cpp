#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "idg/padic.hpp"

using namespace idg;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: n! / (k! (n-k)!) in exact integers, reduced mod p.
int factorial_binom_mod(long long n, long long k, int p)
{
    if (k < 0 || k > n) return 0;
    cpp_int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    cpp_int q = num / den;
    return static_cast<int>(q % p);
}

SessionPtr session(int p, OraclePtr o, int budget = 8)
{
    return std::make_shared<const PadicSession>(p, std::move(o), budget);
}

long long residue(const PadicExponent &e, int m)
{
    const auto d = e.digits(m);
    long long r = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
        r += d[i] * pw;
        pw *= e.session->p();
    }
    return r;
}

} // namespace

TEST_CASE("lucas_binom small examples")
{
    auto s2 = session(2, nullptr);
    auto s3 = session(3, squares_oracle());
    CHECK(lucas_binom(PadicExponent{s2, 7, 0}, 3) == 1);
    CHECK(lucas_binom(PadicExponent{s3, 10, 0}, 2) == 0);
    CHECK(lucas_binom(PadicExponent{s3, 0, 1}, 1) == 1); // digit d0 of alpha
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        CHECK(lucas_binom(PadicExponent{s3, static_cast<std::int64_t>(rng() % 100) - 50, static_cast<std::int64_t>(rng() % 7) - 3}, 0) == 1);
    }
}

TEST_CASE("lucas agrees with the factorial formula on 0 <= n <= beta <= 60")
{
    for (int p : {2, 3, 5}) {
        auto s = session(p, nullptr, 6);
        for (int m = 0; m <= 60; ++m) {
            for (int n = 0; n <= m; ++n) {
                CHECK(lucas_binom(PadicExponent{s, m, 0}, n) == factorial_binom_mod(m, n, p));
                CHECK(lucas_binom_int(m, n, p) == factorial_binom_mod(m, n, p));
            }
        }
    }
}

TEST_CASE("digits with carries")
{
    auto s3 = session(3, squares_oracle());
    CHECK(PadicExponent{s3, -1, 0}.digits(4) == std::vector<int>{2, 2, 2, 2});
    CHECK(PadicExponent{s3, 0, 0}.digits(5) == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(PadicExponent{s3, 0, 1}.digits(10) == std::vector<int>{1, 1, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(PadicExponent{s3, -1, 1}.digits(10) == std::vector<int>{0, 1, 0, 0, 1, 0, 0, 0, 0, 1});
    // -alpha: 3-adic negation of 1 + 3 + 81 + ...
    auto neg = PadicExponent{s3, 0, -1};
    CHECK((residue(neg, 6) + residue(PadicExponent{s3, 0, 1}, 6)) % 729 == 0);
}

TEST_CASE("exponent_combine")
{
    auto s = session(3, squares_oracle());
    PadicExponent beta{s, 4, -2};
    auto zero = exponent_combine(1, beta, -1, beta);
    CHECK(zero.a == 0);
    CHECK(zero.b == 0);
    PadicExponent alpha{s, 0, 1};
    auto two_alpha = exponent_combine(1, alpha, 1, alpha);
    const int N = 8;
    const long long mod = 6561;
    CHECK(residue(two_alpha, N) == (2 * residue(alpha, N)) % mod);
    CHECK_THROWS_AS(exponent_combine(1, alpha, 1, PadicExponent{session(3, squares_oracle()), 0, 1}), std::invalid_argument);
}

TEST_CASE("level shift digit identity alpha = alpha_l + p^l gamma")
{
    for (int p : {2, 3, 5}) {
        auto base = session(p, squares_oracle(), 12);
        PadicExponent alpha{base, 0, 1};
        for (int l = 0; l <= 3; ++l) {
            auto gamma_s = session(p, shifted_oracle(squares_oracle(), l), 12);
            PadicExponent gamma{gamma_s, 0, 1};
            const auto low = alpha.digits(l);
            std::int64_t alpha_l = 0;
            for (int i = l; i-- > 0;) alpha_l = alpha_l * p + low[i];
            PadicExponent alpha_l_exp{gamma_s, alpha_l, 0};
            CHECK(combination_digits(ipow(p, l), gamma, 1, alpha_l_exp, 30) == alpha.digits(30));
        }
    }
}

TEST_CASE("vandermonde on random exponents, checked against integer representatives")
{
    std::mt19937_64 rng(42);
    for (int p : {2, 3, 5}) {
        auto s = session(p, squares_oracle(), 8);
        int m = 0;
        long long pm = 1;
        while (pm <= 12) {
            pm *= p;
            ++m;
        }
        for (int trial = 0; trial < 100; ++trial) {
            PadicExponent b1{s, static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 9) - 4};
            PadicExponent b2{s, static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 9) - 4};
            auto sum = exponent_combine(1, b1, 1, b2);
            const long long r1 = residue(b1, m), r2 = residue(b2, m), rs = residue(sum, m);
            const int n = static_cast<int>(rng() % 13);
            int lhs = 0;
            for (int i = 0; i <= n; ++i) lhs = (lhs + lucas_binom(b1, i) * lucas_binom(b2, n - i)) % p;
            CHECK(lhs == lucas_binom(sum, n));
            // integer-representative oracle
            CHECK(lucas_binom(b1, n) == factorial_binom_mod(r1, n, p));
            CHECK(lucas_binom(sum, n) == factorial_binom_mod(rs, n, p));
            CHECK(rs == (r1 + r2) % pm);
        }
    }
}

TEST_CASE("locality: binom(beta, n) for n < p^m depends on the first m digits only")
{
    std::mt19937_64 rng(3);
    auto s = session(3, squares_oracle(), 10);
    for (int trial = 0; trial < 50; ++trial) {
        PadicExponent b{s, static_cast<std::int64_t>(rng() % 61) - 30, static_cast<std::int64_t>(rng() % 7) - 3};
        const int m = 1 + static_cast<int>(rng() % 3);
        PadicExponent shifted{s, b.a + ipow(3, m) * (static_cast<std::int64_t>(rng() % 11) - 5), b.b};
        for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(ipow(3, m)); ++n) {
            CHECK(lucas_binom(b, n) == lucas_binom(shifted, n));
        }
    }
}

TEST_CASE("digit budget exhaustion fails loudly")
{
    auto s = session(2, squares_oracle(), 4);
    CHECK_NOTHROW(lucas_binom(PadicExponent{s, 0, 1}, 15));
    CHECK_THROWS_AS(lucas_binom(PadicExponent{s, 0, 1}, 16), InsufficientPrecision);
}

TEST_CASE("oracles")
{
    CHECK(parse_oracle("squares", 3)->declared_irrational());
    CHECK_FALSE(parse_oracle("ones", 3)->declared_irrational());
    auto e = parse_oracle("explicit:1,2,0", 3);
    CHECK_FALSE(e->declared_irrational());
    CHECK(e->digit(1) == 2);
    CHECK(e->digit(100) == 0);
    CHECK_THROWS_AS(parse_oracle("explicit:1,3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle("pi", 3), std::invalid_argument);
    CHECK_FALSE(looks_eventually_periodic(*squares_oracle(), 3, 64));
    CHECK(looks_eventually_periodic(*ones_oracle(), 3, 64));
    CHECK(looks_eventually_periodic(*e, 3, 64));
    // determinism
    auto sq = squares_oracle();
    for (std::size_t i = 0; i < 200; ++i) CHECK(sq->digit(i) == sq->digit(i));
}
