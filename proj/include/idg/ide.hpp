#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "idg/hasse.hpp"

// Iterative differential equations theta(y) = A y over any element type T
// with field arithmetic and an ADL-visible theta_series(const T &, int).
namespace idg {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int n, const T &fill) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

    static Matrix identity(int n, const T &sample)
    {
        Matrix m(n, sample.zero_like());
        for (int i = 0; i < n; ++i) m(i, i) = sample.one_like();
        return m;
    }

    int size() const noexcept { return n_; }
    T &operator()(int i, int j) { return a_.at(static_cast<std::size_t>(i) * n_ + j); }
    const T &operator()(int i, int j) const { return a_.at(static_cast<std::size_t>(i) * n_ + j); }
    const std::vector<T> &entries() const noexcept { return a_; }

    bool is_zero() const
    {
        for (const auto &e : a_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    friend Matrix operator*(const Matrix &x, const Matrix &y)
    {
        if (x.n_ != y.n_) throw std::invalid_argument("Matrix: size mismatch");
        Matrix r(x.n_, x.a_.front().zero_like());
        for (int i = 0; i < x.n_; ++i) {
            for (int j = 0; j < x.n_; ++j) {
                T acc = r(i, j);
                for (int k = 0; k < x.n_; ++k) {
                    if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
                    acc += x(i, k) * y(k, j);
                }
                r(i, j) = std::move(acc);
            }
        }
        return r;
    }

    friend Matrix operator+(const Matrix &x, const Matrix &y)
    {
        if (x.n_ != y.n_) throw std::invalid_argument("Matrix: size mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    Matrix mul_int(long long v) const
    {
        Matrix r = *this;
        for (auto &e : r.a_) e = e.mul_int(v);
        return r;
    }

    friend bool operator==(const Matrix &x, const Matrix &y) { return x.n_ == y.n_ && x.a_ == y.a_; }

private:
    int n_ = 0;
    std::vector<T> a_;
};

/// Determinant by fraction-field Gaussian elimination.
template <class T>
T determinant(Matrix<T> m)
{
    const int n = m.size();
    T det = m(0, 0).one_like();
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return det.zero_like();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const T f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; throws std::domain_error for a singular matrix.
template <class T>
Matrix<T> inverse(Matrix<T> m)
{
    const int n = m.size();
    Matrix<T> r = Matrix<T>::identity(n, m(0, 0));
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("matrix is singular");
        if (piv != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(r(piv, j), r(c, j));
            }
        }
        const T inv = m(c, c).one_like() / m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * inv;
            r(c, j) = r(c, j) * inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            const T f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(c, j);
                r(i, j) = r(i, j) - f * r(c, j);
            }
        }
    }
    return r;
}

/// theta(M) entrywise: result[k] = theta^(k)(M).
template <class T>
std::vector<Matrix<T>> theta_matrix(const Matrix<T> &m, int N)
{
    const int n = m.size();
    std::vector<Matrix<T>> out(N + 1, Matrix<T>(n, m(0, 0).zero_like()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto s = theta_series(m(i, j), N);
            for (int k = 0; k <= N; ++k) out[k](i, j) = s[k];
        }
    }
    return out;
}

/// Coefficients A_0..A_N of the matrix series A of theta(y) = A y.
template <class T>
struct IdeMatrix {
    std::vector<Matrix<T>> A;

    int order() const noexcept { return static_cast<int>(A.size()) - 1; }
    int size() const { return A.front().size(); }
};

/// A = theta(Y) Y^(-1) truncated after T^N. Throws std::domain_error for singular Y.
template <class T>
IdeMatrix<T> derive_matrix(const Matrix<T> &Y, int N)
{
    if (determinant(Y).is_zero()) throw std::domain_error("derive_matrix: Y is singular");
    const Matrix<T> inv = inverse(Y);
    IdeMatrix<T> r;
    for (auto &m : theta_matrix(Y, N)) r.A.push_back(m * inv);
    return r;
}

struct IdeCheck {
    int k = 0;
    int l = 0;
    bool pass = false;
};

struct IdeReport {
    bool a0_identity = false;
    std::vector<IdeCheck> checks;

    std::size_t failures() const
    {
        std::size_t n = a0_identity ? 0 : 1;
        for (const auto &c : checks) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

/// A_0 = 1 and binom(k+l, l) A_(k+l) = sum_{i+j=l} theta^(i)(A_k) A_j for k + l <= N.
template <class T>
IdeReport verify_ide(const IdeMatrix<T> &A, int N)
{
    if (N > A.order()) throw std::invalid_argument("verify_ide: N exceeds the stored coefficients");
    IdeReport rep;
    const auto &sample = A.A.front()(0, 0);
    const int n = A.size();
    const int p = characteristic(sample);
    rep.a0_identity = A.A.front() == Matrix<T>::identity(n, sample);
    for (int k = 0; k <= N; ++k) {
        const auto th = theta_matrix(A.A[k], N - k);
        for (int l = 0; k + l <= N; ++l) {
            Matrix<T> rhs(n, sample.zero_like());
            for (int i = 0; i <= l; ++i) {
                if (th[i].is_zero() || A.A[l - i].is_zero()) continue;
                rhs = rhs + th[i] * A.A[l - i];
            }
            const auto c = lucas_binom_int(static_cast<std::uint64_t>(k + l), static_cast<std::uint64_t>(l), p);
            rep.checks.push_back(IdeCheck{k, l, A.A[k + l].mul_int(c) == rhs});
        }
    }
    return rep;
}

struct SolutionReport {
    /// theta^(k)(Y) = A_k Y, per k.
    std::vector<OrderCheck> solution;
    /// theta^(i) theta^(j)(Y_ab) = binom(i+j, i) theta^(i+j)(Y_ab) for all entries.
    std::size_t iterativity_failures = 0;
    bool ide_pass = false;

    bool solution_pass() const
    {
        for (const auto &c : solution) {
            if (!c.pass) return false;
        }
        return true;
    }
    bool iterativity_pass() const { return iterativity_failures == 0; }
    /// When Y solves the equation, A is iterative iff the entries of Y are.
    bool equivalence_holds() const { return !solution_pass() || ide_pass == iterativity_pass(); }
    bool all_pass() const { return solution_pass() && iterativity_pass() && ide_pass; }
};

template <class T>
SolutionReport verify_solution(const IdeMatrix<T> &A, const Matrix<T> &Y, int N)
{
    if (A.size() != Y.size()) throw std::invalid_argument("verify_solution: sizes differ");
    if (N > A.order()) throw std::invalid_argument("verify_solution: N exceeds the stored coefficients");
    SolutionReport rep;
    const auto th = theta_matrix(Y, N);
    for (int k = 0; k <= N; ++k) rep.solution.push_back(OrderCheck{k, th[k] == A.A[k] * Y});
    for (const auto &e : Y.entries()) rep.iterativity_failures += verify_iterativity(e, N).failures();
    rep.ide_pass = verify_ide(A, N).all_pass();
    return rep;
}

struct FrobeniusLevel {
    int level = 0;
    /// All A_k, 1 <= k <= N, vanish: the level is only bounded by N.
    bool unbounded = false;
    /// Every entry of every A_k is killed by theta^(p^i), i < level.
    bool entries_in_level = false;
};

/// Largest l with A_k = 0 whenever p^l does not divide k (1 <= k <= N). When
/// every A_k vanishes the level is capped at the least l with p^l > N.
template <class T>
FrobeniusLevel frobenius_level(const IdeMatrix<T> &A)
{
    const int N = A.order();
    const int p = characteristic(A.A.front()(0, 0));
    FrobeniusLevel r;
    int cap = 0;
    for (std::int64_t pw = 1; pw <= N; pw *= p) ++cap;
    int level = cap;
    bool any = false;
    for (int k = 1; k <= N; ++k) {
        if (A.A[k].is_zero()) continue;
        any = true;
        int v = 0;
        for (int m = k; m % p == 0; m /= p) ++v;
        level = std::min(level, v);
    }
    r.unbounded = !any;
    r.level = level;
    // membership needs theta up to p^(level-1), within the stored order
    std::int64_t top = 1;
    for (int i = 1; i < level; ++i) top *= p;
    r.entries_in_level = true;
    if (level > 0) {
        for (const auto &Ak : A.A) {
            for (const auto &e : Ak.entries()) {
                const auto s = theta_series(e, static_cast<int>(std::min<std::int64_t>(top, N)));
                for (std::int64_t q = 1; q <= top && q <= N; q *= p) r.entries_in_level &= s[q].is_zero();
            }
        }
    }
    return r;
}

} // namespace idg

#include "idg/tower.hpp"

namespace idg {

/// The p^l-th-root equation in F_[l]: Y' = Y^(p^-l) entrywise and
/// A'_m = (A_(p^l m))^(p^-l), for A with frobenius level >= l and Y with
/// entries in F_l. Throws std::domain_error when an entry has no p^l-th root.
struct FrobeniusPullback {
    IdeMatrix<MonoElem> A;
    Matrix<MonoElem> Y;
};
FrobeniusPullback frobenius_pullback(const IdeMatrix<MonoElem> &A, const Matrix<MonoElem> &Y, const TowerLevel &tower);

} // namespace idg
