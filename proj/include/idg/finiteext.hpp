#pragma once

#include <memory>
#include <string>
#include <vector>

#include "idg/hasse.hpp"
#include "idg/ide.hpp"

namespace idg {

class FiniteExt;
using ExtPtr = std::shared_ptr<const FiniteExt>;

/// Element c_0 + c_1 y + ... + c_(d-1) y^(d-1) of E = F[y]/(m).
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(ExtPtr ext, std::vector<MonoElem> coords);

    static ExtElem zero(const ExtPtr &ext);
    static ExtElem one(const ExtPtr &ext);
    static ExtElem gen(const ExtPtr &ext);
    static ExtElem from_base(const ExtPtr &ext, const MonoElem &c);

    const ExtPtr &ext() const noexcept { return ext_; }
    const std::vector<MonoElem> &coords() const noexcept { return c_; }
    const MonoElem &operator[](std::size_t i) const { return c_.at(i); }

    bool is_zero() const;
    /// True when the element lies in the base field (no y-component).
    bool in_base() const;

    ExtElem zero_like() const { return zero(ext_); }
    ExtElem one_like() const { return one(ext_); }

    ExtElem operator-() const;
    friend ExtElem operator+(const ExtElem &a, const ExtElem &b);
    friend ExtElem operator-(const ExtElem &a, const ExtElem &b);
    friend ExtElem operator*(const ExtElem &a, const ExtElem &b);
    friend ExtElem operator/(const ExtElem &a, const ExtElem &b);
    ExtElem &operator+=(const ExtElem &b) { return *this = *this + b; }
    ExtElem mul_base(const MonoElem &c) const;
    ExtElem mul_int(long long v) const;
    ExtElem inverse() const;
    ExtElem pow(long long e) const;
    friend bool operator==(const ExtElem &a, const ExtElem &b);
    friend bool operator!=(const ExtElem &a, const ExtElem &b) { return !(a == b); }

private:
    ExtPtr ext_;
    std::vector<MonoElem> c_;
};

/// Polynomials over the base field, lowest degree first, kept trimmed.
using BasePoly = std::vector<MonoElem>;

/// E = F[y]/(m) for a monic separable m, together with the unique extension
/// of theta to E, materialized up to the base truncation order.
class FiniteExt : public std::enable_shared_from_this<FiniteExt> {
public:
    /// Throws std::invalid_argument for non-monic, inseparable or
    /// constant-coefficient m ("no unique extension" when m' is not a unit).
    static ExtPtr make(CtxPtr base, BasePoly m);

    const CtxPtr &base() const noexcept { return base_; }
    const BasePoly &minpoly() const noexcept { return m_; }
    int degree() const noexcept { return static_cast<int>(m_.size()) - 1; }
    int order() const noexcept { return base_->order(); }

    /// theta^(n)(y) for n <= order.
    ExtElem theta_y(int n) const;
    /// theta^(n)(y^i), i < degree.
    ExtElem theta_y_power(int i, int n) const;

    // Coordinate arithmetic, exposed for ExtElem.
    std::vector<MonoElem> reduce(BasePoly a) const;
    std::vector<MonoElem> mul_coords(const std::vector<MonoElem> &a, const std::vector<MonoElem> &b) const;

private:
    FiniteExt(CtxPtr base, BasePoly m) : base_(std::move(base)), m_(std::move(m)) {}
    void materialize();

    CtxPtr base_;
    BasePoly m_;
    // powers_[i][n] = coordinates of theta^(n)(y^i)
    std::vector<std::vector<std::vector<MonoElem>>> powers_;
    // gen_[n] = coordinates of theta^(n)(y)
    std::vector<std::vector<MonoElem>> gen_;
};

TruncSeries<ExtElem> theta_series(const ExtElem &x, int N);
inline int characteristic(const ExtElem &x) { return x.ext()->base()->p(); }

/// theta(y) = y + sum d_n T^n of the generator, solved order by order from m(theta(y)) = 0.
TruncSeries<ExtElem> extend_derivation(const ExtPtr &ext, int N);

/// m(theta(y)) = 0 mod T^(N+1), by substitution.
bool check_minpoly_substitution(const ExtPtr &ext, int N);

/// A base-field automorphism of E, given by the image of y.
class ExtAutomorphism {
public:
    /// Throws std::invalid_argument unless m(image) = 0.
    explicit ExtAutomorphism(ExtElem image);
    const ExtElem &image() const noexcept { return image_; }
    ExtElem operator()(const ExtElem &e) const;

private:
    ExtElem image_;
};

/// sigma(theta^(n)(y)) = theta^(n)(sigma(y)) for n <= N.
bool verify_id_automorphism(const ExtAutomorphism &sigma, int N);

struct DedekindReport {
    bool det_nonzero = false;
    bool solution = false;
    bool ide = false;
    bool base_entries = false;
    bool count_matches_degree = false;
    bool all_id_automorphisms = false;

    bool all_pass() const
    {
        return det_nonzero && solution && ide && base_entries && count_matches_degree && all_id_automorphisms;
    }
};

struct DedekindSolution {
    Matrix<ExtElem> Y;
    IdeMatrix<ExtElem> A;
    ExtElem det;
    DedekindReport report;
};

/// Y(i, k) = sigma_k(y^i) and A = theta(Y) Y^(-1). Throws std::invalid_argument
/// when the number of automorphisms differs from the degree or two coincide.
DedekindSolution dedekind_solution(const ExtPtr &ext, const std::vector<ExtAutomorphism> &autos, int N);

/// Lexicographic monomial valuation v(t^a x^b) = -(a, b) of a nonzero element.
std::pair<std::int64_t, std::int64_t> lex_valuation(const MonoElem &f);

/// y^p - y - f; f must have negative valuation outside pZ^2 so that the
/// extension is geometric. Automorphisms y -> y + j, j in F_p.
ExtPtr artin_schreier(const MonoElem &f);
std::vector<ExtAutomorphism> artin_schreier_automorphisms(const ExtPtr &ext);

/// y^d - f with d | q - 1, p not dividing d, and v(f) outside l Z^2 for every
/// prime l | d. Automorphisms y -> zeta^j y.
ExtPtr kummer(const MonoElem &f, int d);
std::vector<ExtAutomorphism> kummer_automorphisms(const ExtPtr &ext);

} // namespace idg
