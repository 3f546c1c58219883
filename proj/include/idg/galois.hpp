#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "idg/finiteext.hpp"
#include "idg/tower.hpp"

namespace idg {

class TensorAlg;
using TensorPtr = std::shared_ptr<const TensorAlg>;

/// An element of the r-fold tensor power F_[l] (x)_F ... (x)_F F_[l], written
/// as sum c_J v_2^(j_2) ... v_r^(j_r) with c_J in the first factor F_[l],
/// v_i = 1 (x) .. (x) u (x) .. (x) 1 in position i and 0 <= j_i < p^l.
class TensorElem {
public:
    using Index = std::vector<int>;

    TensorElem() = default;
    TensorElem(TensorPtr alg, int factors);

    const TensorPtr &alg() const noexcept { return alg_; }
    int factors() const noexcept { return factors_; }
    const std::map<Index, MonoElem> &terms() const noexcept { return terms_; }

    /// c v^J; exponents are reduced with v_i^(p^l) = s.
    static TensorElem monomial(const TensorPtr &alg, int factors, const MonoElem &c, Index J);
    static TensorElem one(const TensorPtr &alg, int factors);

    bool is_zero() const noexcept { return terms_.empty(); }
    TensorElem zero_like() const { return TensorElem(alg_, factors_); }
    TensorElem one_like() const { return one(alg_, factors_); }

    friend TensorElem operator+(const TensorElem &a, const TensorElem &b);
    friend TensorElem operator-(const TensorElem &a, const TensorElem &b);
    friend TensorElem operator*(const TensorElem &a, const TensorElem &b);
    TensorElem operator-() const;
    TensorElem mul_scalar(GaloisField::Elem c) const;
    TensorElem pow(long long e) const;
    friend bool operator==(const TensorElem &a, const TensorElem &b);
    friend bool operator!=(const TensorElem &a, const TensorElem &b) { return !(a == b); }

    /// theta^(n) by the tensor rule; unbounded n for Laurent coefficients.
    TensorElem theta(std::uint64_t n) const;

    /// Inserts a unit factor after position pos (0-based factor index):
    /// a (x) b -> a (x) 1 (x) b for pos = 0 on a 2-fold element.
    TensorElem insert_unit(int pos) const;

private:
    void add_term(const Index &J, const MonoElem &c);

    TensorPtr alg_;
    int factors_ = 1;
    std::map<Index, MonoElem> terms_;
};

/// F_[l] (x)_F F_[l] and its higher tensor powers, for a field F = F_q(t, x).
class TensorAlg : public std::enable_shared_from_this<TensorAlg> {
public:
    static TensorPtr make(const CtxPtr &base, int level);

    const TowerLevel &tower() const noexcept { return tower_; }
    const CtxPtr &ring() const noexcept { return tower_.bracket(); }
    int level() const noexcept { return tower_.level(); }
    /// p^l, the dimension of F_[l] over F.
    std::int64_t rank() const noexcept { return rank_; }
    /// s = u^(p^l) = x t^(-alpha_l), an element of F.
    const MonoElem &s() const noexcept { return s_; }

    /// u as an element of the first factor.
    MonoElem u() const;
    /// v = 1 (x) u in the 2-fold algebra.
    TensorElem v() const;
    /// w = u^(-1) v.
    TensorElem w() const;

    /// c = sum_m f_m u^m with f_m in F (returned as elements of F_[l]).
    std::vector<MonoElem> decompose(const MonoElem &c) const;
    /// (a (x) b) (x) (c (x) d) -> a (x) bc (x) d for 2-fold a, b.
    TensorElem product_map(const TensorElem &x, const TensorElem &y) const;
    /// Delta(a (x) b) = a (x) 1 (x) b.
    TensorElem comultiply(const TensorElem &x) const { return x.insert_unit(0); }

private:
    TensorAlg(const CtxPtr &base, int level);

    TowerLevel tower_;
    std::int64_t rank_ = 1;
    MonoElem s_;
};

TensorPtr tensor_square(const CtxPtr &base, int level);

struct Check {
    std::string name;
    bool pass = false;
    std::string details;
};

struct GrouplikeReport {
    int level = 0;
    std::int64_t order = 1;
    TensorElem w;
    std::vector<Check> checks;

    bool all_pass() const
    {
        for (const auto &c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Verifies w = u^(-1) v: constant to order N, w^(p^l) = 1 and w^(p^(l-1)) != 1,
/// Delta(w) = w (x) w, coassociativity, independence of the powers over F_q
/// and closure of the powers under multiplication.
GrouplikeReport grouplike_verify(const CtxPtr &base, int level, int N);

/// Monomials t^a u^b with |a| <= a_max, |b| <= b_max.
struct Window {
    int a_max = 0;
    int b_max = 0;
};
Window default_window(int p, int level);

struct ConstantsReport {
    Window window;
    /// theta^(p^i) is imposed for i < orders (the digit budget).
    int orders = 0;
    std::vector<TensorElem> basis;
    /// Every basis element was re-checked to be killed by theta^(n), 1 <= n <= N.
    bool verified = false;
    /// The digit stream of the parameter is declared irrational; otherwise
    /// the search only gives a bound.
    bool exact = false;
};

/// Solves theta^(p^i)(sum c_J v^J) = 0 over F_q for c_J in the window.
ConstantsReport constants_search(const TensorPtr &alg, const Window &window, int N);

struct ProductReport {
    int level = 0;
    std::int64_t dimension = 0;
    std::int64_t grouplike_count = 0;
    std::int64_t id_automorphisms = 0;
    int constants_dimension = 0;
    std::vector<std::int64_t> subtower_orders;
    std::vector<Check> checks;
    std::string conclusion;

    bool all_pass() const
    {
        for (const auto &c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// E' (x)_F E'' for E' = F_[l] and E'' = F[y]/(y^p - y - f).
ProductReport product_realization(const CtxPtr &base, int level, const MonoElem &f, int N);

/// F_q-rank of a list of elements of a common vector space, given as
/// (slot, value) pairs; values sharing a slot are compared after clearing
/// denominators. Exposed for tests.
struct SlotVector {
    std::vector<std::pair<std::vector<std::int64_t>, MonoElem>> entries;
};
/// Kernel of the F_q-linear map e_j -> columns[j], as coefficient vectors.
std::vector<std::vector<GaloisField::Elem>> fq_kernel(const GaloisField &F, const std::vector<SlotVector> &columns);
int fq_rank(const GaloisField &F, const std::vector<SlotVector> &columns);

} // namespace idg
