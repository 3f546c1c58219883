#include "idg/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "idg/hasse.hpp"

namespace idg {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m)
{
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

int index_weight(const TensorElem::Index &J)
{
    int s = 0;
    for (int j : J) s += j;
    return s;
}

void require_same(const TensorElem &a, const TensorElem &b)
{
    if (a.alg() != b.alg() || a.factors() != b.factors()) {
        throw std::invalid_argument("tensor elements from different algebras");
    }
}

} // namespace

// ------------------------------------------------------------ TensorElem

TensorElem::TensorElem(TensorPtr alg, int factors) : alg_(std::move(alg)), factors_(factors)
{
    if (factors < 1) throw std::invalid_argument("TensorElem: need at least one factor");
}

void TensorElem::add_term(const Index &J, const MonoElem &c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(J);
    if (it == terms_.end()) {
        terms_.emplace(J, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElem TensorElem::monomial(const TensorPtr &alg, int factors, const MonoElem &c, Index J)
{
    if (static_cast<int>(J.size()) != factors - 1) throw std::invalid_argument("TensorElem: index length mismatch");
    TensorElem r(alg, factors);
    MonoElem coeff = c;
    for (int &j : J) {
        const std::int64_t q = (j - floor_mod(j, alg->rank())) / alg->rank();
        j = static_cast<int>(floor_mod(j, alg->rank()));
        if (q != 0) coeff *= alg->s().pow(q);
    }
    r.add_term(J, coeff);
    return r;
}

TensorElem TensorElem::one(const TensorPtr &alg, int factors)
{
    return monomial(alg, factors, MonoElem::one(alg->ring()), Index(factors - 1, 0));
}

TensorElem operator+(const TensorElem &a, const TensorElem &b)
{
    require_same(a, b);
    TensorElem r = a;
    for (const auto &[J, c] : b.terms_) r.add_term(J, c);
    return r;
}

TensorElem TensorElem::operator-() const
{
    TensorElem r(alg_, factors_);
    for (const auto &[J, c] : terms_) r.terms_.emplace(J, -c);
    return r;
}

TensorElem operator-(const TensorElem &a, const TensorElem &b) { return a + (-b); }

TensorElem operator*(const TensorElem &a, const TensorElem &b)
{
    require_same(a, b);
    TensorElem r(a.alg_, a.factors_);
    for (const auto &[J, c] : a.terms_) {
        for (const auto &[K, d] : b.terms_) {
            TensorElem::Index L(J.size());
            for (std::size_t i = 0; i < J.size(); ++i) L[i] = J[i] + K[i];
            r = r + TensorElem::monomial(a.alg_, a.factors_, c * d, L);
        }
    }
    return r;
}

TensorElem TensorElem::mul_scalar(GaloisField::Elem c) const
{
    TensorElem r(alg_, factors_);
    for (const auto &[J, x] : terms_) r.add_term(J, x.mul_scalar(c));
    return r;
}

TensorElem TensorElem::pow(long long e) const
{
    if (e < 0) throw std::invalid_argument("TensorElem::pow: negative exponent");
    TensorElem r = one_like(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const TensorElem &a, const TensorElem &b)
{
    return a.alg_ == b.alg_ && a.factors_ == b.factors_ && a.terms_ == b.terms_;
}

TensorElem TensorElem::theta(std::uint64_t n) const
{
    // theta^(b)(v^J) = binom(|J| gamma, b) t^(-b) v^J, so v^J differentiates
    // like u^|J| in the first factor.
    TensorElem r(alg_, factors_);
    const MonoElem u = alg_->u();
    for (const auto &[J, c] : terms_) {
        const int w = index_weight(J);
        r.add_term(J, theta_coeff(c * u.pow(w), n) * u.pow(-w));
    }
    return r;
}

TensorElem TensorElem::insert_unit(int pos) const
{
    if (pos < 0 || pos >= factors_) throw std::invalid_argument("insert_unit: position out of range");
    TensorElem r(alg_, factors_ + 1);
    for (const auto &[J, c] : terms_) {
        Index K = J;
        K.insert(K.begin() + pos, 0);
        r.terms_.emplace(std::move(K), c);
    }
    return r;
}

// ------------------------------------------------------------ TensorAlg

TensorAlg::TensorAlg(const CtxPtr &base, int level) : tower_(base, level)
{
    rank_ = ipow(base->p(), level);
    s_ = MonoElem::param(ring()).pow(rank_);
}

TensorPtr TensorAlg::make(const CtxPtr &base, int level)
{
    if (!base->has_param()) throw std::invalid_argument("tensor algebra needs a field with a parameter");
    return TensorPtr(new TensorAlg(base, level));
}

TensorPtr tensor_square(const CtxPtr &base, int level) { return TensorAlg::make(base, level); }

MonoElem TensorAlg::u() const { return MonoElem::param(ring()); }

TensorElem TensorAlg::v() const
{
    return TensorElem::monomial(shared_from_this(), 2, MonoElem::one(ring()), {1});
}

TensorElem TensorAlg::w() const { return TensorElem::monomial(shared_from_this(), 2, u().inverse(), {1}); }

std::vector<MonoElem> TensorAlg::decompose(const MonoElem &c) const
{
    const CtxPtr &R = ring();
    const GaloisField &F = R->gf();
    std::vector<MonoElem> out(static_cast<std::size_t>(rank_), MonoElem::zero(R));
    if (c.is_zero()) return out;
    // c = N D^(P-1) / D^P and D^P only has exponents divisible by P.
    const int P = static_cast<int>(rank_);
    const MonoElem num = MonoElem::from_parts(R, c.shift_t(), c.shift_x(),
                                              poly::mul(F, c.num(), poly::pow(F, c.den(), P - 1)), poly::constant(1));
    const MonoElem den = MonoElem::from_parts(R, 0, 0, poly::pow(F, c.den(), P), poly::constant(1));
    std::vector<std::vector<Term>> parts(out.size());
    for (Term tm : num.numerator_terms()) {
        const auto m = floor_mod(tm.b, rank_);
        tm.b -= m;
        parts[static_cast<std::size_t>(m)].push_back(tm);
    }
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (!parts[m].empty()) out[m] = MonoElem::from_terms(R, parts[m], {Term{0, 0, 1}}) / den;
    }
    return out;
}

TensorElem TensorAlg::product_map(const TensorElem &x, const TensorElem &y) const
{
    if (x.factors() != 2 || y.factors() != 2) throw std::invalid_argument("product_map: expects 2-fold elements");
    const auto self = shared_from_this();
    TensorElem r(self, 3);
    for (const auto &[K, c] : y.terms()) {
        const auto parts = decompose(c);
        for (const auto &[J, a] : x.terms()) {
            for (std::size_t m = 0; m < parts.size(); ++m) {
                if (parts[m].is_zero()) continue;
                r = r + TensorElem::monomial(self, 3, a * parts[m], {J[0] + static_cast<int>(m), K[0]});
            }
        }
    }
    return r;
}

// ------------------------------------------------------------ linear algebra over F_q

namespace {

using RowKey = std::vector<std::int64_t>;
using SparseVec = std::map<RowKey, GaloisField::Elem>;
using Combination = std::map<std::size_t, GaloisField::Elem>;

std::vector<SparseVec> flatten(const std::vector<SlotVector> &columns)
{
    // Common denominator per slot, then expand numerators into monomials.
    std::map<RowKey, MonoElem> denom;
    for (const auto &col : columns) {
        for (const auto &[slot, v] : col.entries) {
            if (v.is_zero()) continue;
            const CtxPtr &ctx = v.ctx();
            const MonoElem d = MonoElem::from_parts(ctx, 0, 0, v.den(), poly::constant(1));
            auto it = denom.find(slot);
            if (it == denom.end()) {
                denom.emplace(slot, d);
            } else {
                const GaloisField &F = ctx->gf();
                const poly::Poly2 g = poly::gcd(F, it->second.num(), d.num());
                it->second = MonoElem::from_parts(ctx, 0, 0, poly::mul(F, it->second.num(), poly::div_exact(F, d.num(), g)),
                                                  poly::constant(1));
            }
        }
    }
    std::vector<SparseVec> out;
    out.reserve(columns.size());
    for (const auto &col : columns) {
        SparseVec vec;
        for (const auto &[slot, v] : col.entries) {
            if (v.is_zero()) continue;
            const GaloisField &F = v.ctx()->gf();
            const MonoElem cleared = v * denom.at(slot);
            if (!cleared.has_unit_denominator()) throw std::logic_error("flatten: denominator not cleared");
            for (const Term &tm : cleared.numerator_terms()) {
                RowKey key = slot;
                key.push_back(tm.a);
                key.push_back(tm.b);
                auto &e = vec[key];
                e = F.add(e, tm.c);
                if (e == 0) vec.erase(key);
            }
        }
        out.push_back(std::move(vec));
    }
    return out;
}

// vec -= c * pivot
void axpy(const GaloisField &F, SparseVec &vec, GaloisField::Elem c, const SparseVec &pivot)
{
    for (const auto &[k, e] : pivot) {
        auto &x = vec[k];
        x = F.sub(x, F.mul(c, e));
        if (x == 0) vec.erase(k);
    }
}

void axpy(const GaloisField &F, Combination &vec, GaloisField::Elem c, const Combination &pivot)
{
    for (const auto &[k, e] : pivot) {
        auto &x = vec[k];
        x = F.sub(x, F.mul(c, e));
        if (x == 0) vec.erase(k);
    }
}

struct Elimination {
    std::vector<Combination> kernel;
    std::size_t rank = 0;
};

Elimination eliminate(const GaloisField &F, const std::vector<SlotVector> &columns)
{
    const auto cols = flatten(columns);
    // Pivot vectors are normalized to 1 at their smallest key, so subtracting
    // one only touches keys at or after the pivot.
    std::map<RowKey, std::pair<SparseVec, Combination>> pivots;
    Elimination out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        SparseVec vec = cols[j];
        Combination comb{{j, 1}};
        auto it = vec.begin();
        while (it != vec.end()) {
            auto pv = pivots.find(it->first);
            if (pv == pivots.end()) {
                ++it;
                continue;
            }
            const RowKey key = it->first;
            const auto c = it->second;
            axpy(F, vec, c, pv->second.first);
            axpy(F, comb, c, pv->second.second);
            it = vec.upper_bound(key);
        }
        if (vec.empty()) {
            out.kernel.push_back(std::move(comb));
            continue;
        }
        const auto inv = F.inv(vec.begin()->second);
        for (auto &[k, e] : vec) e = F.mul(e, inv);
        for (auto &[k, e] : comb) e = F.mul(e, inv);
        const RowKey key = vec.begin()->first;
        pivots.emplace(key, std::make_pair(std::move(vec), std::move(comb)));
        ++out.rank;
    }
    return out;
}

SlotVector slots_of(const TensorElem &x, std::int64_t tag = 0)
{
    SlotVector sv;
    for (const auto &[J, c] : x.terms()) {
        RowKey key{tag};
        key.insert(key.end(), J.begin(), J.end());
        sv.entries.emplace_back(std::move(key), c);
    }
    return sv;
}

} // namespace

std::vector<std::vector<GaloisField::Elem>> fq_kernel(const GaloisField &F, const std::vector<SlotVector> &columns)
{
    std::vector<std::vector<GaloisField::Elem>> out;
    for (const auto &comb : eliminate(F, columns).kernel) {
        std::vector<GaloisField::Elem> v(columns.size(), 0);
        for (const auto &[j, c] : comb) v[j] = c;
        out.push_back(std::move(v));
    }
    return out;
}

int fq_rank(const GaloisField &F, const std::vector<SlotVector> &columns)
{
    return static_cast<int>(eliminate(F, columns).rank);
}

// ------------------------------------------------------------ group-likes

GrouplikeReport grouplike_verify(const CtxPtr &base, int level, int N)
{
    const auto alg = TensorAlg::make(base, level);
    const GaloisField &F = base->gf();
    GrouplikeReport rep;
    rep.level = level;
    rep.order = alg->rank();
    rep.w = alg->w();
    const TensorElem &w = rep.w;

    int bad_order = 0;
    for (int n = 1; n <= N; ++n) {
        if (!w.theta(static_cast<std::uint64_t>(n)).is_zero()) {
            bad_order = n;
            break;
        }
    }
    rep.checks.push_back({"constant", bad_order == 0,
                          bad_order == 0 ? "theta^(n)(w) = 0 for 1 <= n <= " + std::to_string(N)
                                         : "theta^(" + std::to_string(bad_order) + ")(w) != 0"});

    const bool root = w.pow(rep.order) == w.one_like();
    const bool primitive = level == 0 || w.pow(rep.order / base->p()) != w.one_like();
    rep.checks.push_back({"order", root && primitive,
                          "w^" + std::to_string(rep.order) + (root ? " = 1" : " != 1") +
                              (level == 0 ? std::string() : primitive ? ", lower power != 1" : ", lower power = 1")});

    const TensorElem dw = alg->comultiply(w);
    rep.checks.push_back({"comultiplication", dw == alg->product_map(w, w), "Delta(w) = w (x) w"});
    rep.checks.push_back({"coassociativity", dw.insert_unit(0) == dw.insert_unit(1),
                          "(Delta (x) id) Delta(w) = (id (x) Delta) Delta(w)"});

    std::vector<TensorElem> powers{w.one_like()};
    for (std::int64_t j = 1; j < rep.order; ++j) powers.push_back(powers.back() * w);
    std::vector<SlotVector> cols;
    for (const auto &x : powers) cols.push_back(slots_of(x));
    const int rank = fq_rank(F, cols);
    rep.checks.push_back({"independence", rank == rep.order,
                          "rank of w^0..w^" + std::to_string(rep.order - 1) + " over F_q is " + std::to_string(rank)});

    bool closed = true;
    for (std::size_t i = 0; i < powers.size() && closed; ++i) {
        for (std::size_t j = 0; j < powers.size() && closed; ++j) {
            closed = powers[i] * powers[j] == powers[(i + j) % powers.size()];
        }
    }
    rep.checks.push_back({"closure", closed, "w^i w^j = w^((i+j) mod " + std::to_string(rep.order) + ")"});
    return rep;
}

// ------------------------------------------------------------ constants

Window default_window(int p, int level)
{
    const int pl = static_cast<int>(ipow(p, level));
    return Window{2 * pl, pl};
}

ConstantsReport constants_search(const TensorPtr &alg, const Window &window, int N)
{
    const CtxPtr &R = alg->ring();
    const GaloisField &F = R->gf();
    const int p = R->p();
    ConstantsReport rep;
    rep.window = window;
    rep.orders = R->session().budget();
    rep.exact = R->session().param()->declared_irrational();

    std::vector<TensorElem> unknowns;
    for (int j = 0; j < alg->rank(); ++j) {
        for (int a = -window.a_max; a <= window.a_max; ++a) {
            for (int b = -window.b_max; b <= window.b_max; ++b) {
                unknowns.push_back(TensorElem::monomial(alg, 2, MonoElem::monomial(R, 1, a, b), {j}));
            }
        }
    }
    std::vector<SlotVector> cols;
    cols.reserve(unknowns.size());
    for (const auto &x : unknowns) {
        SlotVector sv;
        std::uint64_t n = 1;
        for (int i = 0; i < rep.orders; ++i, n *= static_cast<std::uint64_t>(p)) {
            auto part = slots_of(x.theta(n), i);
            sv.entries.insert(sv.entries.end(), part.entries.begin(), part.entries.end());
        }
        cols.push_back(std::move(sv));
    }
    for (const auto &v : fq_kernel(F, cols)) {
        TensorElem c(alg, 2);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) c = c + unknowns[j].mul_scalar(v[j]);
        }
        rep.basis.push_back(std::move(c));
    }
    rep.verified = true;
    for (const auto &c : rep.basis) {
        for (int n = 1; n <= N && rep.verified; ++n) rep.verified = c.theta(static_cast<std::uint64_t>(n)).is_zero();
    }
    return rep;
}

// ------------------------------------------------------------ product realization

ProductReport product_realization(const CtxPtr &base, int level, const MonoElem &f, int N)
{
    if (f.ctx() != base) throw std::invalid_argument("product_realization: f is not from the base field");
    const int p = base->p();
    ProductReport rep;
    rep.level = level;

    const auto alg = TensorAlg::make(base, level);
    const auto g = grouplike_verify(base, level, N);
    rep.grouplike_count = g.all_pass() ? g.order : 0;
    rep.checks.push_back({"grouplikes", g.all_pass(),
                          "w = u^(-1) v generates " + std::to_string(g.order) +
                              " group-likes; group-likes are independent so there are no others"});

    const std::int64_t bracket_degree = lattice_index(field_lattice(*base), alg->tower().bracket_lattice());
    ExtPtr ext;
    try {
        ext = artin_schreier(alg->tower().embed(f));
    } catch (const std::invalid_argument &e) {
        rep.checks.push_back({"field", false, e.what()});
        rep.conclusion = "not a field with the available certificate";
        return rep;
    }
    rep.dimension = bracket_degree * ext->degree();
    rep.checks.push_back({"dimension", rep.dimension == ipow(p, level) * p,
                          "[F_[l] : F] = " + std::to_string(bracket_degree) + ", [E'' : F] = " +
                              std::to_string(ext->degree())});

    for (const auto &sigma : artin_schreier_automorphisms(ext)) rep.id_automorphisms += verify_id_automorphism(sigma, N);
    rep.checks.push_back({"id-automorphisms", rep.id_automorphisms == p,
                          std::to_string(rep.id_automorphisms) + " automorphisms y -> y + j commute with theta"});

    // constants t^a u^b y^i with |a| <= 2, |b| <= 1
    const CtxPtr &R = alg->ring();
    std::vector<ExtElem> unknowns;
    const ExtElem y = ExtElem::gen(ext);
    for (int i = 0; i < ext->degree(); ++i) {
        for (int a = -2; a <= 2; ++a) {
            for (int b = -1; b <= 1; ++b) unknowns.push_back(y.pow(i).mul_base(MonoElem::monomial(R, 1, a, b)));
        }
    }
    std::vector<SlotVector> cols;
    for (const auto &x : unknowns) {
        const auto ts = theta_series(x, N);
        SlotVector sv;
        for (int n = 1; n <= N; ++n) {
            for (std::size_t i = 0; i < ts[n].coords().size(); ++i) {
                sv.entries.push_back({{n, static_cast<std::int64_t>(i)}, ts[n][i]});
            }
        }
        cols.push_back(std::move(sv));
    }
    const auto kernel = fq_kernel(R->gf(), cols);
    rep.constants_dimension = static_cast<int>(kernel.size());
    bool only_scalars = kernel.size() == 1;
    if (only_scalars) {
        ExtElem c = y.zero_like();
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            if (kernel[0][j] != 0) c += unknowns[j].mul_base(MonoElem::constant(R, kernel[0][j]));
        }
        only_scalars = c.in_base() && c[0].is_constant();
    }
    rep.checks.push_back({"constants", only_scalars,
                          "constants in the window |a| <= 2, |b| <= 1 span a space of dimension " +
                              std::to_string(rep.constants_dimension) + " over F_q"});

    bool towers = true;
    for (int k = 0; k <= level; ++k) {
        const auto gk = grouplike_verify(base, k, N);
        towers &= gk.all_pass();
        rep.subtower_orders.push_back(gk.order);
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < rep.subtower_orders.size(); ++k) {
        os << (k ? ", " : "") << "mu_" << rep.subtower_orders[k];
    }
    rep.checks.push_back({"subtowers", towers, "levels 0.." + std::to_string(level) + " give " + os.str()});

    const std::string group = "mu_" + std::to_string(g.order) + " x Z/" + std::to_string(p);
    rep.conclusion = rep.all_pass() ? "consistent with " + group : "not consistent with " + group;
    return rep;
}

} // namespace idg
