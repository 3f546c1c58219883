#include "idg/finiteext.hpp"

#include <stdexcept>

namespace idg {

namespace {

void trim(BasePoly &a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

BasePoly sub(const BasePoly &a, const BasePoly &b)
{
    BasePoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), b.front().zero_like());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    trim(r);
    return r;
}

BasePoly mul(const BasePoly &a, const BasePoly &b)
{
    if (a.empty() || b.empty()) return {};
    BasePoly r(a.size() + b.size() - 1, a.front().zero_like());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

std::pair<BasePoly, BasePoly> divmod(BasePoly a, const BasePoly &b)
{
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    const MonoElem inv = b.back().inverse();
    BasePoly q(a.size() - b.size() + 1, b.front().zero_like());
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const MonoElem c = a.back() * inv;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

// g = s a + u b with g monic (or zero).
struct Bezout {
    BasePoly g, s;
};

Bezout gcd_ext(BasePoly a, BasePoly b, const MonoElem &one)
{
    BasePoly s0{one}, s1;
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        BasePoly s2 = sub(s0, mul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!a.empty()) {
        const MonoElem inv = a.back().inverse();
        for (auto &c : a) c = c * inv;
        for (auto &c : s0) c = c * inv;
    }
    return {a, s0};
}

BasePoly derivative(const BasePoly &m)
{
    BasePoly r;
    for (std::size_t i = 1; i < m.size(); ++i) r.push_back(m[i].mul_int(static_cast<long long>(i)));
    trim(r);
    return r;
}

} // namespace

// ---------------------------------------------------------------- FiniteExt

ExtPtr FiniteExt::make(CtxPtr base, BasePoly m)
{
    trim(m);
    if (m.size() < 2) throw std::invalid_argument("FiniteExt: minimal polynomial must have degree >= 1");
    for (const auto &c : m) {
        if (c.ctx() != base) throw std::invalid_argument("FiniteExt: coefficient from a different field");
    }
    if (!m.back().is_one()) throw std::invalid_argument("FiniteExt: minimal polynomial must be monic");
    if (m.size() > 2) {
        bool all_constant = true;
        for (const auto &c : m) all_constant &= c.is_constant();
        if (all_constant) {
            throw std::invalid_argument("FiniteExt: constant coefficients give a constant field extension (not geometric)");
        }
    }
    const BasePoly dm = derivative(m);
    if (dm.empty() || gcd_ext(m, dm, MonoElem::one(base)).g.size() != 1) {
        throw std::invalid_argument("FiniteExt: m is inseparable (m'(y) is not a unit), no unique extension of theta");
    }
    std::shared_ptr<FiniteExt> e(new FiniteExt(std::move(base), std::move(m)));
    e->materialize();
    return e;
}

std::vector<MonoElem> FiniteExt::reduce(BasePoly a) const
{
    const std::size_t d = static_cast<std::size_t>(degree());
    const MonoElem zero = MonoElem::zero(base_);
    for (std::size_t k = a.size(); k-- > d;) {
        if (a[k].is_zero()) continue;
        const MonoElem c = a[k];
        for (std::size_t i = 0; i <= d; ++i) a[k - d + i] = a[k - d + i] - c * m_[i];
    }
    a.resize(d, zero);
    return a;
}

std::vector<MonoElem> FiniteExt::mul_coords(const std::vector<MonoElem> &a, const std::vector<MonoElem> &b) const
{
    BasePoly r(a.size() + b.size() - 1, MonoElem::zero(base_));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(r));
}

void FiniteExt::materialize()
{
    const ExtPtr self = shared_from_this();
    const int N = order();
    const int d = degree();
    const ExtElem y = ExtElem::gen(self);
    const ExtElem zero = ExtElem::zero(self);

    std::vector<TruncSeries<MonoElem>> tm;
    for (const auto &c : m_) tm.push_back(theta_series(c, N));

    ExtElem mprime = zero;
    for (int i = 1; i <= d; ++i) mprime += y.pow(i - 1).mul_base(m_[i].mul_int(i));
    const ExtElem mprime_inv = mprime.inverse();

    // P[i][n] = [S^i]_n for S = theta(y); S_n is solved from [m(S)]_n = 0
    // which is linear in S_n with coefficient m'(y).
    std::vector<ExtElem> S{y};
    std::vector<std::vector<ExtElem>> P(d + 1);
    for (int i = 0; i <= d; ++i) P[i].push_back(y.pow(i));
    for (int n = 1; n <= N; ++n) {
        P[0].push_back(zero);
        for (int i = 1; i <= d; ++i) {
            ExtElem acc = P[i - 1][n] * S[0];
            for (int j = 1; j < n; ++j) acc += P[i - 1][n - j] * S[j];
            P[i].push_back(acc);
        }
        ExtElem rest = zero;
        for (int i = 0; i <= d; ++i) {
            for (int k = 0; k <= n; ++k) {
                if (tm[i][k].is_zero() || P[i][n - k].is_zero()) continue;
                rest += P[i][n - k].mul_base(tm[i][k]);
            }
        }
        const ExtElem dn = -(rest * mprime_inv);
        S.push_back(dn);
        for (int i = 1; i <= d; ++i) P[i][n] += (y.pow(i - 1) * dn).mul_int(i);
    }
    for (const auto &e : S) gen_.push_back(e.coords());
    powers_.assign(d, {});
    for (int i = 0; i < d; ++i) {
        for (int n = 0; n <= N; ++n) powers_[i].push_back(P[i][n].coords());
    }
}

ExtElem FiniteExt::theta_y(int n) const { return ExtElem(shared_from_this(), gen_.at(n)); }

ExtElem FiniteExt::theta_y_power(int i, int n) const { return ExtElem(shared_from_this(), powers_.at(i).at(n)); }

// ---------------------------------------------------------------- ExtElem

ExtElem::ExtElem(ExtPtr ext, std::vector<MonoElem> coords) : ext_(std::move(ext)), c_(std::move(coords))
{
    if (!ext_) throw std::invalid_argument("ExtElem: null extension");
    const auto d = static_cast<std::size_t>(ext_->degree());
    if (c_.size() > d) throw std::invalid_argument("ExtElem: too many coordinates");
    c_.resize(d, MonoElem::zero(ext_->base()));
}

ExtElem ExtElem::zero(const ExtPtr &ext) { return ExtElem(ext, {}); }

ExtElem ExtElem::one(const ExtPtr &ext) { return ExtElem(ext, {MonoElem::one(ext->base())}); }

ExtElem ExtElem::gen(const ExtPtr &ext)
{
    if (ext->degree() == 1) return ExtElem(ext, {-ext->minpoly()[0]});
    return ExtElem(ext, {MonoElem::zero(ext->base()), MonoElem::one(ext->base())});
}

ExtElem ExtElem::from_base(const ExtPtr &ext, const MonoElem &c) { return ExtElem(ext, {c}); }

bool ExtElem::is_zero() const
{
    for (const auto &c : c_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool ExtElem::in_base() const
{
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return false;
    }
    return true;
}

namespace {

void require_same(const ExtElem &a, const ExtElem &b)
{
    if (!a.ext() || a.ext() != b.ext()) throw std::invalid_argument("ExtElem: operands from different extensions");
}

} // namespace

ExtElem ExtElem::operator-() const
{
    std::vector<MonoElem> r = c_;
    for (auto &c : r) c = -c;
    return ExtElem(ext_, std::move(r));
}

ExtElem operator+(const ExtElem &a, const ExtElem &b)
{
    require_same(a, b);
    std::vector<MonoElem> r = a.c_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
    return ExtElem(a.ext_, std::move(r));
}

ExtElem operator-(const ExtElem &a, const ExtElem &b) { return a + (-b); }

ExtElem operator*(const ExtElem &a, const ExtElem &b)
{
    require_same(a, b);
    return ExtElem(a.ext_, a.ext_->mul_coords(a.c_, b.c_));
}

ExtElem operator/(const ExtElem &a, const ExtElem &b) { return a * b.inverse(); }

ExtElem ExtElem::mul_base(const MonoElem &c) const
{
    std::vector<MonoElem> r = c_;
    for (auto &x : r) x = x * c;
    return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::mul_int(long long v) const
{
    std::vector<MonoElem> r = c_;
    for (auto &x : r) x = x.mul_int(v);
    return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::inverse() const
{
    if (is_zero()) throw std::domain_error("ExtElem: division by zero");
    BasePoly a = c_;
    trim(a);
    const auto bz = gcd_ext(a, ext_->minpoly(), MonoElem::one(ext_->base()));
    if (bz.g.size() != 1) throw std::domain_error("ExtElem: zero divisor (minimal polynomial is reducible)");
    return ExtElem(ext_, ext_->reduce(bz.s));
}

ExtElem ExtElem::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    ExtElem r = one_like(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const ExtElem &a, const ExtElem &b)
{
    require_same(a, b);
    return a.c_ == b.c_;
}

TruncSeries<ExtElem> theta_series(const ExtElem &x, int N)
{
    const ExtPtr &E = x.ext();
    if (N < 0 || N > E->order()) throw std::invalid_argument("theta_series: order outside the extension truncation");
    TruncSeries<ExtElem> out;
    out.coeffs.assign(N + 1, x.zero_like());
    for (int i = 0; i < E->degree(); ++i) {
        if (x[i].is_zero()) continue;
        const auto ts = theta_series(x[i], N);
        for (int n = 0; n <= N; ++n) {
            for (int k = 0; k <= n; ++k) {
                if (ts[k].is_zero()) continue;
                out.coeffs[n] += E->theta_y_power(i, n - k).mul_base(ts[k]);
            }
        }
    }
    return out;
}

TruncSeries<ExtElem> extend_derivation(const ExtPtr &ext, int N)
{
    if (N < 0 || N > ext->order()) throw std::invalid_argument("extend_derivation: order outside the truncation");
    TruncSeries<ExtElem> s;
    for (int n = 0; n <= N; ++n) s.coeffs.push_back(ext->theta_y(n));
    return s;
}

bool check_minpoly_substitution(const ExtPtr &ext, int N)
{
    const auto S = extend_derivation(ext, N);
    TruncSeries<ExtElem> power;
    power.coeffs.assign(N + 1, ExtElem::zero(ext));
    power.coeffs[0] = ExtElem::one(ext);
    TruncSeries<ExtElem> total;
    total.coeffs.assign(N + 1, ExtElem::zero(ext));
    for (std::size_t i = 0; i < ext->minpoly().size(); ++i) {
        const auto tm = theta_series(ext->minpoly()[i], N);
        TruncSeries<ExtElem> lifted;
        for (const auto &c : tm.coeffs) lifted.coeffs.push_back(ExtElem::from_base(ext, c));
        const auto term = series_mul(lifted, power);
        for (int n = 0; n <= N; ++n) total.coeffs[n] += term[n];
        power = series_mul(power, S);
    }
    for (const auto &c : total.coeffs) {
        if (!c.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------- automorphisms

ExtAutomorphism::ExtAutomorphism(ExtElem image) : image_(std::move(image))
{
    const auto &m = image_.ext()->minpoly();
    ExtElem v = image_.zero_like();
    for (std::size_t i = m.size(); i-- > 0;) v = v * image_ + ExtElem::from_base(image_.ext(), m[i]);
    if (!v.is_zero()) throw std::invalid_argument("not an automorphism: m(sigma(y)) != 0");
}

ExtElem ExtAutomorphism::operator()(const ExtElem &e) const
{
    if (e.ext() != image_.ext()) throw std::invalid_argument("ExtAutomorphism: element from a different extension");
    ExtElem r = e.zero_like();
    ExtElem pw = e.one_like();
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (!e[i].is_zero()) r += pw.mul_base(e[i]);
        pw = pw * image_;
    }
    return r;
}

bool verify_id_automorphism(const ExtAutomorphism &sigma, int N)
{
    const ExtPtr &E = sigma.image().ext();
    const auto ts = theta_series(sigma.image(), N);
    for (int n = 0; n <= N; ++n) {
        if (sigma(E->theta_y(n)) != ts[n]) return false;
    }
    return true;
}

DedekindSolution dedekind_solution(const ExtPtr &ext, const std::vector<ExtAutomorphism> &autos, int N)
{
    const int d = ext->degree();
    if (static_cast<int>(autos.size()) != d) {
        throw std::invalid_argument("dedekind_solution: need exactly " + std::to_string(d) + " automorphisms");
    }
    for (std::size_t i = 0; i < autos.size(); ++i) {
        for (std::size_t j = i + 1; j < autos.size(); ++j) {
            if (autos[i].image() == autos[j].image()) {
                throw std::invalid_argument("dedekind_solution: repeated automorphism (Y would be singular)");
            }
        }
    }
    DedekindSolution out;
    out.Y = Matrix<ExtElem>(d, ExtElem::zero(ext));
    for (int k = 0; k < d; ++k) {
        ExtElem pw = ExtElem::one(ext);
        for (int i = 0; i < d; ++i) {
            out.Y(i, k) = pw;
            pw = pw * autos[k].image();
        }
    }
    out.det = determinant(out.Y);
    out.report.det_nonzero = !out.det.is_zero();
    if (!out.report.det_nonzero) throw std::invalid_argument("dedekind_solution: Y is singular");
    out.A = derive_matrix(out.Y, N);
    const auto th = theta_matrix(out.Y, N);
    out.report.solution = true;
    for (int k = 0; k <= N; ++k) out.report.solution &= th[k] == out.A.A[k] * out.Y;
    out.report.ide = verify_ide(out.A, N).all_pass();
    out.report.base_entries = true;
    for (const auto &Ak : out.A.A) {
        for (const auto &e : Ak.entries()) out.report.base_entries &= e.in_base();
    }
    out.report.count_matches_degree = static_cast<int>(autos.size()) == d;
    out.report.all_id_automorphisms = true;
    for (const auto &s : autos) out.report.all_id_automorphisms &= verify_id_automorphism(s, N);
    return out;
}

// ------------------------------------------------------------ constructors

std::pair<std::int64_t, std::int64_t> lex_valuation(const MonoElem &f)
{
    if (f.is_zero()) throw std::invalid_argument("lex_valuation: zero has no valuation");
    auto top = [](const std::vector<Term> &terms) {
        std::pair<std::int64_t, std::int64_t> best = {terms.front().a, terms.front().b};
        for (const auto &tm : terms) best = std::max(best, std::pair<std::int64_t, std::int64_t>{tm.a, tm.b});
        return best;
    };
    const auto n = top(f.numerator_terms());
    const auto d = top(f.denominator_terms());
    return {d.first - n.first, d.second - n.second};
}

namespace {

bool lex_negative(std::pair<std::int64_t, std::int64_t> v) { return v.first < 0 || (v.first == 0 && v.second < 0); }

bool in_multiple_lattice(std::pair<std::int64_t, std::int64_t> v, std::int64_t l)
{
    return v.first % l == 0 && v.second % l == 0;
}

std::string show(std::pair<std::int64_t, std::int64_t> v)
{
    return "(" + std::to_string(v.first) + ", " + std::to_string(v.second) + ")";
}

} // namespace

ExtPtr artin_schreier(const MonoElem &f)
{
    const CtxPtr &ctx = f.ctx();
    const int p = ctx->p();
    if (f.is_zero()) throw std::invalid_argument("artin_schreier: f = 0 gives a split extension");
    const auto v = lex_valuation(f);
    if (!lex_negative(v) || in_multiple_lattice(v, p)) {
        throw std::invalid_argument("artin_schreier: cannot certify a geometric extension, valuation " + show(v) +
                                    " of f must be negative and outside pZ^2");
    }
    BasePoly m(static_cast<std::size_t>(p) + 1, MonoElem::zero(ctx));
    m[0] = -f;
    m[1] = MonoElem::from_int(ctx, -1);
    m[p] = MonoElem::one(ctx);
    return FiniteExt::make(ctx, std::move(m));
}

std::vector<ExtAutomorphism> artin_schreier_automorphisms(const ExtPtr &ext)
{
    const int p = ext->base()->p();
    std::vector<ExtAutomorphism> r;
    for (int j = 0; j < p; ++j) r.emplace_back(ExtElem::gen(ext) + ExtElem::from_base(ext, MonoElem::from_int(ext->base(), j)));
    return r;
}

ExtPtr kummer(const MonoElem &f, int d)
{
    const CtxPtr &ctx = f.ctx();
    const int q = ctx->gf().q();
    if (d < 2 || (q - 1) % d != 0) {
        throw std::invalid_argument("kummer: d = " + std::to_string(d) + " must divide q - 1 = " + std::to_string(q - 1));
    }
    if (f.is_zero()) throw std::invalid_argument("kummer: f must be nonzero");
    const auto v = lex_valuation(f);
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime(l)) continue;
        if (in_multiple_lattice(v, l)) {
            throw std::invalid_argument("kummer: cannot certify a geometric extension, valuation " + show(v) +
                                        " of f lies in " + std::to_string(l) + "Z^2");
        }
    }
    BasePoly m(static_cast<std::size_t>(d) + 1, MonoElem::zero(ctx));
    m[0] = -f;
    m[d] = MonoElem::one(ctx);
    return FiniteExt::make(ctx, std::move(m));
}

std::vector<ExtAutomorphism> kummer_automorphisms(const ExtPtr &ext)
{
    const GaloisField &F = ext->base()->gf();
    const int d = ext->degree();
    const auto zeta = F.pow(F.generator(), (F.q() - 1) / d);
    std::vector<ExtAutomorphism> r;
    for (int j = 0; j < d; ++j) {
        r.emplace_back(ExtElem::gen(ext).mul_base(MonoElem::constant(ext->base(), F.pow(zeta, j))));
    }
    return r;
}

} // namespace idg
