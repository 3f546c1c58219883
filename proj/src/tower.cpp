#include "idg/tower.hpp"

#include <sstream>
#include <stdexcept>

#include "idg/hasse.hpp"

namespace idg {

namespace {

using Vec = std::array<Rational, 2>;

Rational det2(const Vec &a, const Vec &b) { return a[0] * b[1] - b[0] * a[1]; }

bool integral(const Rational &r) { return r.denominator() == 1; }

} // namespace

bool ExponentLattice::coordinates(const Vec &v, std::vector<Rational> &out) const
{
    out.clear();
    if (basis.empty()) return v[0].numerator() == 0 && v[1].numerator() == 0;
    if (basis.size() == 1) {
        const Vec &b = basis[0];
        Rational c;
        if (b[0].numerator() != 0) {
            c = v[0] / b[0];
            if (c * b[1] != v[1]) return false;
        } else {
            c = v[1] / b[1];
            if (v[0].numerator() != 0) return false;
        }
        if (!integral(c)) return false;
        out.push_back(c);
        return true;
    }
    const Vec &b0 = basis[0], &b1 = basis[1];
    const Rational d = det2(b0, b1);
    const Rational c0 = det2(v, b1) / d;
    const Rational c1 = det2(b0, v) / d;
    if (!integral(c0) || !integral(c1)) return false;
    out = {c0, c1};
    return true;
}

bool ExponentLattice::contains(const Vec &v) const
{
    std::vector<Rational> c;
    return coordinates(v, c);
}

bool ExponentLattice::contains(const ExponentLattice &sub) const
{
    for (const auto &v : sub.basis) {
        if (!contains(v)) return false;
    }
    return true;
}

ExponentLattice ExponentLattice::scaled(Rational c) const
{
    ExponentLattice r = *this;
    for (auto &v : r.basis) {
        v[0] *= c;
        v[1] *= c;
    }
    return r;
}

std::string ExponentLattice::describe() const
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        os << (i ? ", " : "") << "(" << basis[i][0] << ", " << basis[i][1] << ")";
    }
    os << ">";
    return os.str();
}

ExponentLattice field_lattice(const FieldCtx &ctx)
{
    ExponentLattice L;
    L.basis.push_back({Rational(1), Rational(0)});
    if (ctx.has_param()) L.basis.push_back({Rational(0), Rational(1)});
    return L;
}

ExponentLattice kernel_lattice(const FieldCtx &ctx, int level)
{
    if (level < 0) throw std::invalid_argument("kernel_lattice: negative level");
    const std::int64_t pl = ipow(ctx.p(), level);
    ExponentLattice L;
    L.basis.push_back({Rational(pl), Rational(0)});
    if (ctx.has_param()) L.basis.push_back({Rational(-ctx.session().param_residue(level)), Rational(1)});
    return L;
}

ExponentLattice pth_power_lattice(const FieldCtx &ctx) { return field_lattice(ctx).scaled(Rational(ctx.p())); }

std::int64_t lattice_index(const ExponentLattice &sub, const ExponentLattice &sup)
{
    if (sub.rank() != sup.rank()) {
        throw std::invalid_argument("lattice_index: ranks differ (" + std::to_string(sub.rank()) + " vs " +
                                    std::to_string(sup.rank()) + ")");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &v : sub.basis) {
        std::vector<Rational> c;
        if (!sup.coordinates(v, c)) {
            throw std::invalid_argument("lattice_index: " + sub.describe() + " is not contained in " + sup.describe());
        }
        rows.push_back(std::move(c));
    }
    Rational d = 1;
    if (rows.size() == 1) d = rows[0][0];
    if (rows.size() == 2) d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (d.numerator() == 0) throw std::invalid_argument("lattice_index: sub lattice is degenerate");
    return std::abs(d.numerator());
}

bool f_ell_membership(const MonoElem &x, int level)
{
    std::uint64_t pi = 1;
    for (int i = 0; i < level; ++i) {
        if (!theta_coeff(x, pi).is_zero()) return false;
        pi *= static_cast<std::uint64_t>(x.ctx()->p());
    }
    return true;
}

TowerLevel::TowerLevel(CtxPtr base, int level) : base_(std::move(base)), level_(level)
{
    if (level < 0) throw std::invalid_argument("f_bracket: negative level");
    const FieldCtx &F = *base_;
    level_lattice_ = kernel_lattice(F, level);
    if (!F.has_param() || level == 0) {
        // F_q(t) is its own p^l-th root closure inside the monomial model
        bracket_ = base_;
        bracket_lattice_ = field_lattice(F);
        return;
    }
    alpha_low_ = F.session().param_residue(level);
    const std::int64_t pl = ipow(F.p(), level);
    auto session = std::make_shared<const PadicSession>(F.p(), shifted_oracle(F.session().param(), level),
                                                        F.session().budget());
    bracket_ = std::make_shared<const FieldCtx>(F.gf_ptr(), std::move(session), F.order(), "u");
    bracket_lattice_.basis.push_back({Rational(1), Rational(0)});
    bracket_lattice_.basis.push_back({Rational(-alpha_low_, pl), Rational(1, pl)});
}

std::vector<int> TowerLevel::gamma_digits(std::size_t count) const
{
    std::vector<int> d(count);
    for (std::size_t i = 0; i < count; ++i) d[i] = base_->session().param_digit(i + static_cast<std::size_t>(level_));
    return d;
}

MonoElem TowerLevel::embed(const MonoElem &x) const
{
    if (x.ctx() != base_) throw std::invalid_argument("TowerLevel::embed: element is not from the base field");
    if (bracket_ == base_) return x;
    const std::int64_t pl = ipow(base_->p(), level_);
    auto map = [&](std::vector<Term> terms) {
        for (auto &tm : terms) {
            tm.a += tm.b * alpha_low_;
            tm.b *= pl;
        }
        return terms;
    };
    return MonoElem::from_terms(bracket_, map(x.numerator_terms()), map(x.denominator_terms()));
}

ExponentLattice TowerLevel::to_base_coordinates(const ExponentLattice &L) const
{
    if (bracket_ == base_) return L;
    const Rational pl(ipow(base_->p(), level_));
    ExponentLattice r;
    for (const auto &v : L.basis) r.basis.push_back({v[0] - v[1] * Rational(alpha_low_) / pl, v[1] / pl});
    return r;
}

TowerLevel f_bracket(const CtxPtr &ctx, int level) { return TowerLevel(ctx, level); }

bool check_L1_eq_Lp(const FieldCtx &ctx) { return kernel_lattice(ctx, 1) == pth_power_lattice(ctx); }

} // namespace idg
