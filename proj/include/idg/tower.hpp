#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "idg/monofield.hpp"

namespace idg {

using Rational = boost::rational<std::int64_t>;

/// A lattice of exponents r + s*pi inside Q + Q*pi, stored by a basis of
/// (r, s) coordinate pairs. Rank 1 lattices (fields without a parameter)
/// have s = 0 throughout.
struct ExponentLattice {
    std::vector<std::array<Rational, 2>> basis;

    int rank() const noexcept { return static_cast<int>(basis.size()); }
    /// Integer coordinates of v over the basis, or nothing if v is not in the lattice.
    bool coordinates(const std::array<Rational, 2> &v, std::vector<Rational> &out) const;
    bool contains(const std::array<Rational, 2> &v) const;
    bool contains(const ExponentLattice &sub) const;
    ExponentLattice scaled(Rational c) const;
    bool operator==(const ExponentLattice &o) const { return contains(o) && o.contains(*this); }
    std::string describe() const;
};

/// Exponents of all monomials of the field: Z + Z*pi, or Z without parameter.
ExponentLattice field_lattice(const FieldCtx &ctx);
/// Exponents of F_l = the common kernel of theta^(j), 0 < j < p^l:
/// p^l (Z + Z*gamma_l) with gamma_l = (pi - pi_l) / p^l.
ExponentLattice kernel_lattice(const FieldCtx &ctx, int level);
/// Exponents of F^p.
ExponentLattice pth_power_lattice(const FieldCtx &ctx);

/// |det| of the sub basis written over the sup basis. Throws
/// std::invalid_argument when sub is not contained in sup or the ranks differ.
std::int64_t lattice_index(const ExponentLattice &sub, const ExponentLattice &sup);

/// theta^(p^i)(x) = 0 for all i < level.
bool f_ell_membership(const MonoElem &x, int level);

/// F_[l] = F_q(t, u) with u = t^gamma, gamma the level-l shift of the
/// parameter, together with the embedding t -> t, x -> t^(pi_l) u^(p^l).
class TowerLevel {
public:
    TowerLevel(CtxPtr base, int level);

    int level() const noexcept { return level_; }
    const CtxPtr &base() const noexcept { return base_; }
    const CtxPtr &bracket() const noexcept { return bracket_; }
    /// pi_l: the integer formed by the low l digits of the parameter.
    std::int64_t alpha_low() const noexcept { return alpha_low_; }
    std::vector<int> gamma_digits(std::size_t count) const;

    const ExponentLattice &level_lattice() const noexcept { return level_lattice_; }
    /// Exponents of F_[l] in the coordinates (1, pi) of the base field.
    const ExponentLattice &bracket_lattice() const noexcept { return bracket_lattice_; }

    MonoElem embed(const MonoElem &x) const;
    /// Rewrites a lattice given in the coordinates (1, gamma) of F_[l] in
    /// the coordinates (1, pi) of the base field.
    ExponentLattice to_base_coordinates(const ExponentLattice &L) const;

private:
    CtxPtr base_;
    CtxPtr bracket_;
    int level_;
    std::int64_t alpha_low_ = 0;
    ExponentLattice level_lattice_;
    ExponentLattice bracket_lattice_;
};

TowerLevel f_bracket(const CtxPtr &ctx, int level);

/// Whether the level-1 kernel of the derivation equals the field of p-th powers.
bool check_L1_eq_Lp(const FieldCtx &ctx);

} // namespace idg
