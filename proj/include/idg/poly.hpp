#pragma once

#include <utility>
#include <vector>

#include "idg/gf.hpp"

// Dense polynomials over F_q.
//
// UPoly is a univariate polynomial in t (coefficients low to high), Poly2 a
// bivariate polynomial in t and x stored as a UPoly coefficient per power of
// x. Both are kept trimmed: no trailing zero coefficients, so the zero
// polynomial is the empty vector.
namespace idg::poly {

using Elem = GaloisField::Elem;
using UPoly = std::vector<Elem>;
using Poly2 = std::vector<UPoly>;

// --- univariate ---
void trim(UPoly &a);
int deg(const UPoly &a); // -1 for zero
UPoly add(const GaloisField &F, const UPoly &a, const UPoly &b);
UPoly sub(const GaloisField &F, const UPoly &a, const UPoly &b);
UPoly mul(const GaloisField &F, const UPoly &a, const UPoly &b);
UPoly scale(const GaloisField &F, const UPoly &a, Elem c);
UPoly shift(const UPoly &a, int n); // multiply by t^n, n >= 0
std::pair<UPoly, UPoly> divmod(const GaloisField &F, const UPoly &a, const UPoly &b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const GaloisField &F, UPoly a, UPoly b);
int low_order(const UPoly &a); // t-adic valuation, -1 for zero

// --- bivariate ---
void trim(Poly2 &a);
int deg_x(const Poly2 &a); // -1 for zero
int deg_t(const Poly2 &a);
bool is_zero(const Poly2 &a);
Poly2 constant(Elem c);
Poly2 add(const GaloisField &F, const Poly2 &a, const Poly2 &b);
Poly2 sub(const GaloisField &F, const Poly2 &a, const Poly2 &b);
Poly2 mul(const GaloisField &F, const Poly2 &a, const Poly2 &b);
Poly2 scale(const GaloisField &F, const Poly2 &a, Elem c);
Poly2 mul_upoly(const GaloisField &F, const Poly2 &a, const UPoly &c);
Poly2 pow(const GaloisField &F, const Poly2 &a, int e);
/// Multiply by t^dt x^dx (dt, dx >= 0).
Poly2 shift(const Poly2 &a, int dt, int dx);
/// Largest (vt, vx) with t^vt x^vx dividing a; (0, 0) for zero.
std::pair<int, int> monomial_content(const Poly2 &a);
/// Divide by t^vt x^vx; the monomial must divide a.
Poly2 unshift(const Poly2 &a, int vt, int vx);
/// Leading coefficient in x-major order (highest x power, then highest t power).
Elem leading_coeff(const Poly2 &a);
Poly2 make_monic(const GaloisField &F, const Poly2 &a);
/// gcd of the x-coefficients, as a monic univariate polynomial in t.
UPoly content(const GaloisField &F, const Poly2 &a);
/// Exact division; throws std::logic_error if b does not divide a.
Poly2 div_exact(const GaloisField &F, const Poly2 &a, const Poly2 &b);
Poly2 div_exact_upoly(const GaloisField &F, const Poly2 &a, const UPoly &c);
/// Monic gcd in F_q[t, x] via content/primitive-part recursion over F_q[t][x].
Poly2 gcd(const GaloisField &F, const Poly2 &a, const Poly2 &b);
bool is_constant(const Poly2 &a);

} // namespace idg::poly
