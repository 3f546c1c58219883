#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "idg/finiteext.hpp"
#include "idg/galois.hpp"

// Expression front end. Grammar (docs/grammar.ebnf):
//
//   expr   = term { ("+" | "-") term }
//   term   = unary { ("*" | "/") unary }
//   unary  = "-" unary | power
//   power  = atom [ "^" exponent ]
//   exponent = [ "-" ] integer | "(" [ "-" ] integer ")"
//   atom   = integer | "t" | param | "y" | "z" | "(" expr ")"
//
// param is the parameter symbol of the context (x, or u inside F_[l]); z is
// the fixed generator of F_q; y is the generator of a finite extension.
namespace idg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

struct ExprNode {
    enum class Kind { Integer, Symbol, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Integer;
    long long value = 0; // integer literal or exponent
    char symbol = 0;
    std::size_t pos = 0;
    std::vector<std::shared_ptr<const ExprNode>> kids;
};
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Syntax only; symbols are checked against a context on evaluation.
ExprPtr parse_ast(const std::string &s);

MonoElem parse_expr(const std::string &s, const CtxPtr &ctx);
ExtElem parse_expr(const std::string &s, const ExtPtr &ext);
/// A polynomial in y with coefficients in the base field (lowest degree first).
BasePoly parse_poly_in_y(const std::string &s, const CtxPtr &ctx);

std::string to_string(GaloisField::Elem c, const GaloisField &F);
/// Canonical string in the grammar; monomials in lexicographic order.
std::string to_string(const MonoElem &x);
std::string to_string(const ExtElem &x);
/// Coefficients c_J times v^J, with v_i printed as v2, v3, ...
std::string to_string(const TensorElem &x);

} // namespace idg
