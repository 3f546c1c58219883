#include "idg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace idg {

namespace {

class Parser {
public:
    explicit Parser(const std::string &s) : s_(s) {}

    ExprPtr parse()
    {
        auto e = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return e;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    static ExprPtr node(ExprNode::Kind k, std::size_t pos, std::vector<ExprPtr> kids, long long v = 0)
    {
        auto n = std::make_shared<ExprNode>();
        n->kind = k;
        n->pos = pos;
        n->value = v;
        n->kids = std::move(kids);
        return n;
    }

    ExprPtr expr()
    {
        auto lhs = term();
        for (;;) {
            skip();
            const std::size_t pos = i_;
            if (eat('+')) {
                lhs = node(ExprNode::Kind::Add, pos, {lhs, term()});
            } else if (eat('-')) {
                lhs = node(ExprNode::Kind::Sub, pos, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term()
    {
        auto lhs = unary();
        for (;;) {
            skip();
            const std::size_t pos = i_;
            if (eat('*')) {
                lhs = node(ExprNode::Kind::Mul, pos, {lhs, unary()});
            } else if (eat('/')) {
                lhs = node(ExprNode::Kind::Div, pos, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary()
    {
        skip();
        const std::size_t pos = i_;
        if (eat('-')) return node(ExprNode::Kind::Neg, pos, {unary()});
        return power();
    }

    ExprPtr power()
    {
        auto base = atom();
        skip();
        const std::size_t pos = i_;
        if (!eat('^')) return base;
        return node(ExprNode::Kind::Pow, pos, {base}, exponent());
    }

    long long exponent()
    {
        skip();
        const bool paren = eat('(');
        const bool neg = eat('-');
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            throw ParseError("exponent must be an integer", i_);
        }
        const long long v = integer();
        if (paren && !eat(')')) throw ParseError("expected ')'", i_);
        return neg ? -v : v;
    }

    long long integer()
    {
        const std::size_t start = i_;
        long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > 100000000000LL) throw ParseError("integer literal too large", start);
            v = v * 10 + (s_[i_] - '0');
            ++i_;
        }
        return v;
    }

    ExprPtr atom()
    {
        skip();
        const std::size_t pos = i_;
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", pos);
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return node(ExprNode::Kind::Integer, pos, {}, integer());
        if (c == '(') {
            ++i_;
            auto e = expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            if (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) {
                throw ParseError("unknown symbol", pos);
            }
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Symbol;
            n->symbol = c;
            n->pos = pos;
            return n;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos);
    }

    const std::string &s_;
    std::size_t i_ = 0;
};

template <class V>
struct Ops {
    std::function<V(const ExprNode &)> leaf;
    std::function<V(const V &, const V &, std::size_t)> div;
    std::function<V(const V &, long long, std::size_t)> pow;
};

template <class V>
V eval(const ExprNode &n, const Ops<V> &ops)
{
    using K = ExprNode::Kind;
    switch (n.kind) {
    case K::Integer:
    case K::Symbol:
        return ops.leaf(n);
    case K::Neg:
        return -eval(*n.kids[0], ops);
    case K::Add:
        return eval(*n.kids[0], ops) + eval(*n.kids[1], ops);
    case K::Sub:
        return eval(*n.kids[0], ops) - eval(*n.kids[1], ops);
    case K::Mul:
        return eval(*n.kids[0], ops) * eval(*n.kids[1], ops);
    case K::Div:
        return ops.div(eval(*n.kids[0], ops), eval(*n.kids[1], ops), n.pos);
    case K::Pow:
        return ops.pow(eval(*n.kids[0], ops), n.value, n.pos);
    }
    throw std::logic_error("eval: bad node");
}

MonoElem base_leaf(const ExprNode &n, const CtxPtr &ctx)
{
    if (n.kind == ExprNode::Kind::Integer) return MonoElem::from_int(ctx, n.value);
    if (n.symbol == 't') return MonoElem::t(ctx);
    if (n.symbol == 'z') return MonoElem::constant(ctx, ctx->gf().generator());
    if (ctx->has_param() && ctx->param_symbol().size() == 1 && n.symbol == ctx->param_symbol()[0]) {
        return MonoElem::param(ctx);
    }
    if (n.symbol == 'y') throw ParseError("symbol y needs an extension context", n.pos);
    throw ParseError(std::string("symbol ") + n.symbol + " is not defined in this field", n.pos);
}

Ops<MonoElem> mono_ops(const CtxPtr &ctx)
{
    Ops<MonoElem> ops;
    ops.leaf = [ctx](const ExprNode &n) { return base_leaf(n, ctx); };
    ops.div = [](const MonoElem &a, const MonoElem &b, std::size_t pos) {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    };
    ops.pow = [](const MonoElem &a, long long e, std::size_t pos) {
        if (e < 0 && a.is_zero()) throw ParseError("division by zero", pos);
        return a.pow(e);
    };
    return ops;
}

// Polynomials in y over the base field.
struct YPoly {
    BasePoly c;
    CtxPtr ctx;

    void trim()
    {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    YPoly operator-() const
    {
        YPoly r = *this;
        for (auto &x : r.c) x = -x;
        return r;
    }
    friend YPoly operator+(const YPoly &a, const YPoly &b)
    {
        YPoly r{a.c, a.ctx};
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), MonoElem::zero(a.ctx));
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend YPoly operator-(const YPoly &a, const YPoly &b) { return a + (-b); }
    friend YPoly operator*(const YPoly &a, const YPoly &b)
    {
        YPoly r{{}, a.ctx};
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, MonoElem::zero(a.ctx));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
};

} // namespace

ExprPtr parse_ast(const std::string &s) { return Parser(s).parse(); }

MonoElem parse_expr(const std::string &s, const CtxPtr &ctx) { return eval(*parse_ast(s), mono_ops(ctx)); }

ExtElem parse_expr(const std::string &s, const ExtPtr &ext)
{
    Ops<ExtElem> ops;
    ops.leaf = [ext](const ExprNode &n) {
        if (n.kind == ExprNode::Kind::Symbol && n.symbol == 'y') return ExtElem::gen(ext);
        return ExtElem::from_base(ext, base_leaf(n, ext->base()));
    };
    ops.div = [](const ExtElem &a, const ExtElem &b, std::size_t pos) {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    };
    ops.pow = [](const ExtElem &a, long long e, std::size_t pos) {
        if (e < 0 && a.is_zero()) throw ParseError("division by zero", pos);
        return a.pow(e);
    };
    return eval(*parse_ast(s), ops);
}

BasePoly parse_poly_in_y(const std::string &s, const CtxPtr &ctx)
{
    Ops<YPoly> ops;
    ops.leaf = [ctx](const ExprNode &n) {
        if (n.kind == ExprNode::Kind::Symbol && n.symbol == 'y') {
            return YPoly{{MonoElem::zero(ctx), MonoElem::one(ctx)}, ctx};
        }
        YPoly r{{base_leaf(n, ctx)}, ctx};
        r.trim();
        return r;
    };
    ops.div = [](const YPoly &a, const YPoly &b, std::size_t pos) {
        if (b.c.size() != 1) throw ParseError("can only divide a polynomial in y by a nonzero field element", pos);
        YPoly r = a;
        for (auto &x : r.c) x = x / b.c[0];
        return r;
    };
    ops.pow = [](const YPoly &a, long long e, std::size_t pos) {
        if (e < 0) {
            if (a.c.size() != 1) throw ParseError("negative power of a polynomial in y", pos);
            return YPoly{{a.c[0].pow(e)}, a.ctx};
        }
        YPoly r{{MonoElem::one(a.ctx)}, a.ctx};
        for (long long i = 0; i < e; ++i) r = r * a;
        return r;
    };
    return eval(*parse_ast(s), ops).c;
}

// ------------------------------------------------------------ printing

std::string to_string(GaloisField::Elem c, const GaloisField &F)
{
    if (F.is_prime_subfield(c)) return std::to_string(c);
    return "z^" + std::to_string(F.log(c));
}

namespace {

std::string monomial(const Term &tm, const GaloisField &F, const std::string &param)
{
    std::vector<std::string> parts;
    if (tm.c != 1 || (tm.a == 0 && tm.b == 0)) parts.push_back(to_string(tm.c, F));
    auto power = [&](const std::string &sym, std::int64_t e) {
        if (e == 0) return;
        parts.push_back(e == 1 ? sym : sym + "^" + std::to_string(e));
    };
    power("t", tm.a);
    power(param, tm.b);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

std::string poly_string(std::vector<Term> terms, const GaloisField &F, const std::string &param)
{
    std::sort(terms.begin(), terms.end(), [](const Term &l, const Term &r) {
        return std::pair(l.a, l.b) > std::pair(r.a, r.b);
    });
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + monomial(terms[i], F, param);
    return out;
}

std::string wrapped(const std::string &s)
{
    return s.find_first_of("+/") == std::string::npos ? s : "(" + s + ")";
}

} // namespace

std::string to_string(const MonoElem &x)
{
    if (x.is_zero()) return "0";
    const GaloisField &F = x.ctx()->gf();
    const std::string &param = x.ctx()->param_symbol();
    const std::string num = poly_string(x.numerator_terms(), F, param);
    if (x.has_unit_denominator()) return num;
    return "(" + num + ")/(" + poly_string(x.denominator_terms(), F, param) + ")";
}

std::string to_string(const ExtElem &x)
{
    std::string out;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (x[i].is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = to_string(x[i]);
        } else {
            const std::string y = i == 1 ? "y" : "y^" + std::to_string(i);
            term = x[i].is_one() ? y : wrapped(to_string(x[i])) + "*" + y;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const TensorElem &x)
{
    std::string out;
    for (const auto &[J, c] : x.terms()) {
        std::string v;
        for (std::size_t i = 0; i < J.size(); ++i) {
            if (J[i] == 0) continue;
            const std::string sym = "v" + std::to_string(i + 2);
            v += (v.empty() ? "" : "*") + (J[i] == 1 ? sym : sym + "^" + std::to_string(J[i]));
        }
        std::string term;
        if (v.empty()) {
            term = to_string(c);
        } else {
            term = c.is_one() ? v : wrapped(to_string(c)) + "*" + v;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace idg
