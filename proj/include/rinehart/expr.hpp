#pragma once

#include "rinehart/poly.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rinehart {

/// Shared AST for the ASCII expression grammar. The polynomial grammar
/// admits rationals, variables x1..xk, + - * ^ and parentheses; the
/// element grammar additionally admits generator tokens X1..Xr.
struct ExprNode {
    enum class Kind { Number, Variable, Generator, Add, Sub, Mul, Pow, Neg };
    Kind kind;
    Rational value;      // Number
    int index = 0;       // Variable / Generator, 1-based
    unsigned exponent = 0;  // Pow
    std::size_t pos = 0;
    std::unique_ptr<ExprNode> lhs, rhs;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    std::unique_ptr<ExprNode> parse() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    std::unique_ptr<ExprNode> make(ExprNode::Kind k, std::size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    std::unique_ptr<ExprNode> parse_expr() {
        skip_ws();
        std::size_t pos = pos_;
        std::unique_ptr<ExprNode> acc;
        if (accept('-')) {
            auto n = make(ExprNode::Kind::Neg, pos);
            n->lhs = parse_term();
            acc = std::move(n);
        } else {
            accept('+');
            acc = parse_term();
        }
        for (;;) {
            skip_ws();
            std::size_t opos = pos_;
            if (accept('+')) {
                auto n = make(ExprNode::Kind::Add, opos);
                n->lhs = std::move(acc);
                n->rhs = parse_term();
                acc = std::move(n);
            } else if (accept('-')) {
                auto n = make(ExprNode::Kind::Sub, opos);
                n->lhs = std::move(acc);
                n->rhs = parse_term();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    std::unique_ptr<ExprNode> parse_term() {
        auto acc = parse_factor();
        for (;;) {
            skip_ws();
            std::size_t opos = pos_;
            if (accept('*')) {
                auto n = make(ExprNode::Kind::Mul, opos);
                n->lhs = std::move(acc);
                n->rhs = parse_factor();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    std::unique_ptr<ExprNode> parse_factor() {
        auto base = parse_primary();
        for (;;) {
            skip_ws();
            std::size_t opos = pos_;
            if (accept('^')) {
                skip_ws();
                std::size_t npos = pos_;
                std::string digits = read_digits();
                if (digits.empty())
                    throw ParseError("exponent must be a nonnegative integer literal", npos);
                auto n = make(ExprNode::Kind::Pow, opos);
                n->lhs = std::move(base);
                n->exponent = static_cast<unsigned>(std::stoul(digits));
                base = std::move(n);
            } else {
                return base;
            }
        }
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            ++pos_;
        }
        return s;
    }

    std::unique_ptr<ExprNode> parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        std::size_t pos = pos_;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            auto n = make(ExprNode::Kind::Number, pos);
            if (accept('/')) {
                skip_ws();
                std::size_t dpos = pos_;
                std::string den = read_digits();
                if (den.empty())
                    throw ParseError("expected denominator digits after '/'", dpos);
                n->value = Rational(mpz_class(num), mpz_class(den));
            } else {
                n->value = Rational(mpz_class(num));
            }
            return n;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            std::string digits = read_digits();
            if (digits.empty())
                throw ParseError(std::string("expected index digits after '") + c + "'", pos);
            auto n = make(c == 'x' ? ExprNode::Kind::Variable : ExprNode::Kind::Generator, pos);
            n->index = std::stoi(digits);
            if (n->index < 1)
                throw ParseError("indices are 1-based", pos);
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

/// Evaluates the AST in any algebra supplying constants, variables,
/// generators and ring operations.
template <class V, class Ops>
V eval_expr(const ExprNode& n, const Ops& ops) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Number: return ops.number(n.value);
        case K::Variable: return ops.variable(n.index, n.pos);
        case K::Generator: return ops.generator(n.index, n.pos);
        case K::Add: return ops.add(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
        case K::Sub: return ops.sub(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
        case K::Mul: return ops.mul(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
        case K::Neg: return ops.neg(eval_expr<V>(*n.lhs, ops));
        case K::Pow: {
            V base = eval_expr<V>(*n.lhs, ops);
            V acc = ops.number(Rational(1));
            for (unsigned i = 0; i < n.exponent; ++i) acc = ops.mul(acc, base);
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

struct PolyOps {
    int vars;
    Poly number(const Rational& c) const { return Poly::constant(vars, c); }
    Poly variable(int j, std::size_t pos) const {
        if (j > vars)
            throw ParseError("unknown variable x" + std::to_string(j) + " (only " +
                                 std::to_string(vars) + " variables)", pos);
        return Poly::variable(vars, j);
    }
    Poly generator(int j, std::size_t pos) const {
        throw ParseError("generator X" + std::to_string(j) + " not allowed in a polynomial", pos);
    }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly neg(const Poly& a) const { return -a; }
};

} // namespace detail

inline Poly parse_poly(std::string_view text, int vars) {
    detail::ExprParser p(text);
    auto ast = p.parse();
    return detail::eval_expr<Poly>(*ast, detail::PolyOps{vars});
}

/// Monomial part "x1^2*x3" of a term; empty string for the constant term.
inline std::string render_monomial(const MultiIndex& e, const char* stem) {
    std::string s;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += stem + std::to_string(j + 1);
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
    }
    return s;
}

/// Deterministic rendering, leading term first in graded-lex order.
inline std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = render_monomial(e, "x");
        Rational a = c.abs();
        if (mono.empty()) out += a.str();
        else if (a.is_one()) out += mono;
        else out += a.str() + "*" + mono;
    }
    return out;
}

} // namespace rinehart
