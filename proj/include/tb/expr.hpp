#pragma once

#include <tb/errors.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

namespace tb {

enum class node_kind {
    constant,
    variable,
    add,
    sub,
    neg,
    mul,
    div,
    int_pow,
    exp,
    ln,
    sin,
    cos,
    sqrt
};

struct expr_node;
using expr_ptr = std::shared_ptr<const expr_node>;

struct expr_node {
    node_kind kind;
    double value = 0.0;   // constant
    long exponent = 0;    // int_pow
    expr_ptr a;           // first (or only) child
    expr_ptr b;           // second child of binary nodes
};

// Immutable expression tree in the single variable t. Copying is cheap
// (shared subtrees); equality is structural.
class expression {
public:
    expression() = default;
    explicit expression(expr_ptr root) : root_(std::move(root)) {}

    bool valid() const { return static_cast<bool>(root_); }
    const expr_node& root() const { return *root_; }
    const expr_ptr& ptr() const { return root_; }

    friend bool operator==(const expression& x, const expression& y) {
        return equal(x.root_, y.root_);
    }
    friend bool operator!=(const expression& x, const expression& y) {
        return !(x == y);
    }

private:
    static bool equal(const expr_ptr& x, const expr_ptr& y) {
        if (!x || !y) return !x && !y;
        if (x->kind != y->kind) return false;
        switch (x->kind) {
        case node_kind::constant: return x->value == y->value;
        case node_kind::variable: return true;
        case node_kind::int_pow:
            return x->exponent == y->exponent && equal(x->a, y->a);
        default:
            return equal(x->a, y->a) && equal(x->b, y->b);
        }
    }

    expr_ptr root_;
};

// Tree builders, used by the parser and by tests that assert exact shapes.
namespace ast {

inline expression constant(double v) {
    auto n = std::make_shared<expr_node>();
    n->kind = node_kind::constant;
    n->value = v;
    return expression(n);
}

inline expression variable() {
    auto n = std::make_shared<expr_node>();
    n->kind = node_kind::variable;
    return expression(n);
}

inline expression unary(node_kind kind, expression child) {
    auto n = std::make_shared<expr_node>();
    n->kind = kind;
    n->a = child.ptr();
    return expression(n);
}

inline expression binary(node_kind kind, expression lhs, expression rhs) {
    auto n = std::make_shared<expr_node>();
    n->kind = kind;
    n->a = lhs.ptr();
    n->b = rhs.ptr();
    return expression(n);
}

inline expression add(expression x, expression y) { return binary(node_kind::add, std::move(x), std::move(y)); }
inline expression sub(expression x, expression y) { return binary(node_kind::sub, std::move(x), std::move(y)); }
inline expression mul(expression x, expression y) { return binary(node_kind::mul, std::move(x), std::move(y)); }
inline expression div(expression x, expression y) { return binary(node_kind::div, std::move(x), std::move(y)); }
inline expression neg(expression x) { return unary(node_kind::neg, std::move(x)); }
inline expression exp(expression x) { return unary(node_kind::exp, std::move(x)); }
inline expression ln(expression x) { return unary(node_kind::ln, std::move(x)); }
inline expression sin(expression x) { return unary(node_kind::sin, std::move(x)); }
inline expression cos(expression x) { return unary(node_kind::cos, std::move(x)); }
inline expression sqrt(expression x) { return unary(node_kind::sqrt, std::move(x)); }

inline expression pow(expression base, long exponent) {
    auto n = std::make_shared<expr_node>();
    n->kind = node_kind::int_pow;
    n->exponent = exponent;
    n->a = base.ptr();
    return expression(n);
}

} // namespace ast

// x^n by repeated squaring. Sign-symmetric: int_pow_value(-x, n) is exactly
// +/- int_pow_value(x, n).
inline double int_pow_value(double x, long n) {
    if (n < 0) {
        if (x == 0.0) throw domain_error("division by zero");
        return 1.0 / int_pow_value(x, -n);
    }
    double r = 1.0;
    double p = x;
    for (long k = n; k > 0; k >>= 1) {
        if (k & 1) r *= p;
        if (k > 1) p *= p;
    }
    return r;
}

inline double eval(const expression& e, double t);

namespace detail {

inline double eval_node(const expr_node& n, double t) {
    switch (n.kind) {
    case node_kind::constant: return n.value;
    case node_kind::variable: return t;
    case node_kind::add: return eval_node(*n.a, t) + eval_node(*n.b, t);
    case node_kind::sub: return eval_node(*n.a, t) - eval_node(*n.b, t);
    case node_kind::neg: return -eval_node(*n.a, t);
    case node_kind::mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
    case node_kind::div: {
        double num = eval_node(*n.a, t);
        double den = eval_node(*n.b, t);
        if (den == 0.0) throw domain_error("division by zero");
        return num / den;
    }
    case node_kind::int_pow: return int_pow_value(eval_node(*n.a, t), n.exponent);
    case node_kind::exp: return std::exp(eval_node(*n.a, t));
    case node_kind::ln: {
        double x = eval_node(*n.a, t);
        if (!(x > 0.0)) throw domain_error("ln of non-positive argument");
        return std::log(x);
    }
    case node_kind::sin: return std::sin(eval_node(*n.a, t));
    case node_kind::cos: return std::cos(eval_node(*n.a, t));
    case node_kind::sqrt: {
        double x = eval_node(*n.a, t);
        if (x < 0.0) throw domain_error("sqrt of negative argument");
        return std::sqrt(x);
    }
    }
    throw std::logic_error("eval: corrupt expression node");
}

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    expression run() {
        expression e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("syntax error");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(what);
    }

    // expr := term (('+'|'-') term)*
    expression parse_expr() {
        expression e = parse_term();
        for (;;) {
            if (accept('+')) e = ast::add(std::move(e), parse_term());
            else if (accept('-')) e = ast::sub(std::move(e), parse_term());
            else return e;
        }
    }

    // term := factor (('*'|'/') factor)*
    expression parse_term() {
        expression e = parse_factor();
        for (;;) {
            if (accept('*')) e = ast::mul(std::move(e), parse_factor());
            else if (accept('/')) e = ast::div(std::move(e), parse_factor());
            else return e;
        }
    }

    // Unary minus binds looser than '^': "-t^2" parses as -(t^2).
    expression parse_factor() {
        if (accept('-')) return ast::neg(parse_factor());
        return parse_power();
    }

    // power := base ('^' integer)?
    expression parse_power() {
        expression e = parse_base();
        if (accept('^')) return ast::pow(std::move(e), parse_exponent());
        return e;
    }

    long parse_exponent() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) { pos_ = start; fail("expected integer exponent"); }
        return std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    }

    expression parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("syntax error");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (accept('(')) {
            expression e = parse_expr();
            expect(')', "expected ')'");
            return e;
        }
        fail("syntax error");
    }

    expression parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) { pos_ = start; fail("syntax error"); }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark; // not an exponent suffix after all
            }
        }
        return ast::constant(std::strtod(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr));
    }

    expression parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == "t") return ast::variable();
        node_kind kind;
        if (name == "exp") kind = node_kind::exp;
        else if (name == "ln") kind = node_kind::ln;
        else if (name == "sin") kind = node_kind::sin;
        else if (name == "cos") kind = node_kind::cos;
        else if (name == "sqrt") kind = node_kind::sqrt;
        else {
            pos_ = start;
            throw parse_error("unknown function name '" + std::string(name) +
                                  "' at position " + std::to_string(start),
                              start);
        }
        expect('(', "expected '(' after function name");
        expression arg = parse_expr();
        expect(')', "expected ')'");
        return ast::unary(kind, std::move(arg));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parse the signal grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := base ('^' integer)?
//   base   := number | 't' | '(' expr ')' | func '(' expr ')'
//   func   := exp | ln | sin | cos | sqrt
// Whitespace-insensitive. Throws parse_error with the failing position.
inline expression parse(std::string_view text) {
    return detail::parser(text).run();
}

// Evaluate at t with standard floating-point semantics; throws domain_error
// for ln(x <= 0), sqrt(x < 0) and division by zero.
inline double eval(const expression& e, double t) {
    return detail::eval_node(e.root(), t);
}

// e(-t): structural substitution t -> -t.
inline expression reflect(const expression& e);

namespace detail {

inline expr_ptr reflect_node(const expr_ptr& n) {
    if (n->kind == node_kind::variable)
        return ast::neg(ast::variable()).ptr();
    auto copy = std::make_shared<expr_node>(*n);
    if (n->a) copy->a = reflect_node(n->a);
    if (n->b) copy->b = reflect_node(n->b);
    return copy;
}

} // namespace detail

inline expression reflect(const expression& e) {
    return expression(detail::reflect_node(e.ptr()));
}

} // namespace tb
