#include "mixedpde/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>

namespace mixedpde {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) out += ", ";
        out += items[i];
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " + join(expected) +
                         ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t offset, const std::string& name)
    : std::runtime_error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset),
      name_(name) {}

DomainError::DomainError(const std::string& node, double argument)
    : std::runtime_error("domain error in '" + node + "' at argument " + format_double(argument)),
      node_(node),
      argument_(argument) {}

std::string_view kind_name(NodeKind kind) noexcept {
    switch (kind) {
        case NodeKind::Constant: return "constant";
        case NodeKind::Variable: return "variable";
        case NodeKind::Neg: return "neg";
        case NodeKind::Add: return "add";
        case NodeKind::Sub: return "sub";
        case NodeKind::Mul: return "mul";
        case NodeKind::Div: return "div";
        case NodeKind::Pow: return "pow";
        case NodeKind::Exp: return "exp";
        case NodeKind::Sin: return "sin";
        case NodeKind::Cos: return "cos";
        case NodeKind::Sqrt: return "sqrt";
        case NodeKind::Log: return "log";
    }
    return "?";
}

struct Expr::Node {
    NodeKind kind;
    double value = 0.0;
    std::string name;
    std::vector<Expr> children;
};

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

bool is_function(NodeKind k) {
    return k == NodeKind::Exp || k == NodeKind::Sin || k == NodeKind::Cos || k == NodeKind::Sqrt ||
           k == NodeKind::Log;
}

double apply_function(NodeKind k, double v) {
    switch (k) {
        case NodeKind::Exp: return std::exp(v);
        case NodeKind::Sin: return std::sin(v);
        case NodeKind::Cos: return std::cos(v);
        case NodeKind::Sqrt: return std::sqrt(v);
        case NodeKind::Log: return std::log(v);
        default: return std::nan("");
    }
}

bool function_defined(NodeKind k, double v) {
    if (k == NodeKind::Sqrt) return v >= 0.0;
    if (k == NodeKind::Log) return v > 0.0;
    return true;
}

double apply_binary(NodeKind k, double l, double r) {
    switch (k) {
        case NodeKind::Add: return l + r;
        case NodeKind::Sub: return l - r;
        case NodeKind::Mul: return l * r;
        case NodeKind::Div: return l / r;
        case NodeKind::Pow: return std::pow(l, r);
        default: return std::nan("");
    }
}

}  // namespace

Expr Expr::constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Constant;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Variable;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::neg(Expr operand) {
    if (operand.is_constant()) return constant(-operand.value());
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Neg;
    n->children = {std::move(operand)};
    return Expr(std::move(n));
}

Expr Expr::add(Expr lhs, Expr rhs) {
    if (lhs.is_constant() && rhs.is_constant()) {
        const double v = lhs.value() + rhs.value();
        if (std::isfinite(v)) return constant(v);
    }
    if (lhs.is_constant(0.0)) return rhs;
    if (rhs.is_constant(0.0)) return lhs;
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Add;
    n->children = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::sub(Expr lhs, Expr rhs) {
    if (lhs.is_constant() && rhs.is_constant()) {
        const double v = lhs.value() - rhs.value();
        if (std::isfinite(v)) return constant(v);
    }
    if (rhs.is_constant(0.0)) return lhs;
    if (lhs.is_constant(0.0)) return neg(std::move(rhs));
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Sub;
    n->children = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::mul(Expr lhs, Expr rhs) {
    if (lhs.is_constant() && rhs.is_constant()) {
        const double v = lhs.value() * rhs.value();
        if (std::isfinite(v)) return constant(v);
    }
    if (lhs.is_constant(0.0) || rhs.is_constant(0.0)) return constant(0.0);
    if (lhs.is_constant(1.0)) return rhs;
    if (rhs.is_constant(1.0)) return lhs;
    if (lhs.is_constant(-1.0)) return neg(std::move(rhs));
    if (rhs.is_constant(-1.0)) return neg(std::move(lhs));
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Mul;
    n->children = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::div(Expr lhs, Expr rhs) {
    if (lhs.is_constant() && rhs.is_constant()) {
        const double v = lhs.value() / rhs.value();
        if (std::isfinite(v)) return constant(v);
    }
    if (rhs.is_constant(1.0)) return lhs;
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Div;
    n->children = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::pow(Expr base, Expr exponent) {
    if (base.is_constant() && exponent.is_constant()) {
        const double v = std::pow(base.value(), exponent.value());
        if (std::isfinite(v)) return constant(v);
    }
    if (exponent.is_constant(1.0)) return base;
    if (exponent.is_constant(0.0)) return constant(1.0);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Pow;
    n->children = {std::move(base), std::move(exponent)};
    return Expr(std::move(n));
}

Expr Expr::apply(NodeKind function, Expr argument) {
    if (!is_function(function)) throw std::invalid_argument("not a function node kind");
    if (argument.is_constant() && function_defined(function, argument.value())) {
        const double v = apply_function(function, argument.value());
        if (std::isfinite(v)) return constant(v);
    }
    auto n = std::make_shared<Node>();
    n->kind = function;
    n->children = {std::move(argument)};
    return Expr(std::move(n));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
const std::string& Expr::name() const noexcept { return node_->name; }
std::size_t Expr::arity() const noexcept { return node_->children.size(); }

const Expr& Expr::child(std::size_t i) const {
    if (i >= node_->children.size()) throw std::out_of_range("Expr::child");
    return node_->children[i];
}

double Expr::evaluate(double x) const {
    const Node& n = *node_;
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Variable: return x;
        case NodeKind::Neg: return -n.children[0].evaluate(x);
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
        case NodeKind::Pow: {
            const double l = n.children[0].evaluate(x);
            const double r = n.children[1].evaluate(x);
            if (n.kind == NodeKind::Div && r == 0.0) throw DomainError(to_string(), r);
            if (n.kind == NodeKind::Pow && l == 0.0 && r < 0.0) throw DomainError(to_string(), l);
            const double v = apply_binary(n.kind, l, r);
            if (!std::isfinite(v)) throw DomainError(to_string(), n.kind == NodeKind::Pow ? l : r);
            return v;
        }
        default: {
            const double a = n.children[0].evaluate(x);
            if (!function_defined(n.kind, a)) throw DomainError(to_string(), a);
            const double v = apply_function(n.kind, a);
            if (!std::isfinite(v)) throw DomainError(to_string(), a);
            return v;
        }
    }
}

Expr Expr::derivative() const {
    const Node& n = *node_;
    switch (n.kind) {
        case NodeKind::Constant: return constant(0.0);
        case NodeKind::Variable: return constant(1.0);
        case NodeKind::Neg: return neg(n.children[0].derivative());
        case NodeKind::Add: return add(n.children[0].derivative(), n.children[1].derivative());
        case NodeKind::Sub: return sub(n.children[0].derivative(), n.children[1].derivative());
        case NodeKind::Mul: {
            const Expr& u = n.children[0];
            const Expr& v = n.children[1];
            return add(mul(u.derivative(), v), mul(u, v.derivative()));
        }
        case NodeKind::Div: {
            const Expr& u = n.children[0];
            const Expr& v = n.children[1];
            return div(sub(mul(u.derivative(), v), mul(u, v.derivative())), mul(v, v));
        }
        case NodeKind::Pow: {
            const Expr& u = n.children[0];
            const Expr& p = n.children[1];
            if (p.is_constant()) {
                return mul(mul(p, pow(u, constant(p.value() - 1.0))), u.derivative());
            }
            // u^p = exp(p log u)
            return mul(*this, add(mul(p.derivative(), apply(NodeKind::Log, u)),
                                  mul(p, div(u.derivative(), u))));
        }
        case NodeKind::Exp: return mul(*this, n.children[0].derivative());
        case NodeKind::Sin: return mul(apply(NodeKind::Cos, n.children[0]), n.children[0].derivative());
        case NodeKind::Cos:
            return mul(neg(apply(NodeKind::Sin, n.children[0])), n.children[0].derivative());
        case NodeKind::Sqrt: return div(n.children[0].derivative(), mul(constant(2.0), *this));
        case NodeKind::Log: return div(n.children[0].derivative(), n.children[0]);
    }
    return constant(0.0);
}

namespace {

// Binding strength used to decide where the printer needs parentheses.
int level(const Expr& e) {
    switch (e.kind()) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Neg: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

void print(const Expr& e, std::ostream& os);

void print_at(const Expr& e, int min_level, std::ostream& os) {
    if (level(e) < min_level) {
        os << '(';
        print(e, os);
        os << ')';
    } else {
        print(e, os);
    }
}

void print(const Expr& e, std::ostream& os) {
    switch (e.kind()) {
        case NodeKind::Constant:
            if (std::signbit(e.value()))
                os << '(' << format_double(e.value()) << ')';
            else
                os << format_double(e.value());
            return;
        case NodeKind::Variable: os << e.name(); return;
        case NodeKind::Neg:
            os << '-';
            print_at(e.child(0), 3, os);
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
            print_at(e.child(0), 1, os);
            os << (e.kind() == NodeKind::Add ? " + " : " - ");
            print_at(e.child(1), 2, os);
            return;
        case NodeKind::Mul:
        case NodeKind::Div:
            print_at(e.child(0), 2, os);
            os << (e.kind() == NodeKind::Mul ? "*" : "/");
            print_at(e.child(1), 3, os);
            return;
        case NodeKind::Pow:
            print_at(e.child(0), 5, os);
            os << '^';
            print_at(e.child(1), 3, os);
            return;
        default:
            os << kind_name(e.kind()) << '(';
            print(e.child(0), os);
            os << ')';
            return;
    }
}

}  // namespace

std::string Expr::to_string() const {
    std::ostringstream os;
    print(*this, os);
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view variable) : text_(text), variable_(variable) {}

    Expr parse_all() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail({"operator", "end of input"});
        return e;
    }

private:
    std::string_view text_;
    std::string_view variable_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Expr rhs = parse_term();
            lhs = c == '+' ? Expr::add(std::move(lhs), std::move(rhs)) : Expr::sub(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_term() {
        Expr lhs = parse_factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            Expr rhs = parse_factor();
            lhs = c == '*' ? Expr::mul(std::move(lhs), std::move(rhs)) : Expr::div(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_factor() {
        if (peek() == '-') {
            ++pos_;
            return Expr::neg(parse_factor());
        }
        Expr base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            return Expr::pow(std::move(base), parse_factor());
        }
        return base;
    }

    Expr parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_expr();
            if (peek() != ')') fail({"operator", "')'"});
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail({"number", "identifier", "'('", "'-'"});
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++n;
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            pos_ = start;
            fail({"number"});
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) {
                // "2e" or "2*e" style ambiguity: only treat as exponent when digits follow
                pos_ = mark;
            }
        }
        double v = 0.0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (res.ec != std::errc() || !std::isfinite(v)) {
            pos_ = start;
            fail({"finite number"});
        }
        return Expr::constant(v);
    }

    Expr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        NodeKind fn = NodeKind::Constant;
        if (name == "exp") fn = NodeKind::Exp;
        else if (name == "sin") fn = NodeKind::Sin;
        else if (name == "cos") fn = NodeKind::Cos;
        else if (name == "sqrt") fn = NodeKind::Sqrt;
        else if (name == "log") fn = NodeKind::Log;

        if (fn != NodeKind::Constant) {
            if (peek() != '(') fail({"'('"});
            ++pos_;
            Expr arg = parse_expr();
            if (peek() != ')') fail({"operator", "')'"});
            ++pos_;
            return Expr::apply(fn, std::move(arg));
        }
        if (name == "pi") return Expr::constant(std::numbers::pi);
        if (name == "e") return Expr::constant(std::numbers::e);
        if (name == variable_) return Expr::variable(name);
        throw UnknownIdentifierError(start, name);
    }
};

bool reserved(std::string_view name) {
    return name == "exp" || name == "sin" || name == "cos" || name == "sqrt" || name == "log" || name == "pi" ||
           name == "e";
}

}  // namespace

Expr parse(std::string_view text, std::string_view variable) {
    if (variable.empty() || reserved(variable)) throw std::invalid_argument("invalid variable name");
    return Parser(text, variable).parse_all();
}

}  // namespace mixedpde
