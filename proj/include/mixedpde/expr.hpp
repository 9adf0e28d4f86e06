#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixedpde {

/// Thrown by parse() for malformed input. offset() is the byte offset of the
/// offending token; expected() lists the token classes that would have been
/// accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownIdentifierError : public std::runtime_error {
public:
    UnknownIdentifierError(std::size_t offset, const std::string& name);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& name() const noexcept { return name_; }

private:
    std::size_t offset_;
    std::string name_;
};

/// Evaluation left the domain of a node (division by zero, log of a
/// non-positive number, ...).
class DomainError : public std::runtime_error {
public:
    DomainError(const std::string& node, double argument);

    const std::string& node() const noexcept { return node_; }
    double argument() const noexcept { return argument_; }

private:
    std::string node_;
    double argument_;
};

enum class NodeKind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Exp, Sin, Cos, Sqrt, Log };

/// Immutable expression tree in a single real variable. Copies share nodes.
///
/// The factory functions fold constants: a node whose children are all
/// constants collapses to a constant when the result is finite, and the
/// identities x+0, x*1, x*0, x^1, x^0 are applied. None of these rewrites
/// change the value at a point where the unfolded tree is defined.
class Expr {
public:
    static Expr constant(double value);
    static Expr variable(std::string name = "x");
    static Expr neg(Expr operand);
    static Expr add(Expr lhs, Expr rhs);
    static Expr sub(Expr lhs, Expr rhs);
    static Expr mul(Expr lhs, Expr rhs);
    static Expr div(Expr lhs, Expr rhs);
    static Expr pow(Expr base, Expr exponent);
    static Expr apply(NodeKind function, Expr argument);

    NodeKind kind() const noexcept;
    /// Value of a Constant node; 0 for any other kind.
    double value() const noexcept;
    /// Name of a Variable node; empty for any other kind.
    const std::string& name() const noexcept;
    std::size_t arity() const noexcept;
    const Expr& child(std::size_t i) const;

    bool is_constant() const noexcept { return kind() == NodeKind::Constant; }
    bool is_constant(double v) const noexcept { return is_constant() && value() == v; }

    double evaluate(double x) const;
    Expr derivative() const;

    /// Re-parseable text form; constants are printed with 17 significant digits.
    std::string to_string() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Parses `text` against the calculator grammar with `variable` as the only
/// free identifier besides exp, sin, cos, sqrt, log, pi and e.
Expr parse(std::string_view text, std::string_view variable = "x");

inline Expr differentiate(const Expr& e) { return e.derivative(); }
inline double evaluate(const Expr& e, double x) { return e.evaluate(x); }

std::string_view kind_name(NodeKind kind) noexcept;

}  // namespace mixedpde
