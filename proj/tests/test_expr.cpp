#include <gtest/gtest.h>

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mixedpde/expr.hpp"

using namespace mixedpde;

namespace {

// Direct evaluator of expression text, no tree: the reference for the
// parse/fold round trip. Same grammar, same operation order.
class TextEvaluator {
public:
    TextEvaluator(const std::string& s, double x) : s_(s), x_(x) {}
    double run() {
        double v = expr();
        skip();
        EXPECT_EQ(pos_, s_.size());
        return v;
    }

private:
    const std::string& s_;
    double x_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    double expr() {
        double v = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            const double r = term();
            v = c == '+' ? v + r : v - r;
        }
        return v;
    }
    double term() {
        double v = factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            const double r = factor();
            v = c == '*' ? v * r : v / r;
        }
        return v;
    }
    double factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        const double base = atom();
        if (peek() == '^') {
            ++pos_;
            return std::pow(base, factor());
        }
        return base;
    }
    double atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            const double v = expr();
            EXPECT_EQ(peek(), ')');
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            const double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            return v;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (name == "x") return x_;
        if (name == "pi") return std::numbers::pi;
        EXPECT_EQ(peek(), '(');
        ++pos_;
        const double a = expr();
        EXPECT_EQ(peek(), ')');
        ++pos_;
        if (name == "exp") return std::exp(a);
        if (name == "sin") return std::sin(a);
        if (name == "cos") return std::cos(a);
        if (name == "sqrt") return std::sqrt(a);
        if (name == "log") return std::log(a);
        ADD_FAILURE() << "unexpected identifier " << name;
        return 0.0;
    }
};

// Random expression text that is defined (and smooth) for every real x.
std::string random_expression(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 13);
    std::uniform_real_distribution<double> num(0.1, 3.0);
    auto sub = [&] { return random_expression(rng, depth - 1); };
    char buf[32];
    switch (pick(rng)) {
        case 0:
            std::snprintf(buf, sizeof buf, "%.3f", num(rng));
            return buf;
        case 1:
        case 2: return "x";
        case 3: return "(" + sub() + " + " + sub() + ")";
        case 4: return "(" + sub() + " - " + sub() + ")";
        case 5: return "(" + sub() + " * " + sub() + ")";
        case 6: return "(" + sub() + ") / (2 + cos(" + sub() + "))";
        case 7: return "sin(" + sub() + ")";
        case 8: return "cos(" + sub() + ")";
        case 9: return "exp(sin(" + sub() + "))";
        case 10: return "sqrt(1 + (" + sub() + ")^2)";
        case 11: return "log(2 + sin(" + sub() + "))";
        case 12: return "(1.5 + cos(" + sub() + "))^sin(" + sub() + ")";
        default: return "-(" + sub() + ")^3";
    }
}

}  // namespace

TEST(ExprParse, EvaluatesSimpleData) {
    EXPECT_DOUBLE_EQ(parse("1 - y", "y").evaluate(0.25), 0.75);
    EXPECT_EQ(parse("exp(x/3)").evaluate(0.0), 1.0);
    EXPECT_EQ(parse("4*x").evaluate(1.0), 4.0);
    EXPECT_EQ(parse("7").evaluate(-123.0), 7.0);
    EXPECT_NEAR(parse("sin(x)").evaluate(1.5707963267948966), 1.0, 1e-15);
    // e^{1/3} to 17 digits (mpmath)
    EXPECT_NEAR(parse("exp(x/3)").evaluate(1.0), 1.3956124250860895, 1e-12);
}

TEST(ExprParse, PrecedenceAndAssociativity) {
    EXPECT_EQ(parse("-x^2").evaluate(3.0), -9.0);
    EXPECT_EQ(parse("2^3^2").evaluate(0.0), 512.0);
    EXPECT_EQ(parse("-2^2").evaluate(0.0), -4.0);
    EXPECT_EQ(parse("2*-x").evaluate(3.0), -6.0);
    EXPECT_EQ(parse("2^-x").evaluate(1.0), 0.5);
    EXPECT_EQ(parse("8/2/2").evaluate(0.0), 2.0);
    EXPECT_EQ(parse("1-2-3").evaluate(0.0), -4.0);
    EXPECT_EQ(parse("1 + 2*3").evaluate(0.0), 7.0);
    EXPECT_EQ(parse("(1 + 2)*3").evaluate(0.0), 9.0);
    EXPECT_EQ(parse("--x").evaluate(2.0), 2.0);
}

TEST(ExprParse, NumbersAndConstants) {
    EXPECT_EQ(parse("1.5e-3").evaluate(0.0), 1.5e-3);
    EXPECT_EQ(parse(".5").evaluate(0.0), 0.5);
    EXPECT_EQ(parse("2E+2").evaluate(0.0), 200.0);
    EXPECT_EQ(parse("3.").evaluate(0.0), 3.0);
    EXPECT_EQ(parse("pi").evaluate(0.0), std::numbers::pi);
    EXPECT_EQ(parse("e").evaluate(0.0), std::numbers::e);
    EXPECT_EQ(parse("2*e").evaluate(0.0), 2.0 * std::numbers::e);
}

TEST(ExprParse, SyntaxErrorsReportOffsetAndExpectation) {
    try {
        parse("1 +");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3u);
        EXPECT_FALSE(e.expected().empty());
    }
    try {
        parse("2 * (x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 6u);
        EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());
    }
    try {
        parse("sin x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_EQ(e.expected(), std::vector<std::string>{"'('"});
    }
    EXPECT_THROW(parse("x x"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("1e999"), ParseError);
    EXPECT_THROW(parse("x(2)"), ParseError);
}

TEST(ExprParse, UnknownIdentifier) {
    try {
        parse("1 + z");
        FAIL();
    } catch (const UnknownIdentifierError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_EQ(e.name(), "z");
    }
    // the declared variable is the only free name
    EXPECT_THROW(parse("y", "x"), UnknownIdentifierError);
    EXPECT_NO_THROW(parse("y", "y"));
    EXPECT_THROW(parse("1", "pi"), std::invalid_argument);
}

TEST(ExprEvaluate, DomainErrorsNameTheNode) {
    try {
        parse("log(x)").evaluate(-1.0);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.node(), "log(x)");
        EXPECT_EQ(e.argument(), -1.0);
    }
    EXPECT_THROW(parse("1/x").evaluate(0.0), DomainError);
    EXPECT_THROW(parse("sqrt(x)").evaluate(-0.5), DomainError);
    EXPECT_THROW(parse("x^0.5").evaluate(-2.0), DomainError);
    EXPECT_THROW(parse("exp(x)").evaluate(1000.0), DomainError);
    EXPECT_NO_THROW(parse("sqrt(x)").evaluate(0.0));
}

TEST(ExprDerivative, Rules) {
    const Expr d = differentiate(parse("x^2 + sin(x)"));
    for (double x : {-2.0, -0.3, 0.0, 0.7, 3.1}) EXPECT_NEAR(d.evaluate(x), 2.0 * x + std::cos(x), 1e-15);

    const Expr one = differentiate(parse("x"));
    ASSERT_TRUE(one.is_constant());
    EXPECT_EQ(one.value(), 1.0);

    const Expr four = differentiate(parse("4*x"));
    ASSERT_TRUE(four.is_constant());
    EXPECT_EQ(four.value(), 4.0);

    EXPECT_TRUE(differentiate(parse("1 - y", "y")).is_constant(-1.0));
    EXPECT_TRUE(differentiate(differentiate(parse("1 - y", "y"))).is_constant(0.0));

    // non-constant exponent through exp(p log u)
    EXPECT_NEAR(differentiate(parse("x^x")).evaluate(2.0), 4.0 * (std::log(2.0) + 1.0), 1e-14);
    EXPECT_NEAR(differentiate(parse("sqrt(x)")).evaluate(4.0), 0.25, 1e-15);
    EXPECT_NEAR(differentiate(parse("log(x)/x")).evaluate(2.0), (1.0 - std::log(2.0)) / 4.0, 1e-15);
}

TEST(ExprDerivative, FiniteDifferenceAgreementOnExampleData) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pt(0.0, 1.0);
    for (const char* src : {"4*x", "x", "exp(x/3)", "x^2 + sin(x)"}) {
        const Expr e = parse(src);
        const Expr d = differentiate(e);
        for (int i = 0; i < 32; ++i) {
            const double x = pt(rng);
            const double h = 1e-6;
            const double fd = (e.evaluate(x + h) - e.evaluate(x - h)) / (2.0 * h);
            EXPECT_NEAR(d.evaluate(x), fd, 1e-6) << src << " at " << x;
        }
    }
}

TEST(ExprProperty, DerivativeMatchesCentredDifference) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> pt(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string src = random_expression(rng, 4);
        const Expr e = parse(src);
        const Expr d = differentiate(e);
        for (int i = 0; i < 32; ++i) {
            const double x = pt(rng);
            const double h = 1e-6;
            const double fd = (e.evaluate(x + h) - e.evaluate(x - h)) / (2.0 * h);
            const double v = d.evaluate(x);
            EXPECT_LE(std::abs(v - fd), 1e-5 * (1.0 + std::abs(v))) << src << " at x=" << x;
        }
    }
}

TEST(ExprProperty, FoldingAndPrintingPreserveValues) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pt(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string src = random_expression(rng, 4) + " + 2*3 - 0*x + 1*x^1";
        const Expr e = parse(src);
        const Expr again = parse(e.to_string());
        for (int i = 0; i < 32; ++i) {
            const double x = pt(rng);
            const double reference = TextEvaluator(src, x).run();
            EXPECT_EQ(e.evaluate(x), reference) << src;
            EXPECT_EQ(again.evaluate(x), reference) << e.to_string();
        }
    }
}

TEST(ExprFold, ConstantSubtreesCollapse) {
    const Expr e = parse("2*3 + x");
    ASSERT_EQ(e.kind(), NodeKind::Add);
    EXPECT_TRUE(e.child(0).is_constant(6.0));
    EXPECT_EQ(e.child(1).kind(), NodeKind::Variable);
    EXPECT_TRUE(parse("0*log(x)").is_constant(0.0));
    EXPECT_EQ(parse("x^1").kind(), NodeKind::Variable);
    EXPECT_EQ(parse("x + 0").kind(), NodeKind::Variable);
    // an undefined constant subtree is kept so evaluation still reports it
    EXPECT_THROW(parse("1/0").evaluate(0.0), DomainError);
    EXPECT_THROW(parse("log(-1)").evaluate(0.0), DomainError);
}

TEST(ExprPrint, NegativeConstantsAndPowersReparse) {
    const Expr e = Expr::pow(Expr::neg(Expr::variable("x")), Expr::constant(-2.0));
    EXPECT_EQ(e.to_string(), "(-x)^(-2)");
    EXPECT_EQ(parse(e.to_string()).evaluate(3.0), e.evaluate(3.0));
    EXPECT_EQ(parse("1 - y", "y").to_string(), "1 - y");
}
