#include "pgcurve/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "pgcurve/errors.hpp"

namespace pg {

struct Expression::Node {
    enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Ln, Sinh, Cosh };
    Op op = Op::Const;
    double value = 0.0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr, double value = 0.0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->value = value;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        raise(Errc::InvalidArgument,
              "expression: " + what + " at position " + std::to_string(pos_) +
                  " in \"" + text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (accept('+')) e = make(Node::Op::Add, e, term());
            else if (accept('-')) e = make(Node::Op::Sub, e, term());
            else return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (accept('*')) e = make(Node::Op::Mul, e, unary());
            else if (accept('/')) e = make(Node::Op::Div, e, unary());
            else return e;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Node::Op::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^'))
            return make(Node::Op::Pow, base, unary()); // right associative
        return base;
    }

    NodePtr atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        fail("expected a number, 's', a function call or '('");
    }

    NodePtr number() {
        skip_ws();
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v)) fail("malformed number");
        pos_ += static_cast<size_t>(end - begin);
        return make(Node::Op::Const, nullptr, nullptr, v);
    }

    NodePtr identifier() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "s") return make(Node::Op::Var);
        if (name == "pow") {
            expect('(');
            NodePtr a = expr();
            expect(',');
            NodePtr b = expr();
            expect(')');
            return make(Node::Op::Pow, a, b);
        }
        Node::Op op;
        if (name == "exp") op = Node::Op::Exp;
        else if (name == "ln") op = Node::Op::Ln;
        else if (name == "sinh") op = Node::Op::Sinh;
        else if (name == "cosh") op = Node::Op::Cosh;
        else {
            pos_ = start;
            fail("unknown name '" + name + "' (expected s, exp, ln, sinh, cosh or pow)");
        }
        expect('(');
        NodePtr a = expr();
        expect(')');
        return make(op, a);
    }
};

double eval(const Node& n, double s) {
    switch (n.op) {
    case Node::Op::Const: return n.value;
    case Node::Op::Var:   return s;
    case Node::Op::Add:   return eval(*n.a, s) + eval(*n.b, s);
    case Node::Op::Sub:   return eval(*n.a, s) - eval(*n.b, s);
    case Node::Op::Mul:   return eval(*n.a, s) * eval(*n.b, s);
    case Node::Op::Div:   return eval(*n.a, s) / eval(*n.b, s);
    case Node::Op::Neg:   return -eval(*n.a, s);
    case Node::Op::Pow:   return std::pow(eval(*n.a, s), eval(*n.b, s));
    case Node::Op::Exp:   return std::exp(eval(*n.a, s));
    case Node::Op::Ln:    return std::log(eval(*n.a, s));
    case Node::Op::Sinh:  return std::sinh(eval(*n.a, s));
    case Node::Op::Cosh:  return std::cosh(eval(*n.a, s));
    }
    return 0.0;
}

} // namespace

Expression Expression::parse(const std::string& text) {
    return Expression(Parser(text).run(), text);
}

Expression::Expression(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

double Expression::operator()(double s) const { return eval(*root_, s); }

} // namespace pg
