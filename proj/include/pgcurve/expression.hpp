#pragma once

#include <functional>
#include <memory>
#include <string>

namespace pg {

// Tiny arithmetic expression language for curvature/torsion inputs on the
// command line: one free variable `s`, numeric literals, + - * /, unary
// minus, `^` (right associative) and the functions exp, ln, sinh, cosh,
// pow(a, b).  Parsing errors throw Errc::InvalidArgument with the offending
// position in the message.
class Expression {
public:
    static Expression parse(const std::string& text);

    double operator()(double s) const;

    const std::string& text() const { return text_; }

    struct Node; // AST node; defined in the implementation file

private:
    Expression(std::shared_ptr<const Node> root, std::string text);

    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace pg
