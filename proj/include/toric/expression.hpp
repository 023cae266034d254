#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "toric/fields.hpp"
#include "toric/jet.hpp"

namespace toric {

// Abstract syntax tree for the small math-expression language used in
// config files and tests.
//
// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := base ("^" factor)?
//   base   := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")" | "-" base
// with IDENT one of the variables x, y, t or a function name. Whitespace is
// insignificant. Note the precedence consequence: "-x^2" is (-x)^2, because
// unary minus binds inside the power's base.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, variable, negate, binary, call };

    Kind kind;
    double number = 0.0;         // Kind::number
    char var = 0;                // Kind::variable: 'x', 'y', or 't'
    char op = 0;                 // Kind::binary: '+', '-', '*', '/', '^'
    Analytic fn = Analytic::sin; // Kind::call
    ExprPtr lhs, rhs;            // rhs only for binary
};

struct Expression {
    ExprPtr root;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " +
                             std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Expression parse_expression(const std::string& src);

// Canonical fully-parenthesized form; parsing the result reproduces the
// tree exactly (numbers print with round-trip precision).
std::string print_expression(const Expression& e);

bool structurally_equal(const Expression& a, const Expression& b);

// Compile to a jet-evaluating field over (x, y); the profile variable t is
// rejected. Power evaluation: constant integer exponents use repeated
// multiplication (any base), other exponents require a positive base.
ScalarField2 compile_expression(const Expression& e);
ScalarField2 compile_expression(const std::string& src);

// Compile to a univariate profile in t; x and y are rejected.
Profile1 compile_profile(const Expression& e);
Profile1 compile_profile(const std::string& src);

}  // namespace toric
