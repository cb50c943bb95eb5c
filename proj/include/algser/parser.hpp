#pragma once

#include <memory>
#include <string>

#include "algser/multipoly.hpp"
#include "algser/ratfun.hpp"

namespace algser {

// Grammar (no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-'? factor
//   factor := base ('^' UINT)?
//   base   := RATIONAL | IDENT | '(' expr ')'
//   RATIONAL := INT ('/' UINT)?   -- written tightly, "5/3"; a spaced '/'
//                                    is division
struct ExprAst {
    enum class Kind { rational, variable, add, sub, mul, div, pow, negate, paren };

    Kind kind;
    int line = 1;
    int column = 1;
    Rational value;           // rational
    std::string name;         // variable
    std::unique_ptr<ExprAst> lhs;  // binary ops; also negate/paren/pow child
    std::unique_ptr<ExprAst> rhs;
    unsigned exponent = 0;    // pow
};

using AstPtr = std::unique_ptr<ExprAst>;

// Syntax only; identifiers are not resolved yet.
AstPtr parse_expression(const std::string& text);

// Text that reparses to the same value (fully parenthesized).
std::string render(const ExprAst& ast);

// Evaluates with polynomial semantics; any division node is rejected with
// NotAPolynomial.
MultiPoly parse_poly(const std::string& text, const VarSet& vars);

// Evaluates with rational-function semantics; nested divisions are cleared.
RationalFunction parse_ratfun(const std::string& text, const VarSet& vars);

MultiPoly eval_poly(const ExprAst& ast, const VarSet& vars);
RationalFunction eval_ratfun(const ExprAst& ast, const VarSet& vars);

}  // namespace algser
