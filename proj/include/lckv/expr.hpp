#ifndef LCKV_EXPR_HPP
#define LCKV_EXPR_HPP

#include "lckv/scalar.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lckv {

// Syntax tree shared by scalar expressions, form expressions and Salamon strings.
struct Expr {
    enum class Kind { Number, Symbol, Atom, Add, Sub, Mul, Div, Pow, Neg, Call };
    Kind kind;
    std::string text;          // literal text for Number, name for Symbol/Call
    mpq_class value;           // Number
    std::vector<int> indices;  // Atom: e12 -> {1,2}, e(1,10) -> {1,10}
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

// Grammar: sums of products with + - * / ^, parentheses, sqrt(...),
// parameter names, decimal/integer literals and form atoms eNN / e(i,j,..).
ExprPtr parse_expr(const std::string& src);

// Parameter names occurring in an expression (function names excluded).
std::set<std::string> expr_symbols(const Expr& e);

// Evaluate to a Scalar, substituting any assigned parameters first.
// sqrt is admitted only on a rational perfect square (else IrrationalRadical).
Scalar eval_scalar(const Expr& e, const Assignment& subs = {});
Scalar parse_scalar(const std::string& src, const Assignment& subs = {});

// Exact square root of a nonnegative rational perfect square.
mpq_class rational_sqrt(const mpq_class& q);

// "lhs op rhs" with op in {>, <, >=, <=, !=, =}.
struct Constraint {
    enum class Op { Gt, Lt, Ge, Le, Ne, Eq };
    std::string text;
    Scalar diff;  // lhs - rhs
    Op op;
    bool holds(const Assignment& a) const;  // exact; DenominatorVanishes propagates
};
Constraint parse_constraint(const std::string& src, const Assignment& fixed = {});

}  // namespace lckv

#endif
