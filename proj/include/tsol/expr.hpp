#pragma once

#include "tsol/curve.hpp"
#include "tsol/jet.hpp"

#include <array>
#include <memory>
#include <string>

namespace tsol {

// Parsed expression tree over the single variable s. Trees are immutable and
// shared; evaluation produces second-order jets so profiles defined on the
// command line get exact derivatives, not finite differences.
struct Expr {
    enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Fun };
    Op op;
    double value = 0.0; // Const
    int fun = -1;       // Fun: index into the builtin table
    std::shared_ptr<const Expr> a, b;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar: + - * / ^ (right associative), unary minus, parentheses, numeric
/// literals, the variable s, constants pi and e, and the functions sin cos
/// tan sinh cosh tanh exp log atan atanh sqrt. Throws Error(ParseError) with
/// the offending position.
ExprPtr parse_expr(const std::string& text);

/// "(ex, ey, ez)": three comma separated components, parens balanced inside.
std::array<ExprPtr, 3> parse_vec_expr(const std::string& text);

Jet1 eval_jet(const Expr& e, double s); // throws Error(EvalDomainError)
double eval_value(const Expr& e, double s);

ScalarFn expr_scalar_fn(ExprPtr e);
Curve expr_curve(const std::array<ExprPtr, 3>& components);

} // namespace tsol
