#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kslab {

/// Immutable AST for scalar field expressions over variables x1..xn.
///
/// Grammar (whitespace insignificant, '^' right-associative, unary minus
/// binds looser than '^' so -x^2 parses as -(x^2)):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | 'pi' | 'x'k | func '(' expr ')' | '(' expr ')'
///
/// Functions: sin, cos, exp, abs, sign, sqrt (all arity 1).
class FieldExpr {
public:
    enum class Kind { Constant, Variable, Binary, Call };
    enum class BinaryOp { Add, Sub, Mul, Div, Pow };
    enum class Func { Neg, Sin, Cos, Exp, Abs, Sign, Sqrt };

    /// Parse `source` as an expression in dimension `n`. Throws parse_error
    /// with a byte offset on malformed input or out-of-range variables.
    static FieldExpr parse(std::string_view source, int dimension);

    static FieldExpr constant(double v);
    static FieldExpr variable(int index_1based);
    static FieldExpr binary(BinaryOp op, FieldExpr lhs, FieldExpr rhs);
    static FieldExpr call(Func f, FieldExpr arg);

    /// Evaluate at a point; point.size() must cover every variable used.
    /// Throws eval_error on domain errors (sqrt of negative, division by
    /// zero or any non-finite intermediate).
    double eval(std::span<const double> point) const;

    Kind kind() const { return kind_; }
    double constant_value() const { return value_; }
    int variable_index() const { return var_; }
    BinaryOp binary_op() const { return bin_op_; }
    Func func() const { return func_; }
    const FieldExpr& child(int i) const { return children_[static_cast<std::size_t>(i)]; }
    int child_count() const { return static_cast<int>(children_.size()); }

    /// Structural equality (kinds, ops, constants bit-for-bit, children).
    bool operator==(const FieldExpr& other) const;

    /// Largest variable index referenced (0 if none).
    int max_variable() const;

private:
    FieldExpr() = default;

    Kind kind_ = Kind::Constant;
    double value_ = 0.0;
    int var_ = 0;
    BinaryOp bin_op_ = BinaryOp::Add;
    Func func_ = Func::Neg;
    std::vector<FieldExpr> children_;
};

} // namespace kslab
