#include "kslab/expr.hpp"

#include "kslab/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace kslab {

FieldExpr FieldExpr::constant(double v) {
    FieldExpr e;
    e.kind_ = Kind::Constant;
    e.value_ = v;
    return e;
}

FieldExpr FieldExpr::variable(int index_1based) {
    FieldExpr e;
    e.kind_ = Kind::Variable;
    e.var_ = index_1based;
    return e;
}

FieldExpr FieldExpr::binary(BinaryOp op, FieldExpr lhs, FieldExpr rhs) {
    FieldExpr e;
    e.kind_ = Kind::Binary;
    e.bin_op_ = op;
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

FieldExpr FieldExpr::call(Func f, FieldExpr arg) {
    FieldExpr e;
    e.kind_ = Kind::Call;
    e.func_ = f;
    e.children_.push_back(std::move(arg));
    return e;
}

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    int dimension;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    FieldExpr parse_expr() {
        FieldExpr lhs = parse_term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                FieldExpr rhs = parse_term();
                lhs = FieldExpr::binary(c == '+' ? FieldExpr::BinaryOp::Add : FieldExpr::BinaryOp::Sub,
                                        std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    FieldExpr parse_term() {
        FieldExpr lhs = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                FieldExpr rhs = parse_factor();
                lhs = FieldExpr::binary(c == '*' ? FieldExpr::BinaryOp::Mul : FieldExpr::BinaryOp::Div,
                                        std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    FieldExpr parse_factor() {
        if (consume('-')) {
            return FieldExpr::call(FieldExpr::Func::Neg, parse_factor());
        }
        FieldExpr base = parse_atom();
        if (consume('^')) {
            // right-associative exponent, may itself carry a unary minus
            FieldExpr exponent = parse_factor();
            return FieldExpr::binary(FieldExpr::BinaryOp::Pow, std::move(base), std::move(exponent));
        }
        return base;
    }

    FieldExpr parse_atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        if (c == '(') {
            ++pos;
            FieldExpr inner = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    FieldExpr parse_number() {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        if (pos - start == 0 || (pos - start == 1 && src[start] == '.'))
            fail("malformed number");
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            } else {
                pos = mark; // 'e' belongs to something else; not our exponent
            }
        }
        std::string text(src.substr(start, pos - start));
        return FieldExpr::constant(std::strtod(text.c_str(), nullptr));
    }

    FieldExpr parse_identifier() {
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string_view name = src.substr(start, pos - start);
        if (name == "pi") return FieldExpr::constant(M_PI);
        if (name.size() >= 2 && name[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(name[1]))) {
            int index = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    pos = start;
                    fail("unknown identifier '" + std::string(name) + "'");
                }
                index = index * 10 + (name[i] - '0');
            }
            if (index < 1 || index > dimension) {
                pos = start;
                fail("variable index out of range: x" + std::to_string(index) +
                     " with dimension " + std::to_string(dimension));
            }
            return FieldExpr::variable(index);
        }
        FieldExpr::Func f;
        if (name == "sin") f = FieldExpr::Func::Sin;
        else if (name == "cos") f = FieldExpr::Func::Cos;
        else if (name == "exp") f = FieldExpr::Func::Exp;
        else if (name == "abs") f = FieldExpr::Func::Abs;
        else if (name == "sign") f = FieldExpr::Func::Sign;
        else if (name == "sqrt") f = FieldExpr::Func::Sqrt;
        else {
            pos = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        if (!consume('(')) fail("expected '(' after function name");
        FieldExpr arg = parse_expr();
        if (!consume(')')) fail("expected ')' closing function argument");
        return FieldExpr::call(f, std::move(arg));
    }
};

} // namespace

FieldExpr FieldExpr::parse(std::string_view source, int dimension) {
    if (dimension < 1) throw parse_error("dimension must be >= 1", 0);
    Parser p{source, 0, dimension};
    FieldExpr e = p.parse_expr();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

double FieldExpr::eval(std::span<const double> point) const {
    switch (kind_) {
    case Kind::Constant:
        return value_;
    case Kind::Variable:
        if (var_ > static_cast<int>(point.size()))
            throw eval_error("point has too few coordinates for x" + std::to_string(var_));
        return point[static_cast<std::size_t>(var_ - 1)];
    case Kind::Binary: {
        double a = children_[0].eval(point);
        double b = children_[1].eval(point);
        double r = 0.0;
        switch (bin_op_) {
        case BinaryOp::Add: r = a + b; break;
        case BinaryOp::Sub: r = a - b; break;
        case BinaryOp::Mul: r = a * b; break;
        case BinaryOp::Div:
            if (b == 0.0) throw eval_error("division by zero");
            r = a / b;
            break;
        case BinaryOp::Pow:
            r = std::pow(a, b);
            break;
        }
        if (!std::isfinite(r)) throw eval_error("non-finite result");
        return r;
    }
    case Kind::Call: {
        double a = children_[0].eval(point);
        double r = 0.0;
        switch (func_) {
        case Func::Neg: r = -a; break;
        case Func::Sin: r = std::sin(a); break;
        case Func::Cos: r = std::cos(a); break;
        case Func::Exp: r = std::exp(a); break;
        case Func::Abs: r = std::fabs(a); break;
        case Func::Sign: r = (a > 0.0) ? 1.0 : (a < 0.0 ? -1.0 : 0.0); break;
        case Func::Sqrt:
            if (a < 0.0) throw eval_error("sqrt of negative value");
            r = std::sqrt(a);
            break;
        }
        if (!std::isfinite(r)) throw eval_error("non-finite result");
        return r;
    }
    }
    throw eval_error("corrupt expression node");
}

bool FieldExpr::operator==(const FieldExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case Kind::Constant:
        if (value_ != other.value_) return false;
        break;
    case Kind::Variable:
        if (var_ != other.var_) return false;
        break;
    case Kind::Binary:
        if (bin_op_ != other.bin_op_) return false;
        break;
    case Kind::Call:
        if (func_ != other.func_) return false;
        break;
    }
    if (children_.size() != other.children_.size()) return false;
    for (std::size_t i = 0; i < children_.size(); ++i)
        if (!(children_[i] == other.children_[i])) return false;
    return true;
}

int FieldExpr::max_variable() const {
    int m = (kind_ == Kind::Variable) ? var_ : 0;
    for (const auto& c : children_) m = std::max(m, c.max_variable());
    return m;
}

} // namespace kslab
