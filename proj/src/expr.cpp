#include "tsol/expr.hpp"

#include "tsol/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace tsol {

namespace {

const char* const kFunNames[] = {"sin",  "cos", "tan", "sinh",  "cosh", "tanh",
                                 "exp",  "log", "atan", "atanh", "sqrt"};
constexpr int kFunCount = int(sizeof(kFunNames) / sizeof(kFunNames[0]));

Jet1 apply_fun(int fun, const Jet1& a) {
    switch (fun) {
    case 0: return sin(a);
    case 1: return cos(a);
    case 2: return tan(a);
    case 3: return sinh(a);
    case 4: return cosh(a);
    case 5: return tanh(a);
    case 6: return exp(a);
    case 7: return log(a);
    case 8: return atan(a);
    case 9: return atanh(a);
    case 10: return sqrt(a);
    }
    throw Error(ErrorKind::ParseError, "corrupt expression tree");
}

ExprPtr node(Expr::Op op, ExprPtr a = {}, ExprPtr b = {}) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr const_node(double v) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Const;
    e->value = v;
    return e;
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << msg << " at position " << pos << " in '" << text << "'";
        throw Error(ErrorKind::ParseError, os.str());
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        for (;;) {
            if (eat('+')) lhs = node(Expr::Op::Add, lhs, parse_product());
            else if (eat('-')) lhs = node(Expr::Op::Sub, lhs, parse_product());
            else return lhs;
        }
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (eat('*')) lhs = node(Expr::Op::Mul, lhs, parse_unary());
            else if (eat('/')) lhs = node(Expr::Op::Div, lhs, parse_unary());
            else return lhs;
        }
    }

    ExprPtr parse_unary() {
        if (eat('-')) return node(Expr::Op::Neg, parse_unary());
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (eat('^')) return node(Expr::Op::Pow, base, parse_unary());
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    ExprPtr parse_number() {
        const char* start = text.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(start, &end);
        if (end == start) fail("malformed number");
        pos += size_t(end - start);
        return const_node(v);
    }

    ExprPtr parse_ident() {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (peek() == '(') {
            for (int i = 0; i < kFunCount; ++i) {
                if (name == kFunNames[i]) {
                    eat('(');
                    ExprPtr arg = parse_sum();
                    if (!eat(')')) fail("expected ')' after function argument");
                    auto e = std::make_shared<Expr>();
                    e->op = Expr::Op::Fun;
                    e->fun = i;
                    e->a = std::move(arg);
                    return e;
                }
            }
            pos = start;
            fail("unknown function '" + name + "'");
        }
        if (name == "s") return node(Expr::Op::Var);
        if (name == "pi") return const_node(M_PI);
        if (name == "e") return const_node(M_E);
        pos = start;
        fail("unknown identifier '" + name + "' (the variable is s)");
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p{text};
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return e;
}

std::array<ExprPtr, 3> parse_vec_expr(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos || text[first] != '(' || text[last] != ')')
        throw Error(ErrorKind::ParseError, "vector expression must look like (ex, ey, ez)");
    std::string body = text.substr(first + 1, last - first - 1);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw Error(ErrorKind::ParseError, "vector expression needs exactly 3 components");
    return {parse_expr(parts[0]), parse_expr(parts[1]), parse_expr(parts[2])};
}

Jet1 eval_jet(const Expr& e, double s) {
    switch (e.op) {
    case Expr::Op::Const: return Jet1::constant(e.value);
    case Expr::Op::Var: return Jet1::variable(s);
    case Expr::Op::Add: return eval_jet(*e.a, s) + eval_jet(*e.b, s);
    case Expr::Op::Sub: return eval_jet(*e.a, s) - eval_jet(*e.b, s);
    case Expr::Op::Mul: return eval_jet(*e.a, s) * eval_jet(*e.b, s);
    case Expr::Op::Div: {
        Jet1 den = eval_jet(*e.b, s);
        if (den.f == 0.0) throw Error(ErrorKind::EvalDomainError, "division by zero");
        return eval_jet(*e.a, s) / den;
    }
    case Expr::Op::Pow: return pow(eval_jet(*e.a, s), eval_jet(*e.b, s));
    case Expr::Op::Neg: return -eval_jet(*e.a, s);
    case Expr::Op::Fun: return apply_fun(e.fun, eval_jet(*e.a, s));
    }
    throw Error(ErrorKind::ParseError, "corrupt expression tree");
}

double eval_value(const Expr& e, double s) { return eval_jet(e, s).f; }

ScalarFn expr_scalar_fn(ExprPtr e) {
    return [e = std::move(e)](double s) { return eval_jet(*e, s); };
}

Curve expr_curve(const std::array<ExprPtr, 3>& components) {
    return [x = components[0], y = components[1], z = components[2]](double s) {
        Jet1 jx = eval_jet(*x, s), jy = eval_jet(*y, s), jz = eval_jet(*z, s);
        return CurveJet{{jx.f, jy.f, jz.f}, {jx.d1, jy.d1, jz.d1}, {jx.d2, jy.d2, jz.d2}};
    };
}

} // namespace tsol
