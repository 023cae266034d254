#include "toric/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace toric {

namespace {

std::optional<Analytic> function_named(const std::string& name) {
    if (name == "sin") return Analytic::sin;
    if (name == "cos") return Analytic::cos;
    if (name == "tan") return Analytic::tan;
    if (name == "sinh") return Analytic::sinh;
    if (name == "cosh") return Analytic::cosh;
    if (name == "tanh") return Analytic::tanh;
    if (name == "exp") return Analytic::exp;
    if (name == "log") return Analytic::log;
    if (name == "sqrt") return Analytic::sqrt;
    if (name == "abs") return Analytic::abs;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    Expression run() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != src_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return {e};
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (consume('+')) {
                e = binary('+', e, term());
            } else if (consume('-')) {
                e = binary('-', e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (consume('*')) {
                e = binary('*', e, factor());
            } else if (consume('/')) {
                e = binary('/', e, factor());
            } else {
                return e;
            }
        }
    }

    // Right-associative power: a^b^c is a^(b^c).
    ExprPtr factor() {
        ExprPtr b = base();
        if (consume('^')) {
            return binary('^', b, factor());
        }
        return b;
    }

    ExprPtr base() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::negate;
            n->lhs = base();
            return n;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!consume(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return identifier();
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         pos_);
    }

    ExprPtr number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                ++pos_;
            }
            if (pos_ < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
            } else {
                pos_ = mark;  // the 'e' was not an exponent
            }
        }
        double value = 0.0;
        auto [ptr, ec] =
            std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            throw ParseError("malformed number", start);
        }
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::number;
        n->number = value;
        return n;
    }

    ExprPtr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        std::string name = src_.substr(start, pos_ - start);
        if (name == "x" || name == "y" || name == "t") {
            if (peek() == '(') {
                throw ParseError("variable '" + name +
                                     "' cannot be called as a function",
                                 start);
            }
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::variable;
            n->var = name[0];
            return n;
        }
        if (auto fn = function_named(name)) {
            if (!consume('(')) {
                throw ParseError("function '" + name +
                                     "' requires a parenthesized argument",
                                 pos_);
            }
            ExprPtr arg = expr();
            if (!consume(')')) {
                throw ParseError("expected ')'", pos_);
            }
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::call;
            n->fn = *fn;
            n->lhs = arg;
            return n;
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    static ExprPtr binary(char op, ExprPtr a, ExprPtr b) {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::binary;
        n->op = op;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }
};

std::string number_to_string(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void print_node(const ExprPtr& n, std::string& out) {
    switch (n->kind) {
        case ExprNode::Kind::number:
            out += number_to_string(n->number);
            return;
        case ExprNode::Kind::variable:
            out += n->var;
            return;
        case ExprNode::Kind::negate:
            out += "(-";
            print_node(n->lhs, out);
            out += ')';
            return;
        case ExprNode::Kind::binary:
            out += '(';
            print_node(n->lhs, out);
            out += n->op;
            print_node(n->rhs, out);
            out += ')';
            return;
        case ExprNode::Kind::call:
            out += analytic_name(n->fn);
            out += '(';
            print_node(n->lhs, out);
            out += ')';
            return;
    }
}

bool equal_node(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::number:
            return a->number == b->number;
        case ExprNode::Kind::variable:
            return a->var == b->var;
        case ExprNode::Kind::negate:
            return equal_node(a->lhs, b->lhs);
        case ExprNode::Kind::binary:
            return a->op == b->op && equal_node(a->lhs, b->lhs) &&
                   equal_node(a->rhs, b->rhs);
        case ExprNode::Kind::call:
            return a->fn == b->fn && equal_node(a->lhs, b->lhs);
    }
    return false;
}

// A constant exponent jet (all derivative slots zero) with an integer value
// gets the repeated-multiplication path, which is exact for any base sign.
template <typename Jet>
bool jet_is_constant(const Jet& j);

template <>
bool jet_is_constant(const Jet2& j) {
    return j.d10 == 0.0 && j.d01 == 0.0 && j.d20 == 0.0 && j.d11 == 0.0 &&
           j.d02 == 0.0 && j.d30 == 0.0 && j.d21 == 0.0 && j.d12 == 0.0 &&
           j.d03 == 0.0;
}

template <>
bool jet_is_constant(const Jet1& j) {
    return j.d1 == 0.0 && j.d2 == 0.0 && j.d3 == 0.0;
}

template <typename Jet>
Jet jet_pow(const Jet& a, const Jet& b) {
    if (jet_is_constant(b)) {
        double p = b.value;
        double rounded = std::nearbyint(p);
        if (p == rounded && std::abs(p) < 1e9) {
            return pow_int(a, static_cast<long long>(rounded));
        }
        return pow_real(a, p);
    }
    return exp(b * log(a));  // general case needs a positive base
}

template <typename Jet, typename VarFn>
Jet eval_node(const ExprPtr& n, const VarFn& var) {
    switch (n->kind) {
        case ExprNode::Kind::number:
            return Jet::constant(n->number);
        case ExprNode::Kind::variable:
            return var(n->var);
        case ExprNode::Kind::negate:
            return -eval_node<Jet>(n->lhs, var);
        case ExprNode::Kind::binary: {
            Jet a = eval_node<Jet>(n->lhs, var);
            Jet b = eval_node<Jet>(n->rhs, var);
            switch (n->op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return jet_pow(a, b);
            }
            throw std::logic_error("bad operator");
        }
        case ExprNode::Kind::call:
            return jet_compose(n->fn, eval_node<Jet>(n->lhs, var));
    }
    throw std::logic_error("bad node");
}

void reject_variable(const ExprPtr& n, char banned, const char* context) {
    if (n->kind == ExprNode::Kind::variable && n->var == banned) {
        throw std::invalid_argument(std::string("variable '") + banned +
                                    "' not allowed in " + context);
    }
    if (n->lhs) reject_variable(n->lhs, banned, context);
    if (n->rhs) reject_variable(n->rhs, banned, context);
}

[[noreturn]] void rethrow_at_point(const std::domain_error& e, double x,
                                   double y) {
    std::ostringstream msg;
    msg << e.what() << " at (" << x << ", " << y << ")";
    throw std::domain_error(msg.str());
}

}  // namespace

Expression parse_expression(const std::string& src) {
    return Parser(src).run();
}

std::string print_expression(const Expression& e) {
    std::string out;
    print_node(e.root, out);
    return out;
}

bool structurally_equal(const Expression& a, const Expression& b) {
    return equal_node(a.root, b.root);
}

ScalarField2 compile_expression(const Expression& e) {
    reject_variable(e.root, 't', "a field over (x, y)");
    ExprPtr root = e.root;
    return {[root](double x, double y) {
        auto var = [&](char v) {
            return v == 'x' ? Jet2::variable_x(x) : Jet2::variable_y(y);
        };
        try {
            return eval_node<Jet2>(root, var);
        } catch (const std::domain_error& err) {
            rethrow_at_point(err, x, y);
        }
    }};
}

ScalarField2 compile_expression(const std::string& src) {
    return compile_expression(parse_expression(src));
}

Profile1 compile_profile(const Expression& e) {
    reject_variable(e.root, 'x', "a univariate profile");
    reject_variable(e.root, 'y', "a univariate profile");
    ExprPtr root = e.root;
    return {[root](double t) {
        auto var = [&](char) { return Jet1::variable(t); };
        return eval_node<Jet1>(root, var);
    }};
}

Profile1 compile_profile(const std::string& src) {
    return compile_profile(parse_expression(src));
}

}  // namespace toric
