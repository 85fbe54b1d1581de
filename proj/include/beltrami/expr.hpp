#pragma once

#include <beltrami/jet.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace beltrami {

/// Parse/eval errors carry a 1-based byte offset into the source text.
struct ExprError : Error {
    ExprError(const std::string& what, std::size_t offset_)
        : Error(what + " (offset " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

struct SyntaxError : ExprError {
    using ExprError::ExprError;
};

struct UnknownIdentifier : ExprError {
    using ExprError::ExprError;
};

struct ArityError : ExprError {
    using ExprError::ExprError;
};

/// Evaluation failure annotated with the offending subexpression's span.
struct EvalError : ExprError {
    EvalError(const std::string& what, std::size_t begin, std::size_t end_)
        : ExprError(what, begin), end(end_) {}
    std::size_t end;
};

enum class FnKind { Sin, Cos, Sinh, Cosh, Tan, Exp, Ln, Sqrt, Abs };

inline const char* fn_name(FnKind f) {
    switch (f) {
        case FnKind::Sin: return "sin";
        case FnKind::Cos: return "cos";
        case FnKind::Sinh: return "sinh";
        case FnKind::Cosh: return "cosh";
        case FnKind::Tan: return "tan";
        case FnKind::Exp: return "exp";
        case FnKind::Ln: return "ln";
        case FnKind::Sqrt: return "sqrt";
        case FnKind::Abs: return "abs";
    }
    return "?";
}

namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Number, NamedConstant, Variable, Unary, Binary, Call };
    Kind kind;
    double number = 0.0;       // Number
    std::string constant;      // NamedConstant: "pi" | "e"
    Var var = Var::U;          // Variable
    char op = 0;               // Binary: + - * / ^ ; Unary is always negation
    FnKind fn = FnKind::Sin;   // Call
    NodePtr lhs, rhs;          // children; Unary/Call use lhs only
    std::size_t begin = 0, end = 0;  // 1-based byte span [begin, end)
};

}  // namespace ast

/// An immutable expression over variables u, v. Cheap to copy and share.
class Expr {
public:
    Expr() = default;
    explicit Expr(ast::NodePtr root) : root_(std::move(root)) {}

    bool valid() const { return root_ != nullptr; }
    const ast::Node& root() const { return *root_; }
    ast::NodePtr node() const { return root_; }

    bool uses(Var v) const { return valid() && uses_impl(*root_, v); }

private:
    static bool uses_impl(const ast::Node& n, Var v) {
        using K = ast::Node::Kind;
        switch (n.kind) {
            case K::Variable: return n.var == v;
            case K::Unary:
            case K::Call: return uses_impl(*n.lhs, v);
            case K::Binary: return uses_impl(*n.lhs, v) || uses_impl(*n.rhs, v);
            default: return false;
        }
    }

    ast::NodePtr root_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ast::NodePtr parse() {
        ast::NodePtr e = sum();
        skip_ws();
        if (pos_ < src_.size())
            throw SyntaxError("unexpected trailing input", pos_ + 1);
        return e;
    }

private:
    // sum   := term (('+'|'-') term)*
    // term  := unary (('*'|'/') unary)*
    // unary := '-' unary | power
    // power := primary ('^' unary)?          (right-associative)
    ast::NodePtr sum() {
        ast::NodePtr lhs = term();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                const char op = src_[pos_++];
                ast::NodePtr rhs = term();
                lhs = binary(op, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    ast::NodePtr term() {
        ast::NodePtr lhs = unary();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '*' || src_[pos_] == '/')) {
                const char op = src_[pos_++];
                ast::NodePtr rhs = unary();
                lhs = binary(op, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    ast::NodePtr unary() {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '-') {
            const std::size_t start = pos_++;
            ast::NodePtr operand = unary();
            auto n = std::make_shared<ast::Node>();
            n->kind = ast::Node::Kind::Unary;
            n->lhs = operand;
            n->begin = start + 1;
            n->end = operand->end;
            return n;
        }
        return power();
    }

    ast::NodePtr power() {
        ast::NodePtr base = primary();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            ast::NodePtr exponent = unary();
            return binary('^', base, exponent);
        }
        return base;
    }

    ast::NodePtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_ + 1);
        const char c = src_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            ast::NodePtr inner = sum();
            expect(')', "unmatched '('", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_ + 1);
    }

    ast::NodePtr number() {
        const std::size_t start = pos_;
        double value = 0.0;
        const char* first = src_.data() + pos_;
        const char* last = src_.data() + src_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc()) throw SyntaxError("malformed number literal", start + 1);
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        auto n = std::make_shared<ast::Node>();
        n->kind = ast::Node::Kind::Number;
        n->number = value;
        n->begin = start + 1;
        n->end = pos_ + 1;
        return n;
    }

    ast::NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        auto n = std::make_shared<ast::Node>();
        n->begin = start + 1;
        n->end = pos_ + 1;

        if (name == "u" || name == "v") {
            n->kind = ast::Node::Kind::Variable;
            n->var = (name == "u") ? Var::U : Var::V;
            return n;
        }
        if (name == "pi" || name == "e") {
            n->kind = ast::Node::Kind::NamedConstant;
            n->constant = std::string(name);
            return n;
        }
        const FnKind* fn = lookup_fn(name);
        if (fn == nullptr)
            throw UnknownIdentifier("unknown identifier '" + std::string(name) + "'", start + 1);

        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '(')
            throw SyntaxError("expected '(' after function name '" + std::string(name) + "'",
                              pos_ + 1);
        const std::size_t open = pos_++;
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == ')')
            throw ArityError("function '" + std::string(name) + "' expects 1 argument, got 0",
                             pos_ + 1);
        ast::NodePtr arg = sum();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == ',')
            throw ArityError("function '" + std::string(name) + "' expects exactly 1 argument",
                             pos_ + 1);
        expect(')', "unmatched '('", open);
        n->kind = ast::Node::Kind::Call;
        n->fn = *fn;
        n->lhs = arg;
        n->end = pos_ + 1;
        return n;
    }

    static const FnKind* lookup_fn(std::string_view name) {
        static const std::pair<std::string_view, FnKind> table[] = {
            {"sin", FnKind::Sin},   {"cos", FnKind::Cos},  {"sinh", FnKind::Sinh},
            {"cosh", FnKind::Cosh}, {"tan", FnKind::Tan},  {"exp", FnKind::Exp},
            {"ln", FnKind::Ln},     {"sqrt", FnKind::Sqrt}, {"abs", FnKind::Abs},
        };
        for (const auto& [n, f] : table)
            if (n == name) return &f;
        return nullptr;
    }

    ast::NodePtr binary(char op, ast::NodePtr lhs, ast::NodePtr rhs) {
        auto n = std::make_shared<ast::Node>();
        n->kind = ast::Node::Kind::Binary;
        n->op = op;
        n->begin = lhs->begin;
        n->end = rhs->end;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    void expect(char c, const char* msg, std::size_t anchor) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) {
            if (pos_ >= src_.size()) throw SyntaxError(msg, pos_ + 1);
            throw SyntaxError(std::string("expected '") + c + "'", pos_ + 1);
        }
        (void)anchor;
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline int precedence(const ast::Node& n) {
    using K = ast::Node::Kind;
    if (n.kind == K::Binary) {
        if (n.op == '+' || n.op == '-') return 1;
        if (n.op == '*' || n.op == '/') return 2;
        return 4;  // '^'
    }
    if (n.kind == K::Unary) return 3;
    return 5;  // atoms
}

inline void unparse_impl(const ast::Node& n, std::ostringstream& out) {
    using K = ast::Node::Kind;
    auto child = [&](const ast::Node& c, bool needs_parens) {
        if (needs_parens) out << '(';
        unparse_impl(c, out);
        if (needs_parens) out << ')';
    };
    switch (n.kind) {
        case K::Number: {
            std::ostringstream num;
            num.precision(17);
            num << n.number;
            out << num.str();
            break;
        }
        case K::NamedConstant: out << n.constant; break;
        case K::Variable: out << (n.var == Var::U ? 'u' : 'v'); break;
        case K::Unary:
            out << '-';
            child(*n.lhs, precedence(*n.lhs) < precedence(n));
            break;
        case K::Binary: {
            const int p = precedence(n);
            // '^' is right-associative, everything else left-associative, so
            // an equal-precedence child on the associative side prints bare
            // and needs parens on the other side to preserve the tree shape.
            const bool left_parens =
                precedence(*n.lhs) < p || (n.op == '^' && precedence(*n.lhs) == p);
            const bool right_parens =
                precedence(*n.rhs) < p || (n.op != '^' && precedence(*n.rhs) == p);
            child(*n.lhs, left_parens);
            out << n.op;
            child(*n.rhs, right_parens);
            break;
        }
        case K::Call:
            out << fn_name(n.fn) << '(';
            unparse_impl(*n.lhs, out);
            out << ')';
            break;
    }
}

inline bool is_integer(double x) {
    return std::abs(x - std::nearbyint(x)) < 1e-12 && std::abs(x) < 1e9;
}

}  // namespace detail

inline Expr parse(std::string_view src) { return Expr(detail::Parser(src).parse()); }

inline std::string unparse(const Expr& e) {
    std::ostringstream out;
    detail::unparse_impl(e.root(), out);
    return out.str();
}

inline bool tree_equal(const ast::Node& a, const ast::Node& b) {
    using K = ast::Node::Kind;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case K::Number: return a.number == b.number;
        case K::NamedConstant: return a.constant == b.constant;
        case K::Variable: return a.var == b.var;
        case K::Unary: return tree_equal(*a.lhs, *b.lhs);
        case K::Binary:
            return a.op == b.op && tree_equal(*a.lhs, *b.lhs) && tree_equal(*a.rhs, *b.rhs);
        case K::Call: return a.fn == b.fn && tree_equal(*a.lhs, *b.lhs);
    }
    return false;
}

inline bool tree_equal(const Expr& a, const Expr& b) { return tree_equal(a.root(), b.root()); }

/// Plain scalar evaluation; the independent reference path for eval_jet.
inline double eval(const Expr& e, double u, double v) {
    using K = ast::Node::Kind;
    struct Walk {
        double u, v;
        double operator()(const ast::Node& n) const {
            switch (n.kind) {
                case K::Number: return n.number;
                case K::NamedConstant: return n.constant == "pi" ? M_PI : M_E;
                case K::Variable: return n.var == Var::U ? u : v;
                case K::Unary: return -(*this)(*n.lhs);
                case K::Binary: {
                    const double a = (*this)(*n.lhs);
                    const double b = (*this)(*n.rhs);
                    switch (n.op) {
                        case '+': return a + b;
                        case '-': return a - b;
                        case '*': return a * b;
                        case '/': return a / b;
                        default: return std::pow(a, b);
                    }
                }
                case K::Call: {
                    const double a = (*this)(*n.lhs);
                    switch (n.fn) {
                        case FnKind::Sin: return std::sin(a);
                        case FnKind::Cos: return std::cos(a);
                        case FnKind::Sinh: return std::sinh(a);
                        case FnKind::Cosh: return std::cosh(a);
                        case FnKind::Tan: return std::tan(a);
                        case FnKind::Exp: return std::exp(a);
                        case FnKind::Ln: return std::log(a);
                        case FnKind::Sqrt: return std::sqrt(a);
                        case FnKind::Abs: return std::abs(a);
                    }
                    return 0.0;
                }
            }
            return 0.0;
        }
    };
    return Walk{u, v}(e.root());
}

/// Structural recursion onto jet arithmetic. Jet-level domain failures are
/// rethrown with the offending subexpression's source span attached.
inline Jet eval_jet(const Expr& e, const Jet& u, const Jet& v) {
    using K = ast::Node::Kind;
    const int order = std::min(u.order(), v.order());
    struct Walk {
        const Jet& u;
        const Jet& v;
        int order;

        Jet operator()(const ast::Node& n) const {
            try {
                return dispatch(n);
            } catch (const ExprError&) {
                throw;  // already annotated deeper in the tree
            } catch (const Error& err) {
                throw EvalError(err.what(), n.begin, n.end);
            }
        }

        Jet dispatch(const ast::Node& n) const {
            switch (n.kind) {
                case K::Number: return Jet::constant(n.number, order);
                case K::NamedConstant:
                    return Jet::constant(n.constant == "pi" ? M_PI : M_E, order);
                case K::Variable: return n.var == Var::U ? u : v;
                case K::Unary: return -(*this)(*n.lhs);
                case K::Binary: {
                    const Jet a = (*this)(*n.lhs);
                    if (n.op == '^') return power(n, a);
                    const Jet b = (*this)(*n.rhs);
                    switch (n.op) {
                        case '+': return a + b;
                        case '-': return a - b;
                        case '*': return a * b;
                        default: return a / b;
                    }
                }
                case K::Call: {
                    const Jet a = (*this)(*n.lhs);
                    switch (n.fn) {
                        case FnKind::Sin: return sin(a);
                        case FnKind::Cos: return cos(a);
                        case FnKind::Sinh: return sinh(a);
                        case FnKind::Cosh: return cosh(a);
                        case FnKind::Tan: return tan(a);
                        case FnKind::Exp: return exp(a);
                        case FnKind::Ln: return log(a);
                        case FnKind::Sqrt: return sqrt(a);
                        case FnKind::Abs: return abs(a);
                    }
                    return Jet();
                }
            }
            return Jet();
        }

        Jet power(const ast::Node& n, const Jet& base) const {
            const Jet expo = (*this)(*n.rhs);
            bool exponent_constant = true;
            for (int a = 0; a <= expo.order() && exponent_constant; ++a)
                for (int b = 0; a + b <= expo.order(); ++b)
                    if ((a + b) > 0 && expo.coeff(a, b) != 0.0) {
                        exponent_constant = false;
                        break;
                    }
            try {
                if (exponent_constant) {
                    const double r = expo.value();
                    if (detail::is_integer(r))
                        return pow(base, static_cast<int>(std::llrint(r)));
                    return pow(base, r);
                }
                return exp(expo * log(base));  // variable exponent
            } catch (const Error& err) {
                throw EvalError(err.what(), n.begin, n.end);
            }
        }
    };
    return Walk{u, v, order}(e.root());
}

}  // namespace beltrami
