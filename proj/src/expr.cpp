#include "lckv/expr.hpp"

#include "lckv/error.hpp"

#include <cctype>

namespace lckv {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        auto e = sum();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& m) const {
        fail("ParseError", m + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->args = std::move(args);
        return e;
    }

    ExprPtr sum() {
        auto lhs = product();
        while (true) {
            if (eat('+')) lhs = node(Expr::Kind::Add, {lhs, product()});
            else if (eat('-')) lhs = node(Expr::Kind::Sub, {lhs, product()});
            else return lhs;
        }
    }
    ExprPtr product() {
        auto lhs = unary();
        while (true) {
            if (eat('*')) lhs = node(Expr::Kind::Mul, {lhs, unary()});
            else if (eat('/')) lhs = node(Expr::Kind::Div, {lhs, unary()});
            else return lhs;
        }
    }
    ExprPtr unary() {
        if (eat('-')) return node(Expr::Kind::Neg, {unary()});
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power() {
        auto base = primary();
        if (eat('^')) return node(Expr::Kind::Pow, {base, unary()});
        return base;
    }
    ExprPtr primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            if (!eat(')')) error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        error("unexpected '" + std::string(1, c) + "'");
    }
    ExprPtr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string whole = s_.substr(start, pos_ - start), frac;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            std::size_t f = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            frac = s_.substr(f, pos_ - f);
        }
        if (whole.empty() && frac.empty()) error("bad number");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->text = s_.substr(start, pos_ - start);
        mpz_class scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        mpz_class digits(whole.empty() ? std::string("0") + frac : whole + frac);
        e->value = mpq_class(digits, scale);
        e->value.canonicalize();
        return e;
    }
    ExprPtr name() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        auto e = std::make_shared<Expr>();
        bool digits = id.size() > 1 && id[0] == 'e';
        for (std::size_t k = 1; k < id.size() && digits; ++k)
            digits = std::isdigit(static_cast<unsigned char>(id[k])) != 0;
        if (digits) {
            e->kind = Expr::Kind::Atom;
            for (std::size_t k = 1; k < id.size(); ++k) e->indices.push_back(id[k] - '0');
            e->text = id;
            return e;
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            if (id == "e") {
                e->kind = Expr::Kind::Atom;
                do {
                    skip();
                    std::size_t f = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                    if (f == pos_) error("expected index");
                    e->indices.push_back(std::stoi(s_.substr(f, pos_ - f)));
                } while (eat(','));
                if (!eat(')')) error("expected ')'");
                e->text = s_.substr(start, pos_ - start);
                return e;
            }
            e->kind = Expr::Kind::Call;
            e->text = id;
            e->args.push_back(sum());
            if (!eat(')')) error("expected ')'");
            return e;
        }
        e->kind = Expr::Kind::Symbol;
        e->text = id;
        return e;
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::set<std::string> expr_symbols(const Expr& e) {
    std::set<std::string> out;
    if (e.kind == Expr::Kind::Symbol) out.insert(e.text);
    for (const auto& a : e.args) out.merge(expr_symbols(*a));
    return out;
}

mpq_class rational_sqrt(const mpq_class& q) {
    if (q < 0) fail("IrrationalRadical", "sqrt of negative " + q.get_str());
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        fail("IrrationalRadical", "sqrt(" + q.get_str() + ")");
    return mpq_class(sqrt(n), sqrt(d));
}

Scalar eval_scalar(const Expr& e, const Assignment& subs) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Number: return Scalar(e.value);
    case K::Symbol: {
        auto it = subs.find(e.text);
        return it == subs.end() ? Scalar::variable(e.text) : Scalar(it->second);
    }
    case K::Atom: fail("ParseError", "form atom '" + e.text + "' in scalar expression");
    case K::Add: return eval_scalar(*e.args[0], subs) + eval_scalar(*e.args[1], subs);
    case K::Sub: return eval_scalar(*e.args[0], subs) - eval_scalar(*e.args[1], subs);
    case K::Mul: return eval_scalar(*e.args[0], subs) * eval_scalar(*e.args[1], subs);
    case K::Div: return eval_scalar(*e.args[0], subs) / eval_scalar(*e.args[1], subs);
    case K::Neg: return -eval_scalar(*e.args[0], subs);
    case K::Pow: {
        Scalar x = eval_scalar(*e.args[1], subs);
        if (!x.is_constant() || x.constant_value().get_den() != 1) fail("ParseError", "non-integer exponent");
        return eval_scalar(*e.args[0], subs).pow(static_cast<int>(x.constant_value().get_num().get_si()));
    }
    case K::Call: {
        if (e.text != "sqrt") fail("ParseError", "unknown function " + e.text);
        Scalar x = eval_scalar(*e.args[0], subs);
        if (!x.is_constant()) fail("IrrationalRadical", "symbolic radicand " + x.str());
        return Scalar(rational_sqrt(x.constant_value()));
    }
    }
    fail("ParseError", "bad node");
}

Scalar parse_scalar(const std::string& src, const Assignment& subs) { return eval_scalar(*parse_expr(src), subs); }

bool Constraint::holds(const Assignment& a) const {
    int s = sgn(diff.eval(a));
    switch (op) {
    case Op::Gt: return s > 0;
    case Op::Lt: return s < 0;
    case Op::Ge: return s >= 0;
    case Op::Le: return s <= 0;
    case Op::Ne: return s != 0;
    case Op::Eq: return s == 0;
    }
    return false;
}

Constraint parse_constraint(const std::string& src, const Assignment& fixed) {
    static const std::pair<const char*, Constraint::Op> ops[] = {
        {">=", Constraint::Op::Ge}, {"<=", Constraint::Op::Le}, {"!=", Constraint::Op::Ne},
        {">", Constraint::Op::Gt},  {"<", Constraint::Op::Lt},  {"=", Constraint::Op::Eq}};
    for (const auto& [tok, op] : ops) {
        auto p = src.find(tok);
        if (p == std::string::npos) continue;
        Scalar lhs = parse_scalar(src.substr(0, p), fixed);
        Scalar rhs = parse_scalar(src.substr(p + std::string(tok).size()), fixed);
        return Constraint{src, lhs - rhs, op};
    }
    fail("ParseError", "no comparison operator in \"" + src + "\"");
}

}  // namespace lckv
