#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sl2hecke/centre.hpp"
#include "sl2hecke/hecke.hpp"

namespace sl2hecke {

// Surface syntax for H-elements:
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" NAT)?
//   atom   := "tau0" | "tau1" | "zeta" | "e(" INT ")" | "w(" INT ")"
//           | "X(" INT ")" | "iota(" expr ")" | "J(" expr ")" | NAT | "(" expr ")"
// Integer arguments of e/w/X may be negative and are reduced mod q-1 at
// evaluation time.

struct Expr {
    enum class Kind { add, sub, mul, pow, tau0, tau1, zeta, idem, omega, xgen, num, iota_wrap, j_wrap };
    Kind kind;
    long arg = 0;  // atom argument, or the exponent of pow
    std::vector<std::shared_ptr<Expr>> kids;
};

using ExprPtr = std::shared_ptr<Expr>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    long integer(bool allow_negative) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_negative && pos_ < src_.size() && src_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= src_.size() || !isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected an integer", start);
        long v = 0;
        while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && (isalpha(static_cast<unsigned char>(src_[pos_])) ||
                                      isdigit(static_cast<unsigned char>(src_[pos_]))))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    ExprPtr make(Expr::Kind k, long arg = 0, std::vector<ExprPtr> kids = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->arg = arg;
        e->kids = std::move(kids);
        return e;
    }

    ExprPtr wrapped_arg(Expr::Kind k) {
        expect('(', "after the atom name");
        long v = integer(true);
        expect(')', "closing the argument");
        return make(k, v);
    }

    ExprPtr atom() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= src_.size()) throw ParseError("expected an atom", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "closing the group");
            return e;
        }
        if (isdigit(static_cast<unsigned char>(c))) return make(Expr::Kind::num, integer(false));
        if (!isalpha(static_cast<unsigned char>(c))) throw ParseError("expected an atom", pos_);
        std::string name = ident();
        if (name == "tau0") return make(Expr::Kind::tau0);
        if (name == "tau1") return make(Expr::Kind::tau1);
        if (name == "zeta") return make(Expr::Kind::zeta);
        if (name == "e") return wrapped_arg(Expr::Kind::idem);
        if (name == "w") return wrapped_arg(Expr::Kind::omega);
        if (name == "X") return wrapped_arg(Expr::Kind::xgen);
        if (name == "iota") {
            expect('(', "after iota");
            ExprPtr e = expr();
            expect(')', "closing iota");
            return make(Expr::Kind::iota_wrap, 0, {e});
        }
        if (name == "J") {
            expect('(', "after J");
            ExprPtr e = expr();
            expect(')', "closing J");
            return make(Expr::Kind::j_wrap, 0, {e});
        }
        throw ParseError("unknown atom '" + name + "'", start);
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (eat('^')) {
            long n = integer(false);
            return make(Expr::Kind::pow, n, {base});
        }
        return base;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (eat('*')) e = make(Expr::Kind::mul, 0, {e, factor()});
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = make(Expr::Kind::add, 0, {e, term()});
            else if (eat('-'))
                e = make(Expr::Kind::sub, 0, {e, term()});
            else
                return e;
        }
    }
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src) { return detail::Parser(src).parse(); }

inline HElem eval_expr(const Expr& e, const FieldSpec& F) {
    switch (e.kind) {
        case Expr::Kind::add: return eval_expr(*e.kids[0], F) + eval_expr(*e.kids[1], F);
        case Expr::Kind::sub: return eval_expr(*e.kids[0], F) - eval_expr(*e.kids[1], F);
        case Expr::Kind::mul: return mul(eval_expr(*e.kids[0], F), eval_expr(*e.kids[1], F));
        case Expr::Kind::pow: return h_pow(eval_expr(*e.kids[0], F), static_cast<int>(e.arg));
        case Expr::Kind::tau0: return h_tau(F, 0);
        case Expr::Kind::tau1: return h_tau(F, 1);
        case Expr::Kind::zeta: return zeta_elem(F);
        case Expr::Kind::idem: return h_idem(F, e.arg);
        case Expr::Kind::omega: return h_omega(F, e.arg);
        case Expr::Kind::xgen: return x_elem(F, e.arg);
        case Expr::Kind::num: return Fq(F, e.arg) * h_one(F);
        case Expr::Kind::iota_wrap: return iota(eval_expr(*e.kids[0], F));
        case Expr::Kind::j_wrap: return jmap(eval_expr(*e.kids[0], F));
    }
    throw InternalCheckFailed("unhandled expression node");
}

inline HElem eval_string(std::string_view src, const FieldSpec& F) {
    return eval_expr(*parse_expr(src), F);
}

}  // namespace sl2hecke
