#pragma once

#include <map>
#include <vector>

#include "sl2hecke/field.hpp"

namespace sl2hecke {

// Dense univariate polynomials over F_q, trailing zeros trimmed.
class UPoly {
public:
    explicit UPoly(const FieldSpec& s) : s_(&s) {}
    UPoly(const FieldSpec& s, std::vector<Fq> c) : s_(&s), c_(std::move(c)) { trim(); }

    static UPoly constant(const FieldSpec& s, Fq c) { return UPoly(s, {c}); }
    static UPoly monomial(const FieldSpec& s, long deg, Fq c) {
        std::vector<Fq> v(static_cast<std::size_t>(deg) + 1, Fq(s, 0));
        v.back() = c;
        return UPoly(s, std::move(v));
    }

    const FieldSpec& spec() const { return *s_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Fq coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Fq(*s_, 0);
        return c_[static_cast<std::size_t>(i)];
    }
    void set_coeff(long i, Fq v) {
        if (i >= static_cast<long>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, Fq(*s_, 0));
        c_[static_cast<std::size_t>(i)] = v;
        trim();
    }
    Fq lead() const { return c_.empty() ? Fq(*s_, 0) : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r = a;
        for (long i = 0; i <= b.degree(); ++i) r.raw(i) = r.raw(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r = a;
        for (long i = 0; i <= b.degree(); ++i) r.raw(i) = r.raw(i) - b.coeff(i);
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(*a.s_);
        std::vector<Fq> c(static_cast<std::size_t>(a.degree() + b.degree()) + 1, Fq(*a.s_, 0));
        for (long i = 0; i <= a.degree(); ++i)
            for (long j = 0; j <= b.degree(); ++j)
                c[static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
        return UPoly(*a.s_, std::move(c));
    }
    friend UPoly operator*(Fq k, const UPoly& a) {
        UPoly r(*a.s_);
        for (long i = 0; i <= a.degree(); ++i) r.set_coeff(i, k * a.coeff(i));
        return r;
    }
    friend UPoly operator-(const UPoly& a) { return Fq(*a.s_, -1) * a; }

    UPoly pow(long n) const {
        UPoly r = constant(*s_, Fq(*s_, 1));
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Fq eval(Fq x) const {
        Fq acc(*s_, 0);
        for (long i = degree(); i >= 0; --i) acc = acc * x + coeff(i);
        return acc;
    }

    // quotient/remainder by a nonzero divisor
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        if (d.is_zero()) throw DivisionByZeroError{};
        UPoly q(*s_), r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            long k = r.degree() - d.degree();
            Fq f = r.lead() / d.lead();
            q.set_coeff(k, q.coeff(k) + f);
            r = r - f * UPoly::monomial(*s_, k, Fq(*s_, 1)) * d;
        }
        return {q, r};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return lead().inv() * *this;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

private:
    const FieldSpec* s_;
    std::vector<Fq> c_;

    Fq& raw(long i) {
        if (i >= static_cast<long>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, Fq(*s_, 0));
        return c_[static_cast<std::size_t>(i)];
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divrem(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

// Sparse Laurent polynomials over F_q (finitely many terms, any integer degree).
class Laurent {
public:
    explicit Laurent(const FieldSpec& s) : s_(&s) {}

    static Laurent term(const FieldSpec& s, long deg, Fq c) {
        Laurent r(s);
        r.add(deg, c);
        return r;
    }
    static Laurent from_poly(const UPoly& p) {
        Laurent r(p.spec());
        for (long i = 0; i <= p.degree(); ++i) r.add(i, p.coeff(i));
        return r;
    }

    const FieldSpec& spec() const { return *s_; }
    const std::map<long, Fq>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(long deg, Fq c) {
        if (c.is_zero()) return;
        auto it = t_.find(deg);
        if (it == t_.end()) {
            t_.emplace(deg, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Fq coeff(long deg) const {
        auto it = t_.find(deg);
        return it == t_.end() ? Fq(*s_, 0) : it->second;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [d, c] : b.t_) r.add(d, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [d, c] : b.t_) r.add(d, -c);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r(*a.s_);
        for (auto& [da, ca] : a.t_)
            for (auto& [db, cb] : b.t_) r.add(da + db, ca * cb);
        return r;
    }

    // substitution x -> x^{-1}
    Laurent reversed() const {
        Laurent r(*s_);
        for (auto& [d, c] : t_) r.add(-d, c);
        return r;
    }

    bool operator==(const Laurent& o) const { return t_ == o.t_; }

private:
    const FieldSpec* s_;
    std::map<long, Fq> t_;
};

}  // namespace sl2hecke
