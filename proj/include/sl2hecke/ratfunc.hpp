#pragma once

#include "sl2hecke/poly1.hpp"

namespace sl2hecke {

// The rational function field k(zeta): quotients of univariate polynomials,
// kept normalized with a monic denominator coprime to the numerator.
class RatFunc {
public:
    explicit RatFunc(const FieldSpec& s)
        : num_(UPoly(s)), den_(UPoly::constant(s, Fq(s, 1))) {}
    RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError{};
        normalize();
    }

    static RatFunc of(const UPoly& p) { return RatFunc(p, UPoly::constant(p.spec(), Fq(p.spec(), 1))); }
    static RatFunc constant(const FieldSpec& s, Fq c) { return of(UPoly::constant(s, c)); }
    static RatFunc zeta(const FieldSpec& s) { return of(UPoly::monomial(s, 1, Fq(s, 1))); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZeroError{};
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    UPoly num_, den_;

    void normalize() {
        const FieldSpec& s = num_.spec();
        if (num_.is_zero()) {
            den_ = UPoly::constant(s, Fq(s, 1));
            return;
        }
        UPoly g = upoly_gcd(num_, den_);
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
        Fq lead = den_.lead();
        den_ = lead.inv() * den_;
        num_ = lead.inv() * num_;
    }
};

}  // namespace sl2hecke
