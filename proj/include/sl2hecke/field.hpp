#pragma once

#include <array>
#include <string>
#include <vector>

#include "sl2hecke/errors.hpp"

namespace sl2hecke {

// Exact arithmetic in F_q, q = p^e with p prime >= 5 and 1 <= e <= 3.
//
// Elements are stored packed: c0 + c1*p + c2*p^2 where (c0,..,c_{e-1}) are
// the canonical coefficients of the residue modulo the reduction polynomial.
// Multiplication and inversion go through exp/log tables relative to a fixed
// primitive element g, which also indexes the cyclic group F_q^x everywhere
// downstream.
class FieldSpec {
public:
    long p = 0;
    long e = 0;
    long q = 0;
    // reduction polynomial x^e + red[e-1]*x^{e-1} + ... + red[0]; {0} when e == 1.
    std::vector<long> reduction;
    long generator = 0;  // packed value of g, the smallest primitive element

    static FieldSpec make(long p, long e);

    long units() const { return q - 1; }

    // g^i (packed), exponent taken mod q-1.
    long pow_g(long i) const {
        long m = i % units();
        if (m < 0) m += units();
        return exp_[static_cast<std::size_t>(m)];
    }

    // i with g^i == v; v must be nonzero.
    long log_of(long v) const {
        if (v == 0) throw ZeroHasNoLogError{};
        return log_[static_cast<std::size_t>(v)];
    }

    long add_packed(long a, long b) const {
        long r = 0, mul = 1;
        for (long i = 0; i < e; ++i) {
            long da = (a / mul) % p, db = (b / mul) % p;
            r += ((da + db) % p) * mul;
            mul *= p;
        }
        return r;
    }

    long neg_packed(long a) const {
        long r = 0, mul = 1;
        for (long i = 0; i < e; ++i) {
            long da = (a / mul) % p;
            r += ((p - da) % p) * mul;
            mul *= p;
        }
        return r;
    }

    long mul_packed(long a, long b) const {
        if (a == 0 || b == 0) return 0;
        return pow_g(log_of(a) + log_of(b));
    }

    bool operator==(const FieldSpec& o) const { return p == o.p && e == o.e && reduction == o.reduction; }

private:
    std::vector<long> exp_;  // exp_[i] = g^i, size q-1
    std::vector<long> log_;  // log_[v] = i, log_[0] unused

    // Schoolbook product of packed residues followed by reduction; used only
    // while bootstrapping the tables.
    long slow_mul(long a, long b) const;
};

namespace detail {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline long FieldSpec::slow_mul(long a, long b) const {
    std::array<long, 8> prod{};
    std::array<long, 3> da{}, db{};
    for (long i = 0, m = 1; i < e; ++i, m *= p) {
        da[static_cast<std::size_t>(i)] = (a / m) % p;
        db[static_cast<std::size_t>(i)] = (b / m) % p;
    }
    for (long i = 0; i < e; ++i)
        for (long j = 0; j < e; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    // reduce degrees e..2e-2 using x^e = -red
    for (long d = 2 * e - 2; d >= e; --d) {
        long c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (long i = 0; i < e; ++i) {
            auto& slot = prod[static_cast<std::size_t>(d - e + i)];
            slot = ((slot - c * reduction[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    long r = 0, m = 1;
    for (long i = 0; i < e; ++i, m *= p) r += prod[static_cast<std::size_t>(i)] * m;
    return r;
}

inline FieldSpec FieldSpec::make(long p, long e) {
    if (!detail::is_prime(p)) throw NotPrimeError{p};
    if (p < 5) throw PTooSmallError{p};
    if (e < 1 || e > 3) throw UnsupportedDegreeError{e};

    FieldSpec s;
    s.p = p;
    s.e = e;
    s.q = 1;
    for (long i = 0; i < e; ++i) s.q *= p;

    if (e == 1) {
        s.reduction = {0};
    } else {
        // Smallest-first search for a monic irreducible of degree e. For
        // e <= 3 reducibility forces a linear factor, so a root search over
        // F_p is a complete irreducibility test.
        long pe = s.q;
        for (long c = 0; c < pe; ++c) {
            std::vector<long> red(static_cast<std::size_t>(e));
            for (long i = 0, m = 1; i < e; ++i, m *= p) red[static_cast<std::size_t>(i)] = (c / m) % p;
            bool has_root = false;
            for (long x = 0; x < p && !has_root; ++x) {
                long acc = 1;  // x^e
                for (long i = 0; i < e; ++i) acc = (acc * x) % p;
                long xp = 1;
                for (long i = 0; i < e; ++i) {
                    acc = (acc + red[static_cast<std::size_t>(i)] * xp) % p;
                    xp = (xp * x) % p;
                }
                if (acc % p == 0) has_root = true;
            }
            if (!has_root) {
                s.reduction = std::move(red);
                break;
            }
        }
        if (s.reduction.empty()) throw InternalCheckFailed("no irreducible polynomial found");
    }

    // Smallest primitive element in packed order.
    for (long v = 2; v < s.q; ++v) {
        long ord = 1, x = v;
        while (x != 1) {
            x = s.slow_mul(x, v);
            ++ord;
            if (ord > s.units()) break;
        }
        if (ord == s.units()) {
            s.generator = v;
            break;
        }
    }
    if (s.generator == 0) throw InternalCheckFailed("no primitive element found");

    s.exp_.resize(static_cast<std::size_t>(s.units()));
    s.log_.assign(static_cast<std::size_t>(s.q), -1);
    long x = 1;
    for (long i = 0; i < s.units(); ++i) {
        s.exp_[static_cast<std::size_t>(i)] = x;
        if (s.log_[static_cast<std::size_t>(x)] != -1)
            throw InternalCheckFailed("generator order check failed");
        s.log_[static_cast<std::size_t>(x)] = i;
        x = s.slow_mul(x, s.generator);
    }
    if (x != 1) throw InternalCheckFailed("generator order check failed");
    return s;
}

inline FieldSpec make_field(long p, long e) { return FieldSpec::make(p, e); }

// A field element: value type carrying a pointer to its (immutable) spec.
class Fq {
public:
    Fq() = default;
    Fq(const FieldSpec& s, long scalar) : s_(&s), v_(((scalar % s.p) + s.p) % s.p) {}

    static Fq packed(const FieldSpec& s, long v) {
        Fq r;
        r.s_ = &s;
        r.v_ = v;
        return r;
    }

    const FieldSpec& spec() const { return *s_; }
    long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fq operator+(Fq a, Fq b) {
        a.check(b);
        return packed(*a.s_, a.s_->add_packed(a.v_, b.v_));
    }
    friend Fq operator-(Fq a, Fq b) {
        a.check(b);
        return packed(*a.s_, a.s_->add_packed(a.v_, a.s_->neg_packed(b.v_)));
    }
    friend Fq operator-(Fq a) { return packed(*a.s_, a.s_->neg_packed(a.v_)); }
    friend Fq operator*(Fq a, Fq b) {
        a.check(b);
        return packed(*a.s_, a.s_->mul_packed(a.v_, b.v_));
    }
    friend Fq operator/(Fq a, Fq b) {
        a.check(b);
        if (b.is_zero()) throw DivisionByZeroError{};
        if (a.is_zero()) return a;
        return packed(*a.s_, a.s_->pow_g(a.s_->log_of(a.v_) - a.s_->log_of(b.v_)));
    }
    Fq inv() const {
        if (is_zero()) throw DivisionByZeroError{};
        return packed(*s_, s_->pow_g(-s_->log_of(v_)));
    }
    Fq pow(long n) const {
        if (is_zero()) {
            if (n < 0) throw DivisionByZeroError{};
            return n == 0 ? Fq(*s_, 1) : *this;
        }
        return packed(*s_, s_->pow_g(s_->log_of(v_) * (n % s_->units())));
    }

    bool operator==(const Fq& o) const { return v_ == o.v_; }
    bool operator!=(const Fq& o) const { return v_ != o.v_; }

    // Coefficients as integers, constant term first; length e.
    std::vector<long> coeffs() const {
        std::vector<long> c(static_cast<std::size_t>(s_->e));
        long v = v_;
        for (long i = 0; i < s_->e; ++i) {
            c[static_cast<std::size_t>(i)] = v % s_->p;
            v /= s_->p;
        }
        return c;
    }

    std::string str() const {
        if (s_->e == 1) return std::to_string(v_);
        std::string out = "[";
        auto c = coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        return out + "]";
    }

private:
    const FieldSpec* s_ = nullptr;
    long v_ = 0;

    void check(const Fq& o) const {
        if (!(*s_ == *o.s_)) throw SpecMismatchError{};
    }
};

// g^i as a field element.
inline Fq gen_pow(const FieldSpec& s, long i) { return Fq::packed(s, s.pow_g(i)); }

// The exponent i with g^i == x (x nonzero), taken in [0, q-1).
inline long dlog(const FieldSpec& s, const Fq& x) {
    if (x.is_zero()) throw ZeroHasNoLogError{};
    return s.log_of(x.value());
}

}  // namespace sl2hecke
