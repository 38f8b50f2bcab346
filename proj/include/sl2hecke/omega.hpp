#pragma once

#include <map>
#include <set>
#include <vector>

#include "sl2hecke/field.hpp"

namespace sl2hecke {

// The finite group Omega ~ F_q^x of order q-1, written multiplicatively as
// powers of the fixed generator g, together with its character group
// {id^j : 0 <= j <= q-2} and the primitive idempotents e_lambda of k[Omega].

struct OmegaElem {
    long exp = 0;  // the element g^exp

    static OmegaElem of(const FieldSpec& s, long e) {
        long m = e % s.units();
        if (m < 0) m += s.units();
        return OmegaElem{m};
    }
};

// omega_{-1} = g^{(q-1)/2}, the unique element of order 2.
inline OmegaElem omega_minus_one(const FieldSpec& s) { return OmegaElem{s.units() / 2}; }

struct Character {
    long exp = 0;  // the character id^exp

    static Character of(const FieldSpec& s, long e) {
        long m = e % s.units();
        if (m < 0) m += s.units();
        return Character{m};
    }
};

inline Character trivial_char() { return Character{0}; }

// id^2, the twist parameter used throughout the bimodule layer.
inline Character mu_char(const FieldSpec& s) { return Character::of(s, 2); }

inline Character char_inverse(const FieldSpec& s, Character a) { return Character::of(s, -a.exp); }

// mu / a.
inline Character mu_over(const FieldSpec& s, Character a) { return Character::of(s, 2 - a.exp); }

// lambda(g^i) = g^{lambda.exp * i}.
inline Fq char_eval(const FieldSpec& s, Character lam, OmegaElem w) {
    return gen_pow(s, lam.exp * w.exp);
}

// ~ on characters: a ~ b iff b is a or mu/a. Returned sorted ascending.
inline std::vector<long> class_of(const FieldSpec& s, Character a) {
    long other = mu_over(s, a).exp;
    if (other == a.exp) return {a.exp};
    if (other < a.exp) return {other, a.exp};
    return {a.exp, other};
}

inline long num_sim_classes(const FieldSpec& s) {
    std::set<std::vector<long>> classes;
    for (long j = 0; j < s.units(); ++j) classes.insert(class_of(s, Character{j}));
    return static_cast<long>(classes.size());
}

// Sparse element of the group algebra k[Omega]; keys are exponents of g,
// zero coefficients are never stored.
class GroupAlgElem {
public:
    explicit GroupAlgElem(const FieldSpec& s) : s_(&s) {}

    const FieldSpec& spec() const { return *s_; }
    const std::map<long, Fq>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(long exp, Fq c) {
        if (c.is_zero()) return;
        long m = exp % s_->units();
        if (m < 0) m += s_->units();
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend GroupAlgElem operator+(const GroupAlgElem& a, const GroupAlgElem& b) {
        a.check(b);
        GroupAlgElem r = a;
        for (auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend GroupAlgElem operator-(const GroupAlgElem& a, const GroupAlgElem& b) {
        a.check(b);
        GroupAlgElem r = a;
        for (auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }

    // Convolution: exponents add mod q-1.
    friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
        a.check(b);
        GroupAlgElem r(*a.s_);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const GroupAlgElem& o) const { return t_ == o.t_; }

private:
    const FieldSpec* s_;
    std::map<long, Fq> t_;

    void check(const GroupAlgElem& o) const {
        if (!(*s_ == *o.s_)) throw SpecMismatchError{};
    }
};

inline GroupAlgElem group_elem(const FieldSpec& s, OmegaElem w) {
    GroupAlgElem r(s);
    r.add_term(w.exp, Fq(s, 1));
    return r;
}

inline GroupAlgElem group_one(const FieldSpec& s) { return group_elem(s, OmegaElem{0}); }

// e_lambda = -sum_w lambda(w)^{-1} w; the coefficient of g^i is -g^{-lambda.exp*i}.
inline GroupAlgElem idempotent(const FieldSpec& s, Character lam) {
    GroupAlgElem r(s);
    for (long i = 0; i < s.units(); ++i) r.add_term(i, -gen_pow(s, -lam.exp * i));
    return r;
}

}  // namespace sl2hecke
