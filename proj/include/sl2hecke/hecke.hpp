#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2hecke/linalg.hpp"
#include "sl2hecke/omega.hpp"

namespace sl2hecke {

// Basis words of H, indexed by the extended Weyl group: every element has the
// unique normal form g^omega * s_first s_{1-first} s_first ... (len alternating
// letters). Letter 0 is s0, letter 1 is s1.
struct Word {
    long omega = 0;
    int len = 0;
    int first = 0;  // normalized to 0 when len == 0

    int letter(int j) const { return (first + j) & 1; }
    int last() const { return (first + len - 1) & 1; }

    friend bool operator<(const Word& a, const Word& b) {
        if (a.len != b.len) return a.len < b.len;
        if (a.first != b.first) return a.first < b.first;
        return a.omega < b.omega;
    }
    bool operator==(const Word& o) const = default;
};

inline Word word_omega(const FieldSpec& s, long exp) {
    long m = exp % s.units();
    if (m < 0) m += s.units();
    return Word{m, 0, 0};
}

// Sparse H-element: finite map from basis words to nonzero coefficients.
class HElem {
public:
    explicit HElem(const FieldSpec& s) : s_(&s) {}

    const FieldSpec& spec() const { return *s_; }
    const std::map<Word, Fq>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int max_len() const { return t_.empty() ? 0 : t_.rbegin()->first.len; }

    void add_term(Word w, Fq c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Fq coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Fq(*s_, 0) : it->second;
    }

    friend HElem operator+(const HElem& a, const HElem& b) {
        a.check(b);
        HElem r = a;
        for (auto& [w, c] : b.t_) r.add_term(w, c);
        return r;
    }
    friend HElem operator-(const HElem& a, const HElem& b) {
        a.check(b);
        HElem r = a;
        for (auto& [w, c] : b.t_) r.add_term(w, -c);
        return r;
    }
    friend HElem operator-(const HElem& a) {
        HElem r(*a.s_);
        for (auto& [w, c] : a.t_) r.t_.emplace(w, -c);
        return r;
    }
    friend HElem operator*(Fq c, const HElem& a) {
        HElem r(*a.s_);
        if (c.is_zero()) return r;
        for (auto& [w, k] : a.t_) r.t_.emplace(w, c * k);
        return r;
    }

    bool operator==(const HElem& o) const { return t_ == o.t_; }

    void check(const HElem& o) const {
        if (!(*s_ == *o.s_)) throw SpecMismatchError{};
    }

private:
    const FieldSpec* s_;
    std::map<Word, Fq> t_;
};

inline HElem h_zero(const FieldSpec& s) { return HElem(s); }

inline HElem h_one(const FieldSpec& s) {
    HElem r(s);
    r.add_term(Word{0, 0, 0}, Fq(s, 1));
    return r;
}

inline HElem h_tau(const FieldSpec& s, int i) {
    HElem r(s);
    r.add_term(Word{0, 1, i & 1}, Fq(s, 1));
    return r;
}

inline HElem h_omega(const FieldSpec& s, long exp) {
    HElem r(s);
    r.add_term(word_omega(s, exp), Fq(s, 1));
    return r;
}

// e_lambda embedded via omega -> tau_omega.
inline HElem h_idem(const FieldSpec& s, long j) {
    HElem r(s);
    Character lam = Character::of(s, j);
    for (long i = 0; i < s.units(); ++i) r.add_term(Word{i, 0, 0}, -gen_pow(s, -lam.exp * i));
    return r;
}

// --- left multiplication by generators -------------------------------------
//
// The product is driven by three closed-form rules for multiplying a basis
// word from the left by a generator:
//   (R1)  tau_w' * tau_{(w,word)}           = tau_{(w'w, word)}
//   (R2)  tau_{s_i} * tau_{(w,word)}        = tau_{(w^{-1}, s_i word)}   if word
//         is empty or starts with the other letter (lengths add), and
//   (R3)  tau_{s_i} * tau_{(w, s_i word')}  = sum_{w''} tau_{(w'', s_i word')}
//         via the quadratic relation; the right side does not depend on w.
// R2/R3 never lengthen the word part beyond one letter, so products of
// finitely supported elements stay finitely supported.

inline HElem lmul_omega(long exp, const HElem& h) {
    const FieldSpec& s = h.spec();
    HElem r(s);
    for (auto& [w, c] : h.terms()) {
        long m = (w.omega + exp) % s.units();
        if (m < 0) m += s.units();
        r.add_term(Word{m, w.len, w.first}, c);
    }
    return r;
}

inline HElem lmul_letter(int i, const HElem& h) {
    const FieldSpec& s = h.spec();
    HElem r(s);
    for (auto& [w, c] : h.terms()) {
        if (w.len == 0 || w.first != (i & 1)) {
            long m = (s.units() - w.omega) % s.units();
            r.add_term(Word{m, w.len + 1, i & 1}, c);
        } else {
            for (long x = 0; x < s.units(); ++x) r.add_term(Word{x, w.len, w.first}, c);
        }
    }
    return r;
}

inline HElem mul(const HElem& a, const HElem& b) {
    a.check(b);
    const FieldSpec& s = a.spec();
    HElem acc(s);
    for (auto& [w, c] : a.terms()) {
        HElem t = b;
        for (int j = w.len - 1; j >= 0; --j) t = lmul_letter(w.letter(j), t);
        t = lmul_omega(w.omega, t);
        acc = acc + c * t;
    }
    return acc;
}

inline HElem h_pow(const HElem& a, int n) {
    HElem r = h_one(a.spec());
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

// Canonical representative of h + H*tau_side: the words ending in s_side form
// a basis of the left ideal, so reduction just deletes them.
inline HElem coset_reduce(const HElem& h, int side) {
    HElem r(h.spec());
    for (auto& [w, c] : h.terms())
        if (w.len == 0 || w.last() != (side & 1)) r.add_term(w, c);
    return r;
}

// --- involutions ------------------------------------------------------------

// iota: the k[Omega]-fixing algebra automorphism with
// iota(tau_i) = -e_1 - tau_i; extended multiplicatively along the normal form.
inline HElem iota(const HElem& h) {
    const FieldSpec& s = h.spec();
    // iota(tau_i) * t = -e_1*t - tau_i*t, and e_1*t = -sum_w tau_w*t.
    auto lmul_iota_gen = [&](int i, const HElem& t) {
        HElem r(s);
        for (long x = 0; x < s.units(); ++x) r = r + lmul_omega(x, t);
        return r - lmul_letter(i, t);
    };
    HElem acc(s);
    for (auto& [w, c] : h.terms()) {
        HElem t = h_one(s);
        for (int j = w.len - 1; j >= 0; --j) t = lmul_iota_gen(w.letter(j), t);
        t = lmul_omega(w.omega, t);
        acc = acc + c * t;
    }
    return acc;
}

// J: the basis anti-automorphism tau_w -> tau_{w^{-1}}. On the normal form,
// inverting inserts one omega_{-1} per letter (s_i^{-1} = omega_{-1} s_i) and
// conjugating the Omega part through k letters inverts it k times:
//   (w * s_{i_1}..s_{i_k})^{-1} = omega_{-1}^k * w^{(-1)^{k+1}} * s_{i_k}..s_{i_1}.
inline HElem jmap(const HElem& h) {
    const FieldSpec& s = h.spec();
    long half = s.units() / 2;
    HElem r(s);
    for (auto& [w, c] : h.terms()) {
        long sign = (w.len % 2 == 0) ? -1 : 1;
        long m = (half * w.len + sign * w.omega) % s.units();
        if (m < 0) m += s.units();
        int nf = w.len == 0 ? 0 : w.last();
        r.add_term(Word{m, w.len, nf}, c);
    }
    return r;
}

// --- filtered basis ---------------------------------------------------------

struct FiltBasis {
    int bound;
    std::vector<Word> words;  // ordered by (len, first, omega)
    std::map<Word, std::size_t> index;
};

inline FiltBasis filtered_basis(const FieldSpec& s, int N) {
    FiltBasis fb;
    fb.bound = N;
    for (int len = 0; len <= N; ++len)
        for (int first = 0; first < (len == 0 ? 1 : 2); ++first)
            for (long x = 0; x < s.units(); ++x) fb.words.push_back(Word{x, len, first});
    for (std::size_t i = 0; i < fb.words.size(); ++i) fb.index.emplace(fb.words[i], i);
    return fb;
}

// --- exact left-combination solver -------------------------------------------

// Finds coefficients u_i supported in length <= N with
// target = sum_i u_i * gens[i], by exact linear algebra over the filtered
// basis, or reports that no solution exists at this bound. A found solution
// has its residual re-checked before being returned.
inline std::optional<std::vector<HElem>> solve_left_combination(const HElem& target,
                                                                const std::vector<HElem>& gens,
                                                                int N) {
    const FieldSpec& s = target.spec();
    FiltBasis fb = filtered_basis(s, N);
    std::vector<HElem> cols;
    cols.reserve(gens.size() * fb.words.size());
    for (const HElem& g : gens)
        for (const Word& w : fb.words) {
            HElem bw(s);
            bw.add_term(w, Fq(s, 1));
            cols.push_back(mul(bw, g));
        }
    std::map<Word, std::size_t> rows;
    for (const HElem& c : cols)
        for (auto& [w, _] : c.terms()) rows.emplace(w, 0);
    for (auto& [w, _] : target.terms()) rows.emplace(w, 0);
    std::size_t nr = 0;
    for (auto& [w, idx] : rows) idx = nr++;

    FqMat A(nr, FqVec(cols.size(), Fq(s, 0)));
    FqVec b(nr, Fq(s, 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [w, c] : cols[j].terms()) A[rows[w]][j] = c;
    for (auto& [w, c] : target.terms()) b[rows[w]] = c;

    auto x = mat_solve(A, b, s);
    if (!x) return std::nullopt;

    std::vector<HElem> us;
    std::size_t k = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        HElem u(s);
        for (const Word& w : fb.words) u.add_term(w, (*x)[k++]);
        us.push_back(u);
    }
    HElem resid = target;
    for (std::size_t i = 0; i < gens.size(); ++i) resid = resid - mul(us[i], gens[i]);
    if (!resid.is_zero()) throw InternalCheckFailed("left-combination residual is nonzero");
    return us;
}

// --- printing ---------------------------------------------------------------

// Canonical expansion, parseable back by the expression grammar when e == 1.
inline std::string to_string(const HElem& h) {
    if (h.is_zero()) return "0";
    std::string out;
    for (auto& [w, c] : h.terms()) {
        if (!out.empty()) out += " + ";
        std::string factors;
        if (w.omega != 0 || w.len == 0) factors = "w(" + std::to_string(w.omega) + ")";
        for (int j = 0; j < w.len; ++j) {
            if (!factors.empty()) factors += "*";
            factors += w.letter(j) == 0 ? "tau0" : "tau1";
        }
        std::string cs = c.str();
        if (cs == "1" && !factors.empty())
            out += factors;
        else
            out += factors.empty() ? cs : cs + "*" + factors;
    }
    return out;
}

}  // namespace sl2hecke
