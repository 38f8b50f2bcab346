#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "sl2hecke/field.hpp"

namespace sl2hecke {

enum class MonOrder { grevlex, lex };

// Monomial comparator. With block > 0 the first `block` variables are
// compared by lex first (an elimination order for that prefix); ties fall
// through to the base order on the remaining variables.
struct MonCmp {
    MonOrder ord = MonOrder::grevlex;
    int block = 0;

    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        std::size_t n = a.size();
        std::size_t k = static_cast<std::size_t>(block);
        for (std::size_t i = 0; i < k && i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        if (ord == MonOrder::lex) {
            for (std::size_t i = k; i < n; ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
        long da = std::accumulate(a.begin() + static_cast<long>(k), a.end(), 0L);
        long db = std::accumulate(b.begin() + static_cast<long>(k), b.end(), 0L);
        if (da != db) return da < db;
        for (std::size_t i = n; i-- > k;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

using VarList = std::vector<std::string>;

// Sparse multivariate polynomial over F_q with an explicit monomial order.
class MPoly {
public:
    MPoly(const FieldSpec& s, std::shared_ptr<const VarList> vars, MonCmp cmp = {})
        : s_(&s), vars_(std::move(vars)), t_(cmp) {}

    static MPoly zero(const FieldSpec& s, std::shared_ptr<const VarList> vars, MonCmp cmp = {}) {
        return MPoly(s, std::move(vars), cmp);
    }
    static MPoly constant(const FieldSpec& s, std::shared_ptr<const VarList> vars, Fq c, MonCmp cmp = {}) {
        MPoly r(s, std::move(vars), cmp);
        r.add_term(std::vector<int>(r.nvars(), 0), c);
        return r;
    }
    static MPoly variable(const FieldSpec& s, std::shared_ptr<const VarList> vars, std::size_t i,
                          MonCmp cmp = {}) {
        MPoly r(s, std::move(vars), cmp);
        std::vector<int> e(r.nvars(), 0);
        e[i] = 1;
        r.add_term(e, Fq(s, 1));
        return r;
    }

    const FieldSpec& spec() const { return *s_; }
    const std::shared_ptr<const VarList>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    MonCmp cmp() const { return t_.key_comp(); }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<int>, Fq, MonCmp>& terms() const { return t_; }

    void add_term(const std::vector<int>& e, Fq c) {
        if (c.is_zero()) return;
        if (e.size() != nvars()) throw VariableMismatchError{};
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    const std::vector<int>& lead_exp() const { return t_.rbegin()->first; }
    Fq lead_coeff() const { return t_.rbegin()->second; }
    long total_degree() const {
        long d = -1;
        for (auto& [e, _] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
        return d;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) { return Fq(*a.s_, -1) * a; }
    friend MPoly operator*(Fq k, const MPoly& a) {
        MPoly r(*a.s_, a.vars_, a.cmp());
        for (auto& [e, c] : a.t_) r.add_term(e, k * c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(*a.s_, a.vars_, a.cmp());
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    // same variable list and term set (the order tag does not change content)
    bool operator==(const MPoly& o) const {
        if (*vars_ != *o.vars_) return false;
        if (t_.size() != o.t_.size()) return false;
        for (auto& [e, c] : t_) {
            auto it = o.t_.find(e);
            if (it == o.t_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    // Rebuild this polynomial under a different comparator / variable layout.
    MPoly with_cmp(MonCmp cmp) const {
        MPoly r(*s_, vars_, cmp);
        for (auto& [e, c] : t_) r.add_term(e, c);
        return r;
    }
    MPoly permuted(std::shared_ptr<const VarList> new_vars, const std::vector<std::size_t>& pos,
                   MonCmp cmp) const {
        // pos[i]: where variable i of this ring lands in the new ring
        MPoly r(*s_, std::move(new_vars), cmp);
        for (auto& [e, c] : t_) {
            std::vector<int> ne(r.nvars(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.add_term(ne, c);
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[i];
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            std::string cs = it->second.str();
            if (mono.empty())
                out += cs;
            else
                out += (cs == "1") ? mono : cs + "*" + mono;
        }
        return out;
    }

    void check(const MPoly& o) const {
        if (*vars_ != *o.vars_) throw VariableMismatchError{};
    }

private:
    const FieldSpec* s_;
    std::shared_ptr<const VarList> vars_;
    std::map<std::vector<int>, Fq, MonCmp> t_;
};

inline bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<int> exp_sub(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::vector<int> exp_lcm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Full normal form of f with respect to the (not necessarily reduced) list g.
inline MPoly normal_form(MPoly f, const std::vector<MPoly>& g) {
    MPoly r = MPoly::zero(f.spec(), f.vars(), f.cmp());
    while (!f.is_zero()) {
        bool reduced = false;
        for (const MPoly& gi : g) {
            if (gi.is_zero()) continue;
            if (divides(gi.lead_exp(), f.lead_exp())) {
                Fq fac = f.lead_coeff() / gi.lead_coeff();
                MPoly m = MPoly::zero(f.spec(), f.vars(), f.cmp());
                m.add_term(exp_sub(f.lead_exp(), gi.lead_exp()), fac);
                f = f - m * gi;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MPoly m = MPoly::zero(f.spec(), f.vars(), f.cmp());
            m.add_term(f.lead_exp(), f.lead_coeff());
            r = r + m;
            f = f - m;
        }
    }
    return r;
}

inline MPoly s_poly(const MPoly& a, const MPoly& b) {
    auto l = exp_lcm(a.lead_exp(), b.lead_exp());
    MPoly ma = MPoly::zero(a.spec(), a.vars(), a.cmp());
    ma.add_term(exp_sub(l, a.lead_exp()), a.lead_coeff().inv());
    MPoly mb = MPoly::zero(b.spec(), b.vars(), b.cmp());
    mb.add_term(exp_sub(l, b.lead_exp()), b.lead_coeff().inv());
    return ma * a - mb * b;
}

}  // namespace sl2hecke
