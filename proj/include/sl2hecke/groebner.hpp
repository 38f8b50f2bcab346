#pragma once

#include <mutex>
#include <set>

#include "sl2hecke/mpoly.hpp"

namespace sl2hecke {

// Buchberger completion to the unique reduced basis for the given order.
// The ideals in this project are tiny (at most four variables, low degree),
// so plain normal-pair selection is enough; every returned basis is
// re-verified by reducing all of its S-polynomials to zero.
inline std::vector<MPoly> buchberger(std::vector<MPoly> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const MPoly& p) { return p.is_zero(); }),
                basis.end());
    if (basis.empty()) return basis;

    // pair queue ordered by lcm total degree (normal selection)
    auto pair_key = [&](std::size_t i, std::size_t j) {
        auto l = exp_lcm(basis[i].lead_exp(), basis[j].lead_exp());
        long d = 0;
        for (int e : l) d += e;
        return d;
    };
    std::multimap<long, std::pair<std::size_t, std::size_t>> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) queue.emplace(pair_key(i, j), std::make_pair(i, j));
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [i, j] = queue.begin()->second;
        queue.erase(queue.begin());
        // product criterion: coprime leading monomials give trivial S-pairs
        auto l = exp_lcm(basis[i].lead_exp(), basis[j].lead_exp());
        std::vector<int> sum(l.size());
        for (std::size_t k = 0; k < l.size(); ++k)
            sum[k] = basis[i].lead_exp()[k] + basis[j].lead_exp()[k];
        if (sum == l) continue;
        MPoly r = normal_form(s_poly(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
            basis.push_back(r);
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead_exp(), basis[i].lead_exp())) {
                if (basis[j].lead_exp() == basis[i].lead_exp() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // reduce each element against the others and normalize leads
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.lead_coeff().inv() * r);
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
        return a.cmp()(a.lead_exp(), b.lead_exp());
    });

    // postcondition: confluence of the returned basis
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = i + 1; j < reduced.size(); ++j)
            if (!normal_form(s_poly(reduced[i], reduced[j]), reduced).is_zero())
                throw InternalCheckFailed("reduced basis fails the S-polynomial test");
    return reduced;
}

// Ideal with a lazily computed (at most once) reduced basis.
class IdealHandle {
public:
    IdealHandle(const FieldSpec& s, std::shared_ptr<const VarList> vars, std::vector<MPoly> gens,
                MonCmp cmp = {})
        : st_(std::make_shared<State>()) {
        st_->s = &s;
        st_->vars = std::move(vars);
        st_->cmp = cmp;
        st_->gens = std::move(gens);
    }

    const FieldSpec& spec() const { return *st_->s; }
    const std::shared_ptr<const VarList>& vars() const { return st_->vars; }
    MonCmp cmp() const { return st_->cmp; }
    const std::vector<MPoly>& generators() const { return st_->gens; }

    const std::vector<MPoly>& groebner() const {
        std::call_once(st_->once, [this] {
            std::vector<MPoly> gens;
            for (const MPoly& g : st_->gens) gens.push_back(g.with_cmp(st_->cmp));
            st_->basis = buchberger(std::move(gens));
        });
        return st_->basis;
    }

    MPoly zero() const { return MPoly::zero(*st_->s, st_->vars, st_->cmp); }

private:
    struct State {
        const FieldSpec* s = nullptr;
        std::shared_ptr<const VarList> vars;
        MonCmp cmp;
        std::vector<MPoly> gens;
        mutable std::once_flag once;
        mutable std::vector<MPoly> basis;
    };
    std::shared_ptr<State> st_;
};

struct ReduceResult {
    MPoly normal_form;
    bool is_member;
};

inline ReduceResult reduce(const MPoly& f, const IdealHandle& I) {
    MPoly nf = normal_form(f.with_cmp(I.cmp()), I.groebner());
    return {nf, nf.is_zero()};
}

inline bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
    const auto& a = I.groebner();
    const auto& b = J.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// I \cap k[keep]: block elimination of the complement of `keep`.
inline IdealHandle eliminate(const IdealHandle& I, const std::set<std::size_t>& keep) {
    const auto& vars = *I.vars();
    std::vector<std::size_t> elim_idx, keep_idx;
    for (std::size_t i = 0; i < vars.size(); ++i)
        (keep.count(i) ? keep_idx : elim_idx).push_back(i);

    auto new_vars = std::make_shared<VarList>();
    std::vector<std::size_t> pos(vars.size());
    for (std::size_t i : elim_idx) {
        pos[i] = new_vars->size();
        new_vars->push_back(vars[i]);
    }
    for (std::size_t i : keep_idx) {
        pos[i] = new_vars->size();
        new_vars->push_back(vars[i]);
    }
    MonCmp ecmp{MonOrder::grevlex, static_cast<int>(elim_idx.size())};

    std::vector<MPoly> egens;
    for (const MPoly& g : I.generators()) egens.push_back(g.permuted(new_vars, pos, ecmp));
    std::vector<MPoly> eb = buchberger(std::move(egens));

    // keep the basis elements free of eliminated variables; map them back
    std::vector<std::size_t> back(new_vars->size());
    for (std::size_t i = 0; i < vars.size(); ++i) back[pos[i]] = i;
    std::vector<MPoly> out;
    for (const MPoly& g : eb) {
        bool pure = true;
        for (auto& [e, _] : g.terms())
            for (std::size_t k = 0; k < elim_idx.size(); ++k)
                if (e[k] != 0) pure = false;
        if (pure) out.push_back(g.permuted(I.vars(), back, I.cmp()));
    }
    return IdealHandle(I.spec(), I.vars(), std::move(out), I.cmp());
}

// I \cap J via the auxiliary-variable construction u*I + (1-u)*J.
inline IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
    if (*I.vars() != *J.vars()) throw VariableMismatchError{};
    const FieldSpec& s = I.spec();
    auto uvars = std::make_shared<VarList>();
    uvars->push_back("@u");
    for (const auto& v : *I.vars()) uvars->push_back(v);
    std::vector<std::size_t> pos(I.vars()->size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i + 1;
    MonCmp ucmp{MonOrder::grevlex, 1};

    MPoly u = MPoly::variable(s, uvars, 0, ucmp);
    MPoly one = MPoly::constant(s, uvars, Fq(s, 1), ucmp);
    std::vector<MPoly> gens;
    for (const MPoly& f : I.generators()) gens.push_back(u * f.permuted(uvars, pos, ucmp));
    for (const MPoly& g : J.generators()) gens.push_back((one - u) * g.permuted(uvars, pos, ucmp));

    IdealHandle aug(s, uvars, std::move(gens), ucmp);
    std::set<std::size_t> keep;
    for (std::size_t i = 1; i < uvars->size(); ++i) keep.insert(i);
    IdealHandle elim = eliminate(aug, keep);

    std::vector<std::size_t> back(I.vars()->size());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = i;
    std::vector<MPoly> out;
    for (const MPoly& g : elim.generators()) {
        MPoly m = MPoly::zero(s, I.vars(), I.cmp());
        for (auto& [e, c] : g.terms()) {
            std::vector<int> ne(e.begin() + 1, e.end());
            m.add_term(ne, c);
        }
        out.push_back(m);
    }
    return IdealHandle(s, I.vars(), std::move(out), I.cmp());
}

}  // namespace sl2hecke
