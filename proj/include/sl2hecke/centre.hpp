#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2hecke/hecke.hpp"
#include "sl2hecke/poly1.hpp"

namespace sl2hecke {

// The centre Z of H. Its generators live in H (zeta and the X_lambda); the
// primary representation of a central element is in component coordinates:
// one polynomial ring k[x] for each of the two self-inverse characters, and
// one crossing-lines ring k[x,y]/<xy> per inverse pair of characters.

// zeta = (tau0 + e_1)(tau1 + e_1) + tau1 tau0; both defining formulas are
// evaluated, and the result is checked to commute with all generators.
inline HElem zeta_elem(const FieldSpec& F) {
    HElem t0 = h_tau(F, 0), t1 = h_tau(F, 1), e1 = h_idem(F, 0);
    HElem a = mul(t0 + e1, t1 + e1) + mul(t1, t0);
    HElem b = mul(t1 + e1, t0 + e1) + mul(t0, t1);
    if (!(a == b)) throw InternalCheckFailed("the two zeta formulas disagree");
    for (const HElem& g : {t0, t1, h_omega(F, 1)})
        if (!(mul(a, g) == mul(g, a))) throw InternalCheckFailed("zeta is not central");
    return a;
}

// X_lambda = e_lambda tau0 tau1 + e_{lambda^{-1}} tau1 tau0 for lambda != 1,
// and e_1 zeta for the trivial character.
inline HElem x_elem(const FieldSpec& F, long j) {
    long m = j % F.units();
    if (m < 0) m += F.units();
    if (m == 0) return mul(h_idem(F, 0), zeta_elem(F));
    return mul(h_idem(F, m), mul(h_tau(F, 0), h_tau(F, 1))) +
           mul(h_idem(F, -m), mul(h_tau(F, 1), h_tau(F, 0)));
}

// --- component coordinates ---------------------------------------------------

// Residue of k[x,y]/<xy>: a constant plus pure-x and pure-y parts. Mixed
// monomials are not representable; from_bivariate rejects them.
struct PairComp {
    Fq c;
    UPoly xp;  // constant term zero
    UPoly yp;  // constant term zero

    static PairComp zero(const FieldSpec& F) { return {Fq(F, 0), UPoly(F), UPoly(F)}; }

    static PairComp make(Fq c, UPoly xp, UPoly yp) {
        if (!xp.coeff(0).is_zero() || !yp.coeff(0).is_zero())
            throw std::invalid_argument("pair component parts must have zero constant term");
        return {c, std::move(xp), std::move(yp)};
    }

    // terms: (i, j) -> coefficient of x^i y^j; any mixed term is rejected.
    static PairComp from_bivariate(const FieldSpec& F, const std::map<std::pair<long, long>, Fq>& terms) {
        PairComp r = zero(F);
        for (auto& [ij, coef] : terms) {
            auto [i, j] = ij;
            if (i > 0 && j > 0) throw std::invalid_argument("not xy-reduced: mixed monomial");
            if (i == 0 && j == 0)
                r.c = r.c + coef;
            else if (j == 0)
                r.xp.set_coeff(i, r.xp.coeff(i) + coef);
            else
                r.yp.set_coeff(j, r.yp.coeff(j) + coef);
        }
        return r;
    }

    bool operator==(const PairComp& o) const = default;
};

struct ZElem {
    const FieldSpec* spec;
    UPoly self_triv;              // component of the trivial character
    UPoly self_quad;              // component of id^{(q-1)/2}
    std::vector<PairComp> pairs;  // classes {id^j, id^{-j}}, j = 1..(q-3)/2

    static ZElem zero(const FieldSpec& F) {
        ZElem z{&F, UPoly(F), UPoly(F), {}};
        z.pairs.assign(static_cast<std::size_t>((F.units() - 2) / 2), PairComp::zero(F));
        return z;
    }

    static ZElem one(const FieldSpec& F) {
        ZElem z = zero(F);
        z.self_triv.set_coeff(0, Fq(F, 1));
        z.self_quad.set_coeff(0, Fq(F, 1));
        for (auto& pc : z.pairs) pc.c = Fq(F, 1);
        return z;
    }

    bool operator==(const ZElem& o) const {
        return self_triv == o.self_triv && self_quad == o.self_quad && pairs == o.pairs;
    }
};

// Component coordinates -> H: the component unit goes to its idempotent and
// x^n (resp. y^n) to the n-th power of the corresponding X.
inline HElem z_to_h(const ZElem& z) {
    const FieldSpec& F = *z.spec;
    long half = F.units() / 2;
    HElem acc(F);
    auto add_self = [&](long j, const UPoly& p) {
        if (p.is_zero()) return;
        acc = acc + p.coeff(0) * h_idem(F, j);
        HElem x = x_elem(F, j), xp = x;
        for (long n = 1; n <= p.degree(); ++n) {
            acc = acc + p.coeff(n) * xp;
            xp = mul(xp, x);
        }
    };
    add_self(0, z.self_triv);
    add_self(half, z.self_quad);
    for (std::size_t k = 0; k < z.pairs.size(); ++k) {
        long j = static_cast<long>(k) + 1;
        const PairComp& pc = z.pairs[k];
        acc = acc + pc.c * (h_idem(F, j) + h_idem(F, -j));
        auto add_part = [&](long jj, const UPoly& p) {
            if (p.is_zero()) return;
            HElem x = x_elem(F, jj), xp = x;
            for (long n = 1; n <= p.degree(); ++n) {
                acc = acc + p.coeff(n) * xp;
                xp = mul(xp, x);
            }
        };
        add_part(j, pc.xp);
        add_part(-j, pc.yp);
    }
    return acc;
}

struct ZRecognition {
    enum class Status { ok, not_central, not_recognized } status;
    std::optional<ZElem> value;
    std::string witness;
};

// Inverse of z_to_h on its image, bounded by component degree N. Centrality
// is checked against the algebra generators first; "not_recognized" only
// reports that the bounded span was insufficient.
inline ZRecognition h_to_z(const HElem& h, int N) {
    const FieldSpec& F = h.spec();
    for (auto [g, name] : {std::pair<HElem, const char*>{h_tau(F, 0), "tau0"},
                           {h_tau(F, 1), "tau1"},
                           {h_omega(F, 1), "w(1)"}}) {
        if (!(mul(h, g) == mul(g, h)))
            return {ZRecognition::Status::not_central, std::nullopt, name};
    }

    long half = F.units() / 2;
    std::vector<HElem> cols;
    // column layout: [e_0, X_0^1..N | e_half, X_half^1..N | per pair: unit, x^1..N, y^1..N]
    auto push_powers = [&](long j) {
        HElem x = x_elem(F, j), xp = x;
        for (int n = 1; n <= N; ++n) {
            cols.push_back(xp);
            xp = mul(xp, x);
        }
    };
    cols.push_back(h_idem(F, 0));
    push_powers(0);
    cols.push_back(h_idem(F, half));
    push_powers(half);
    for (long j = 1; j <= (F.units() - 2) / 2; ++j) {
        cols.push_back(h_idem(F, j) + h_idem(F, -j));
        push_powers(j);
        push_powers(-j);
    }

    std::map<Word, std::size_t> rows;
    for (const HElem& c : cols)
        for (auto& [w, _] : c.terms()) rows.emplace(w, 0);
    for (auto& [w, _] : h.terms()) rows.emplace(w, 0);
    std::size_t nr = 0;
    for (auto& [w, i] : rows) i = nr++;
    FqMat A(nr, FqVec(cols.size(), Fq(F, 0)));
    FqVec b(nr, Fq(F, 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [w, c] : cols[j].terms()) A[rows[w]][j] = c;
    for (auto& [w, c] : h.terms()) b[rows[w]] = c;
    auto x = mat_solve(A, b, F);
    if (!x) return {ZRecognition::Status::not_recognized, std::nullopt, "raise the degree bound"};

    ZElem z = ZElem::zero(F);
    std::size_t k = 0;
    auto take_self = [&](UPoly& dst) {
        dst.set_coeff(0, (*x)[k++]);
        for (int n = 1; n <= N; ++n) dst.set_coeff(n, (*x)[k++]);
    };
    take_self(z.self_triv);
    take_self(z.self_quad);
    for (auto& pc : z.pairs) {
        pc.c = (*x)[k++];
        for (int n = 1; n <= N; ++n) pc.xp.set_coeff(n, (*x)[k++]);
        for (int n = 1; n <= N; ++n) pc.yp.set_coeff(n, (*x)[k++]);
    }
    if (!(z_to_h(z) == h)) throw InternalCheckFailed("h_to_z round trip failed");
    return {ZRecognition::Status::ok, z, ""};
}

// --- the normalised ring Z' = k[Omega][t] ------------------------------------

// One polynomial in t per character; slot j holds the t_{id^j} coordinate.
struct ZPrimeElem {
    const FieldSpec* spec;
    std::vector<UPoly> slots;

    static ZPrimeElem zero(const FieldSpec& F) {
        ZPrimeElem r{&F, {}};
        r.slots.assign(static_cast<std::size_t>(F.units()), UPoly(F));
        return r;
    }
    UPoly& slot(long j) { return slots[static_cast<std::size_t>(((j % spec->units()) + spec->units()) % spec->units())]; }
    const UPoly& slot(long j) const {
        return slots[static_cast<std::size_t>(((j % spec->units()) + spec->units()) % spec->units())];
    }
    bool operator==(const ZPrimeElem& o) const { return slots == o.slots; }
};

// phi : Z -> Z', the ring map with phi(X_lambda) = e_lambda t.
inline ZPrimeElem phi_map(const ZElem& z) {
    const FieldSpec& F = *z.spec;
    long half = F.units() / 2;
    ZPrimeElem r = ZPrimeElem::zero(F);
    // self components: the whole polynomial lands in its own slot, x -> t
    r.slot(0) = z.self_triv;
    r.slot(half) = z.self_quad;
    for (std::size_t k = 0; k < z.pairs.size(); ++k) {
        long j = static_cast<long>(k) + 1;
        const PairComp& pc = z.pairs[k];
        r.slot(j) = pc.xp + UPoly::constant(F, pc.c);
        r.slot(-j) = pc.yp + UPoly::constant(F, pc.c);
    }
    return r;
}

// --- the localisation Z_zeta ~ k[Omega][t, t^{-1}] ----------------------------

struct ZZetaElem {
    const FieldSpec* spec;
    std::vector<Laurent> slots;

    static ZZetaElem zero(const FieldSpec& F) {
        ZZetaElem r{&F, {}};
        r.slots.assign(static_cast<std::size_t>(F.units()), Laurent(F));
        return r;
    }
    static ZZetaElem one(const FieldSpec& F) {
        ZZetaElem r = zero(F);
        for (auto& s : r.slots) s = Laurent::term(F, 0, Fq(F, 1));
        return r;
    }
    // image of zeta: t in every slot (t^pow for powers, negative allowed)
    static ZZetaElem zeta_pow(const FieldSpec& F, long pow) {
        ZZetaElem r = zero(F);
        for (auto& s : r.slots) s = Laurent::term(F, pow, Fq(F, 1));
        return r;
    }
    static ZZetaElem from_zprime(const ZPrimeElem& z) {
        ZZetaElem r = zero(*z.spec);
        for (std::size_t i = 0; i < z.slots.size(); ++i) r.slots[i] = Laurent::from_poly(z.slots[i]);
        return r;
    }

    Laurent& slot(long j) { return slots[static_cast<std::size_t>(((j % spec->units()) + spec->units()) % spec->units())]; }

    friend ZZetaElem operator+(const ZZetaElem& a, const ZZetaElem& b) {
        ZZetaElem r = a;
        for (std::size_t i = 0; i < r.slots.size(); ++i) r.slots[i] = r.slots[i] + b.slots[i];
        return r;
    }
    friend ZZetaElem operator*(const ZZetaElem& a, const ZZetaElem& b) {
        ZZetaElem r = a;
        for (std::size_t i = 0; i < r.slots.size(); ++i) r.slots[i] = r.slots[i] * b.slots[i];
        return r;
    }
    bool operator==(const ZZetaElem& o) const { return slots == o.slots; }
};

// epsilon_lambda = X_lambda / zeta: the tuple with 1 in slot lambda.
inline ZZetaElem epsilon_elem(const FieldSpec& F, long j) {
    ZZetaElem r = ZZetaElem::zero(F);
    r.slot(j) = Laurent::term(F, 0, Fq(F, 1));
    return r;
}

}  // namespace sl2hecke
