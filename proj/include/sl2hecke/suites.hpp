#pragma once

#include <chrono>
#include <random>

#include "sl2hecke/bimodule.hpp"
#include "sl2hecke/centre.hpp"
#include "sl2hecke/quotient.hpp"

namespace sl2hecke {

struct SuiteOptions {
    int len_bound = 3;       // solver bound for the u,v decomposition
    int deg_bound = 20;      // truncation degree for the exactness checks
    int assoc_triples = 1000;
    int anti_pairs = 200;
    unsigned seed = 20240801;
};

namespace detail {

inline HElem random_short_elem(const FieldSpec& F, std::mt19937& rng, int max_len, int terms) {
    std::uniform_int_distribution<long> dom(0, F.units() - 1);
    std::uniform_int_distribution<int> dlen(0, max_len);
    std::uniform_int_distribution<int> dfirst(0, 1);
    std::uniform_int_distribution<long> dcoef(0, F.q - 1);
    HElem h(F);
    for (int t = 0; t < terms; ++t) {
        int len = dlen(rng);
        h.add_term(Word{dom(rng), len, len == 0 ? 0 : dfirst(rng)}, Fq::packed(F, dcoef(rng)));
    }
    return h;
}

template <typename F>
Report timed_report(std::string name, long p, long g, F&& body) {
    Report r;
    r.suite = std::move(name);
    r.p = p;
    r.generator = g;
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

// Presentation-level checks: idempotent orthogonality, the defining
// relations, associativity of the rewriting product, the left-ideal
// decomposition, and the two involutions.
inline Report suite_hecke(const FieldSpec& F, const SuiteOptions& opt = {}) {
    return detail::timed_report("hecke", F.p, F.generator, [&](Report& rep) {
        long n = F.units();

        {
            bool ok = true;
            std::string w;
            for (long a = 0; a < n && ok; ++a)
                for (long b = 0; b < n && ok; ++b) {
                    HElem prod = mul(h_idem(F, a), h_idem(F, b));
                    HElem want = a == b ? h_idem(F, a) : h_zero(F);
                    if (!(prod == want)) {
                        ok = false;
                        w = "e(" + std::to_string(a) + ")*e(" + std::to_string(b) + ")";
                    }
                }
            rep.checks.push_back(check_of("hecke.idempotent-orthogonality",
                                          "e(a)e(b) = delta(a,b) e(a), exhaustive", ok, w));
        }
        {
            bool ok = true;
            std::string w;
            for (int i = 0; i < 2 && ok; ++i) {
                HElem ti = h_tau(F, i);
                for (long j = 0; j < n && ok; ++j)
                    if (!(mul(ti, h_idem(F, j)) == mul(h_idem(F, -j), ti))) {
                        ok = false;
                        w = "tau" + std::to_string(i) + ", e(" + std::to_string(j) + ")";
                    }
            }
            rep.checks.push_back(check_of("hecke.idempotent-commutation",
                                          "tau_i e(a) = e(-a) tau_i, exhaustive", ok, w));
        }
        {
            bool ok = true;
            for (int i = 0; i < 2; ++i) {
                HElem ti = h_tau(F, i);
                if (!(mul(ti, ti) == -mul(ti, h_idem(F, 0)))) ok = false;
            }
            rep.checks.push_back(
                check_of("hecke.quadratic-relations", "tau_i^2 = -tau_i e(0)", ok, ""));
        }
        {
            bool ok = true;
            std::string w;
            for (long a = 0; a < n && ok; ++a) {
                for (long b = 0; b < n && ok; ++b)
                    if (!(mul(h_omega(F, a), h_omega(F, b)) == h_omega(F, a + b))) {
                        ok = false;
                        w = "w(" + std::to_string(a) + ")*w(" + std::to_string(b) + ")";
                    }
                for (int i = 0; i < 2 && ok; ++i)
                    if (!(mul(h_tau(F, i), h_omega(F, a)) == mul(h_omega(F, -a), h_tau(F, i)))) {
                        ok = false;
                        w = "tau" + std::to_string(i) + "*w(" + std::to_string(a) + ")";
                    }
            }
            rep.checks.push_back(check_of("hecke.weyl-group-law",
                                          "w(a)w(b) = w(a+b) and tau_i w(a) = w(-a) tau_i", ok, w));
        }
        {
            std::mt19937 rng(opt.seed);
            bool ok = true;
            std::string w;
            for (int it = 0; it < opt.assoc_triples && ok; ++it) {
                HElem a = detail::random_short_elem(F, rng, 6, 3);
                HElem b = detail::random_short_elem(F, rng, 6, 3);
                HElem c = detail::random_short_elem(F, rng, 6, 3);
                if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) {
                    ok = false;
                    w = "triple " + std::to_string(it);
                }
            }
            rep.checks.push_back(check_of("hecke.associativity",
                                          "(ab)c = a(bc) on " + std::to_string(opt.assoc_triples) +
                                              " random triples of length <= 6",
                                          ok, w));
        }
        {
            // left ideals H tau_i have the last-letter supports; their spans
            // meet trivially inside the length-6 filtration
            bool ok = true;
            FiltBasis fb = filtered_basis(F, 5);
            for (int side = 0; side < 2 && ok; ++side) {
                for (const Word& w0 : fb.words) {
                    HElem bw(F);
                    bw.add_term(w0, Fq(F, 1));
                    HElem c = mul(bw, h_tau(F, side));
                    for (auto& [u, _] : c.terms())
                        if (u.len == 0 || u.last() != side) ok = false;
                }
            }
            rep.checks.push_back(check_of("hecke.left-ideal-supports",
                                          "H tau_i is spanned by words ending in s_i (disjoint sides)",
                                          ok, ""));
        }
        {
            std::mt19937 rng(opt.seed + 1);
            bool ok = true;
            FiltBasis fb = filtered_basis(F, 4);
            for (const Word& w0 : fb.words) {
                HElem bw(F);
                bw.add_term(w0, Fq(F, 1));
                if (!(iota(iota(bw)) == bw)) ok = false;
                if (!(jmap(jmap(bw)) == bw)) ok = false;
            }
            std::string w;
            for (int it = 0; it < opt.anti_pairs && ok; ++it) {
                HElem a = detail::random_short_elem(F, rng, 3, 2);
                HElem b = detail::random_short_elem(F, rng, 3, 2);
                if (!(jmap(mul(a, b)) == mul(jmap(b), jmap(a)))) {
                    ok = false;
                    w = "pair " + std::to_string(it);
                }
                if (!(iota(mul(a, b)) == mul(iota(a), iota(b)))) {
                    ok = false;
                    w = "iota pair " + std::to_string(it);
                }
            }
            rep.checks.push_back(check_of("hecke.involutions",
                                          "iota and J are involutive; J anti-multiplicative on " +
                                              std::to_string(opt.anti_pairs) + " random pairs",
                                          ok, w));
        }
    });
}

// The centre: the zeta element, the X family, their relations, the fixed
// points of the involutions, and the component-coordinate isomorphism.
inline Report suite_centre(const FieldSpec& F, const SuiteOptions& opt = {}) {
    return detail::timed_report("centre", F.p, F.generator, [&](Report& rep) {
        long n = F.units();
        long half = n / 2;
        HElem z = [&] {
            try {
                return zeta_elem(F);
            } catch (const InternalCheckFailed&) {
                return h_zero(F);
            }
        }();
        rep.checks.push_back(check_of("centre.zeta-two-formulas",
                                      "(tau0+e0)(tau1+e0) + tau1 tau0 = (tau1+e0)(tau0+e0) + tau0 tau1",
                                      !z.is_zero(), "construction check failed"));
        {
            bool ok = true;
            std::string w;
            std::vector<HElem> gens{h_tau(F, 0), h_tau(F, 1), h_omega(F, 1)};
            for (const HElem& g : gens)
                if (!(mul(z, g) == mul(g, z))) ok = false;
            for (long j = 0; j < n && ok; ++j) {
                HElem x = x_elem(F, j);
                for (const HElem& g : gens)
                    if (!(mul(x, g) == mul(g, x))) {
                        ok = false;
                        w = "X(" + std::to_string(j) + ")";
                    }
            }
            rep.checks.push_back(
                check_of("centre.centrality", "zeta and every X(a) commute with the generators", ok, w));
        }
        {
            bool ok = true;
            std::string w;
            HElem sum(F);
            for (long j = 0; j < n; ++j) sum = sum + x_elem(F, j);
            if (!(sum == z)) {
                ok = false;
                w = "sum X(a) != zeta";
            }
            for (long j = 0; j < n && ok; ++j) {
                bool self_inv = (j == 0 || j == half);
                if (self_inv) {
                    if (!(mul(h_idem(F, j), z) == x_elem(F, j))) {
                        ok = false;
                        w = "e(" + std::to_string(j) + ") zeta";
                    }
                } else {
                    if (!(mul(h_idem(F, j) + h_idem(F, -j), z) == x_elem(F, j) + x_elem(F, -j))) {
                        ok = false;
                        w = "(e(j)+e(-j)) zeta at j = " + std::to_string(j);
                    }
                    if (!mul(x_elem(F, j), x_elem(F, -j)).is_zero()) {
                        ok = false;
                        w = "X(j)X(-j) at j = " + std::to_string(j);
                    }
                }
            }
            rep.checks.push_back(check_of("centre.component-decomposition",
                                          "sum X(a) = zeta; e-cuts of zeta; X(j)X(-j) = 0", ok, w));
        }
        {
            bool ok = iota(z) == z && jmap(z) == z;
            std::string w;
            for (long j = 0; j < n && ok; ++j) {
                HElem x = x_elem(F, j);
                if (!(iota(x) == x) || !(jmap(x) == x)) {
                    ok = false;
                    w = "X(" + std::to_string(j) + ")";
                }
            }
            rep.checks.push_back(
                check_of("centre.involutions-fix", "iota and J fix zeta and every X(a)", ok, w));
        }
        {
            // independence of {e, X, ..., X^5} per character
            bool ok = true;
            std::string w;
            for (long j = 0; j < n && ok; ++j) {
                std::vector<HElem> vecs{h_idem(F, j)};
                HElem x = x_elem(F, j), xp = x;
                for (int k = 1; k <= 5; ++k) {
                    vecs.push_back(xp);
                    xp = mul(xp, x);
                }
                std::map<Word, std::size_t> rows;
                for (auto& v : vecs)
                    for (auto& [ww, _] : v.terms()) rows.emplace(ww, 0);
                std::size_t nr = 0;
                for (auto& [ww, i] : rows) i = nr++;
                FqMat A(nr, FqVec(vecs.size(), Fq(F, 0)));
                for (std::size_t cidx = 0; cidx < vecs.size(); ++cidx)
                    for (auto& [ww, k] : vecs[cidx].terms()) A[rows[ww]][cidx] = k;
                if (mat_rank(A) != static_cast<long>(vecs.size())) {
                    ok = false;
                    w = "X(" + std::to_string(j) + ")";
                }
            }
            rep.checks.push_back(check_of("centre.power-independence",
                                          "e(a), X(a), ..., X(a)^5 are linearly independent", ok, w));
        }
        {
            std::mt19937 rng(opt.seed + 2);
            std::uniform_int_distribution<long> dc(0, F.q - 1);
            bool ok = true;
            for (int it = 0; it < 10 && ok; ++it) {
                ZElem ze = ZElem::zero(F);
                for (int k = 0; k <= 3; ++k) {
                    ze.self_triv.set_coeff(k, Fq::packed(F, dc(rng)));
                    ze.self_quad.set_coeff(k, Fq::packed(F, dc(rng)));
                }
                for (auto& pc : ze.pairs) {
                    pc.c = Fq::packed(F, dc(rng));
                    for (int k = 1; k <= 3; ++k) {
                        pc.xp.set_coeff(k, Fq::packed(F, dc(rng)));
                        pc.yp.set_coeff(k, Fq::packed(F, dc(rng)));
                    }
                }
                auto r = h_to_z(z_to_h(ze), 3);
                if (r.status != ZRecognition::Status::ok || !(*r.value == ze)) ok = false;
            }
            rep.checks.push_back(check_of("centre.coordinate-roundtrip",
                                          "h_to_z(z_to_h(z)) = z on random component coordinates", ok, ""));
        }
    });
}

inline Report suite_bimodule(const FieldSpec& F, const SuiteOptions& opt = {}) {
    return detail::timed_report("bimodule", F.p, F.generator, [&](Report& rep) {
        Bimod B(F);
        rep.append(verify_bimodule_identities(B));
        auto uv = solve_uv_and_crt(B, opt.len_bound, opt.seed + 3);
        rep.append(uv.checks);
        rep.append(ann_generator_check(B));
        rep.checks.push_back(psi_injectivity_check(F, 4));
    });
}

inline Report suite_quotient(const FieldSpec& F, const SuiteOptions& opt = {}) {
    return detail::timed_report("quotient", F.p, F.generator, [&](Report& rep) {
        {
            bool ok = true;
            std::string w;
            long nonempty = 0;
            try {
                for (long a = 0; a < F.units(); ++a)
                    for (long b = 0; b < F.units(); ++b) {
                        ComponentIdeal c = rprime_component(F, a, b);
                        if (c.delta_diag || c.delta_hyp) ++nonempty;
                    }
            } catch (const InternalCheckFailed& e) {
                ok = false;
                w = e.what();
            }
            rep.checks.push_back(check_of("quotient.component-ideals",
                                          "all (p-1)^2 projected ideals match the closed form (" +
                                              std::to_string(nonempty) + " nonempty)",
                                          ok, w));
        }
        GluingGraph g = build_quotient_graph(F.p);
        rep.append(connected_components_check(g));
        rep.append(coequaliser_exactness_checks(F, opt.deg_bound));
        rep.append(psi_identity_check(F));
    });
}

inline Report suite_appendix(const FieldSpec& F, const SuiteOptions& opt = {}) {
    (void)opt;
    return detail::timed_report("appendix", F.p, F.generator, [&](Report& rep) {
        for (long a : {0L, 1L}) {
            bool ok = true;
            std::string w;
            for (long b = 0; b < F.p && ok; ++b) {
                for (auto& c : appendix_eigenline_check(F, a, Fq(F, b)))
                    if (!c.pass) {
                        ok = false;
                        w = c.id + " at b = " + std::to_string(b);
                    }
            }
            rep.checks.push_back(check_of("appendix.residue-" + std::to_string(a),
                                          "eigenline exclusion for all b in F_p, residue a = " +
                                              std::to_string(a),
                                          ok, w));
        }
    });
}

inline std::vector<Report> run_suites(const FieldSpec& F, const std::string& which,
                                      const SuiteOptions& opt = {}) {
    std::vector<Report> out;
    if (which == "hecke" || which == "all") out.push_back(suite_hecke(F, opt));
    if (which == "centre" || which == "all") out.push_back(suite_centre(F, opt));
    if (which == "bimodule" || which == "all") out.push_back(suite_bimodule(F, opt));
    if (which == "quotient" || which == "all") out.push_back(suite_quotient(F, opt));
    if (which == "appendix" || which == "all") out.push_back(suite_appendix(F, opt));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace sl2hecke
