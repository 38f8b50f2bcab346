#pragma once

#include <numeric>
#include <optional>

#include "sl2hecke/groebner.hpp"
#include "sl2hecke/linalg.hpp"
#include "sl2hecke/poly1.hpp"
#include "sl2hecke/ratfunc.hpp"
#include "sl2hecke/report.hpp"

namespace sl2hecke {

// The combinatorial model of the quotient space: per-pair component ideals
// in k[x,y], the graph of projective lines with marked points O_r/inf_r and
// glue edges, and the exactness checks behind the gluing.

// --- component ideals --------------------------------------------------------

struct ComponentIdeal {
    long alpha = 0;
    long beta = 0;
    int delta_diag = 0;  // 1 iff alpha == beta
    int delta_hyp = 0;   // 1 iff alpha == mu/beta
    IdealHandle ideal;   // verified against the closed form
};

// Projects the two generator lists onto the (alpha, beta) component of
// Z' (x) Z', identifying t_alpha (x) 1 with x and 1 (x) t_beta with y,
// intersects them, and verifies the result against the closed form
// <(x-y)^{d1} (xy-1)^{d2}>.
inline ComponentIdeal rprime_component(const FieldSpec& F, long alpha, long beta) {
    long n = F.units();
    long a = ((alpha % n) + n) % n, b = ((beta % n) + n) % n;
    long mu_over_b = ((2 - b) % n + n) % n;
    int d_diag = a == b ? 1 : 0;
    int d_hyp = a == mu_over_b ? 1 : 0;

    auto vars = std::make_shared<VarList>(VarList{"x", "y"});
    MPoly x = MPoly::variable(F, vars, 0), y = MPoly::variable(F, vars, 1);
    MPoly one = MPoly::constant(F, vars, Fq(F, 1));

    // projection of ker mult_{Z'}: t(x)1 - 1(x)t -> x - y, and per character
    // e_l(x)1 - 1(x)e_l -> delta_{a,l} - delta_{b,l}
    std::vector<MPoly> ker_gens{x - y};
    for (long l = 0; l < n; ++l) {
        long c = (l == a ? 1 : 0) - (l == b ? 1 : 0);
        if (c != 0) ker_gens.push_back(Fq(F, c) * one);
    }
    // projection of the annihilator: t(x)t - 1(x)1 -> xy - 1, and
    // e_l(x)1 - 1(x)e_{mu/l} -> delta_{a,l} - delta_{b, mu/l}
    std::vector<MPoly> ann_gens{x * y - one};
    for (long l = 0; l < n; ++l) {
        long mul_l = ((2 - l) % n + n) % n;
        long c = (l == a ? 1 : 0) - (mul_l == b ? 1 : 0);
        if (c != 0) ann_gens.push_back(Fq(F, c) * one);
    }

    IdealHandle inter = intersect(IdealHandle(F, vars, std::move(ker_gens)),
                                  IdealHandle(F, vars, std::move(ann_gens)));

    MPoly closed = one;
    if (d_diag) closed = closed * (x - y);
    if (d_hyp) closed = closed * (x * y - one);
    IdealHandle expect(F, vars, {closed});
    if (!ideal_equal(inter, expect)) {
        std::string got;
        for (const MPoly& g : inter.groebner()) got += g.str() + "; ";
        throw InternalCheckFailed("component ideal (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") disagrees with the closed form: got " + got);
    }
    return ComponentIdeal{a, b, d_diag, d_hyp, expect};
}

// --- the gluing graph ---------------------------------------------------------

enum class PointKind { origin, infinity };

struct GlueEdge {
    long from_r;
    PointKind from_point;
    long to_r;
    PointKind to_point;
    bool operator==(const GlueEdge&) const = default;
};

struct LineNode {
    long r = 0;
    std::vector<long> cls;  // character exponents {r, 2-r} mod (p-1)
    bool singleton = false;
    // which affine-line origin O_{id^j} maps onto each marked point, if any
    std::optional<long> origin_preimage;
    std::optional<long> infinity_preimage;
};

struct GluingGraph {
    long p = 0;
    long generator = 0;
    std::vector<LineNode> lines;                // indexed r-1
    std::vector<GlueEdge> edges;                // (O_r, inf_{r+2})
    std::vector<std::vector<long>> components;  // sorted line indices, by least member
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline GluingGraph build_quotient_graph(long p) {
    if (!detail::is_prime_long(p)) throw NotPrimeError{p};
    if (p < 5) throw PTooSmallError{p};
    GluingGraph g;
    g.p = p;
    g.generator = make_field(p, 1).generator;
    long n = p - 1;
    long half = (p + 1) / 2;
    for (long r = 1; r <= half; ++r) {
        LineNode ln;
        ln.r = r;
        long e1 = r % n, e2 = ((2 - r) % n + n) % n;
        ln.cls = e1 == e2 ? std::vector<long>{e1}
                          : std::vector<long>{std::min(e1, e2), std::max(e1, e2)};
        ln.singleton = (r == 1 || r == half);
        if (r == 1) {
            ln.origin_preimage = 1;
        } else if (r == half) {
            ln.infinity_preimage = half % n;
        } else {
            ln.origin_preimage = r % n;
            ln.infinity_preimage = e2;
        }
        g.lines.push_back(std::move(ln));
    }
    for (long r = 1; r <= (p - 3) / 2; ++r)
        g.edges.push_back(GlueEdge{r, PointKind::origin, r + 2, PointKind::infinity});

    detail::UnionFind uf(static_cast<std::size_t>(half));
    for (const auto& e : g.edges)
        uf.unite(static_cast<std::size_t>(e.from_r - 1), static_cast<std::size_t>(e.to_r - 1));
    std::map<std::size_t, std::vector<long>> comps;
    for (long r = 1; r <= half; ++r) comps[uf.find(static_cast<std::size_t>(r - 1))].push_back(r);
    for (auto& [root, members] : comps) g.components.push_back(members);
    std::sort(g.components.begin(), g.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

// Structural assertions: two components, both paths, the parity split of the
// component membership, and the line/edge/marked-point counts.
inline std::vector<CheckResult> connected_components_check(const GluingGraph& g) {
    std::vector<CheckResult> out;
    long p = g.p;
    long half = (p + 1) / 2;

    out.push_back(check_of("quotient.line-count", "(p+1)/2 projective lines",
                           static_cast<long>(g.lines.size()) == half,
                           std::to_string(g.lines.size())));
    out.push_back(check_of("quotient.edge-count", "(p-3)/2 glue edges",
                           static_cast<long>(g.edges.size()) == (p - 3) / 2,
                           std::to_string(g.edges.size())));

    long singles = 0;
    for (const auto& ln : g.lines)
        if (ln.singleton) ++singles;
    out.push_back(check_of("quotient.singleton-lines",
                           "exactly two singleton-class lines, at r = 1 and r = (p+1)/2",
                           singles == 2 && g.lines.front().singleton && g.lines.back().singleton,
                           std::to_string(singles)));

    // every marked point carries at most one glue edge
    std::map<std::pair<long, int>, int> uses;
    for (const auto& e : g.edges) {
        ++uses[{e.from_r, static_cast<int>(e.from_point)}];
        ++uses[{e.to_r, static_cast<int>(e.to_point)}];
    }
    bool once = true;
    for (auto& [k, c] : uses)
        if (c > 1) once = false;
    out.push_back(check_of("quotient.marked-point-degree", "each marked point glued at most once",
                           once, ""));

    out.push_back(check_of("quotient.two-components", "exactly 2 connected components",
                           g.components.size() == 2, std::to_string(g.components.size())));

    // each component is a chain: the incidence graph on its lines is a path
    bool chains = true;
    for (const auto& comp : g.components) {
        std::map<long, int> deg;
        long internal_edges = 0;
        for (const auto& e : g.edges) {
            bool in1 = std::find(comp.begin(), comp.end(), e.from_r) != comp.end();
            bool in2 = std::find(comp.begin(), comp.end(), e.to_r) != comp.end();
            if (in1 != in2) chains = false;  // edges never leave a component
            if (in1 && in2) {
                ++internal_edges;
                ++deg[e.from_r];
                ++deg[e.to_r];
            }
        }
        if (internal_edges != static_cast<long>(comp.size()) - 1) chains = false;
        for (auto& [r, d] : deg)
            if (d > 2) chains = false;
    }
    out.push_back(check_of("quotient.chains", "each component is a chain of projective lines",
                           chains, ""));

    // parity split: odd r with component of line 1, even r with line 2
    std::vector<long> odd, even;
    for (long r = 1; r <= half; ++r) (r % 2 == 1 ? odd : even).push_back(r);
    bool split = g.components.size() == 2 && g.components[0] == odd && g.components[1] == even;
    long odd_end = p % 4 == 1 ? half : (p - 1) / 2;
    bool ends = !odd.empty() && odd.back() == odd_end;
    out.push_back(check_of("quotient.component-parity",
                           "components are the odd and even chains, ends split by p mod 4",
                           split && ends, ""));
    return out;
}

// --- inventory of the un-normalised space -------------------------------------

struct XiModel {
    long p = 0;
    long affine_lines = 2;
    long crossing_pairs = 0;   // (p-3)/2
    long singular_points = 0;  // (p-3)/2
    long v_zeta_points = 0;    // (p+1)/2
    long v_t_points = 0;       // p-1
    long normalisation_lines = 0;  // p-1
};

inline XiModel xi_model(long p) {
    XiModel m;
    m.p = p;
    m.crossing_pairs = (p - 3) / 2;
    m.singular_points = (p - 3) / 2;
    m.v_zeta_points = (p + 1) / 2;
    m.v_t_points = p - 1;
    m.normalisation_lines = p - 1;
    return m;
}

// --- exactness of the coequaliser data ----------------------------------------

// Degree-by-degree exactness of
//   0 -> k[x,y]/<xy> -> k[x] x k[y] -> k
// (the comorphism of the crossing-lines quotient), through total degree d.
inline CheckResult crossing_lines_exactness(const FieldSpec& F, int d) {
    // domain basis: 1, x^1..x^d, y^1..y^d; codomain: k[x]_{<=d} x k[y]_{<=d}
    std::size_t dom = static_cast<std::size_t>(2 * d + 1);
    std::size_t cod = static_cast<std::size_t>(2 * d + 2);
    FqMat phi(cod, FqVec(dom, Fq(F, 0)));
    // phi(f) = (f(x,0), f(0,y)); coordinates: rows 0..d = x-side, d+1..2d+1 = y-side
    phi[0][0] = Fq(F, 1);                      // 1 -> (1, .)
    phi[static_cast<std::size_t>(d) + 1][0] = Fq(F, 1);  // 1 -> (., 1)
    for (int i = 1; i <= d; ++i) {
        phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Fq(F, 1);
        phi[static_cast<std::size_t>(d + 1 + i)][static_cast<std::size_t>(d + i)] = Fq(F, 1);
    }
    FqMat phi_t = phi;
    long rank_phi = mat_rank(phi_t);
    bool inj = rank_phi == static_cast<long>(dom);

    // ker(a# - b#): f(0) - g(0) = 0 is one linear condition on the codomain
    FqMat diff(1, FqVec(cod, Fq(F, 0)));
    diff[0][0] = Fq(F, 1);
    diff[0][static_cast<std::size_t>(d) + 1] = Fq(F, -1);
    long rank_diff = mat_rank(diff);
    long ker_dim = static_cast<long>(cod) - rank_diff;

    // the difference map kills the image, so exactness is the rank equality
    bool complex_ok = true;
    for (std::size_t j = 0; j < dom; ++j) {
        Fq v = phi[0][j] - phi[static_cast<std::size_t>(d) + 1][j];
        if (!v.is_zero()) complex_ok = false;
    }
    bool exact = inj && complex_ok && (ker_dim == rank_phi);
    return check_of("quotient.crossing-exact",
                    "0 -> k[x,y]/<xy> -> k[x] x k[y] -> k exact through degree " + std::to_string(d),
                    exact, "");
}

// Writes a symmetric Laurent polynomial as a polynomial in s = x + x^{-1}.
// Returns nullopt if the input is not in that span (it always is when the
// input is symmetric).
inline std::optional<UPoly> in_powers_of_sum(const Laurent& L) {
    const FieldSpec& F = L.spec();
    Laurent rest = L;
    UPoly b(F);
    Laurent s = Laurent::term(F, 1, Fq(F, 1)) + Laurent::term(F, -1, Fq(F, 1));
    while (!rest.is_zero()) {
        long m = rest.terms().rbegin()->first;
        if (m < 0) return std::nullopt;
        Fq c = rest.terms().rbegin()->second;
        b.set_coeff(m, b.coeff(m) + c);
        Laurent sm = Laurent::term(F, 0, Fq(F, 1));
        for (long i = 0; i < m; ++i) sm = sm * s;
        Laurent sub(F);
        for (auto& [deg, k] : sm.terms()) sub.add(deg, c * k);
        rest = rest - sub;
    }
    return b;
}

// ker(pr1# - pr2#) in k[x, x^{-1}] through degree d: the kernel is spanned by
// x^n + x^{-n} and lies in k[x + x^{-1}].
inline CheckResult laurent_kernel_check(const FieldSpec& F, int d) {
    // span x^{-d}..x^d; T = id - (x -> x^{-1})
    std::size_t dim = static_cast<std::size_t>(2 * d + 1);
    auto idx = [&](long deg) { return static_cast<std::size_t>(deg + d); };
    FqMat T(dim, FqVec(dim, Fq(F, 0)));
    for (long deg = -d; deg <= d; ++deg) {
        T[idx(deg)][idx(deg)] = T[idx(deg)][idx(deg)] + Fq(F, 1);
        T[idx(-deg)][idx(deg)] = T[idx(-deg)][idx(deg)] - Fq(F, 1);
    }
    long rank_T = mat_rank(T);
    long ker_dim = static_cast<long>(dim) - rank_T;
    bool dims_ok = ker_dim == d + 1;

    // every symmetric basis vector x^n + x^{-n} is a polynomial in x + x^{-1}
    bool member_ok = true;
    for (long m = 0; m <= d && member_ok; ++m) {
        Laurent v = Laurent::term(F, m, Fq(F, 1)) + Laurent::term(F, -m, Fq(F, 1));
        auto b = in_powers_of_sum(v);
        if (!b) {
            member_ok = false;
            break;
        }
        // re-expand and compare exactly
        Laurent s = Laurent::term(F, 1, Fq(F, 1)) + Laurent::term(F, -1, Fq(F, 1));
        Laurent acc(F);
        Laurent spow = Laurent::term(F, 0, Fq(F, 1));
        for (long i = 0; i <= b->degree(); ++i) {
            for (auto& [deg, k] : spow.terms()) acc.add(deg, b->coeff(i) * k);
            spow = spow * s;
        }
        if (!(acc == v)) member_ok = false;
    }
    return check_of("quotient.laurent-kernel",
                    "symmetric Laurent kernel = k[x + x^{-1}] through degree " + std::to_string(d),
                    dims_ok && member_ok,
                    dims_ok ? "membership failure" : "kernel dimension " + std::to_string(ker_dim));
}

// The local picture at infinity: every symmetric a(x) x^{-n} comes from a
// polynomial in x/(x^2+1), via a(x) = sum_i b_i x^{n-i} (x^2+1)^i.
inline CheckResult infinity_chart_check(const FieldSpec& F, int nmax) {
    bool ok = true;
    std::string witness;
    UPoly x2p1(F, {Fq(F, 1), Fq(F, 0), Fq(F, 1)});
    for (int n = 1; n <= nmax && ok; ++n) {
        // palindromic basis of degree <= 2n: x^i + x^{2n-i} (i < n) and x^n
        std::vector<UPoly> basis;
        for (int i = 0; i < n; ++i) {
            UPoly a(F);
            a.set_coeff(i, Fq(F, 1));
            a.set_coeff(2 * n - i, a.coeff(2 * n - i) + Fq(F, 1));
            basis.push_back(a);
        }
        UPoly mid(F);
        mid.set_coeff(n, Fq(F, 1));
        basis.push_back(mid);

        for (const UPoly& a : basis) {
            // a(x) x^{-n} as a symmetric Laurent polynomial
            Laurent L(F);
            for (long i = 0; i <= a.degree(); ++i) L.add(i - n, a.coeff(i));
            if (!(L == L.reversed())) {
                ok = false;
                witness = "asymmetric input at n = " + std::to_string(n);
                break;
            }
            auto b = in_powers_of_sum(L);
            if (!b || b->degree() > n) {
                ok = false;
                witness = "no expansion at n = " + std::to_string(n);
                break;
            }
            // a(x) = sum_i b_i x^{n-i} (x^2+1)^i
            UPoly rhs(F);
            for (long i = 0; i <= b->degree(); ++i) {
                UPoly term = UPoly::constant(F, b->coeff(i));
                term = term * UPoly::monomial(F, n - i, Fq(F, 1));
                term = term * x2p1.pow(i);
                rhs = rhs + term;
            }
            if (!(rhs == a)) {
                ok = false;
                witness = "identity fails at n = " + std::to_string(n);
                break;
            }
        }
    }
    return check_of("quotient.infinity-chart",
                    "a(x)/(x^2+1)^n with symmetric a lies in k[x/(x^2+1)], n <= " + std::to_string(nmax),
                    ok, witness);
}

inline std::vector<CheckResult> coequaliser_exactness_checks(const FieldSpec& F, int dbound) {
    std::vector<CheckResult> out;
    out.push_back(crossing_lines_exactness(F, std::min(dbound, 10)));
    out.push_back(laurent_kernel_check(F, dbound));
    out.push_back(infinity_chart_check(F, std::max(1, dbound / 4)));
    return out;
}

// The factorization identity behind psi(a) = (a^2+1 : a) being constant on
// the relation: (a^2+1)b - a(b^2+1) = (a-b)(ab-1).
inline std::vector<CheckResult> psi_identity_check(const FieldSpec& F) {
    std::vector<CheckResult> out;
    auto vars = std::make_shared<VarList>(VarList{"a", "b"});
    MPoly a = MPoly::variable(F, vars, 0), b = MPoly::variable(F, vars, 1);
    MPoly one = MPoly::constant(F, vars, Fq(F, 1));
    MPoly lhs = (a * a + one) * b - a * (b * b + one);
    MPoly prod = (a - b) * (a * b - one);
    out.push_back(check_of("quotient.psi-identity", "(a^2+1)b - a(b^2+1) = (a-b)(ab-1)", lhs == prod, ""));

    IdealHandle I(F, vars, {prod});
    out.push_back(check_of("quotient.psi-membership", "the difference lies in <(a-b)(ab-1)>",
                           reduce(lhs, I).is_member, ""));
    // the product ideal is strictly smaller than the diagonal factor
    out.push_back(check_of("quotient.psi-proper-factor", "a-b does not lie in <(a-b)(ab-1)>",
                           !reduce(a - b, I).is_member, ""));
    // and the difference is recovered as the Groebner intersection of the factors
    IdealHandle J(F, vars, {a - b}), K(F, vars, {a * b - one});
    out.push_back(check_of("quotient.psi-intersection",
                           "<a-b> meet <ab-1> = <(a-b)(ab-1)> contains the difference",
                           ideal_equal(intersect(J, K), I) && reduce(lhs, intersect(J, K)).is_member,
                           ""));
    return out;
}

// --- the eigenline computation over k(zeta) -----------------------------------

struct RatMat2 {
    std::array<RatFunc, 4> m;
    const RatFunc& at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
};

// For the two residues a in {0,1} and any b: the triangular matrices of the
// two generator actions on a 2-dimensional k(zeta)-space. Every stable line
// of the second is shown non-stable under the first, exactly.
inline std::vector<CheckResult> appendix_eigenline_check(const FieldSpec& F, long a, Fq b) {
    std::vector<CheckResult> out;
    RatFunc z = RatFunc::zeta(F);
    RatFunc ra = RatFunc::constant(F, Fq(F, a));
    RatFunc rb = RatFunc::of(UPoly::constant(F, b));
    RatFunc one = RatFunc::constant(F, Fq(F, 1));
    RatFunc zero = RatFunc(F);

    RatMat2 A{{rb, z - ra * (rb + one), zero, -(ra + rb)}};
    RatMat2 B{{zero, zero, one, -ra}};

    // minimum polynomial of B is X^2 + aX: B^2 + aB = 0 and B is not scalar
    auto matmul = [&](const RatMat2& X, const RatMat2& Y) {
        RatMat2 R{{zero, zero, zero, zero}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                R.m[static_cast<std::size_t>(2 * i + j)] =
                    X.at(i, 0) * Y.at(0, j) + X.at(i, 1) * Y.at(1, j);
        return R;
    };
    RatMat2 B2 = matmul(B, B);
    bool minpoly = true;
    for (int k = 0; k < 4; ++k)
        if (!(B2.m[static_cast<std::size_t>(k)] + ra * B.m[static_cast<std::size_t>(k)]).is_zero())
            minpoly = false;
    bool nonscalar = !B.at(1, 0).is_zero();
    out.push_back(check_of("appendix.minpoly", "B^2 + aB = 0 and B is not scalar (a = " +
                                                    std::to_string(a) + ")",
                           minpoly && nonscalar, ""));

    // stable lines of B: eigenlines for the eigenvalues 0 and -a
    std::vector<std::pair<RatFunc, RatFunc>> lines{{zero, one}};
    if (a == 1) lines.emplace_back(one, one);
    bool stable_ok = true;
    for (auto& [w0, w1] : lines) {
        RatFunc i0 = B.at(0, 0) * w0 + B.at(0, 1) * w1;
        RatFunc i1 = B.at(1, 0) * w0 + B.at(1, 1) * w1;
        if (!(i0 * w1 - i1 * w0).is_zero()) stable_ok = false;
    }
    // and no others: a kernel vector (x,y) has x = a*y, so it is one of the
    // enumerated lines; a second eigenline exists only when a = 1
    out.push_back(check_of("appendix.stable-lines",
                           "the stable lines are span(0,1) and, iff a = 1, span(1,1)", stable_ok, ""));

    bool not_a_stable = true;
    std::string witness;
    for (auto& [w0, w1] : lines) {
        RatFunc i0 = A.at(0, 0) * w0 + A.at(0, 1) * w1;
        RatFunc i1 = A.at(1, 0) * w0 + A.at(1, 1) * w1;
        RatFunc cross = i0 * w1 - i1 * w0;
        if (cross.is_zero()) {
            not_a_stable = false;
            witness = "a stable line is also stable under the first action";
        }
        // the exact non-proportionality witness is a degree-1 polynomial in zeta
        if (cross.num().degree() != 1) {
            not_a_stable = false;
            witness = "unexpected witness degree";
        }
    }
    out.push_back(check_of("appendix.no-common-line",
                           "no B-stable line is A-stable; the cross-determinant is degree 1 in zeta",
                           not_a_stable, witness));
    return out;
}

}  // namespace sl2hecke
