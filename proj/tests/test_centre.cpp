#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "sl2hecke/centre.hpp"
#include "test_helpers.hpp"

using namespace sl2hecke;
using sl2hecke::testing::random_helem;

TEST_CASE("zeta: the two defining formulas agree and zeta is central") {
    for (long p : {5L, 7L, 13L}) {
        FieldSpec F = make_field(p, 1);
        HElem z = zeta_elem(F);  // throws if the formulas disagree
        HElem t0 = h_tau(F, 0);
        CHECK(mul(z, t0) - mul(t0, z) == h_zero(F));
        // nonzero length-2 part
        bool has_len2 = false;
        for (auto& [w, c] : z.terms())
            if (w.len == 2) has_len2 = true;
        CHECK(has_len2);
        // explicit expansion: zeta = t0t1 + t1t0 + e1 t0 + e1 t1 + e1
        HElem t1 = h_tau(F, 1), e1 = h_idem(F, 0);
        CHECK(z == mul(t0, t1) + mul(t1, t0) + mul(e1, t0) + mul(e1, t1) + e1);
    }
}

TEST_CASE("X elements: definition, centrality and products") {
    FieldSpec F = make_field(5, 1);
    CHECK(x_elem(F, 0) == mul(h_idem(F, 0), zeta_elem(F)));

    // sum over all characters is zeta
    HElem sum(F);
    for (long j = 0; j < F.units(); ++j) sum = sum + x_elem(F, j);
    CHECK(sum == zeta_elem(F));

    // X_id * X_{id^-1} = 0
    CHECK(mul(x_elem(F, 1), x_elem(F, 3)).is_zero());

    for (long j = 0; j < F.units(); ++j) {
        HElem x = x_elem(F, j);
        for (const HElem& g : {h_tau(F, 0), h_tau(F, 1), h_omega(F, 1)})
            CHECK(mul(x, g) == mul(g, x));
    }
}

TEST_CASE("component decomposition identities of zeta, exhaustive over characters") {
    for (long p : {5L, 7L, 11L, 13L}) {
        FieldSpec F = make_field(p, 1);
        HElem z = zeta_elem(F);
        long half = F.units() / 2;
        for (long j = 0; j < F.units(); ++j) {
            bool self_inverse = (j == 0 || j == half);
            if (self_inverse) {
                CHECK(mul(h_idem(F, j), z) == x_elem(F, j));
            } else {
                CHECK(mul(h_idem(F, j) + h_idem(F, -j), z) == x_elem(F, j) + x_elem(F, -j));
                CHECK(mul(x_elem(F, j), x_elem(F, -j)).is_zero());
            }
        }
    }
}

TEST_CASE("involutions fix the centre") {
    for (long p : {5L, 13L}) {
        FieldSpec F = make_field(p, 1);
        HElem z = zeta_elem(F);
        CHECK(iota(z) == z);
        CHECK(jmap(z) == z);
        for (long j = 0; j < F.units(); ++j) {
            HElem x = x_elem(F, j);
            CHECK(iota(x) == x);
            CHECK(jmap(x) == x);
        }
    }
}

TEST_CASE("powers of X_lambda are linearly independent") {
    FieldSpec F = make_field(5, 1);
    for (long j = 0; j < F.units(); ++j) {
        std::vector<HElem> vecs{h_idem(F, j)};
        HElem x = x_elem(F, j), xp = x;
        for (int n = 1; n <= 5; ++n) {
            vecs.push_back(xp);
            xp = mul(xp, x);
        }
        std::map<Word, std::size_t> rows;
        for (auto& v : vecs)
            for (auto& [w, _] : v.terms()) rows.emplace(w, 0);
        std::size_t nr = 0;
        for (auto& [w, i] : rows) i = nr++;
        FqMat A(nr, FqVec(vecs.size(), Fq(F, 0)));
        for (std::size_t c = 0; c < vecs.size(); ++c)
            for (auto& [w, k] : vecs[c].terms()) A[rows[w]][c] = k;
        CHECK(mat_rank(A) == static_cast<long>(vecs.size()));
    }
}

TEST_CASE("filtered decomposition H = A + A tau0 + A tau1 + A tau0 tau1") {
    // Spanning-rank check on the length-4 filtration: the products
    // tau_w zeta^m {1, tau0, tau1, tau0 tau1} of total length <= 4 must be a
    // basis of FiltBasis(4).
    FieldSpec F = make_field(5, 1);
    HElem z = zeta_elem(F);
    std::vector<HElem> vecs;
    HElem t0 = h_tau(F, 0), t1 = h_tau(F, 1), t01 = mul(t0, t1);
    for (long x = 0; x < F.units(); ++x) {
        HElem om = h_omega(F, x);
        for (int m = 0; 2 * m <= 4; ++m) {
            HElem zm = h_pow(z, m);
            if (2 * m <= 4) vecs.push_back(mul(om, zm));
            if (2 * m + 1 <= 4) {
                vecs.push_back(mul(om, mul(zm, t0)));
                vecs.push_back(mul(om, mul(zm, t1)));
            }
            if (2 * m + 2 <= 4) vecs.push_back(mul(om, mul(zm, t01)));
        }
    }
    FiltBasis fb = filtered_basis(F, 4);
    REQUIRE(vecs.size() == fb.words.size());
    FqMat A(fb.words.size(), FqVec(vecs.size(), Fq(F, 0)));
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (auto& [w, k] : vecs[c].terms()) {
            REQUIRE(fb.index.count(w) == 1);
            A[fb.index.at(w)][c] = k;
        }
    CHECK(mat_rank(A) == static_cast<long>(vecs.size()));
}

TEST_CASE("z_to_h on component units and coordinates") {
    FieldSpec F = make_field(5, 1);
    ZElem unit_triv = ZElem::zero(F);
    unit_triv.self_triv.set_coeff(0, Fq(F, 1));
    CHECK(z_to_h(unit_triv) == h_idem(F, 0));

    ZElem xpair = ZElem::zero(F);
    xpair.pairs[0].xp.set_coeff(1, Fq(F, 1));  // x in the class {id, id^-1}
    CHECK(z_to_h(xpair) == x_elem(F, 1));

    CHECK(z_to_h(ZElem::one(F)) == h_one(F));

    // mixed monomials are not constructible
    CHECK_THROWS_AS(PairComp::from_bivariate(F, {{{1, 1}, Fq(F, 1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PairComp::make(Fq(F, 0), UPoly::constant(F, Fq(F, 1)), UPoly(F)),
                    std::invalid_argument);
}

TEST_CASE("h_to_z recognises zeta, rejects non-central elements") {
    FieldSpec F = make_field(5, 1);
    auto rz = h_to_z(zeta_elem(F), 2);
    REQUIRE(rz.status == ZRecognition::Status::ok);
    const ZElem& z = *rz.value;
    CHECK(z.self_triv == UPoly::monomial(F, 1, Fq(F, 1)));
    CHECK(z.self_quad == UPoly::monomial(F, 1, Fq(F, 1)));
    for (auto& pc : z.pairs) {
        CHECK(pc.c.is_zero());
        CHECK(pc.xp == UPoly::monomial(F, 1, Fq(F, 1)));
        CHECK(pc.yp == UPoly::monomial(F, 1, Fq(F, 1)));
    }

    auto rt = h_to_z(h_tau(F, 0), 2);
    CHECK(rt.status == ZRecognition::Status::not_central);
    CHECK(rt.witness == "tau1");

    auto r1 = h_to_z(h_one(F), 1);
    REQUIRE(r1.status == ZRecognition::Status::ok);
    CHECK(*r1.value == ZElem::one(F));

    // central (it is a polynomial in zeta) but out of reach at degree 1
    auto deep = h_to_z(h_pow(zeta_elem(F), 2), 1);
    CHECK(deep.status == ZRecognition::Status::not_recognized);
}

TEST_CASE("round trip through component coordinates for random central elements") {
    FieldSpec F = make_field(5, 1);
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> dc(0, F.q - 1);
    for (int it = 0; it < 100; ++it) {
        ZElem z = ZElem::zero(F);
        for (int n = 0; n <= 4; ++n) {
            z.self_triv.set_coeff(n, Fq::packed(F, dc(rng)));
            z.self_quad.set_coeff(n, Fq::packed(F, dc(rng)));
        }
        for (auto& pc : z.pairs) {
            pc.c = Fq::packed(F, dc(rng));
            for (int n = 1; n <= 4; ++n) {
                pc.xp.set_coeff(n, Fq::packed(F, dc(rng)));
                pc.yp.set_coeff(n, Fq::packed(F, dc(rng)));
            }
        }
        auto r = h_to_z(z_to_h(z), 4);
        REQUIRE(r.status == ZRecognition::Status::ok);
        CHECK(*r.value == z);
    }
}

TEST_CASE("phi sends component coordinates to the t-line tuple") {
    FieldSpec F = make_field(5, 1);
    auto xid = h_to_z(x_elem(F, 1), 2);
    REQUIRE(xid.status == ZRecognition::Status::ok);
    ZPrimeElem img = phi_map(*xid.value);
    for (long j = 0; j < F.units(); ++j) {
        if (j == 1)
            CHECK(img.slot(j) == UPoly::monomial(F, 1, Fq(F, 1)));
        else
            CHECK(img.slot(j).is_zero());
    }

    auto z = h_to_z(zeta_elem(F), 2);
    ZPrimeElem zi = phi_map(*z.value);
    for (long j = 0; j < F.units(); ++j) CHECK(zi.slot(j) == UPoly::monomial(F, 1, Fq(F, 1)));

    ZPrimeElem onei = phi_map(ZElem::one(F));
    for (long j = 0; j < F.units(); ++j) CHECK(onei.slot(j) == UPoly::constant(F, Fq(F, 1)));

    // phi is multiplicative on a random pair of central elements
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> dc(0, F.q - 1);
    for (int it = 0; it < 20; ++it) {
        ZElem a = ZElem::zero(F), b = ZElem::zero(F);
        for (int n = 0; n <= 2; ++n) {
            a.self_triv.set_coeff(n, Fq::packed(F, dc(rng)));
            b.self_triv.set_coeff(n, Fq::packed(F, dc(rng)));
            a.self_quad.set_coeff(n, Fq::packed(F, dc(rng)));
            b.self_quad.set_coeff(n, Fq::packed(F, dc(rng)));
        }
        auto prod = h_to_z(mul(z_to_h(a), z_to_h(b)), 4);
        REQUIRE(prod.status == ZRecognition::Status::ok);
        ZPrimeElem lhs = phi_map(*prod.value);
        ZPrimeElem rhs = ZPrimeElem::zero(F);
        ZPrimeElem ia = phi_map(a), ib = phi_map(b);
        for (long j = 0; j < F.units(); ++j) rhs.slot(j) = ia.slot(j) * ib.slot(j);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the algebra and its centre work over the extension field q = 25") {
    FieldSpec F = make_field(5, 2);
    REQUIRE(F.units() == 24);

    HElem z = zeta_elem(F);  // both formulas agree, centrality checked
    HElem t0 = h_tau(F, 0), t1 = h_tau(F, 1), e1 = h_idem(F, 0);
    CHECK(z == mul(t0, t1) + mul(t1, t0) + mul(e1, t0) + mul(e1, t1) + e1);

    for (int i = 0; i < 2; ++i) {
        HElem ti = h_tau(F, i);
        CHECK(mul(ti, ti) == -mul(ti, e1));
        CHECK(mul(ti, h_idem(F, 5)) == mul(h_idem(F, -5), ti));
    }

    // component cuts at the self-inverse characters id^0 and id^12
    CHECK(mul(h_idem(F, 0), z) == x_elem(F, 0));
    CHECK(mul(h_idem(F, 12), z) == x_elem(F, 12));
    CHECK(mul(x_elem(F, 7), x_elem(F, -7)).is_zero());
    HElem sum(F);
    for (long j = 0; j < F.units(); ++j) sum = sum + x_elem(F, j);
    CHECK(sum == z);

    std::mt19937 rng(6);
    for (int it = 0; it < 20; ++it) {
        HElem a = random_helem(F, rng, 3, 2);
        HElem b = random_helem(F, rng, 3, 2);
        HElem c = random_helem(F, rng, 3, 2);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(jmap(mul(a, b)) == mul(jmap(b), jmap(a)));
        CHECK(iota(iota(a)) == a);
    }
}

TEST_CASE("epsilon idempotents in the localisation") {
    FieldSpec F = make_field(5, 1);
    ZZetaElem zimg = ZZetaElem::zeta_pow(F, 1);
    ZZetaElem eid = epsilon_elem(F, 1);
    ZZetaElem prod = eid * zimg;
    // equals the image of X_id: t in slot id, zero elsewhere
    for (long j = 0; j < F.units(); ++j) {
        if (j == 1)
            CHECK(prod.slot(j) == Laurent::term(F, 1, Fq(F, 1)));
        else
            CHECK(prod.slot(j).is_zero());
    }

    ZZetaElem sum = ZZetaElem::zero(F);
    for (long j = 0; j < F.units(); ++j) sum = sum + epsilon_elem(F, j);
    CHECK(sum == ZZetaElem::one(F));

    for (long a = 0; a < F.units(); ++a)
        for (long b = 0; b < F.units(); ++b) {
            ZZetaElem pr = epsilon_elem(F, a) * epsilon_elem(F, b);
            if (a == b)
                CHECK(pr == epsilon_elem(F, a));
            else
                CHECK(pr == ZZetaElem::zero(F));
        }

    // zeta * zeta^{-1} = 1 in tuple coordinates
    CHECK(ZZetaElem::zeta_pow(F, 1) * ZZetaElem::zeta_pow(F, -1) == ZZetaElem::one(F));
}
