#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "sl2hecke/hecke.hpp"
#include "sl2hecke/omega.hpp"

using namespace sl2hecke;

TEST_CASE("char_eval basics over F_5") {
    FieldSpec F = make_field(5, 1);
    CHECK(char_eval(F, Character{0}, OmegaElem{1}) == Fq(F, 1));
    CHECK(char_eval(F, Character{0}, OmegaElem{3}) == Fq(F, 1));
    CHECK(char_eval(F, Character{2}, OmegaElem{1}) == Fq(F, 4));  // g^2 = 4
    // omega_{-1} = g^2, id(g^2) = 4 = -1
    CHECK(omega_minus_one(F).exp == 2);
    CHECK(char_eval(F, Character{1}, omega_minus_one(F)) == Fq(F, 4));
}

TEST_CASE("char_eval is multiplicative") {
    FieldSpec F = make_field(13, 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(0, F.units() - 1);
    for (int i = 0; i < 100; ++i) {
        Character lam{d(rng)};
        OmegaElem w{d(rng)}, v{d(rng)};
        OmegaElem wv = OmegaElem::of(F, w.exp + v.exp);
        CHECK(char_eval(F, lam, wv) == char_eval(F, lam, w) * char_eval(F, lam, v));
    }
}

TEST_CASE("idempotent of the trivial character in F_5") {
    FieldSpec F = make_field(5, 1);
    GroupAlgElem e1 = idempotent(F, trivial_char());
    REQUIRE(e1.terms().size() == 4);
    for (auto& [exp, c] : e1.terms()) CHECK(c == Fq(F, 4));
}

TEST_CASE("idempotent of id over F_5 is 4w(0)+2w(1)+1w(2)+3w(3)") {
    // Direct evaluation: coefficient of w(i) is -g^{-i}.
    FieldSpec F = make_field(5, 1);
    GroupAlgElem e = idempotent(F, Character{1});
    CHECK(e.terms().at(0) == Fq(F, 4));
    CHECK(e.terms().at(1) == Fq(F, 2));
    CHECK(e.terms().at(2) == Fq(F, 1));
    CHECK(e.terms().at(3) == Fq(F, 3));
}

TEST_CASE("idempotents are orthogonal and complete") {
    for (long p : {5L, 13L}) {
        FieldSpec F = make_field(p, 1);
        GroupAlgElem sum(F);
        for (long j = 0; j < F.units(); ++j) {
            GroupAlgElem ej = idempotent(F, Character{j});
            REQUIRE(ej.terms().size() == static_cast<std::size_t>(F.units()));
            sum = sum + ej;
            for (long k = 0; k < F.units(); ++k) {
                GroupAlgElem prod = ej * idempotent(F, Character{k});
                if (j == k)
                    CHECK(prod == ej);
                else
                    CHECK(prod.is_zero());
            }
        }
        CHECK(sum == group_one(F));
    }
    // Oracle for completeness: the double sum collapses by character
    // orthogonality, sum_j g^{-j*i} = 0 for i != 0 and = q-1 = -1 for i = 0.
    FieldSpec F = make_field(7, 1);
    for (long i = 1; i < F.units(); ++i) {
        Fq acc(F, 0);
        for (long j = 0; j < F.units(); ++j) acc = acc + gen_pow(F, -j * i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("group algebra convolution") {
    FieldSpec F = make_field(5, 1);
    GroupAlgElem a = group_elem(F, OmegaElem{1});
    GroupAlgElem b = group_elem(F, OmegaElem{3});
    CHECK(a * b == group_one(F));  // 1+3 = 0 mod 4
}

TEST_CASE("the group algebra agrees with the length-zero subalgebra of H") {
    // k[Omega] embeds into H by w -> tau_w; products must agree termwise
    FieldSpec F = make_field(7, 1);
    std::mt19937 rng(40);
    std::uniform_int_distribution<long> de(0, F.units() - 1);
    std::uniform_int_distribution<long> dc(0, F.q - 1);
    for (int it = 0; it < 50; ++it) {
        GroupAlgElem ga(F), gb(F);
        HElem ha(F), hb(F);
        for (int t = 0; t < 3; ++t) {
            long e1 = de(rng), e2 = de(rng);
            Fq c1 = Fq::packed(F, dc(rng)), c2 = Fq::packed(F, dc(rng));
            ga.add_term(e1, c1);
            gb.add_term(e2, c2);
            ha.add_term(Word{e1, 0, 0}, c1);
            hb.add_term(Word{e2, 0, 0}, c2);
        }
        GroupAlgElem gp = ga * gb;
        HElem hp = mul(ha, hb);
        REQUIRE(gp.terms().size() == hp.terms().size());
        for (auto& [e, c] : gp.terms()) CHECK(hp.coeff(Word{e, 0, 0}) == c);
    }
    // and the two idempotent constructions coincide
    for (long j = 0; j < F.units(); ++j) {
        GroupAlgElem ge = idempotent(F, Character{j});
        HElem he = h_idem(F, j);
        REQUIRE(ge.terms().size() == he.terms().size());
        for (auto& [e, c] : ge.terms()) CHECK(he.coeff(Word{e, 0, 0}) == c);
    }
}

TEST_CASE("classes of the pairing a ~ mu/a") {
    FieldSpec F5 = make_field(5, 1);
    CHECK(class_of(F5, Character{1}) == std::vector<long>{1});  // 2-1 = 1 mod 4
    CHECK(class_of(F5, Character{0}) == std::vector<long>{0, 2});
    CHECK(num_sim_classes(F5) == 3);  // (q+1)/2

    FieldSpec F13 = make_field(13, 1);
    long singletons = 0;
    std::vector<long> where;
    for (long j = 0; j < F13.units(); ++j)
        if (class_of(F13, Character{j}).size() == 1) {
            ++singletons;
            where.push_back(j);
        }
    CHECK(singletons == 2);
    CHECK(where == std::vector<long>{1, 7});  // j = 1 and (p+1)/2
    CHECK(num_sim_classes(F13) == 7);
}

TEST_CASE("class count is (q+1)/2 for prime q") {
    for (long p : {5L, 7L, 11L, 13L, 17L}) {
        FieldSpec F = make_field(p, 1);
        CHECK(num_sim_classes(F) == (p + 1) / 2);
    }
}
