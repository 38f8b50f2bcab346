#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "sl2hecke/field.hpp"

using namespace sl2hecke;

namespace {

// Independent oracle: multiplicative order of a residue mod p by plain
// integer arithmetic.
long order_mod_p(long a, long p) {
    long x = a % p, ord = 1;
    while (x != 1) {
        x = (x * a) % p;
        ++ord;
    }
    return ord;
}

long least_primitive_root(long p) {
    for (long a = 2; a < p; ++a)
        if (order_mod_p(a, p) == p - 1) return a;
    return 0;
}

}  // namespace

TEST_CASE("make_field finds the least primitive root") {
    // Oracle: enumerate element orders.
    CHECK(least_primitive_root(5) == 2);
    CHECK(make_field(5, 1).generator == 2);
    CHECK(least_primitive_root(13) == 2);
    CHECK(make_field(13, 1).generator == 2);
    CHECK(make_field(7, 1).generator == least_primitive_root(7));
    CHECK(make_field(11, 1).generator == least_primitive_root(11));
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 1), NotPrimeError);
    CHECK_THROWS_AS(make_field(9, 1), NotPrimeError);
    CHECK_THROWS_AS(make_field(3, 1), PTooSmallError);
    CHECK_THROWS_AS(make_field(5, 0), UnsupportedDegreeError);
    CHECK_THROWS_AS(make_field(5, 4), UnsupportedDegreeError);
}

TEST_CASE("basic arithmetic in F_5") {
    FieldSpec F = make_field(5, 1);
    Fq two(F, 2), three(F, 3), four(F, 4), one(F, 1);
    CHECK(two * three == one);
    CHECK(one / three == two);
    CHECK(four + four == Fq(F, 3));
    CHECK_THROWS_AS(one / Fq(F, 0), DivisionByZeroError);
}

TEST_CASE("spec mismatch is rejected") {
    FieldSpec F5 = make_field(5, 1);
    FieldSpec F7 = make_field(7, 1);
    CHECK_THROWS_AS(Fq(F5, 1) + Fq(F7, 1), SpecMismatchError);
}

TEST_CASE("dlog in F_5 with g = 2") {
    FieldSpec F = make_field(5, 1);
    CHECK(dlog(F, Fq(F, 4)) == 2);
    CHECK(dlog(F, Fq(F, 1)) == 0);
    CHECK(dlog(F, Fq(F, 3)) == 3);  // 2^3 = 8 = 3 mod 5
    CHECK_THROWS_AS(dlog(F, Fq(F, 0)), ZeroHasNoLogError);
}

TEST_CASE("pow and dlog are mutually inverse, exhaustively") {
    for (auto [p, e] : {std::pair<long, long>{5, 1}, {13, 1}, {5, 2}, {7, 2}, {5, 3}, {13, 2}}) {
        FieldSpec F = make_field(p, e);
        REQUIRE(F.q <= 169 * 13);
        for (long i = 0; i < F.units(); ++i) {
            Fq x = gen_pow(F, i);
            CHECK(dlog(F, x) == i);
        }
        long seen = 0;
        for (long v = 1; v < F.q; ++v) {
            Fq x = Fq::packed(F, v);
            CHECK(gen_pow(F, dlog(F, x)) == x);
            ++seen;
        }
        CHECK(seen == F.units());
    }
}

TEST_CASE("extension field invariants") {
    FieldSpec F25 = make_field(5, 2);
    CHECK(F25.q == 25);
    // reduction is monic of degree 2 with no roots in F_5
    REQUIRE(F25.reduction.size() == 2);
    for (long x = 0; x < 5; ++x) {
        long v = (x * x + F25.reduction[1] * x + F25.reduction[0]) % 5;
        CHECK(v != 0);
    }
}

TEST_CASE("field axioms and Frobenius on random data") {
    std::mt19937 rng(42);
    for (auto [p, e] : {std::pair<long, long>{13, 1}, {5, 2}, {7, 3}}) {
        FieldSpec F = make_field(p, e);
        std::uniform_int_distribution<long> d(0, F.q - 1);
        for (int it = 0; it < 500; ++it) {
            Fq a = Fq::packed(F, d(rng)), b = Fq::packed(F, d(rng)), c = Fq::packed(F, d(rng));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) CHECK(a * a.inv() == Fq(F, 1));
        }
        for (int it = 0; it < 200; ++it) {
            Fq a = Fq::packed(F, d(rng)), b = Fq::packed(F, d(rng));
            CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
        }
    }
}
