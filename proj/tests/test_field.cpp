#include <catch2/catch_amalgamated.hpp>

#include <glab/field.hpp>

using namespace glab;

namespace {

std::vector<int> all_orders() { return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}; }

}  // namespace

TEST_CASE("prime fields need no modulus", "[field]") {
    GaloisField f2(2, 1);
    CHECK(f2.order() == 2);
    CHECK(f2.modulus().empty());

    GaloisField f3(3, 1);
    CHECK(f3.order() == 3);
    CHECK(f3.add(2, 2) == 1);
}

TEST_CASE("GF(4) uses the unique irreducible quadratic", "[field]") {
    GaloisField f4(2, 2);
    CHECK(f4.order() == 4);
    // x^2 + x + 1, coefficients ascending
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
    // x * x = x + 1 under that modulus: labels x = 2, x+1 = 3
    CHECK(f4.mul(2, 2) == 3);
}

TEST_CASE("construction rejects bad parameters", "[field]") {
    CHECK_THROWS_AS(GaloisField(4, 1), ValidationError);
    CHECK_THROWS_AS(GaloisField(6, 1), ValidationError);
    CHECK_THROWS_AS(GaloisField(2, 5), ValidationError);   // 32 > 16
    CHECK_THROWS_AS(GaloisField(5, 2), ValidationError);   // 25 > 16
    CHECK_THROWS_AS(GaloisField::of_order(6), ValidationError);
    CHECK_THROWS_AS(GaloisField::of_order(12), ValidationError);
}

TEST_CASE("field axioms hold exhaustively for every supported order", "[field]") {
    for (int q : all_orders()) {
        GaloisField F = GaloisField::of_order(q);
        INFO("q = " << q);
        const int n = F.order();
        for (int a = 0; a < n; ++a) {
            CHECK(F.add(static_cast<Felem>(a), 0) == a);
            CHECK(F.mul(static_cast<Felem>(a), 1) == a);
            CHECK(F.add(static_cast<Felem>(a), F.neg(static_cast<Felem>(a))) == 0);
            for (int b = 0; b < n; ++b) {
                CHECK(F.add(static_cast<Felem>(a), static_cast<Felem>(b)) ==
                      F.add(static_cast<Felem>(b), static_cast<Felem>(a)));
                CHECK(F.mul(static_cast<Felem>(a), static_cast<Felem>(b)) ==
                      F.mul(static_cast<Felem>(b), static_cast<Felem>(a)));
                for (int c = 0; c < n; ++c) {
                    const Felem fa = static_cast<Felem>(a);
                    const Felem fb = static_cast<Felem>(b);
                    const Felem fc = static_cast<Felem>(c);
                    CHECK(F.add(F.add(fa, fb), fc) == F.add(fa, F.add(fb, fc)));
                    CHECK(F.mul(F.mul(fa, fb), fc) == F.mul(fa, F.mul(fb, fc)));
                    CHECK(F.mul(fa, F.add(fb, fc)) == F.add(F.mul(fa, fb), F.mul(fa, fc)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative inverses and exp/log round-trip", "[field]") {
    for (int q : all_orders()) {
        GaloisField F = GaloisField::of_order(q);
        INFO("q = " << q);
        CHECK(F.inv(1) == 1);
        for (int a = 1; a < q; ++a) {
            CHECK(F.mul(static_cast<Felem>(a), F.inv(static_cast<Felem>(a))) == 1);
            CHECK(F.exp_at(F.log_of(static_cast<Felem>(a))) == a);
        }
        // exp has period q-1
        for (int i = 0; i < q - 1; ++i) CHECK(F.exp_at(i) == F.exp_at(i + (q - 1)));
        CHECK_THROWS_AS(F.inv(0), ValidationError);
    }
}
