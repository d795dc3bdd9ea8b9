#include <catch2/catch_amalgamated.hpp>

#include <glab/oracles.hpp>
#include <glab/qcombinatorics.hpp>

using namespace glab;

TEST_CASE("gaussian binomial basics", "[qcombinatorics]") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(2, 1, 3) == 4);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(6, 3, 3) == BigInt("33880"));
    CHECK(gaussian_binomial(4, 5, 2) == 0);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), ValidationError);
    for (int q : {2, 3, 4}) {
        for (int k = 0; k <= 8; ++k) {
            for (int r = 0; r <= k; ++r) {
                CHECK(gaussian_binomial(k, r, q) == gaussian_binomial(k, k - r, q));
            }
        }
    }
}

TEST_CASE("gaussian binomial matches subspace enumeration", "[qcombinatorics]") {
    // lines of F_3^2 equal the projective point count
    GaloisField f3(3, 1);
    CHECK(BigInt(projective_points(f3, 2).size()) == gaussian_binomial(2, 1, 3));
}

TEST_CASE("q-adic expansion", "[qcombinatorics]") {
    auto e = q_adic(3, 2);
    CHECK(e.digits == std::vector<int>{1, 1});
    CHECK(e.least_nonzero_index == 0);

    e = q_adic(4, 2);
    CHECK(e.digits == std::vector<int>{0, 0, 1});
    CHECK(e.least_nonzero_index == 2);

    e = q_adic(6, 3);
    CHECK(e.digits == std::vector<int>{0, 2});
    CHECK(e.least_nonzero_index == 1);

    CHECK_THROWS_AS(q_adic(0, 2), ValidationError);
}

TEST_CASE("intersection count against one fixed subspace", "[qcombinatorics]") {
    GaloisField f2(2, 1);
    // t = l <= u1 = k degenerates to choosing V inside U1
    CHECK(count_subspaces_by_intersection(4, 4, 2, 2, 2) == gaussian_binomial(4, 2, 2));
    // 7 lines of F_2^3, one inside a fixed line
    CHECK(count_subspaces_by_intersection(3, 1, 1, 0, 2) == 6);
    CHECK(count_subspaces_by_intersection(3, 1, 1, 0, 2) ==
          oracle::count_subspaces_by_intersection(f2, 3, 1, 1, 0));
    // frozen from the oracle: 2-dim subspaces of F_2^4 meeting a fixed plane
    // in a line (35 planes total = 1 with t=2, 16 with t=0, 18 with t=1)
    CHECK(oracle::count_subspaces_by_intersection(f2, 4, 2, 2, 1) == 18);
    CHECK(count_subspaces_by_intersection(4, 2, 2, 1, 2) == 18);
}

TEST_CASE("count is independent of the subspace choice", "[qcombinatorics]") {
    GaloisField f2(2, 1);
    const Subspace tilted = span(f2, {Vec{1, 1, 0, 0}, Vec{0, 1, 1, 1}}, 4);
    REQUIRE(tilted.dim() == 2);
    for (int l = 0; l <= 4; ++l) {
        for (int t = 0; t <= 2; ++t) {
            CHECK(oracle::count_subspaces_by_intersection(f2, 4, 2, l, t, Caps{}, &tilted) ==
                  count_subspaces_by_intersection(4, 2, l, t, 2));
        }
    }
}

TEST_CASE("direct-sum counts", "[qcombinatorics]") {
    // t = 0 factorizes
    CHECK(count_in_direct_sum(2, 2, 1, 1, 0, 2) ==
          gaussian_binomial(2, 1, 2) * gaussian_binomial(2, 1, 2));
    // forced V = U1 (+) U2
    CHECK(count_in_direct_sum(1, 1, 1, 1, 0, 2) == 1);
    // frozen from the oracle: lines of F_2^4 meeting both planes trivially
    GaloisField f2(2, 1);
    CHECK(oracle::count_in_direct_sum(f2, 2, 2, 0, 0, 1) == 9);
    CHECK(count_in_direct_sum(2, 2, 0, 0, 1, 2) == 9);
}

TEST_CASE("two-intersection counts", "[qcombinatorics]") {
    GaloisField f2(2, 1);
    // l = k forces V = F_q^k
    CHECK(count_by_two_intersections(4, 2, 2, 4, 2, 2, 2) == 1);
    CHECK(count_by_two_intersections(4, 2, 2, 4, 1, 2, 2) == 0);
    CHECK(count_by_two_intersections(4, 2, 2, 2, 2, 0, 2) == 1);
    // 2-dim subspaces of F_2^4 containing two fixed disjoint lines: only
    // their sum
    CHECK(oracle::count_by_two_intersections(f2, 4, 1, 1, 2, 1, 1) == 1);
    CHECK(count_by_two_intersections(4, 1, 1, 2, 1, 1, 2) == 1);
}

TEST_CASE("common-part counts: pinned examples", "[qcombinatorics]") {
    GaloisField f2(2, 1);
    // forced V = U1 + U2
    CHECK(count_in_sum_with_common(1, 2, 2, 1, 2, 2, 0, 2) == 1);
    // frozen by hand and by the oracle: 2-dim subspaces of a 3-dim U1+U2
    // meeting U0 trivially and each U_i in a line
    CHECK(oracle::count_in_sum_with_common(f2, 1, 2, 2, 0, 1, 1, 0) == 4);
    CHECK(count_in_sum_with_common(1, 2, 2, 0, 1, 1, 0, 2) == 4);
    // u0 = v0 = 0 degenerates to the direct-sum count
    for (int t = 0; t <= 2; ++t) {
        CHECK(count_in_sum_with_common(0, 2, 2, 0, 1, 1, t, 2) ==
              count_in_direct_sum(2, 2, 1, 1, t, 2));
    }
    // spec-pinned brute-force case
    CHECK(count_in_sum_with_common(1, 2, 2, 0, 1, 1, 0, 2) ==
          oracle::count_in_sum_with_common(f2, 1, 2, 2, 0, 1, 1, 0));
}

TEST_CASE("three-intersection counts: pinned examples", "[qcombinatorics]") {
    GaloisField f2(2, 1);
    CHECK(count_by_three_intersections(5, 1, 2, 2, 5, 1, 2, 2, 2) == 1);
    CHECK(count_by_three_intersections(5, 1, 2, 2, 5, 0, 2, 2, 2) == 0);
    const BigInt brute = oracle::count_by_three_intersections(f2, 5, 1, 2, 2, 2, 0, 1, 0);
    CHECK(count_by_three_intersections(5, 1, 2, 2, 2, 0, 1, 0, 2) == brute);
    // u0 = 0 degenerates to the disjoint-pair count
    for (int l = 0; l <= 4; ++l) {
        CHECK(count_by_three_intersections(4, 0, 2, 2, l, 0, 1, 1, 2) ==
              count_by_two_intersections(4, 2, 2, l, 1, 1, 2));
    }
}

TEST_CASE("intersection counts sum to the Gaussian binomial", "[qcombinatorics]") {
    for (int q : {2, 3}) {
        for (int k = 1; k <= 5; ++k) {
            for (int u1 = 0; u1 <= k - 1; ++u1) {
                for (int l = 0; l <= k; ++l) {
                    BigInt total = 0;
                    for (int t = 0; t <= std::min(u1, l); ++t) {
                        total += count_subspaces_by_intersection(k, u1, l, t, q);
                    }
                    CHECK(total == gaussian_binomial(k, l, q));
                }
            }
        }
    }
}

TEST_CASE("three-intersection counts sum to the Gaussian binomial", "[qcombinatorics]") {
    for (int q : {2, 3}) {
        const int k = 5, u0 = 1, u1 = 2, u2 = 3;
        for (int l = 0; l <= k; ++l) {
            BigInt total = 0;
            for (int v0 = 0; v0 <= u0; ++v0) {
                for (int v1 = v0; v1 <= u1; ++v1) {
                    for (int v2 = v0; v2 <= u2; ++v2) {
                        total += count_by_three_intersections(k, u0, u1, u2, l, v0, v1, v2, q);
                    }
                }
            }
            CHECK(total == gaussian_binomial(k, l, q));
        }
    }
}
