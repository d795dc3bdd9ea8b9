#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <glab/code.hpp>
#include <glab/oracles.hpp>

using namespace glab;

namespace {

LinearCode simplex_code(int q, int k) {
    GaloisField F = GaloisField::of_order(q);
    return LinearCode(F, k, projective_points(F, k));
}

// dumbest possible support weight table: enumerate (k-r)-dim subspaces,
// count columns by explicit membership tests
SSWDTable sswd_by_membership(const LinearCode& code, int r) {
    const GaloisField& F = code.field();
    const int k = code.dim();
    SSWDTable t;
    t.r = r;
    std::map<long long, std::uint64_t> hist;
    SubspaceEnumerator en(F, k, k - r);
    Subspace V;
    while (en.next(V)) {
        std::uint64_t m = 0;
        for (const Vec& c : code.columns()) m += contains(F, V, c);
        ++hist[code.length() - static_cast<long long>(m)];
    }
    for (const auto& [w, c] : hist) t.counts[w] = c;
    return t;
}

}  // namespace

TEST_CASE("construction validates columns", "[code]") {
    GaloisField F(2, 1);
    CHECK_THROWS_AS(LinearCode(F, 2, {Vec{0, 0}}), ValidationError);
    CHECK_THROWS_AS(LinearCode(F, 2, {Vec{1, 0}, Vec{1, 0}}), ValidationError);
    CHECK_THROWS_AS(LinearCode(F, 2, {Vec{1, 0}, Vec{1}}), ValidationError);
    // rank deficient
    CHECK_THROWS_AS(LinearCode(F, 3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{1, 1, 0}}),
                    ValidationError);
    // proportional columns over GF(3) normalize to the same point
    GaloisField f3(3, 1);
    CHECK_THROWS_AS(LinearCode(f3, 2, {Vec{1, 2}, Vec{2, 1}, Vec{2, 4 % 3}}), ValidationError);
    CHECK_NOTHROW(LinearCode(f3, 2, {Vec{1, 2}, Vec{1, 0}, Vec{0, 2}}));
}

TEST_CASE("weight of a functional", "[code]") {
    // full simplex: every hyperplane contains (q^{k-1}-1)/(q-1) points
    for (int q : {2, 3}) {
        for (int k = 2; k <= 4; ++k) {
            LinearCode c = simplex_code(q, k);
            const std::uint64_t expect = upow(static_cast<std::uint64_t>(q),
                                              static_cast<unsigned>(k - 1));
            for (const Vec& a : projective_points(c.field(), k)) {
                CHECK(c.weight_of_functional(a) == static_cast<int>(expect));
            }
        }
    }
    // single column e1 in a 2-dim ambient (rank-deficient: analysis-free)
    GaloisField F(2, 1);
    LinearCode single(F, 2, {Vec{1, 0}}, /*require_full_rank=*/false);
    CHECK(single.weight_of_functional(Vec{1, 0}) == 1);
    CHECK(single.weight_of_functional(Vec{0, 1}) == 0);
    CHECK_THROWS_AS(single.weight_of_functional(Vec{0, 0}), ValidationError);
    CHECK_THROWS_AS(single.weight_distribution(), ValidationError);
}

TEST_CASE("weight distribution of tiny codes", "[code]") {
    GaloisField F(2, 1);
    // k = 1, one column
    LinearCode c1(F, 1, {Vec{1}});
    CHECK(c1.weight_distribution().counts ==
          std::map<long long, BigInt>{{0, 1}, {1, 1}});

    GaloisField f3(3, 1);
    LinearCode c3(f3, 1, {Vec{1}});
    CHECK(c3.weight_distribution().counts ==
          std::map<long long, BigInt>{{0, 1}, {1, 2}});

    // simplex [7,3,4]_2: all nonzero weights are 4
    LinearCode s = simplex_code(2, 3);
    CHECK(s.weight_distribution().counts ==
          std::map<long long, BigInt>{{0, 1}, {4, 7}});
    CHECK(s.minimum_distance() == 4);
    CHECK(s.dual_distance_at_least_3());
}

TEST_CASE("weight distribution mass is q^k and engines agree", "[code]") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5}) {
        GaloisField F = GaloisField::of_order(q);
        for (int k = 2; k <= 4; ++k) {
            // random projective subset containing a spanning set
            auto pts = projective_points(F, k);
            std::shuffle(pts.begin(), pts.end(), rng);
            const std::size_t keep = pts.size() / 2 + static_cast<std::size_t>(k);
            pts.resize(std::min(pts.size(), keep));
            LinearCode code(F, k, pts, /*require_full_rank=*/false);
            if (code.rank() != k) continue;
            const auto& wd = code.weight_distribution();
            CHECK(wd.total() == bpow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k)));
            // the specialized engines must match the generic reference
            CHECK(wd == code.weight_distribution_reference());
            // and every functional weight matches the direct column count
            std::vector<std::uint64_t> hist(static_cast<std::size_t>(code.length()) + 1, 0);
            for (const Vec& a : projective_points(F, k)) {
                ++hist[static_cast<std::size_t>(code.weight_of_functional(a))];
            }
            WeightDistribution direct;
            direct.counts[0] = 1;
            for (std::size_t w = 1; w < hist.size(); ++w) {
                if (hist[w]) direct.counts[static_cast<long long>(w)] = BigInt(hist[w]) * (q - 1);
            }
            CHECK(wd == direct);
        }
    }
}

TEST_CASE("column counts in subspaces", "[code]") {
    LinearCode s = simplex_code(2, 3);
    CHECK(s.columns_in_subspace(full_space(3)) == 7);
    CHECK(s.columns_in_subspace(zero_subspace(3)) == 0);
    GaloisField F(2, 1);
    Subspace line = span(F, {Vec{1, 1, 0}}, 3);
    CHECK(s.columns_in_subspace(line) == 1);
    Subspace plane = span(F, {Vec{1, 0, 0}, Vec{0, 1, 0}}, 3);
    CHECK(s.columns_in_subspace(plane) == 3);
}

TEST_CASE("support weight tables: identities and frozen values", "[code]") {
    for (int q : {2, 3}) {
        const int k = 4;
        LinearCode s = simplex_code(q, k);
        // r = k: single subcode supported everywhere
        const auto full = s.support_weight_table(k);
        CHECK(full.counts == std::map<long long, BigInt>{{s.length(), 1}});
        CHECK(s.generalized_weight(k) == s.length());
        // r = 1 vs weight distribution: A_w = (q-1) A_w^1
        const auto t1 = s.support_weight_table(1);
        const auto& wd = s.weight_distribution();
        for (const auto& [w, cnt] : t1.counts) {
            CHECK(wd.counts.at(w) == cnt * (q - 1));
        }
        CHECK(t1.total() == gaussian_binomial(k, 1, q));
        // r = 1 generalized weight is the minimum distance
        CHECK(s.generalized_weight(1) == s.minimum_distance());
        // simplex GHW: d_r = (q^k - q^{k-r})/(q-1)
        for (int r = 1; r <= k; ++r) {
            const BigInt expect = (bpow(q, k) - bpow(q, static_cast<std::uint64_t>(k - r))) / (q - 1);
            CHECK(BigInt(s.generalized_weight(r)) == expect);
            CHECK(s.support_weight_table(r).total() == gaussian_binomial(k, r, q));
        }
    }
}

TEST_CASE("both sswd routes agree with the membership reference", "[code]") {
    std::mt19937 rng(99);
    for (int q : {2, 3}) {
        GaloisField F = GaloisField::of_order(q);
        const int k = (q == 2) ? 5 : 4;
        auto pts = projective_points(F, k);
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(pts.size() * 2 / 3);
        LinearCode code(F, k, pts, false);
        if (code.rank() != k) continue;
        for (int r = 1; r <= k; ++r) {
            CHECK(code.support_weight_table(r) == sswd_by_membership(code, r));
        }
    }
}

TEST_CASE("strict monotonicity of the weight hierarchy", "[code]") {
    for (int q : {2, 3}) {
        LinearCode s = simplex_code(q, 4);
        long long prev = 0;
        for (int r = 1; r <= 4; ++r) {
            const long long d = s.generalized_weight(r);
            CHECK(d > prev);
            prev = d;
        }
    }
}

TEST_CASE("analyses are invariant under column permutation", "[code]") {
    std::mt19937 rng(2024);
    GaloisField F(2, 1);
    auto pts = projective_points(F, 4);
    pts.resize(11);
    LinearCode a(F, 4, pts, false);
    REQUIRE(a.rank() == 4);
    for (int trial = 0; trial < 3; ++trial) {
        auto shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        LinearCode b(F, 4, shuffled, false);
        CHECK(a.weight_distribution() == b.weight_distribution());
        for (int r = 1; r <= 4; ++r) {
            CHECK(a.support_weight_table(r) == b.support_weight_table(r));
            CHECK(a.generalized_weight(r) == b.generalized_weight(r));
        }
    }
}

TEST_CASE("results are independent of the worker count", "[code]") {
    GaloisField F(3, 1);
    auto pts = projective_points(F, 4);
    pts.resize(30);
    LinearCode a(F, 4, pts, false);
    REQUIRE(a.rank() == 4);
    LinearCode b(F, 4, pts, false);
    Caps serial;
    serial.threads = 1;
    Caps parallel;
    parallel.threads = 3;
    CHECK(a.weight_distribution(serial) == b.weight_distribution(parallel));
}

TEST_CASE("caps are honored", "[code]") {
    LinearCode s = simplex_code(2, 4);
    Caps tight;
    tight.max_code_space = 8;
    CHECK_THROWS_AS(s.weight_distribution(tight), CapExceeded);
    Caps tiny;
    tiny.max_subspaces = 3;
    CHECK_THROWS_AS(s.support_weight_table(2, tiny), CapExceeded);
}
