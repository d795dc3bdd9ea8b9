#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <glab/vectorspace.hpp>

using namespace glab;

namespace {

// All subspaces of F_q^k, every dimension.
std::vector<Subspace> all_subspaces(const GaloisField& F, int k) {
    std::vector<Subspace> out;
    for (int r = 0; r <= k; ++r) {
        SubspaceEnumerator en(F, k, r);
        Subspace s;
        while (en.next(s)) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("projective point counts and contents", "[vectorspace]") {
    GaloisField f2(2, 1);
    CHECK(projective_points(f2, 3).size() == 7);
    CHECK(projective_points(f2, 1).size() == 1);

    GaloisField f3(3, 1);
    const auto pts = projective_points(f3, 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Vec{0, 1});
    CHECK(pts[1] == Vec{1, 0});
    CHECK(pts[2] == Vec{1, 1});
    CHECK(pts[3] == Vec{1, 2});
}

TEST_CASE("projective points are lex sorted, deduplicated, rank-consistent", "[vectorspace]") {
    for (int q : {2, 3, 4}) {
        GaloisField F = GaloisField::of_order(q);
        for (int k = 1; k <= 4; ++k) {
            const auto pts = projective_points(F, k);
            CHECK(pts.size() == projective_point_count(q, k));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                CHECK(projective_rank(F, pts[i]) == i);
                if (i > 0) CHECK(encode_vec(F, pts[i - 1]) < encode_vec(F, pts[i]));
            }
        }
    }
}

TEST_CASE("span returns a canonical basis", "[vectorspace]") {
    GaloisField F(3, 1);
    const int k = 4;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) {
            Vec v(k);
            for (auto& c : v) c = static_cast<Felem>(coord(rng));
            gens.push_back(v);
        }
        Subspace a = span(F, gens, k);
        // random invertible recombination spans the same subspace
        std::vector<Vec> mixed;
        for (int i = 0; i < 5; ++i) {
            Vec v(k, 0);
            for (const auto& g : gens) {
                const Felem c = static_cast<Felem>(coord(rng));
                for (int j = 0; j < k; ++j) {
                    v[static_cast<std::size_t>(j)] =
                        F.add(v[static_cast<std::size_t>(j)], F.mul(c, g[static_cast<std::size_t>(j)]));
                }
            }
            mixed.push_back(v);
        }
        for (const auto& g : gens) mixed.push_back(g);
        CHECK(span(F, mixed, k) == a);
    }
}

TEST_CASE("coordinate-block spans behave as expected", "[vectorspace]") {
    GaloisField F(2, 1);
    const int k = 4;
    Subspace e12 = span(F, {unit_vec(k, 0), unit_vec(k, 1)}, k);
    Subspace e34 = span(F, {unit_vec(k, 2), unit_vec(k, 3)}, k);
    CHECK(intersect(F, e12, e34).dim() == 0);
    CHECK(sum(F, e12, e34).dim() == 4);

    Subspace a = span(F, {unit_vec(k, 0), unit_vec(k, 1), unit_vec(k, 2)}, k);
    Subspace b = span(F, {unit_vec(k, 1), unit_vec(k, 2), unit_vec(k, 3)}, k);
    Subspace meet = intersect(F, a, b);
    CHECK(meet == span(F, {unit_vec(k, 1), unit_vec(k, 2)}, k));
}

TEST_CASE("dimension formula over all subspace pairs", "[vectorspace]") {
    for (int q : {2, 3}) {
        GaloisField F = GaloisField::of_order(q);
        const int k = (q == 2) ? 4 : 3;
        const auto subs = all_subspaces(F, k);
        for (const auto& a : subs) {
            for (const auto& b : subs) {
                const Subspace s = sum(F, a, b);
                const Subspace m = intersect(F, a, b);
                CHECK(s.dim() + m.dim() == a.dim() + b.dim());
                for (const auto& row : m.basis) {
                    CHECK(contains(F, a, row));
                    CHECK(contains(F, b, row));
                }
            }
        }
    }
}

TEST_CASE("orthogonal complement", "[vectorspace]") {
    GaloisField f2(2, 1);
    Subspace e1 = span(f2, {unit_vec(3, 0)}, 3);
    CHECK(orthogonal_complement(f2, e1) == span(f2, {unit_vec(3, 1), unit_vec(3, 2)}, 3));
    CHECK(orthogonal_complement(f2, full_space(3)).dim() == 0);

    GaloisField f3(3, 1);
    Subspace diag = span(f3, {Vec{1, 1, 1}}, 3);
    Subspace c = orthogonal_complement(f3, diag);
    REQUIRE(c.dim() == 2);
    for (const auto& row : c.basis) {
        CHECK(static_cast<int>((row[0] + row[1] + row[2]) % 3) == 0);
    }

    for (int q : {2, 3}) {
        GaloisField F = GaloisField::of_order(q);
        const int k = (q == 2) ? 4 : 3;
        for (const auto& s : all_subspaces(F, k)) {
            const Subspace cc = orthogonal_complement(F, orthogonal_complement(F, s));
            CHECK(cc == s);
            CHECK(orthogonal_complement(F, s).dim() == k - s.dim());
        }
    }
}

TEST_CASE("subspace enumeration matches Gaussian binomials", "[vectorspace]") {
    GaloisField f2(2, 1);
    {
        SubspaceEnumerator en(f2, 2, 1);
        Subspace s;
        int n = 0;
        while (en.next(s)) ++n;
        CHECK(n == 3);
    }
    {
        SubspaceEnumerator en(f2, 4, 2);
        Subspace s;
        std::vector<Subspace> seen;
        while (en.next(s)) {
            // canonical: re-spanning the basis is a no-op
            CHECK(span(f2, s.basis, 4) == s);
            CHECK(std::find(seen.begin(), seen.end(), s) == seen.end());
            seen.push_back(s);
        }
        CHECK(seen.size() == 35);
    }
    for (int q : {2, 3, 4}) {
        GaloisField F = GaloisField::of_order(q);
        for (int k = 0; k <= 6; ++k) {
            for (int r = 0; r <= k; ++r) {
                if (gaussian_binomial(k, r, q) > 500000) continue;
                SubspaceEnumerator en(F, k, r);
                Subspace s;
                std::uint64_t n = 0;
                while (en.next(s)) ++n;
                CHECK(BigInt(n) == gaussian_binomial(k, r, q));
            }
        }
    }
}

TEST_CASE("enumeration caps are enforced", "[vectorspace]") {
    GaloisField f2(2, 1);
    Caps tight;
    tight.max_subspaces = 10;
    CHECK_THROWS_AS(for_each_subspace(f2, 4, 2, tight, [](const Subspace&) {}), CapExceeded);
    tight.max_code_space = 8;
    CHECK_THROWS_AS(projective_points(f2, 4, tight), CapExceeded);
}
