#pragma once

#include <algorithm>
#include <vector>

#include <glab/common.hpp>

namespace glab {

// Number of r-dimensional subspaces of F_q^k:
//   (q^k - 1)(q^k - q) ... (q^k - q^{r-1}) / ((q^r - 1)(q^r - q) ... (q^r - q^{r-1}))
// Returns 0 when r is outside [0, k].
inline BigInt gaussian_binomial(int k, int r, int q) {
    if (q < 2) throw ValidationError("gaussian_binomial: q must be >= 2");
    if (k < 0) throw ValidationError("gaussian_binomial: k must be >= 0");
    if (r < 0 || r > k) return 0;
    if (r > k - r) r = k - r;  // symmetry keeps the product short
    BigInt num = 1, den = 1;
    const BigInt qk = bpow(q, static_cast<std::uint64_t>(k));
    const BigInt qr = bpow(q, static_cast<std::uint64_t>(r));
    BigInt qi = 1;
    for (int i = 0; i < r; ++i) {
        num *= qk - qi;
        den *= qr - qi;
        qi *= q;
    }
    return num / den;
}

// Number of invertible t x t matrices over GF(q).
inline BigInt gl_order(int t, int q) {
    if (t < 0) return 0;
    BigInt r = 1;
    const BigInt qt = bpow(q, static_cast<std::uint64_t>(t));
    BigInt qi = 1;
    for (int i = 0; i < t; ++i) {
        r *= qt - qi;
        qi *= q;
    }
    return r;
}

// Base-q expansion of a positive integer together with the index of its
// least significant nonzero digit.
struct QAdicExpansion {
    std::vector<int> digits;     // ascending, no trailing zeros
    int least_nonzero_index = 0;

    bool operator==(const QAdicExpansion& o) const {
        return digits == o.digits && least_nonzero_index == o.least_nonzero_index;
    }
};

inline QAdicExpansion q_adic(long long h, int q) {
    if (h < 1) throw ValidationError("q_adic: h must be >= 1");
    if (q < 2) throw ValidationError("q_adic: q must be >= 2");
    QAdicExpansion e;
    while (h > 0) {
        e.digits.push_back(static_cast<int>(h % q));
        h /= q;
    }
    e.least_nonzero_index = 0;
    while (e.digits[static_cast<std::size_t>(e.least_nonzero_index)] == 0) {
        ++e.least_nonzero_index;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Subspace intersection counts. Each closed form below is paired with a
// brute-force oracle in oracles.hpp; the oracles are the ground truth and
// the acceptance suite sweeps them against these formulas exhaustively for
// small parameters.
// ---------------------------------------------------------------------------

// Number of l-dimensional subspaces V of F_q^k with dim(V n U1) = t, for a
// fixed u1-dimensional subspace U1 (the count does not depend on the choice
// of U1).
inline BigInt count_subspaces_by_intersection(int k, int u1, int l, int t, int q) {
    if (k < 0 || u1 < 0 || u1 > k || l < 0 || l > k || t < 0) {
        throw ValidationError("count_subspaces_by_intersection: parameters out of range");
    }
    if (t > u1 || t > l) return 0;
    return bpow(q, static_cast<std::uint64_t>(u1 - t) * static_cast<std::uint64_t>(l - t)) *
           gaussian_binomial(k - u1, l - t, q) * gaussian_binomial(u1, t, q);
}

// Number of (t+v1+v2)-dimensional subspaces V of U1 (+) U2 (direct sum of
// disjoint subspaces of dimensions u1, u2) with dim(V n U1) = v1 and
// dim(V n U2) = v2.
inline BigInt count_in_direct_sum(int u1, int u2, int v1, int v2, int t, int q) {
    if (u1 < 0 || u2 < 0 || v1 < 0 || v2 < 0 || t < 0) {
        throw ValidationError("count_in_direct_sum: parameters out of range");
    }
    if (v1 > u1 || v2 > u2 || t > u1 - v1 || t > u2 - v2) return 0;
    BigInt r = gaussian_binomial(u1, v1, q) * gaussian_binomial(u2, v2, q);
    if (t > 0) {
        r *= gl_order(t, q) * gaussian_binomial(u1 - v1, t, q) * gaussian_binomial(u2 - v2, t, q);
    }
    return r;
}

// Number of l-dimensional subspaces V of F_q^k with dim(V n U1) = v1 and
// dim(V n U2) = v2 for disjoint fixed subspaces U1, U2 (u1 + u2 <= k).
inline BigInt count_by_two_intersections(int k, int u1, int u2, int l, int v1, int v2, int q) {
    if (u1 + u2 > k) throw ValidationError("count_by_two_intersections: u1 + u2 must be <= k");
    if (l < 0 || l > k || v1 < 0 || v2 < 0) {
        throw ValidationError("count_by_two_intersections: parameters out of range");
    }
    if (v1 > u1 || v2 > u2 || v1 > l || v2 > l) return 0;
    BigInt total = 0;
    const int tmax = std::min(u1 - v1, u2 - v2);
    for (int t = 0; t <= tmax; ++t) {
        const int inner = t + v1 + v2;        // dim(V n (U1 (+) U2))
        const int outer = l - inner;          // dim of V outside U1 (+) U2
        if (outer < 0) continue;
        const BigInt g = gaussian_binomial(k - u1 - u2, outer, q);
        if (g == 0) continue;
        total += bpow(q, static_cast<std::uint64_t>(u1 + u2 - inner) *
                             static_cast<std::uint64_t>(outer)) *
                 count_in_direct_sum(u1, u2, v1, v2, t, q) * g;
    }
    return total;
}

// Number of (t+v1+v2-v0)-dimensional subspaces V of U1 + U2 with
// dim(V n U0) = v0, dim(V n U1) = v1, dim(V n U2) = v2, where
// U0 = U1 n U2 has dimension u0. The exponent (u0-v0)(t+v1+v2-2v0) is the
// fiber size of the quotient map V -> (V+U0)/U0; see the oracle sweep for
// its validation.
inline BigInt count_in_sum_with_common(int u0, int u1, int u2, int v0, int v1, int v2, int t,
                                       int q) {
    if (u0 < 0 || u1 < u0 || u2 < u0 || v0 < 0 || v1 < 0 || v2 < 0 || t < 0) {
        throw ValidationError("count_in_sum_with_common: parameters out of range");
    }
    if (v0 > u0 || v0 > v1 || v0 > v2) return 0;
    if (v1 - v0 > u1 - u0 || v2 - v0 > u2 - u0) return 0;
    const BigInt g0 = gaussian_binomial(u0, v0, q);
    if (g0 == 0) return 0;
    const BigInt inner =
        count_in_direct_sum(u1 - u0, u2 - u0, v1 - v0, v2 - v0, t, q);
    if (inner == 0) return 0;
    return g0 *
           bpow(q, static_cast<std::uint64_t>(u0 - v0) *
                       static_cast<std::uint64_t>(t + v1 + v2 - 2 * v0)) *
           inner;
}

// Number of l-dimensional subspaces V of F_q^k with dim(V n U0) = v0,
// dim(V n U1) = v1, dim(V n U2) = v2, where U1, U2 are fixed subspaces with
// U1 n U2 = U0 of dimension u0 and u1 + u2 - u0 <= k.
inline BigInt count_by_three_intersections(int k, int u0, int u1, int u2, int l, int v0, int v1,
                                           int v2, int q) {
    if (u1 + u2 - u0 > k) {
        throw ValidationError("count_by_three_intersections: dim(U1 + U2) must be <= k");
    }
    if (l < 0 || l > k || v0 < 0 || v1 < 0 || v2 < 0) {
        throw ValidationError("count_by_three_intersections: parameters out of range");
    }
    BigInt total = 0;
    const int tmax = std::min(u1 - v1, u2 - v2);
    for (int t = 0; t <= tmax; ++t) {
        const int inner = t + v1 + v2 - v0;   // dim(V n (U1 + U2))
        const int outer = l - inner;          // dim of V outside U1 + U2
        if (outer < 0) continue;
        const BigInt g = gaussian_binomial(k - u1 - u2 + u0, outer, q);
        if (g == 0) continue;
        const BigInt part = count_in_sum_with_common(u0, u1, u2, v0, v1, v2, t, q);
        if (part == 0) continue;
        total += bpow(q, static_cast<std::uint64_t>((u1 - v1) + (u2 - v2) - (u0 - v0) - t) *
                             static_cast<std::uint64_t>(outer)) *
                 part * g;
    }
    return total;
}

}  // namespace glab
