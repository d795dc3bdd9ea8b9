#pragma once

// Brute-force ground truth for the closed-form subspace counts in
// qcombinatorics.hpp. Everything here counts by exhaustive enumeration over
// canonical RREF bases and never touches the closed forms, so the two can
// adjudicate each other.

#include <glab/vectorspace.hpp>

namespace glab {
namespace oracle {

// dim(A n B) via dim A + dim B - dim(A + B); cheaper than building the
// intersection basis.
inline int intersection_dim(const GaloisField& F, const Subspace& A, const Subspace& B) {
    std::vector<Vec> rows = A.basis;
    rows.insert(rows.end(), B.basis.begin(), B.basis.end());
    const int sum_dim = rref(F, rows);
    return A.dim() + B.dim() - sum_dim;
}

// Standard subspace spanned by coordinates [from, from+len).
inline Subspace coordinate_block(const GaloisField& F, int ambient, int from, int len) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) rows.push_back(unit_vec(ambient, from + i));
    return span(F, std::move(rows), ambient);
}

// Count of l-dimensional V in F_q^k with dim(V n U1) = t, for the standard
// U1 = <e_1..e_u1>. An optional override lets tests check independence of
// the choice of U1.
inline BigInt count_subspaces_by_intersection(const GaloisField& F, int k, int u1, int l, int t,
                                              const Caps& caps = Caps{},
                                              const Subspace* U1_override = nullptr) {
    const Subspace U1 = U1_override ? *U1_override : coordinate_block(F, k, 0, u1);
    BigInt n = 0;
    for_each_subspace(F, k, l, caps, [&](const Subspace& V) {
        if (intersection_dim(F, V, U1) == t) ++n;
    });
    return n;
}

// Count of (t+v1+v2)-dimensional V of U1 (+) U2 with the two prescribed
// intersection dimensions; ambient is u1 + u2 with coordinate-block parts.
inline BigInt count_in_direct_sum(const GaloisField& F, int u1, int u2, int v1, int v2, int t,
                                  const Caps& caps = Caps{}) {
    const int k = u1 + u2;
    const Subspace U1 = coordinate_block(F, k, 0, u1);
    const Subspace U2 = coordinate_block(F, k, u1, u2);
    BigInt n = 0;
    for_each_subspace(F, k, t + v1 + v2, caps, [&](const Subspace& V) {
        if (intersection_dim(F, V, U1) == v1 && intersection_dim(F, V, U2) == v2) ++n;
    });
    return n;
}

// Count of l-dimensional V in F_q^k meeting two disjoint coordinate blocks
// in the prescribed dimensions.
inline BigInt count_by_two_intersections(const GaloisField& F, int k, int u1, int u2, int l,
                                         int v1, int v2, const Caps& caps = Caps{}) {
    const Subspace U1 = coordinate_block(F, k, 0, u1);
    const Subspace U2 = coordinate_block(F, k, u1, u2);
    BigInt n = 0;
    for_each_subspace(F, k, l, caps, [&](const Subspace& V) {
        if (intersection_dim(F, V, U1) == v1 && intersection_dim(F, V, U2) == v2) ++n;
    });
    return n;
}

// Standard configuration with a shared block: U1 = <e_1..e_u0, tail_1>,
// U2 = <e_1..e_u0, tail_2>, U0 = U1 n U2 = <e_1..e_u0>, inside an ambient
// of dimension `ambient` >= u1 + u2 - u0.
struct CommonPair {
    Subspace U0, U1, U2;
};

inline CommonPair common_pair(const GaloisField& F, int ambient, int u0, int u1, int u2) {
    CommonPair c;
    c.U0 = coordinate_block(F, ambient, 0, u0);
    std::vector<Vec> r1 = c.U0.basis;
    for (int i = 0; i < u1 - u0; ++i) r1.push_back(unit_vec(ambient, u0 + i));
    c.U1 = span(F, std::move(r1), ambient);
    std::vector<Vec> r2 = c.U0.basis;
    for (int i = 0; i < u2 - u0; ++i) r2.push_back(unit_vec(ambient, u1 + i));
    c.U2 = span(F, std::move(r2), ambient);
    return c;
}

// Count of (t+v1+v2-v0)-dimensional V of U1 + U2 with the three prescribed
// intersection dimensions; enumerates inside ambient dim(U1+U2).
inline BigInt count_in_sum_with_common(const GaloisField& F, int u0, int u1, int u2, int v0,
                                       int v1, int v2, int t, const Caps& caps = Caps{}) {
    const int k = u1 + u2 - u0;
    const CommonPair c = common_pair(F, k, u0, u1, u2);
    BigInt n = 0;
    const int dim_v = t + v1 + v2 - v0;
    if (dim_v < 0 || dim_v > k) return 0;
    for_each_subspace(F, k, dim_v, caps, [&](const Subspace& V) {
        if (intersection_dim(F, V, c.U0) == v0 && intersection_dim(F, V, c.U1) == v1 &&
            intersection_dim(F, V, c.U2) == v2) {
            ++n;
        }
    });
    return n;
}

// Count of l-dimensional V in F_q^k with the three prescribed intersection
// dimensions against the standard common-block configuration.
inline BigInt count_by_three_intersections(const GaloisField& F, int k, int u0, int u1, int u2,
                                           int l, int v0, int v1, int v2,
                                           const Caps& caps = Caps{}) {
    const CommonPair c = common_pair(F, k, u0, u1, u2);
    BigInt n = 0;
    for_each_subspace(F, k, l, caps, [&](const Subspace& V) {
        if (intersection_dim(F, V, c.U0) == v0 && intersection_dim(F, V, c.U1) == v1 &&
            intersection_dim(F, V, c.U2) == v2) {
            ++n;
        }
    });
    return n;
}

}  // namespace oracle
}  // namespace glab
