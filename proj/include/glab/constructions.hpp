#pragma once

// Builders for the two code families obtained by deleting a union of
// subspaces from the nonzero vectors of F_q^k, together with the closed-form
// parameter, weight-distribution, generalized-weight and subcode-support
// predictions and the Griesmer optimality certificates.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <glab/code.hpp>

namespace glab {

// ---------------------------------------------------------------------------
// Griesmer bound machinery
// ---------------------------------------------------------------------------

inline long long griesmer_sum(int q, int k, long long d) {
    if (q < 2) throw ValidationError("griesmer_sum: q must be >= 2");
    if (k < 1 || d < 1) throw ValidationError("griesmer_sum: need k >= 1 and d >= 1");
    long long total = 0;
    long long qi = 1;
    for (int i = 0; i < k; ++i) {
        total += (d + qi - 1) / qi;
        if (qi <= (std::numeric_limits<long long>::max)() / q) qi *= q;
    }
    return total;
}

// delta_q(k, d, d') = g_q(k, d+d') - g_q(k, d)
inline long long griesmer_delta(int q, int k, long long d, long long dprime) {
    return griesmer_sum(q, k, d + dprime) - griesmer_sum(q, k, d);
}

// ---------------------------------------------------------------------------
// Subspace layouts
// ---------------------------------------------------------------------------

// U_i = <e_{(i-1)u+1}, ..., e_{iu}> on disjoint coordinate blocks.
inline std::vector<Subspace> block_disjoint_subspaces(const GaloisField& F, int k, int u, int h) {
    if (k < h * u) throw ValidationError("block-disjoint layout needs k >= h*u");
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) {
        std::vector<Vec> rows;
        for (int j = 0; j < u; ++j) rows.push_back(unit_vec(k, i * u + j));
        out.push_back(span(F, std::move(rows), k));
    }
    return out;
}

// The 2q two-dimensional subspaces <e1 + f e2, e3 + f e4> (f in F_q) and
// <e5 + f e6, e7 + f e8>; pairwise trivial intersections inside an ambient
// of dimension k >= 8.
inline std::vector<Subspace> pencil_subspaces(const GaloisField& F, int k) {
    if (k < 8) throw ValidationError("pencil layout needs k >= 8");
    std::vector<Subspace> out;
    for (int block = 0; block < 2; ++block) {
        const int off = block * 4;
        for (int f = 0; f < F.order(); ++f) {
            Vec a = unit_vec(k, off + 0);
            a[static_cast<std::size_t>(off + 1)] = static_cast<Felem>(f);
            Vec b = unit_vec(k, off + 2);
            b[static_cast<std::size_t>(off + 3)] = static_cast<Felem>(f);
            out.push_back(span(F, {a, b}, k));
        }
    }
    return out;
}

// h pairwise-disjoint u-dimensional subspaces of <e1..e_{2u}> taken from the
// standard spread: view F_q^{2u} as a 2-dimensional space over GF(q^u); the
// lines {(x, mx)} and {(0, y)} partition its nonzero vectors into q^u + 1
// subspaces. Needed for parameter sets with k < hu.
inline std::vector<Subspace> spread_disjoint_subspaces(const GaloisField& F, int k, int u, int h) {
    const int q = F.order();
    if (F.degree() != 1) {
        // base-q digit chunking of GF(q^u) labels is GF(q)-linear only for
        // prime q; extension base fields would need an explicit subfield
        // embedding
        throw ValidationError("spread layout requires a prime base field");
    }
    std::uint64_t qu = 1;
    for (int i = 0; i < u; ++i) qu *= static_cast<std::uint64_t>(q);
    if (qu > kMaxFieldOrder) {
        throw ValidationError("spread layout needs q^u <= " + std::to_string(kMaxFieldOrder));
    }
    if (k < 2 * u) throw ValidationError("spread layout needs k >= 2u");
    if (static_cast<std::uint64_t>(h) > qu + 1) {
        throw ValidationError("spread layout provides at most q^u + 1 disjoint subspaces");
    }
    const GaloisField E(q, u);  // GF(q^u); labels are base-q digit vectors

    auto digits = [&](int label) {
        std::vector<Felem> d(static_cast<std::size_t>(u), 0);
        for (int i = 0; i < u; ++i) {
            d[static_cast<std::size_t>(i)] = static_cast<Felem>(label % q);
            label /= q;
        }
        return d;
    };

    std::vector<Subspace> out;
    // U_inf = {(0, y)}
    {
        std::vector<Vec> rows;
        for (int j = 0; j < u; ++j) rows.push_back(unit_vec(k, u + j));
        out.push_back(span(F, std::move(rows), k));
    }
    // U_m = {(x, m x)} for m in GF(q^u), x running over the power basis
    for (int m = 0; m < E.order() && static_cast<int>(out.size()) < h; ++m) {
        std::vector<Vec> rows;
        for (int bi = 0; bi < u; ++bi) {
            int xlabel = 1;
            for (int s = 0; s < bi; ++s) xlabel *= q;
            const int mx = E.mul(static_cast<Felem>(m), static_cast<Felem>(xlabel));
            Vec row(static_cast<std::size_t>(k), 0);
            const auto xd = digits(xlabel);
            const auto md = digits(mx);
            for (int j = 0; j < u; ++j) {
                row[static_cast<std::size_t>(j)] = xd[static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(u + j)] = md[static_cast<std::size_t>(j)];
            }
            rows.push_back(std::move(row));
        }
        out.push_back(span(F, std::move(rows), k));
    }
    out.resize(static_cast<std::size_t>(h));
    return out;
}

// U_i = <e1..e_{u0}, tail_i> with all tails on disjoint coordinate ranges;
// pairwise intersections equal U_0 = <e1..e_{u0}>.
inline std::vector<Subspace> common_block_subspaces(const GaloisField& F, int k, int u0,
                                                    const std::vector<int>& us) {
    int need = u0;
    for (int ui : us) need += ui - u0;
    if (k < need) throw ValidationError("common-block layout needs k >= sum(u_i) - (h-1)u0");
    std::vector<Subspace> out;
    int off = u0;
    for (int ui : us) {
        std::vector<Vec> rows;
        for (int j = 0; j < u0; ++j) rows.push_back(unit_vec(k, j));
        for (int j = 0; j < ui - u0; ++j) rows.push_back(unit_vec(k, off + j));
        off += ui - u0;
        out.push_back(span(F, std::move(rows), k));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Family parameter blocks
// ---------------------------------------------------------------------------

enum class Family1Layout { BlockDisjoint, PencilPairs, UserSupplied };

struct Family1Params {
    int q = 2;
    int k = 0;
    int u = 0;
    int h = 0;
    Family1Layout layout = Family1Layout::BlockDisjoint;
    std::vector<Subspace> user_subspaces;  // for UserSupplied
};

enum class Family2Layout { CommonBlock, UserSupplied };

struct Family2Params {
    int q = 2;
    int k = 0;
    int u0 = 0;
    std::vector<int> u;  // u_1 <= ... <= u_h
    Family2Layout layout = Family2Layout::CommonBlock;
    std::vector<Subspace> user_subspaces;
};

// A built code together with the construction it came from. The asserted
// distance is the closed-form value when the applicability condition holds;
// otherwise the distance must be measured.
template <typename Params>
struct BuiltCode {
    LinearCode code;
    Params params;
    std::vector<Subspace> subspaces;
    std::optional<long long> asserted_distance;
};

using Family1Code = BuiltCode<Family1Params>;
using Family2Code = BuiltCode<Family2Params>;

namespace detail {

inline void validate_family1_basics(const Family1Params& p) {
    if (p.h < 1) throw ValidationError("family 1 needs h >= 1");
    if (p.u < 2) throw ValidationError("family 1 needs u >= 2");
    if (p.k < 3) throw ValidationError("family 1 needs k >= 3");
    if (p.q < 2) throw ValidationError("q must be a prime power >= 2");
}

inline void validate_family2_basics(const Family2Params& p) {
    if (p.u.size() < 2) throw ValidationError("family 2 needs h >= 2");
    if (p.k < 3) throw ValidationError("family 2 needs k >= 3");
    if (p.u0 < 1) throw ValidationError("family 2 needs u0 >= 1");
    if (!std::is_sorted(p.u.begin(), p.u.end())) {
        throw ValidationError("family 2 needs u_1 <= ... <= u_h");
    }
    if (p.u0 >= p.u.front()) throw ValidationError("family 2 needs u0 < u_1");
}

// Deletes the projective points lying in any of the given subspaces and
// forms the code from the survivors. The deleted set is small (q^u per
// subspace), so its point encodings are collected once and the full point
// list filtered by binary search.
inline LinearCode delete_and_build(const GaloisField& F, int k,
                                   const std::vector<Subspace>& subspaces, const Caps& caps) {
    std::vector<std::uint32_t> deleted;
    for (const Subspace& U : subspaces) {
        for_each_projective_point(F, U, [&](const Vec& p) { deleted.push_back(encode_vec(F, p)); });
    }
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    std::vector<Vec> cols;
    for (Vec& p : projective_points(F, k, caps)) {
        if (!std::binary_search(deleted.begin(), deleted.end(), encode_vec(F, p))) {
            cols.push_back(std::move(p));
        }
    }
    if (cols.empty()) throw ValidationError("deletion removed every projective point");
    return LinearCode(F, k, std::move(cols));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Family 1: h pairwise-disjoint u-dimensional subspaces deleted
// ---------------------------------------------------------------------------

inline Family1Code build_family1(const Family1Params& p, const Caps& caps = Caps{}) {
    if (p.h < 1) throw ValidationError("family 1 needs h >= 1");
    if (p.u < 2) throw ValidationError("family 1 needs u >= 2");
    if (p.k < 3) throw ValidationError("family 1 needs k >= 3");
    const GaloisField F = GaloisField::of_order(p.q);
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
    const std::uint64_t qu = upow(q, static_cast<unsigned>(p.u));

    // rank condition: q^k - q^{k-1} > h (q^u - 1)
    if (qk - qk / q <= static_cast<std::uint64_t>(p.h) * (qu - 1)) {
        throw ValidationError("rank condition q^k - q^{k-1} > h(q^u - 1) fails");
    }

    std::vector<Subspace> subspaces;
    switch (p.layout) {
        case Family1Layout::BlockDisjoint:
            subspaces = block_disjoint_subspaces(F, p.k, p.u, p.h);
            break;
        case Family1Layout::PencilPairs:
            if (p.u != 2 || p.h != 2 * p.q) {
                throw ValidationError("pencil layout requires u = 2 and h = 2q");
            }
            subspaces = pencil_subspaces(F, p.k);
            break;
        case Family1Layout::UserSupplied:
            subspaces = p.user_subspaces;
            break;
    }
    if (static_cast<int>(subspaces.size()) != p.h) {
        throw ValidationError("expected exactly h subspaces");
    }
    for (const Subspace& U : subspaces) {
        if (U.ambient != p.k) throw ValidationError("subspace ambient dimension mismatch");
        if (U.dim() != p.u) throw ValidationError("every deleted subspace must have dimension u");
    }
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        for (std::size_t j = i + 1; j < subspaces.size(); ++j) {
            if (intersect(F, subspaces[i], subspaces[j]).dim() != 0) {
                throw ValidationError("deleted subspaces must intersect trivially");
            }
        }
    }

    LinearCode code = detail::delete_and_build(F, p.k, subspaces, caps);
    const std::uint64_t expect_n =
        ((qk - 1) - static_cast<std::uint64_t>(p.h) * (qu - 1)) / (q - 1);
    if (static_cast<std::uint64_t>(code.length()) != expect_n) {
        throw std::logic_error("family 1 length mismatch (internal error)");
    }
    Family1Code out{std::move(code), p, std::move(subspaces), std::nullopt};
    if (static_cast<std::uint64_t>(p.h) <= qu) {
        out.asserted_distance = static_cast<long long>(qk / q) -
                                static_cast<long long>(p.h) * static_cast<long long>(qu / q);
    }
    return out;
}

inline Family1Code build_family1_pencil(int q, int k, const Caps& caps = Caps{}) {
    Family1Params p;
    p.q = q;
    p.k = k;
    p.u = 2;
    p.h = 2 * q;
    p.layout = Family1Layout::PencilPairs;
    return build_family1(p, caps);
}

// ---------------------------------------------------------------------------
// Family 2: h subspaces with a common u0-dimensional pairwise intersection
// ---------------------------------------------------------------------------

inline Family2Code build_family2(const Family2Params& p, const Caps& caps = Caps{}) {
    const int h = static_cast<int>(p.u.size());
    if (h < 2) throw ValidationError("family 2 needs h >= 2");
    if (p.k < 3) throw ValidationError("family 2 needs k >= 3");
    if (p.u0 < 1) throw ValidationError("family 2 needs u0 >= 1");
    if (!std::is_sorted(p.u.begin(), p.u.end())) {
        throw ValidationError("family 2 needs u_1 <= ... <= u_h");
    }
    if (p.u0 >= p.u.front()) throw ValidationError("family 2 needs u0 < u_1");
    const GaloisField F = GaloisField::of_order(p.q);
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
    const std::uint64_t qu0 = upow(q, static_cast<unsigned>(p.u0));

    std::uint64_t deleted = qu0 - 1;  // nonzero vectors of the union
    for (int ui : p.u) deleted += upow(q, static_cast<unsigned>(ui)) - qu0;
    if (qk - qk / q <= deleted) {
        throw ValidationError("rank condition q^k - q^{k-1} > |union| fails");
    }

    std::vector<Subspace> subspaces;
    switch (p.layout) {
        case Family2Layout::CommonBlock:
            subspaces = common_block_subspaces(F, p.k, p.u0, p.u);
            break;
        case Family2Layout::UserSupplied:
            subspaces = p.user_subspaces;
            break;
    }
    if (static_cast<int>(subspaces.size()) != h) {
        throw ValidationError("expected exactly h subspaces");
    }
    for (int i = 0; i < h; ++i) {
        if (subspaces[static_cast<std::size_t>(i)].ambient != p.k) {
            throw ValidationError("subspace ambient dimension mismatch");
        }
        if (subspaces[static_cast<std::size_t>(i)].dim() != p.u[static_cast<std::size_t>(i)]) {
            throw ValidationError("subspace dimensions must match u_1..u_h");
        }
    }
    const Subspace U0 = intersect(F, subspaces[0], subspaces[1]);
    if (U0.dim() != p.u0) {
        throw ValidationError("dim(U_1 n U_2) must equal u0");
    }
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        for (std::size_t j = i + 1; j < subspaces.size(); ++j) {
            if (intersect(F, subspaces[i], subspaces[j]) != U0) {
                throw ValidationError("all pairwise intersections must equal U_0");
            }
        }
    }

    LinearCode code = detail::delete_and_build(F, p.k, subspaces, caps);
    const std::uint64_t expect_n = (qk - qu0 - (deleted - (qu0 - 1))) / (q - 1);
    if (static_cast<std::uint64_t>(code.length()) != expect_n) {
        throw std::logic_error("family 2 length mismatch (internal error)");
    }
    Family2Code out{std::move(code), p, std::move(subspaces), std::nullopt};
    const std::uint64_t threshold =
        upow(q, static_cast<unsigned>(p.u.front() - p.u0));
    if (static_cast<std::uint64_t>(h) <= threshold) {
        long long d = static_cast<long long>(qk / q);
        for (int ui : p.u) d -= static_cast<long long>(upow(q, static_cast<unsigned>(ui - 1)));
        out.asserted_distance = d;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Optimality certificates
// ---------------------------------------------------------------------------

struct OptimalityCertificate {
    int q = 0;
    long long n = 0;
    int k = 0;
    long long d = 0;
    long long griesmer = 0;        // g_q(k, d)
    long long defect = 0;          // n - g_q(k, d)
    long long delta1 = 0;          // g_q(k, d+1) - g_q(k, d)
    std::optional<QAdicExpansion> h_expansion;
    enum class Verdict { GriesmerOptimal, DistanceOptimal, NotCertified } verdict =
        Verdict::NotCertified;
    std::string reason;

    bool distance_optimal() const {
        return verdict == Verdict::GriesmerOptimal || verdict == Verdict::DistanceOptimal;
    }
};

namespace detail {

inline OptimalityCertificate finish_certificate(OptimalityCertificate c, bool sufficient,
                                                const std::string& condition_name) {
    c.griesmer = griesmer_sum(c.q, c.k, c.d);
    c.defect = c.n - c.griesmer;
    c.delta1 = griesmer_delta(c.q, c.k, c.d, 1);
    const bool direct = griesmer_sum(c.q, c.k, c.d + 1) > c.n;  // no [n,k,d+1] code exists
    if (c.defect == 0) {
        c.verdict = OptimalityCertificate::Verdict::GriesmerOptimal;
        c.reason = "meets the Griesmer bound";
    } else if (direct) {
        c.verdict = OptimalityCertificate::Verdict::DistanceOptimal;
        c.reason = sufficient ? condition_name + "; confirmed by g_q(k,d+1) > n"
                              : "g_q(k,d+1) > n";
    } else {
        c.verdict = OptimalityCertificate::Verdict::NotCertified;
        c.reason = sufficient ? "sufficient condition holds but the direct Griesmer test fails"
                              : "no optimality condition applies";
    }
    return c;
}

}  // namespace detail

inline OptimalityCertificate certify_family1(const Family1Params& p) {
    detail::validate_family1_basics(p);
    OptimalityCertificate c;
    c.q = p.q;
    c.k = p.k;
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const std::uint64_t qu = upow(q, static_cast<unsigned>(p.u));
    const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
    c.n = static_cast<long long>(((qk - 1) - static_cast<std::uint64_t>(p.h) * (qu - 1)) / (q - 1));
    if (static_cast<std::uint64_t>(p.h) > qu) {
        c.reason = "h > q^u: the closed-form minimum distance is not guaranteed";
        return c;
    }
    c.d = static_cast<long long>(qk / q) - static_cast<long long>(p.h) * static_cast<long long>(qu / q);
    c.h_expansion = q_adic(p.h, p.q);

    long long floor_sum = 0;  // sum_{i=1..k-u} floor(h / q^i)
    std::uint64_t qi = q;
    for (int i = 1; i <= p.k - p.u; ++i) {
        floor_sum += static_cast<long long>(p.h) / static_cast<long long>(qi);
        if (qi > static_cast<std::uint64_t>(p.h)) break;
        qi *= q;
    }
    const bool digit_test = c.h_expansion->least_nonzero_index + p.u > floor_sum;
    const bool small_h_test = p.q >= p.u && p.u >= 2 && p.h <= p.u * p.q;
    std::string name = digit_test ? "i_h + u exceeds the defect bound"
                                  : (small_h_test ? "h <= u q with q >= u >= 2" : "");
    return detail::finish_certificate(std::move(c), digit_test || small_h_test, name);
}

inline OptimalityCertificate certify_family2(const Family2Params& p) {
    detail::validate_family2_basics(p);
    OptimalityCertificate c;
    c.q = p.q;
    c.k = p.k;
    const int h = static_cast<int>(p.u.size());
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
    const std::uint64_t qu0 = upow(q, static_cast<unsigned>(p.u0));
    std::uint64_t deleted = qu0 - 1;
    for (int ui : p.u) deleted += upow(q, static_cast<unsigned>(ui)) - qu0;
    c.n = static_cast<long long>((qk - 1 - deleted) / (q - 1));
    if (static_cast<std::uint64_t>(h) > upow(q, static_cast<unsigned>(p.u.front() - p.u0))) {
        c.reason = "h > q^{u1-u0}: the closed-form minimum distance is not guaranteed";
        return c;
    }
    long long d = static_cast<long long>(qk / q);
    for (int ui : p.u) d -= static_cast<long long>(upow(q, static_cast<unsigned>(ui - 1)));
    c.d = d;

    const long long common_bound =
        static_cast<long long>(h - 1) * static_cast<long long>((qu0 - 1) / (q - 1));
    // multiplicities of the distinct u_i values
    std::vector<int> mult;
    for (std::size_t i = 0; i < p.u.size();) {
        std::size_t j = i;
        while (j < p.u.size() && p.u[j] == p.u[i]) ++j;
        mult.push_back(static_cast<int>(j - i));
        i = j;
    }
    const bool all_equal = mult.size() == 1;
    const bool small_mults =
        std::all_of(mult.begin(), mult.end(), [&](int s) { return s < p.q; });

    bool sufficient = false;
    std::string name;
    if (small_mults && p.u.front() > common_bound) {
        sufficient = true;
        name = "u_1 exceeds (h-1)(q^u0 - 1)/(q-1)";
    }
    if (!sufficient && all_equal) {
        const int u = p.u.front();
        long long floor_sum = 0;
        std::uint64_t qi = q;
        for (int i = 1; i <= p.k - u; ++i) {
            floor_sum += static_cast<long long>(h) / static_cast<long long>(qi);
            if (qi > static_cast<std::uint64_t>(h)) break;
            qi *= q;
        }
        const auto e = q_adic(h, p.q);
        if (e.least_nonzero_index + u > common_bound + floor_sum) {
            sufficient = true;
            name = "i_h + u exceeds the combined defect bound";
        }
    }
    return detail::finish_certificate(std::move(c), sufficient, name);
}

// ---------------------------------------------------------------------------
// Closed-form predictions
// ---------------------------------------------------------------------------

namespace detail {

inline void merge_weight(std::map<long long, BigInt>& counts, long long w, BigInt m) {
    if (m == 0) return;
    counts[w] += std::move(m);
}

}  // namespace detail

// Weight distribution of a family-1 block-disjoint code: a hyperplane
// containing exactly x of the U_i yields weight q^{k-1} - (h-x) q^{u-1} with
// multiplicity C(h,x) (q^u - 1)^{h-x} q^{k-hu} (minus one for x = h).
inline WeightDistribution predicted_weight_distribution(const Family1Params& p) {
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    if (p.layout == Family1Layout::BlockDisjoint) {
        if (p.u < 2 || p.k < p.h * p.u) {
            throw HypothesisNotMet("block-disjoint prediction needs u >= 2 and k >= h u");
        }
        const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
        const std::uint64_t qu = upow(q, static_cast<unsigned>(p.u));
        if (qk - qk / q <= static_cast<std::uint64_t>(p.h) * (qu - 1)) {
            throw HypothesisNotMet("rank condition fails");
        }
        WeightDistribution wd;
        wd.counts[0] = 1;
        const BigInt tail = bpow(q, static_cast<std::uint64_t>(p.k - p.h * p.u));
        BigInt binom = 1;  // C(h, x)
        for (int x = 0; x <= p.h; ++x) {
            const long long w = static_cast<long long>(qk / q) -
                                static_cast<long long>(p.h - x) * static_cast<long long>(qu / q);
            BigInt m = binom * bpow(qu - 1, static_cast<std::uint64_t>(p.h - x)) * tail;
            if (x == p.h) m -= 1;
            detail::merge_weight(wd.counts, w, std::move(m));
            binom = binom * (p.h - x) / (x + 1);
        }
        return wd;
    }
    if (p.layout == Family1Layout::PencilPairs) {
        if (p.k < 8 || p.u != 2 || p.h != 2 * p.q) {
            throw HypothesisNotMet("pencil prediction needs k >= 8, u = 2, h = 2q");
        }
        const std::uint64_t qk1 = upow(q, static_cast<unsigned>(p.k - 1));
        const BigInt tail = bpow(q, static_cast<std::uint64_t>(p.k - 8));
        const BigInt V = BigInt(q) * q - 1;               // q^2 - 1
        const BigInt X = bpow(q, 4) - bpow(q, 3) + BigInt(q) - 1;
        const long long w0 = static_cast<long long>(qk1);
        const long long q2 = static_cast<long long>(q * q);
        const long long qq = static_cast<long long>(q);
        WeightDistribution wd;
        wd.counts[0] = 1;
        detail::merge_weight(wd.counts, w0, tail - 1);
        detail::merge_weight(wd.counts, w0 - q2 + qq, BigInt(2 * qq) * V * tail);
        detail::merge_weight(wd.counts, w0 - q2, BigInt(2) * X * tail);
        detail::merge_weight(wd.counts, w0 - 2 * q2 + 2 * qq, V * V * tail * q * q);
        detail::merge_weight(wd.counts, w0 - 2 * q2 + qq, BigInt(2 * qq) * V * X * tail);
        detail::merge_weight(wd.counts, w0 - 2 * q2, X * X * tail);
        return wd;
    }
    throw HypothesisNotMet("no closed-form weight distribution for user-supplied layouts");
}

// Weight distribution of a family-2 common-block code: the hyperplanes not
// containing U_0 give one weight; those containing U_0 split by the subset
// T of indices with U_i inside the hyperplane.
inline WeightDistribution predicted_weight_distribution(const Family2Params& p) {
    if (p.layout != Family2Layout::CommonBlock) {
        throw HypothesisNotMet("no closed-form weight distribution for user-supplied layouts");
    }
    const int h = static_cast<int>(p.u.size());
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    if (h > p.q) throw HypothesisNotMet("prediction needs h <= q");
    const std::uint64_t qu0 = upow(q, static_cast<unsigned>(p.u0));
    const long long common_bound =
        static_cast<long long>(h - 1) * static_cast<long long>((qu0 - 1) / (q - 1));
    if (p.u.front() <= common_bound) {
        throw HypothesisNotMet("prediction needs u_1 > (h-1)(q^u0 - 1)/(q-1)");
    }
    int need = p.u0;
    for (int ui : p.u) need += ui - p.u0;
    if (p.k < need) throw HypothesisNotMet("prediction needs k >= sum(u_i) - (h-1) u0");
    const std::uint64_t qk = upow(q, static_cast<unsigned>(p.k));
    std::uint64_t deleted = qu0 - 1;
    for (int ui : p.u) deleted += upow(q, static_cast<unsigned>(ui)) - qu0;
    if (qk - qk / q <= deleted) throw HypothesisNotMet("rank condition fails");

    long long sum_qui1 = 0;  // sum q^{u_i - 1}
    for (int ui : p.u) sum_qui1 += static_cast<long long>(upow(q, static_cast<unsigned>(ui - 1)));
    const long long w_base = static_cast<long long>(qk / q);

    // exponent k + (h-1) u0 - sum u_i
    long long expo = p.k + static_cast<long long>(h - 1) * p.u0;
    for (int ui : p.u) expo -= ui;
    const BigInt tail = bpow(q, static_cast<std::uint64_t>(expo));

    WeightDistribution wd;
    wd.counts[0] = 1;
    // hyperplanes missing U_0
    detail::merge_weight(wd.counts,
                         w_base + static_cast<long long>(h - 1) * static_cast<long long>(qu0 / q) -
                             sum_qui1,
                         BigInt(qu0 - 1) * bpow(q, static_cast<std::uint64_t>(p.k - p.u0)));
    // hyperplanes containing U_0, split by which U_i they contain
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        long long w = w_base;
        BigInt m = tail;
        for (int i = 0; i < h; ++i) {
            if (!(mask & (1u << i))) {
                w -= static_cast<long long>(upow(q, static_cast<unsigned>(p.u[static_cast<std::size_t>(i)] - 1)));
                m *= bpow(q, static_cast<std::uint64_t>(p.u[static_cast<std::size_t>(i)] - p.u0)) - 1;
            }
        }
        if (mask + 1 == (1u << h)) m -= 1;  // exclude a = 0
        detail::merge_weight(wd.counts, w, std::move(m));
    }
    return wd;
}

// r-th generalized Hamming weight predictions.
inline long long predicted_generalized_weight(const Family1Params& p, int r) {
    if (r < 1 || r > p.k) throw ValidationError("r out of range");
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const BigInt qk = bpow(q, static_cast<std::uint64_t>(p.k));
    const BigInt qkr = bpow(q, static_cast<std::uint64_t>(p.k - r));
    if (p.layout == Family1Layout::BlockDisjoint) {
        if (p.u < 2 || p.k < p.h * p.u) {
            throw HypothesisNotMet("block-disjoint prediction needs u >= 2 and k >= h u");
        }
        BigInt missing;
        if (r <= p.u) {
            missing = BigInt(p.h) * (bpow(q, static_cast<std::uint64_t>(p.u)) -
                                     bpow(q, static_cast<std::uint64_t>(p.u - r)));
        } else {
            missing = BigInt(p.h) * (bpow(q, static_cast<std::uint64_t>(p.u)) - 1);
        }
        return static_cast<long long>(BigInt((qk - qkr - missing) / (q - 1)));
    }
    if (p.layout == Family1Layout::PencilPairs) {
        if (p.k < 8 || p.u != 2 || p.h != 2 * p.q) {
            throw HypothesisNotMet("pencil prediction needs k >= 8, u = 2, h = 2q");
        }
        if (r == 1) {
            return static_cast<long long>(BigInt(qk / q)) - 2 * static_cast<long long>(q * q);
        }
        const BigInt missing = BigInt(2) * q * (BigInt(q) * q - 1);
        return static_cast<long long>(BigInt((qk - qkr - missing) / (q - 1)));
    }
    throw HypothesisNotMet("no closed-form generalized weights for user-supplied layouts");
}

inline long long predicted_generalized_weight(const Family2Params& p, int r) {
    if (p.u.size() != 2) throw HypothesisNotMet("generalized-weight prediction needs h = 2");
    if (p.layout != Family2Layout::CommonBlock) {
        throw HypothesisNotMet("no closed-form generalized weights for user-supplied layouts");
    }
    // the r >= u2 branch extends to r = k, where it evaluates to n
    if (r < 1 || r > p.k) throw ValidationError("r out of range");
    const std::uint64_t q = static_cast<std::uint64_t>(p.q);
    const int u1 = p.u[0], u2 = p.u[1];
    const BigInt qk = bpow(q, static_cast<std::uint64_t>(p.k));
    const BigInt qkr = bpow(q, static_cast<std::uint64_t>(p.k - r));
    BigInt num;
    if (r <= u1 - p.u0) {
        num = qk - qkr - (bpow(q, static_cast<std::uint64_t>(u1)) - bpow(q, static_cast<std::uint64_t>(u1 - r))) -
              (bpow(q, static_cast<std::uint64_t>(u2)) - bpow(q, static_cast<std::uint64_t>(u2 - r)));
    } else if (r <= u2) {
        num = qk - qkr - bpow(q, static_cast<std::uint64_t>(u1)) -
              (bpow(q, static_cast<std::uint64_t>(u2)) - bpow(q, static_cast<std::uint64_t>(u2 - r))) +
              bpow(q, static_cast<std::uint64_t>(p.u0));
    } else {
        num = qk - qkr - bpow(q, static_cast<std::uint64_t>(u1)) - bpow(q, static_cast<std::uint64_t>(u2)) +
              bpow(q, static_cast<std::uint64_t>(p.u0)) + 1;
    }
    return static_cast<long long>(BigInt(num / (q - 1)));
}

// Subcode support weight distribution of a family-2 code with h = 2: sums
// the three-intersection subspace counts over all (v0, v1, v2) compatible
// with the target support weight.
inline SSWDTable predicted_support_weight_table(const Family2Params& p, int r) {
    if (p.u.size() != 2) throw HypothesisNotMet("support-weight prediction needs h = 2");
    if (p.layout != Family2Layout::CommonBlock) {
        throw HypothesisNotMet("no closed-form support weights for user-supplied layouts");
    }
    if (r < 1 || r >= p.k) throw ValidationError("r out of range (1 <= r < k)");
    const int q = p.q;
    const int u0 = p.u0, u1 = p.u[0], u2 = p.u[1];
    const int l = p.k - r;
    const BigInt qpow_k = bpow(q, static_cast<std::uint64_t>(p.k));
    const BigInt qpow_l = bpow(q, static_cast<std::uint64_t>(l));
    // n - m(V) = [q^k - q^{u1} - q^{u2} + q^{u0} - q^{k-r} + q^{v1} + q^{v2} - q^{v0}] / (q-1)
    const BigInt fixed = qpow_k - bpow(q, static_cast<std::uint64_t>(u1)) -
                         bpow(q, static_cast<std::uint64_t>(u2)) +
                         bpow(q, static_cast<std::uint64_t>(u0)) - qpow_l;
    SSWDTable t;
    t.r = r;
    auto clampv = [&](int ui) {
        return std::pair<int, int>{std::max(ui - r, 0), std::min(l, ui)};
    };
    const auto [lo0, hi0] = clampv(u0);
    const auto [lo1, hi1] = clampv(u1);
    const auto [lo2, hi2] = clampv(u2);
    for (int v0 = lo0; v0 <= hi0; ++v0) {
        for (int v1 = std::max(lo1, v0); v1 <= hi1; ++v1) {
            if (v1 - v0 > u1 - u0) continue;
            for (int v2 = std::max(lo2, v0); v2 <= hi2; ++v2) {
                if (v2 - v0 > u2 - u0) continue;
                if (v1 + v2 - v0 > l) continue;
                const BigInt count = count_by_three_intersections(p.k, u0, u1, u2, l, v0, v1, v2, q);
                if (count == 0) continue;
                const BigInt num = fixed + bpow(q, static_cast<std::uint64_t>(v1)) +
                                   bpow(q, static_cast<std::uint64_t>(v2)) -
                                   bpow(q, static_cast<std::uint64_t>(v0));
                const BigInt j = num / (q - 1);
                t.counts[static_cast<long long>(j)] += count;
            }
        }
    }
    return t;
}

}  // namespace glab
