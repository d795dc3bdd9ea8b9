#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <glab/field.hpp>
#include <glab/qcombinatorics.hpp>

namespace glab {

// A vector in F_q^k, coordinate 0 first.
using Vec = std::vector<Felem>;

// Base-q integer encoding with coordinate 0 as the most significant digit,
// so numeric order of encodings equals lexicographic order of vectors.
inline std::uint32_t encode_vec(const GaloisField& F, const Vec& v) {
    std::uint64_t e = 0;
    for (Felem c : v) e = e * static_cast<std::uint64_t>(F.order()) + c;
    return static_cast<std::uint32_t>(e);
}

inline Vec decode_vec(const GaloisField& F, std::uint32_t e, int k) {
    Vec v(static_cast<std::size_t>(k), 0);
    for (int i = k - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<Felem>(e % static_cast<std::uint32_t>(F.order()));
        e /= static_cast<std::uint32_t>(F.order());
    }
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Felem c) { return c == 0; });
}

// Scales v so its first nonzero coordinate becomes 1. Returns the scalar s
// with v = s * normalized(v) through the out parameter when requested.
inline Vec normalize_vec(const GaloisField& F, Vec v, Felem* scale_out = nullptr) {
    for (Felem c : v) {
        if (c != 0) {
            if (scale_out) *scale_out = c;
            if (c != 1) {
                const Felem s = F.inv(c);
                for (Felem& x : v) x = F.mul(s, x);
            }
            return v;
        }
    }
    throw ValidationError("cannot normalize the zero vector");
}

inline Vec vec_add(const GaloisField& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

inline Vec vec_sub(const GaloisField& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

inline Vec vec_scale(const GaloisField& F, Felem s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
    return r;
}

inline Felem dot(const GaloisField& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    Felem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

inline Vec unit_vec(int k, int i) {
    Vec v(static_cast<std::size_t>(k), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

// In-place reduced row echelon form; returns the rank. Zero rows are
// removed, pivot entries are 1 with zeros above and below.
inline int rref(const GaloisField& F, std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    const std::size_t k = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Felem inv = F.inv(rows[rank][col]);
        for (std::size_t j = col; j < k; ++j) rows[rank][j] = F.mul(inv, rows[rank][j]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Felem c = rows[i][col];
            for (std::size_t j = col; j < k; ++j) {
                rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[rank][j]));
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return static_cast<int>(rank);
}

// A subspace of F_q^k held in canonical RREF basis form, so equal subspaces
// compare equal structurally.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;  // RREF rows

    int dim() const { return static_cast<int>(basis.size()); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

inline Subspace span(const GaloisField& F, std::vector<Vec> vectors, int ambient) {
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != ambient) {
            throw ValidationError("span: vector length does not match ambient dimension");
        }
    }
    rref(F, vectors);
    return Subspace{ambient, std::move(vectors)};
}

inline Subspace zero_subspace(int ambient) { return Subspace{ambient, {}}; }

inline Subspace full_space(int ambient) {
    Subspace s{ambient, {}};
    for (int i = 0; i < ambient; ++i) s.basis.push_back(unit_vec(ambient, i));
    return s;
}

inline bool contains(const GaloisField& F, const Subspace& A, Vec v) {
    if (static_cast<int>(v.size()) != A.ambient) {
        throw ValidationError("contains: ambient dimension mismatch");
    }
    // reduce v against the RREF basis
    for (const Vec& row : A.basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (v[p] != 0) {
            const Felem c = v[p];
            for (std::size_t j = p; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, row[j]));
        }
    }
    return is_zero_vec(v);
}

inline Subspace sum(const GaloisField& F, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw ValidationError("sum: ambient dimension mismatch");
    std::vector<Vec> rows = A.basis;
    rows.insert(rows.end(), B.basis.begin(), B.basis.end());
    return span(F, std::move(rows), A.ambient);
}

// Null space of the basis matrix under the standard bilinear form. Double
// complement is the identity even though A and its complement may meet.
inline Subspace orthogonal_complement(const GaloisField& F, const Subspace& A) {
    const int k = A.ambient;
    std::vector<int> pivots;
    pivots.reserve(A.basis.size());
    for (const Vec& row : A.basis) {
        int p = 0;
        while (row[static_cast<std::size_t>(p)] == 0) ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vec> kernel;
    for (int f = 0; f < k; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec w(static_cast<std::size_t>(k), 0);
        w[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < A.basis.size(); ++i) {
            w[static_cast<std::size_t>(pivots[i])] = F.neg(A.basis[i][static_cast<std::size_t>(f)]);
        }
        kernel.push_back(std::move(w));
    }
    return span(F, std::move(kernel), k);
}

inline Subspace intersect(const GaloisField& F, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw ValidationError("intersect: ambient dimension mismatch");
    return orthogonal_complement(
        F, sum(F, orthogonal_complement(F, A), orthogonal_complement(F, B)));
}

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

inline std::uint64_t projective_point_count(int q, int k) {
    return (upow(static_cast<std::uint64_t>(q), static_cast<unsigned>(k)) - 1) /
           static_cast<std::uint64_t>(q - 1);
}

// All normalized representatives (first nonzero coordinate 1) of the
// 1-dimensional subspaces of F_q^k, in lexicographic order.
inline std::vector<Vec> projective_points(const GaloisField& F, int k, const Caps& caps = Caps{}) {
    if (k < 1) throw ValidationError("projective_points: k must be >= 1");
    const std::uint64_t space = upow(static_cast<std::uint64_t>(F.order()), static_cast<unsigned>(k));
    if (space > caps.max_code_space) {
        throw CapExceeded("projective_points: q^k = " + std::to_string(space) +
                          " exceeds the configured cap");
    }
    std::vector<Vec> pts;
    pts.reserve(projective_point_count(F.order(), k));
    const int q = F.order();
    for (int lead = k - 1; lead >= 0; --lead) {
        Vec v(static_cast<std::size_t>(k), 0);
        v[static_cast<std::size_t>(lead)] = 1;
        while (true) {
            pts.push_back(v);
            int pos = k - 1;
            while (pos > lead && v[static_cast<std::size_t>(pos)] == static_cast<Felem>(q - 1)) {
                v[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos == lead) break;
            ++v[static_cast<std::size_t>(pos)];
        }
    }
    return pts;
}

// Applies fn to one normalized representative of every 1-dimensional
// subspace of V: coefficient patterns with leading coefficient 1 over the
// RREF basis hit each projective point exactly once, already normalized.
template <typename Fn>
void for_each_projective_point(const GaloisField& F, const Subspace& V, Fn&& fn) {
    const int d = V.dim();
    if (d == 0) return;
    const int k = V.ambient;
    const int q = F.order();
    std::vector<Felem> coef(static_cast<std::size_t>(d), 0);
    Vec p(static_cast<std::size_t>(k));
    for (int lead = d - 1; lead >= 0; --lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[static_cast<std::size_t>(lead)] = 1;
        while (true) {
            std::fill(p.begin(), p.end(), 0);
            for (int i = lead; i < d; ++i) {
                const Felem ci = coef[static_cast<std::size_t>(i)];
                if (ci == 0) continue;
                const Vec& row = V.basis[static_cast<std::size_t>(i)];
                for (int j = 0; j < k; ++j) {
                    p[static_cast<std::size_t>(j)] =
                        F.add(p[static_cast<std::size_t>(j)], F.mul(ci, row[static_cast<std::size_t>(j)]));
                }
            }
            fn(const_cast<const Vec&>(p));
            int pos = d - 1;
            while (pos > lead && coef[static_cast<std::size_t>(pos)] == static_cast<Felem>(q - 1)) {
                coef[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos == lead) break;
            ++coef[static_cast<std::size_t>(pos)];
        }
    }
}

// Lexicographic rank of a normalized vector within projective_points order.
inline std::uint64_t projective_rank(const GaloisField& F, const Vec& v) {
    const int k = static_cast<int>(v.size());
    const std::uint64_t q = static_cast<std::uint64_t>(F.order());
    int lead = 0;
    while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
    // all blocks with a later lead position come first
    const std::uint64_t earlier = (upow(q, static_cast<unsigned>(k - 1 - lead)) - 1) / (q - 1);
    std::uint64_t suffix = 0;
    for (int i = lead + 1; i < k; ++i) suffix = suffix * q + v[static_cast<std::size_t>(i)];
    return earlier + suffix;
}

// Enumerates the r-dimensional subspaces of F_q^k exactly once each, as
// canonical RREF bases: pivot-column patterns in lexicographic order, free
// entries in odometer order within each pattern.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(const GaloisField& F, int k, int r) : F_(&F), k_(k), r_(r) {
        if (r < 0 || r > k) throw ValidationError("SubspaceEnumerator: need 0 <= r <= k");
        pivots_.resize(static_cast<std::size_t>(r));
        std::iota(pivots_.begin(), pivots_.end(), 0);
    }

    // Fills `out` with the next subspace; returns false when exhausted.
    bool next(Subspace& out) {
        if (done_) return false;
        if (r_ == 0) {
            out.ambient = k_;
            out.basis.clear();
            done_ = true;
            return true;
        }
        if (fresh_pattern_) {
            init_free_slots();
            fresh_pattern_ = false;
        } else if (!advance_free()) {
            if (!advance_pattern()) {
                done_ = true;
                return false;
            }
            init_free_slots();
        }
        materialize(out);
        return true;
    }

private:
    void init_free_slots() {
        free_slots_.clear();
        for (int i = 0; i < r_; ++i) {
            for (int j = pivots_[static_cast<std::size_t>(i)] + 1; j < k_; ++j) {
                if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end()) {
                    free_slots_.emplace_back(i, j);
                }
            }
        }
        free_vals_.assign(free_slots_.size(), 0);
    }

    bool advance_free() {
        const int q = F_->order();
        for (std::size_t i = free_vals_.size(); i-- > 0;) {
            if (free_vals_[i] + 1 < q) {
                ++free_vals_[i];
                std::fill(free_vals_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          free_vals_.end(), 0);
                return true;
            }
        }
        return false;
    }

    bool advance_pattern() {
        // next lexicographic r-combination of {0..k-1}
        int i = r_ - 1;
        while (i >= 0 && pivots_[static_cast<std::size_t>(i)] == k_ - r_ + i) --i;
        if (i < 0) return false;
        ++pivots_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r_; ++j) {
            pivots_[static_cast<std::size_t>(j)] = pivots_[static_cast<std::size_t>(j - 1)] + 1;
        }
        return true;
    }

    void materialize(Subspace& out) {
        out.ambient = k_;
        out.basis.assign(static_cast<std::size_t>(r_), Vec(static_cast<std::size_t>(k_), 0));
        for (int i = 0; i < r_; ++i) {
            out.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])] = 1;
        }
        for (std::size_t s = 0; s < free_slots_.size(); ++s) {
            const auto [row, col] = free_slots_[s];
            out.basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                static_cast<Felem>(free_vals_[s]);
        }
    }

    const GaloisField* F_;
    int k_;
    int r_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_slots_;
    std::vector<int> free_vals_;
    bool fresh_pattern_ = true;
    bool done_ = false;
};

// Applies fn to every r-dimensional subspace of F_q^k after checking the
// enumeration cap.
template <typename Fn>
void for_each_subspace(const GaloisField& F, int k, int r, const Caps& caps, Fn&& fn) {
    const BigInt count = gaussian_binomial(k, r, F.order());
    if (count > BigInt(caps.max_subspaces)) {
        throw CapExceeded("subspace enumeration of size " + count.str() +
                          " exceeds the configured cap");
    }
    SubspaceEnumerator en(F, k, r);
    Subspace s;
    while (en.next(s)) fn(s);
}

}  // namespace glab
