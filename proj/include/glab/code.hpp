#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <glab/vectorspace.hpp>

namespace glab {

struct WeightDistribution {
    // weight -> multiplicity, only nonzero multiplicities; weight 0 maps to 1
    std::map<long long, BigInt> counts;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [w, m] : counts) t += m;
        return t;
    }

    long long min_nonzero_weight() const {
        for (const auto& [w, m] : counts) {
            if (w > 0 && m > 0) return w;
        }
        throw ValidationError("weight distribution has no nonzero weight");
    }

    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
};

struct SSWDTable {
    int r = 0;
    std::map<long long, BigInt> counts;  // support weight -> number of r-dim subcodes

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [w, m] : counts) t += m;
        return t;
    }

    long long min_weight() const {
        if (counts.empty()) throw ValidationError("empty support weight table");
        return counts.begin()->first;
    }

    bool operator==(const SSWDTable& o) const { return r == o.r && counts == o.counts; }
};

namespace detail {

// Weight scan: visits every projective functional a (first nonzero
// coordinate 1) with global index in [from, to) in the lexicographic
// ordering of projective_rank, and reports wt(a * G). The functional is
// reported by its base-q integer encoding. Specialized engines exist for
// q = 2 (bit-packed rows, Gray order inside each lead block) and q = 3
// (two-bitplane rows); the generic byte engine is the reference all others
// must agree with.

enum class ScanEngine { Auto, Generic };

struct BlockWalk {
    // index ranges of the lead-position blocks, outermost first
    struct Seg {
        int lead;
        std::uint64_t begin;   // global index of block start
        std::uint64_t size;    // q^(k-1-lead)
    };
    std::vector<Seg> segs;

    BlockWalk(int q, int k) {
        std::uint64_t begin = 0;
        for (int lead = k - 1; lead >= 0; --lead) {
            const std::uint64_t size = upow(static_cast<std::uint64_t>(q),
                                            static_cast<unsigned>(k - 1 - lead));
            segs.push_back({lead, begin, size});
            begin += size;
        }
    }
};

template <typename Emit>
void scan_weights_q2(const std::vector<std::uint32_t>& cols_encoded, int k, std::uint64_t from,
                     std::uint64_t to, Emit&& emit) {
    if (from >= to) return;
    const std::size_t n = cols_encoded.size();
    const std::size_t words = (n + 63) / 64;
    // row j holds bit c = coordinate j of column c; encoded bit (k-1-j)
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(k),
                                                 std::vector<std::uint64_t>(words, 0));
    for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t e = cols_encoded[c];
        for (int j = 0; j < k; ++j) {
            if ((e >> (k - 1 - j)) & 1u) rows[static_cast<std::size_t>(j)][c >> 6] |= 1ull << (c & 63);
        }
    }
    std::vector<std::uint64_t> cw(words, 0);
    const BlockWalk walk(2, k);
    for (const auto& seg : walk.segs) {
        if (seg.begin + seg.size <= from) continue;
        if (seg.begin >= to) break;
        const std::uint64_t lo = std::max(from, seg.begin) - seg.begin;
        const std::uint64_t hi = std::min(to, seg.begin + seg.size) - seg.begin;
        const std::uint32_t base = 1u << (k - 1 - seg.lead);
        // Gray order inside the block: state i has suffix bits gray(i),
        // where suffix bit b is coordinate k-1-b (= encoded bit b).
        std::uint32_t gray = static_cast<std::uint32_t>(lo ^ (lo >> 1));
        std::fill(cw.begin(), cw.end(), 0);
        for (std::size_t w = 0; w < words; ++w) cw[w] = rows[static_cast<std::size_t>(seg.lead)][w];
        for (std::uint32_t g = gray; g; g &= g - 1) {
            const int b = std::countr_zero(g);
            const auto& row = rows[static_cast<std::size_t>(k - 1 - b)];
            for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
        }
        int wt = 0;
        for (std::size_t w = 0; w < words; ++w) wt += std::popcount(cw[w]);
        std::uint64_t i = lo;
        while (true) {
            emit(base | gray, wt);
            if (++i >= hi) break;
            const int b = std::countr_zero(i);
            gray ^= 1u << b;
            const auto& row = rows[static_cast<std::size_t>(k - 1 - b)];
            int acc = 0;
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t nw = cw[w] ^ row[w];
                acc += std::popcount(nw);
                cw[w] = nw;
            }
            wt = acc;
        }
    }
}

template <typename Emit>
void scan_weights_q3(const std::vector<Vec>& cols, int k, std::uint64_t from, std::uint64_t to,
                     Emit&& emit) {
    if (from >= to) return;
    const std::size_t n = cols.size();
    const std::size_t words = (n + 63) / 64;
    // bitplane pair per row: lo bit set where the coordinate is 1, hi where 2
    std::vector<std::vector<std::uint64_t>> rlo(static_cast<std::size_t>(k),
                                                std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> rhi = rlo;
    for (std::size_t c = 0; c < n; ++c) {
        for (int j = 0; j < k; ++j) {
            const Felem v = cols[c][static_cast<std::size_t>(j)];
            if (v == 1) rlo[static_cast<std::size_t>(j)][c >> 6] |= 1ull << (c & 63);
            if (v == 2) rhi[static_cast<std::size_t>(j)][c >> 6] |= 1ull << (c & 63);
        }
    }
    std::vector<std::uint64_t> cl(words, 0), ch(words, 0);

    // mod-3 addition of bitplane pairs, re-accumulating the nonzero count
    auto apply = [&](int pos, int dval, int& wt) {
        const auto& bl0 = rlo[static_cast<std::size_t>(pos)];
        const auto& bh0 = rhi[static_cast<std::size_t>(pos)];
        const auto& bl = (dval == 1) ? bl0 : bh0;  // scaling by 2 swaps the planes
        const auto& bh = (dval == 1) ? bh0 : bl0;
        int acc = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t al = cl[w], ah = ch[w];
            const std::uint64_t ta = al | ah;
            const std::uint64_t tb = bl[w] | bh[w];
            const std::uint64_t nl = (al & ~tb) | (bl[w] & ~ta) | (ah & bh[w]);
            const std::uint64_t nh = (ah & ~tb) | (bh[w] & ~ta) | (al & bl[w]);
            acc += std::popcount(nl | nh);
            cl[w] = nl;
            ch[w] = nh;
        }
        wt = acc;
    };

    const BlockWalk walk(3, k);
    std::vector<int> digits;
    for (const auto& seg : walk.segs) {
        if (seg.begin + seg.size <= from) continue;
        if (seg.begin >= to) break;
        const std::uint64_t lo = std::max(from, seg.begin) - seg.begin;
        const std::uint64_t hi = std::min(to, seg.begin + seg.size) - seg.begin;
        const int m = k - 1 - seg.lead;  // free suffix digits
        digits.assign(static_cast<std::size_t>(m), 0);
        std::uint64_t t = lo;
        for (int i = m - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(t % 3);
            t /= 3;
        }
        std::fill(cl.begin(), cl.end(), 0);
        std::fill(ch.begin(), ch.end(), 0);
        int wt = 0;
        apply(seg.lead, 1, wt);
        for (int i = 0; i < m; ++i) {
            if (digits[static_cast<std::size_t>(i)]) {
                apply(seg.lead + 1 + i, digits[static_cast<std::size_t>(i)], wt);
            }
        }
        std::uint64_t value = upow(3, static_cast<unsigned>(m));
        for (int i = 0; i < m; ++i) value += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i)]) *
                                             upow(3, static_cast<unsigned>(m - 1 - i));
        std::uint64_t i = lo;
        while (true) {
            emit(static_cast<std::uint32_t>(value), wt);
            if (++i >= hi) break;
            int pos = m - 1;
            std::uint64_t scale = 1;
            while (digits[static_cast<std::size_t>(pos)] == 2) {
                digits[static_cast<std::size_t>(pos)] = 0;
                apply(seg.lead + 1 + pos, 1, wt);  // 2 -> 0 adds 1 mod 3
                value -= 2 * scale;
                scale *= 3;
                --pos;
            }
            ++digits[static_cast<std::size_t>(pos)];
            apply(seg.lead + 1 + pos, 1, wt);
            value += scale;
        }
    }
}

template <typename Emit>
void scan_weights_generic(const GaloisField& F, const std::vector<Vec>& cols, int k,
                          std::uint64_t from, std::uint64_t to, Emit&& emit) {
    if (from >= to) return;
    const int q = F.order();
    const std::size_t n = cols.size();
    std::vector<std::vector<Felem>> rows(static_cast<std::size_t>(k),
                                         std::vector<Felem>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        for (int j = 0; j < k; ++j) rows[static_cast<std::size_t>(j)][c] = cols[c][static_cast<std::size_t>(j)];
    }
    std::vector<Felem> cw(n, 0);
    const Felem* add = F.add_table();
    const Felem* mul = F.mul_table();

    auto apply = [&](int pos, Felem dval, int& wt) {
        const auto& row = rows[static_cast<std::size_t>(pos)];
        const unsigned dshift = static_cast<unsigned>(dval) << 4;
        int delta = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const Felem old = cw[c];
            const Felem nw = add[(static_cast<unsigned>(old) << 4) | mul[dshift | row[c]]];
            delta += (nw != 0) - (old != 0);
            cw[c] = nw;
        }
        wt += delta;
    };

    const BlockWalk walk(q, k);
    std::vector<int> digits;
    for (const auto& seg : walk.segs) {
        if (seg.begin + seg.size <= from) continue;
        if (seg.begin >= to) break;
        const std::uint64_t lo = std::max(from, seg.begin) - seg.begin;
        const std::uint64_t hi = std::min(to, seg.begin + seg.size) - seg.begin;
        const int m = k - 1 - seg.lead;
        digits.assign(static_cast<std::size_t>(m), 0);
        std::uint64_t t = lo;
        for (int i = m - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(t % q);
            t /= q;
        }
        std::fill(cw.begin(), cw.end(), 0);
        int wt = 0;
        apply(seg.lead, 1, wt);
        for (int i = 0; i < m; ++i) {
            if (digits[static_cast<std::size_t>(i)]) {
                apply(seg.lead + 1 + i, static_cast<Felem>(digits[static_cast<std::size_t>(i)]), wt);
            }
        }
        std::uint64_t value = upow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m));
        for (int i = 0; i < m; ++i) {
            value += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i)]) *
                     upow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m - 1 - i));
        }
        std::uint64_t i = lo;
        while (true) {
            emit(static_cast<std::uint32_t>(value), wt);
            if (++i >= hi) break;
            int pos = m - 1;
            std::uint64_t scale = 1;
            while (digits[static_cast<std::size_t>(pos)] == q - 1) {
                const Felem old = static_cast<Felem>(q - 1);
                digits[static_cast<std::size_t>(pos)] = 0;
                apply(seg.lead + 1 + pos, F.sub(0, old), wt);
                value -= static_cast<std::uint64_t>(q - 1) * scale;
                scale *= static_cast<std::uint64_t>(q);
                --pos;
            }
            const Felem old = static_cast<Felem>(digits[static_cast<std::size_t>(pos)]);
            ++digits[static_cast<std::size_t>(pos)];
            apply(seg.lead + 1 + pos, F.sub(static_cast<Felem>(old + 1), old), wt);
            value += scale;
        }
    }
}

}  // namespace detail

// A projective linear code given by the columns of its generator matrix,
// one normalized representative per 1-dimensional subspace. Immutable;
// analyses are cached on first computation.
class LinearCode {
public:
    LinearCode(GaloisField F, int k, std::vector<Vec> columns, bool require_full_rank = true)
        : F_(std::move(F)), k_(k), columns_(std::move(columns)) {
        if (k_ < 1) throw ValidationError("code dimension must be >= 1");
        // columns are tracked by their base-q integer encodings
        if (upow(static_cast<std::uint64_t>(F_.order()), static_cast<unsigned>(k_)) >
            std::numeric_limits<std::uint32_t>::max()) {
            throw ValidationError("q^k exceeds the supported column-encoding range");
        }
        if (columns_.empty()) throw ValidationError("generator matrix has no columns");
        for (Vec& c : columns_) {
            if (static_cast<int>(c.size()) != k_) {
                throw ValidationError("column length does not match the code dimension");
            }
            if (is_zero_vec(c)) throw ValidationError("generator columns must be nonzero");
            c = normalize_vec(F_, std::move(c));
        }
        sorted_.reserve(columns_.size());
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            sorted_.push_back({encode_vec(F_, columns_[i]), static_cast<std::uint32_t>(i)});
        }
        std::sort(sorted_.begin(), sorted_.end());
        for (std::size_t i = 1; i < sorted_.size(); ++i) {
            if (sorted_[i].first == sorted_[i - 1].first) {
                throw ValidationError("generator columns must be pairwise non-proportional");
            }
        }
        // incremental rank with early exit once the columns span
        std::vector<Vec> basis;
        for (const Vec& c : columns_) {
            Vec v = c;
            for (const Vec& row : basis) {
                std::size_t p = 0;
                while (p < row.size() && row[p] == 0) ++p;
                if (v[p] != 0) {
                    const Felem s = v[p];
                    for (std::size_t j = p; j < v.size(); ++j) v[j] = F_.sub(v[j], F_.mul(s, row[j]));
                }
            }
            if (!is_zero_vec(v)) {
                basis.push_back(std::move(v));
                rref(F_, basis);
                if (static_cast<int>(basis.size()) == k_) break;
            }
        }
        rank_ = static_cast<int>(basis.size());
        if (require_full_rank && rank_ != k_) {
            throw ValidationError("generator columns do not span the full space");
        }
    }

    const GaloisField& field() const { return F_; }
    int dim() const { return k_; }
    int length() const { return static_cast<int>(columns_.size()); }
    const std::vector<Vec>& columns() const { return columns_; }

    std::uint64_t functional_count() const {
        return projective_point_count(F_.order(), k_);
    }

    // Index of the column proportional to v, together with the scalar s
    // such that v = s * column. Empty when v's line is not a column.
    std::optional<std::pair<int, Felem>> find_column(const Vec& v) const {
        if (is_zero_vec(v)) return std::nullopt;
        Felem s = 1;
        const Vec rep = normalize_vec(F_, v, &s);
        const std::uint32_t e = encode_vec(F_, rep);
        auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(e, 0u));
        if (it == sorted_.end() || it->first != e) return std::nullopt;
        return std::make_pair(static_cast<int>(it->second), s);
    }

    // Hamming weight of the codeword a*G: n minus the number of columns in
    // the hyperplane orthogonal to a.
    int weight_of_functional(const Vec& a) const {
        if (static_cast<int>(a.size()) != k_) throw ValidationError("functional length mismatch");
        if (is_zero_vec(a)) throw ValidationError("functional must be nonzero");
        int in_hyperplane = 0;
        for (const Vec& c : columns_) in_hyperplane += (dot(F_, a, c) == 0);
        return length() - in_hyperplane;
    }

    int rank() const { return rank_; }

    const WeightDistribution& weight_distribution(const Caps& caps = Caps{}) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (!cache_->wd) {
            require_spanning();
            check_space(caps);
            // partition the functional index space across workers; the
            // merge is a commutative histogram sum, so the result does not
            // depend on the worker count
            const int workers = effective_threads(caps);
            std::vector<std::uint64_t> hist(static_cast<std::size_t>(length()) + 1, 0);
            if (workers <= 1 && m1_feasible()) {
                fill_m1(caps);
                const std::uint32_t n = static_cast<std::uint32_t>(length());
                for (std::uint32_t slot : cache_->m1) {
                    if (slot) ++hist[static_cast<std::size_t>(n - (slot - 1))];
                }
            } else if (workers <= 1) {
                scan_range(0, functional_count(),
                           [&](std::uint32_t, int wt) { ++hist[static_cast<std::size_t>(wt)]; });
            } else {
                const std::uint64_t total = functional_count();
                std::vector<std::vector<std::uint64_t>> parts(
                    static_cast<std::size_t>(workers), hist);
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; ++t) {
                    const std::uint64_t from = total * static_cast<std::uint64_t>(t) /
                                               static_cast<std::uint64_t>(workers);
                    const std::uint64_t to = total * static_cast<std::uint64_t>(t + 1) /
                                             static_cast<std::uint64_t>(workers);
                    pool.emplace_back([this, t, from, to, &parts] {
                        auto& h = parts[static_cast<std::size_t>(t)];
                        scan_range(from, to,
                                   [&](std::uint32_t, int wt) { ++h[static_cast<std::size_t>(wt)]; });
                    });
                }
                for (auto& th : pool) th.join();
                for (const auto& part : parts) {
                    for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += part[w];
                }
            }
            WeightDistribution wd;
            wd.counts[0] = 1;
            const int qm1 = F_.order() - 1;
            for (std::size_t w = 1; w < hist.size(); ++w) {
                if (hist[w]) wd.counts[static_cast<long long>(w)] = BigInt(hist[w]) * qm1;
            }
            if (!hist.empty() && hist[0]) {
                // a functional vanishing on every column would mean rank < k
                throw std::logic_error("zero-weight functional in a spanning code");
            }
            cache_->wd = std::move(wd);
        }
        return *cache_->wd;
    }

    long long minimum_distance(const Caps& caps = Caps{}) const {
        return weight_distribution(caps).min_nonzero_weight();
    }

    // Projectivity: pairwise non-proportional nonzero columns, re-checked
    // from the sorted encodings.
    bool dual_distance_at_least_3() const {
        for (std::size_t i = 1; i < sorted_.size(); ++i) {
            if (sorted_[i].first == sorted_[i - 1].first) return false;
        }
        return true;
    }

    // Number of generator columns inside V.
    std::uint64_t columns_in_subspace(const Subspace& V) const {
        if (V.ambient != k_) throw ValidationError("subspace ambient dimension mismatch");
        const int d = V.dim();
        if (d == 0) return 0;
        const std::uint64_t pts = (upow(static_cast<std::uint64_t>(F_.order()),
                                        static_cast<unsigned>(d)) -
                                   1) /
                                  static_cast<std::uint64_t>(F_.order() - 1);
        if (pts <= static_cast<std::uint64_t>(length()) * static_cast<std::uint64_t>(d)) {
            std::uint64_t m = 0;
            for_each_point_of(V, [&](const Vec& p) {
                const std::uint32_t e = encode_vec(F_, p);
                auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(e, 0u));
                m += (it != sorted_.end() && it->first == e);
            });
            return m;
        }
        std::uint64_t m = 0;
        for (const Vec& c : columns_) m += contains(F_, V, c);
        return m;
    }

    // Support weight distribution of the r-dimensional subcodes, by
    // exhaustive enumeration of (k-r)-dimensional subspaces V and the count
    // of columns inside each (the hyperplane correspondence).
    SSWDTable support_weight_table(int r, const Caps& caps = Caps{}) const {
        if (r < 1 || r > k_) throw ValidationError("subcode dimension out of range");
        require_spanning();
        const BigInt count = gaussian_binomial(k_, r, F_.order());
        if (count > BigInt(caps.max_subspaces)) {
            throw CapExceeded("subspace enumeration of size " + count.str() +
                              " exceeds the configured cap");
        }
        const int s = k_ - r;  // dimension of the enumerated V
        std::map<long long, std::uint64_t> hist;
        const long long n = length();
        if (s <= r || !m1_available(caps)) {
            // enumerate V directly, counting columns inside it
            SubspaceEnumerator en(F_, k_, s);
            Subspace V;
            while (en.next(V)) {
                const std::uint64_t m = columns_in_subspace(V);
                ++hist[n - static_cast<long long>(m)];
            }
        } else {
            // enumerate W = V-perp and recover m from the per-functional
            // zero counts: every column contributes to each functional of
            // P(W) it is orthogonal to, so
            //   sum_{f in P(W)} m1(f) = m * q^{r-1} + n * (q^{r-1}-1)/(q-1)
            const auto& m1 = m1_array(caps);
            const std::uint64_t q = static_cast<std::uint64_t>(F_.order());
            const std::uint64_t qr1 = upow(q, static_cast<unsigned>(r - 1));
            const std::uint64_t points = (qr1 * q - 1) / (q - 1);
            const std::uint64_t base = static_cast<std::uint64_t>(n) * ((qr1 - 1) / (q - 1));
            SubspaceEnumerator en(F_, k_, r);
            Subspace W;
            while (en.next(W)) {
                std::uint64_t sum = 0;
                for_each_point_of(W, [&](const Vec& p) { sum += m1[encode_vec(F_, p)]; });
                sum -= points;  // m1 slots carry m + 1
                const std::uint64_t m = (sum - base) / qr1;
                ++hist[n - static_cast<long long>(m)];
            }
        }
        SSWDTable t;
        t.r = r;
        for (const auto& [w, m] : hist) t.counts[w] = m;
        return t;
    }

    long long generalized_weight(int r, const Caps& caps = Caps{}) const {
        return support_weight_table(r, caps).min_weight();
    }

    // Test hook: run the reference byte engine regardless of q.
    WeightDistribution weight_distribution_reference(const Caps& caps = Caps{}) const {
        check_space(caps);
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(length()) + 1, 0);
        detail::scan_weights_generic(F_, columns_, k_, 0, functional_count(),
                                     [&](std::uint32_t, int wt) { ++hist[static_cast<std::size_t>(wt)]; });
        WeightDistribution wd;
        wd.counts[0] = 1;
        const int qm1 = F_.order() - 1;
        for (std::size_t w = 1; w < hist.size(); ++w) {
            if (hist[w]) wd.counts[static_cast<long long>(w)] = BigInt(hist[w]) * qm1;
        }
        return wd;
    }

    template <typename Fn>
    void for_each_point_of(const Subspace& V, Fn&& fn) const {
        for_each_projective_point(F_, V, fn);
    }

private:
    void require_spanning() const {
        if (rank_ != k_) {
            throw ValidationError("analysis requires a spanning generator matrix (rank k)");
        }
    }

    void check_space(const Caps& caps) const {
        const std::uint64_t space =
            upow(static_cast<std::uint64_t>(F_.order()), static_cast<unsigned>(k_));
        if (space > caps.max_code_space) {
            throw CapExceeded("codeword space q^k = " + std::to_string(space) +
                              " exceeds the configured cap");
        }
    }

    static int effective_threads(const Caps& caps) {
        if (caps.threads > 0) return caps.threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }

    template <typename Emit>
    void scan_range(std::uint64_t from, std::uint64_t to, Emit&& emit) const {
        if (F_.order() == 2) {
            std::vector<std::uint32_t> enc(columns_.size());
            for (std::size_t i = 0; i < columns_.size(); ++i) enc[i] = encode_vec(F_, columns_[i]);
            detail::scan_weights_q2(enc, k_, from, to, emit);
        } else if (F_.order() == 3) {
            detail::scan_weights_q3(columns_, k_, from, to, emit);
        } else {
            detail::scan_weights_generic(F_, columns_, k_, from, to, emit);
        }
    }

    template <typename Emit>
    void scan_all(Emit&& emit) const {
        scan_range(0, functional_count(), emit);
    }

    bool m1_feasible() const {
        const std::uint64_t space =
            upow(static_cast<std::uint64_t>(F_.order()), static_cast<unsigned>(k_));
        return space <= (std::uint64_t{1} << 24);
    }

    bool m1_available(const Caps& caps) const {
        return m1_feasible() &&
               upow(static_cast<std::uint64_t>(F_.order()), static_cast<unsigned>(k_)) <=
                   caps.max_code_space;
    }

    // per-functional count of columns in the hyperplane plus one, indexed
    // by the functional's integer encoding; slots that are not normalized
    // functionals stay 0
    const std::vector<std::uint32_t>& m1_array(const Caps& caps) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        fill_m1(caps);
        return cache_->m1;
    }

    void fill_m1(const Caps& caps) const {
        if (!cache_->m1.empty()) return;
        check_space(caps);
        const std::uint64_t space =
            upow(static_cast<std::uint64_t>(F_.order()), static_cast<unsigned>(k_));
        cache_->m1.assign(space, 0);
        const std::uint32_t n = static_cast<std::uint32_t>(length());
        scan_all([&](std::uint32_t value, int wt) {
            cache_->m1[value] = n - static_cast<std::uint32_t>(wt) + 1;
        });
    }

    GaloisField F_;
    int k_;
    int rank_ = 0;
    std::vector<Vec> columns_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_;  // (encoding, column index)

    struct CacheState {
        std::mutex mutex;
        std::optional<WeightDistribution> wd;
        std::vector<std::uint32_t> m1;
    };
    mutable std::unique_ptr<CacheState> cache_ = std::make_unique<CacheState>();
};

}  // namespace glab
