#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <glab/common.hpp>

namespace glab {

// Field elements are integer labels in [0, q). For an extension field
// GF(p^m) the base-p digits of the label are the polynomial coefficients,
// so vectors stay plain integer arrays regardless of the field.
using Felem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 16;

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// Dense polynomials over GF(p), coefficients ascending, no trailing zeros.
using Poly = std::vector<int>;

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    poly_trim(r);
    return r;
}

// Remainder of a by monic b.
inline Poly poly_rem(Poly a, const Poly& b, int p) {
    poly_trim(a);
    const int db = poly_deg(b);
    while (poly_deg(a) >= db) {
        const int shift = poly_deg(a) - db;
        const int lead = a.back();
        for (int i = 0; i <= db; ++i) {
            a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

inline bool poly_is_irreducible(const Poly& f, int p) {
    const int m = poly_deg(f);
    if (m < 1) return false;
    if (f[0] == 0) return false;  // divisible by x
    // Trial division against every monic polynomial of degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = upow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d));
        for (std::uint64_t e = 0; e < count; ++e) {
            Poly g(d + 1, 0);
            std::uint64_t t = e;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// Arithmetic context for GF(q), q = p^m <= kMaxFieldOrder. Immutable after
// construction; all operations are table lookups and safe to share across
// threads.
class GaloisField {
public:
    GaloisField(int characteristic, int degree)
        : p_(characteristic), m_(degree) {
        if (!detail::is_prime(p_)) {
            throw ValidationError("field characteristic " + std::to_string(p_) + " is not prime");
        }
        if (m_ < 1) throw ValidationError("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < m_; ++i) {
            q *= static_cast<std::uint64_t>(p_);
            if (q > kMaxFieldOrder) {
                throw ValidationError("field order exceeds the supported maximum " +
                                      std::to_string(kMaxFieldOrder));
            }
        }
        q_ = static_cast<int>(q);
        if (m_ > 1) find_modulus();
        build_tables();
    }

    static GaloisField of_order(int q) {
        if (q < 2) throw ValidationError("field order must be >= 2");
        for (int p = 2; p <= q; ++p) {
            if (!detail::is_prime(p)) continue;
            int m = 0;
            int t = q;
            while (t % p == 0) {
                t /= p;
                ++m;
            }
            if (t == 1) return GaloisField(p, m);
        }
        throw ValidationError(std::to_string(q) + " is not a prime power");
    }

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int order() const { return q_; }

    // Monic irreducible modulus, coefficients ascending including the
    // leading 1; empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    Felem add(Felem a, Felem b) const { return add_[(a << 4) | b]; }
    Felem sub(Felem a, Felem b) const { return add_[(a << 4) | neg_[b]]; }
    Felem mul(Felem a, Felem b) const { return mul_[(a << 4) | b]; }
    Felem neg(Felem a) const { return neg_[a]; }

    Felem inv(Felem a) const {
        if (a == 0) throw ValidationError("division by zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }

    Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }

    // Discrete exp/log for the multiplicative group; exp has period q-1.
    Felem exp_at(int i) const {
        int e = i % (q_ - 1);
        if (e < 0) e += q_ - 1;
        return exp_[e];
    }

    int log_of(Felem a) const {
        if (a == 0) throw ValidationError("log of zero");
        return log_[a];
    }

    bool operator==(const GaloisField& o) const { return p_ == o.p_ && m_ == o.m_; }
    bool operator!=(const GaloisField& o) const { return !(*this == o); }

    // Raw table access for hot loops.
    const Felem* add_table() const { return add_.data(); }
    const Felem* mul_table() const { return mul_.data(); }

private:
    void find_modulus() {
        // Lexicographically smallest irreducible monic polynomial of
        // degree m over GF(p), ordered by the (c_0, ..., c_{m-1}) tuple.
        const std::uint64_t count = upow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(m_));
        for (std::uint64_t e = 0; e < count; ++e) {
            detail::Poly f(m_ + 1, 0);
            std::uint64_t t = e;
            for (int i = 0; i < m_; ++i) {
                f[i] = static_cast<int>(t % p_);
                t /= p_;
            }
            f[m_] = 1;
            if (detail::poly_is_irreducible(f, p_)) {
                modulus_ = f;
                return;
            }
        }
        throw std::logic_error("no irreducible modulus found (internal error)");
    }

    std::vector<int> digits_of(int a) const {
        std::vector<int> d(m_, 0);
        for (int i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    int label_of(const detail::Poly& f) const {
        int a = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
            a = a * p_ + f[static_cast<std::size_t>(i)];
        }
        return a;
    }

    void build_tables() {
        add_.fill(0);
        mul_.fill(0);
        for (int a = 0; a < q_; ++a) {
            const auto da = digits_of(a);
            // addition: digit-wise mod p
            for (int b = 0; b < q_; ++b) {
                const auto db = digits_of(b);
                int s = 0;
                for (int i = m_ - 1; i >= 0; --i) s = s * p_ + (da[i] + db[i]) % p_;
                add_[(a << 4) | b] = static_cast<Felem>(s);
            }
            // negation
            int n = 0;
            for (int i = m_ - 1; i >= 0; --i) n = n * p_ + (p_ - da[i]) % p_;
            neg_[a] = static_cast<Felem>(n);
        }
        for (int a = 0; a < q_; ++a) {
            detail::Poly fa = digits_of(a);
            detail::poly_trim(fa);
            for (int b = 0; b <= a; ++b) {
                detail::Poly fb = digits_of(b);
                detail::poly_trim(fb);
                detail::Poly prod = detail::poly_mul(fa, fb, p_);
                if (m_ > 1) prod = detail::poly_rem(prod, modulus_, p_);
                const int v = label_of(prod);
                mul_[(a << 4) | b] = static_cast<Felem>(v);
                mul_[(b << 4) | a] = static_cast<Felem>(v);
            }
        }
        // exp/log from a generator of the multiplicative group
        exp_.fill(0);
        log_.fill(-1);
        for (int g = 1; g < q_; ++g) {
            int x = g;
            int order = 1;
            while (x != 1) {
                x = mul_[(static_cast<unsigned>(x) << 4) | static_cast<unsigned>(g)];
                ++order;
            }
            if (order == q_ - 1) {
                int v = 1;
                for (int i = 0; i < q_ - 1; ++i) {
                    exp_[i] = static_cast<Felem>(v);
                    log_[v] = i;
                    v = mul_[(static_cast<unsigned>(v) << 4) | static_cast<unsigned>(g)];
                }
                break;
            }
        }
        for (int a = 1; a < q_; ++a) {
            const int e = (q_ - 1 - log_[a]) % (q_ - 1);
            inv_[a] = exp_[e];
        }
    }

    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::array<Felem, 256> add_{};
    std::array<Felem, 256> mul_{};
    std::array<Felem, 16> neg_{};
    std::array<Felem, 16> inv_{};
    std::array<Felem, 16> exp_{};
    std::array<int, 16> log_{};
};

}  // namespace glab
