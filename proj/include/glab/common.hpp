#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace glab {

// Exact integer type for subspace counts; Gaussian binomials overflow
// 64 bits already for moderate (k, q).
using BigInt = boost::multiprecision::cpp_int;

// Error taxonomy. The CLI maps ValidationError -> exit 1 and
// CapExceeded -> exit 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form prediction was requested for parameters outside the
// range where the formula applies.
struct HypothesisNotMet : ValidationError {
    using ValidationError::ValidationError;
};

// A structured repair pair was requested for a layout the constructive
// case analysis does not cover; callers fall back to the generic scan.
struct LayoutNotSupported : ValidationError {
    using ValidationError::ValidationError;
};

// Resource limits for exhaustive enumeration. These are configuration,
// not logic: every enumerating routine checks against the caps it is
// given and throws CapExceeded instead of starting an infeasible scan.
struct Caps {
    std::uint64_t max_code_space = std::uint64_t{1} << 26;  // largest q^k scanned
    std::uint64_t max_subspaces = 8'000'000;                // largest subspace family enumerated
    int threads = 1;                                        // 0 = detect at runtime

    static Caps from_env() {
        Caps c;
        if (const char* s = std::getenv("GRIESMER_LAB_MAX_QK")) {
            c.max_code_space = std::strtoull(s, nullptr, 10);
        }
        if (const char* s = std::getenv("GRIESMER_LAB_MAX_SUBSPACES")) {
            c.max_subspaces = std::strtoull(s, nullptr, 10);
        }
        return c;
    }
};

// q^e as uint64, throwing on overflow.
inline std::uint64_t upow(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) {
            throw ValidationError("integer overflow in q^e");
        }
        r *= q;
    }
    return r;
}

inline BigInt bpow(std::uint64_t q, std::uint64_t e) {
    BigInt r = 1;
    BigInt b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace glab
