#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "fgroup/error.hpp"

namespace fgroup {

/// Arbitrary-precision integer. Covers can reach indices far beyond 64 bits.
using BigInt = mpz_class;

inline BigInt big(std::int64_t v)
{
    BigInt out;
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

inline BigInt big_u(std::uint64_t v)
{
    BigInt out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
    return out;
}

inline bool fits_i64(const BigInt& v) { return v.fits_slong_p(); }

inline std::int64_t to_i64(const BigInt& v, const char* what = "integer")
{
    if (!v.fits_slong_p()) {
        fail(ErrorCode::BoundExceeded, std::string(what) + " does not fit in 64 bits");
    }
    return v.get_si();
}

inline std::uint64_t to_u64(const BigInt& v, const char* what = "integer")
{
    if (sgn(v) < 0 || !v.fits_ulong_p()) {
        fail(ErrorCode::BoundExceeded, std::string(what) + " does not fit in 64 bits");
    }
    return v.get_ui();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt pow_big(std::int64_t base, std::uint64_t exp)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), big(base).get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what = "count")
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        fail(ErrorCode::BoundExceeded, std::string(what) + " overflows 64 bits");
    }
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what = "count")
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        fail(ErrorCode::BoundExceeded, std::string(what) + " overflows 64 bits");
    }
    return out;
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a / std::gcd(a, b), b, &out)) {
        fail(ErrorCode::BoundExceeded, "lcm overflows 64 bits");
    }
    return out;
}

} // namespace fgroup
