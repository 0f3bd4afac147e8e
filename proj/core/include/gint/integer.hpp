#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gint/error.hpp"

namespace gint {

/// Arbitrary-precision rational integer, the scalar everything else is built on.
using Int = mpz_class;

/// Largest e such that 2^e divides m. Throws ZeroInput for m = 0.
inline std::uint64_t two_adic_valuation(const Int& m) {
    if (m == 0) raise(ErrorCode::ZeroInput, "two_adic_valuation(0) is undefined");
    return static_cast<std::uint64_t>(mpz_scan1(m.get_mpz_t(), 0));
}

/// Quotient a/b when b divides a exactly; fails loudly otherwise.
/// General division is deliberately not offered.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) raise(ErrorCode::InternalInconsistency, "div_exact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        raise(ErrorCode::InternalInconsistency,
              "div_exact: " + a.get_str() + " is not divisible by " + b.get_str());
    return q;
}

/// Nonnegative residue of a modulo m (m >= 1).
inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& base, std::uint64_t exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Canonical decimal form: optional leading minus, no leading zeros except "0".
inline std::string to_decimal(const Int& value) { return value.get_str(); }

/// Strict inverse of to_decimal. Rejects anything non-canonical ("-0", "007",
/// "+5", whitespace, empty).
inline Int int_from_decimal(const std::string& text) {
    const auto bad = [&]() -> Int {
        raise(ErrorCode::BadInput, "not a canonical decimal integer: \"" + text + "\"");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    if (pos == text.size()) return bad();
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return bad();
    if (text[pos] == '0' && (text.size() - pos > 1 || pos == 1)) return bad();
    return Int(text);
}

}  // namespace gint
