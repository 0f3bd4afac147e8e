#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gint {

/// Outcome of one named batch of invariant checks. A failed check stops the
/// run and carries a counterexample description.
struct SuiteReport {
    std::string suite;
    std::uint64_t scale = 0;
    std::uint64_t checks = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Lucas-sequence identity checks at the given scale s:
///   - the binomial expansion equals u_{kn+r} for A,B in [-s,s], k,n,r in [0,6];
///   - the zero-index criterion matches gcd(B,M)=1 for A,B in [-s,s], M in [2,10s];
///   - the growth bounds (A-B)^n <= u_{n+1} <= A^n for A in [2, s+2], B in [0,A-1], n <= 60.
SuiteReport run_identities(std::uint64_t scale);

/// Brute-force oracle agreement at scale s: Pell grid scan vs the Lucas
/// family for A in [2,6] with bound s^2, and the Gaussian box scan at bound s
/// (all pairs must be real and match the +-/swap closure of the real family).
SuiteReport run_oracles(std::uint64_t scale);

/// Witness round trips for z in [-s, s]: construct, re-verify, and check both
/// constituent identities exactly.
SuiteReport run_roundtrip(std::uint64_t scale);

}  // namespace gint
