#pragma once

#include <cstdint>

#include "gint/integer.hpp"

namespace gint {

/// Parameters (A, B) of the Lucas sequence u_0 = 0, u_1 = 1,
/// u_{n+1} = A u_n - B u_{n-1}. Any integers are allowed.
struct LucasParams {
    Int A;
    Int B;
};

/// A consecutive pair (u_n, u_{n+1}) together with its index.
struct LucasPair {
    std::uint64_t index = 0;
    Int low;   // u_n
    Int high;  // u_{n+1}
};

/// Exact (u_n, u_{n+1}) by index doubling (matrix powering).
LucasPair lucas_pair(const LucasParams& params, std::uint64_t n);

/// Exact (u_n, u_{n+1}) by the plain recurrence. Deliberately kept as an
/// independent cross-check for the doubling path.
LucasPair lucas_pair_iterative(const LucasParams& params, std::uint64_t n);

/// Componentwise residues in [0, M) of lucas_pair(params, n). M >= 1.
LucasPair lucas_pair_mod(const LucasParams& params, std::uint64_t n, const Int& modulus);

/// Smallest j >= 1 with u_j = 0 (mod M), additionally requiring
/// u_{j+1} = 1 (mod M) when require_unit_next is set. M >= 2.
///
/// The residue-pair sequence takes at most M^2 distinct states, so the search
/// stops after M^2 steps; exhaustion throws NotFound and, in the
/// require_unit_next mode, certifies gcd(B, M) > 1.
std::uint64_t find_zero_index(const LucasParams& params, const Int& modulus,
                              bool require_unit_next);

/// The binomial sum
///   sum_{j=0}^{n} C(n,j) (u_{k+1} - A u_k)^{n-j} u_k^j u_{j+r},
/// every u taken from the same (A, B) sequence. Equals u_{kn+r}.
Int rhs_expansion(const LucasParams& params, std::uint64_t k, std::uint64_t n, std::uint64_t r);

/// Exact binomial coefficient by the multiplicative formula.
Int binomial(std::uint64_t n, std::uint64_t j);

}  // namespace gint
