#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gint/gaussian.hpp"
#include "gint/lucas.hpp"

namespace gint {

/// Construction byproducts kept for inspection: the index n, the sign,
/// the exact quotient q = u_{kn}/u_n and the intermediate values
/// y* = 4v(2(2z+1)^2+1) and w* = w + 2(2z+1-xy)y.
struct WitnessDiagnostics {
    std::uint64_t n = 0;
    Int epsilon{1};  // +1 or -1; kept as a ring element since it multiplies them
    Int q;
    Int y_star;
    Int w_star;
};

/// Certificate that z is a rational integer: v != 0 and F(v,w,x,y,z) = 0,
/// where F is the integrality form evaluated by eval_F. All five values are
/// rational integers for constructed witnesses; the verifier accepts
/// Gaussian inputs.
struct IntegralityWitness {
    Int z;
    Int v;
    Int w;
    Int x;
    Int y;
    WitnessDiagnostics diagnostics;
};

/// The integrality form
///   (4(2v(2(2z+1)^2+1) - y)^2 - 3y^2 - 1)^2
///     + 2(w^2 - 1 - 3y^2(2z+1-xy)^2)^2
/// evaluated exactly over Z[i].
GaussianInt eval_F(const GaussianInt& v, const GaussianInt& w, const GaussianInt& x,
                   const GaussianInt& y, const GaussianInt& z);

/// Constructs a witness for any rational integer z, following the
/// constructive argument: with k = |2z+1| and M = 4(2k^2+1), the smallest
/// n >= 1 with u_{n+1}(4,1) = 0 (mod M) yields v = u_{n+1}/M, y = u_n,
/// q = u_{kn}/u_n, x = eps(k-q)/u_n and w = eps(u_{kn+1} - 2u_{kn}).
/// The result is re-verified through eval_F before returning.
IntegralityWitness make_integrality_witness(const Int& z);

/// Accepts exactly when v != 0 and eval_F(v,w,x,y,z) = 0; those two checks
/// certify that z is a rational integer, which is returned. Throws VIsZero
/// or NotSatisfied otherwise. A failing im(z) = 0 tripwire would signal an
/// implementation bug, never a math failure.
Int verify_integrality_witness(const GaussianInt& v, const GaussianInt& w, const GaussianInt& x,
                               const GaussianInt& y, const GaussianInt& z);

/// a^2 + 2b^2, which vanishes over Z[i] iff a = b = 0. The building block
/// for folding equation systems into one equation.
GaussianInt combine_pair(const GaussianInt& a, const GaussianInt& b);

/// For m != 0 returns (s, t) with (2s+1)(3t+1) = m: the 3t+1 factor is the
/// sign-adjusted power of two carrying the full 2-adic part of m.
/// Throws ZeroInput for m = 0 (zero has no such representation).
std::pair<Int, Int> nonzero_witness(const Int& m);

/// A nonnegative solution of x^2 - Axy + y^2 = 1 with x >= y; these are
/// exactly the consecutive pairs (u_{index+1}(A,1), u_index(A,1)).
struct PellSolution {
    Int x;
    Int y;
    std::uint64_t index = 0;
};

/// All solutions with 0 <= y <= x <= bound, produced two independent ways
/// (grid scan and the Lucas-pair family) and cross-checked; a mismatch
/// throws InternalInconsistency. Requires A >= 2, bound >= 1.
std::vector<PellSolution> enumerate_pell(const Int& coeff_a, const Int& bound);

/// All (x, y) in Z[i]^2 with every component in [-bound, bound] satisfying
/// x^2 - 4xy + y^2 = 1, sorted lexicographically by (x.re, x.im, y.re, y.im).
/// For each y the equation is solved as a quadratic in x, so the cost is
/// one Gaussian square root per y rather than a full grid.
std::vector<std::pair<GaussianInt, GaussianInt>> gaussian_pell_box_scan(std::uint64_t bound,
                                                                        unsigned workers = 1);

struct CounterexampleTuple {
    GaussianInt v, w, x, y, z;
};

/// Searches the box |re|,|im| <= bound of all five variables (v != 0) for a
/// tuple with eval_F = 0 and z not rational. Returns the first hit in
/// (v, z, y, w, x) lexicographic order, or nullopt. The two-component split
/// of the form is used to prune: both inner brackets must vanish separately.
std::optional<CounterexampleTuple> integrality_counterexample_scan(std::uint64_t bound,
                                                                   unsigned workers = 1);

}  // namespace gint
