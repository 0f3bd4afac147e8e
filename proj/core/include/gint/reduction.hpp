#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gint/expr.hpp"
#include "gint/gadgets.hpp"

namespace gint {

/// How the "z10 and every v_k nonzero" side conditions are encoded.
///
/// Product (default): one equation z10 * v1*...*v10 = (2s+1)(3t+1) with two
/// extra unknowns s, t — 52 unknowns total.
///
/// PerVariable: one equation v_k = (2s_k+1)(3t_k+1) per k plus
/// z10 = (2s0+1)(3t0+1), with unknowns s0..s10, t0..t10 — 72 unknowns total.
/// Non-default; provided because the factorization-per-variable form is
/// sometimes easier to inspect.
enum class NonzeroEncoding { Product, PerVariable };

struct ReductionStats {
    std::size_t dag_nodes = 0;
    std::uint64_t degree_bound = 0;
};

/// The compiled single equation P = 0 over Z[i], its unknown manifest in
/// canonical order, and the optional parameter (z0, left free when f uses it).
struct ReductionOutput {
    Expr P;
    std::vector<std::string> unknowns;
    std::optional<std::string> parameter;
    ReductionStats stats;
    NonzeroEncoding encoding = NonzeroEncoding::Product;
};

/// The integrality form as an expression in {v, w, x, y, z}; agrees with
/// gadgets eval_F everywhere.
Expr build_F_template();

/// Folds a nonempty equation list into one equation via a^2 + 2b^2 joins,
/// shaped as the left-leaning balanced binary tree over the list order.
/// The result vanishes under an assignment iff every input does.
Expr combine_system(std::vector<Expr> equations);

/// Compiles f(z0,...,z10) into one polynomial P over Z[i] whose solvability
/// (for a fixed parameter value) encodes solvability of f = 0 with all z_k
/// rational integers and z10 != 0. The 12 constituents are f itself, the
/// integrality form instantiated per k = 1..10, and the nonzero-witness
/// equation; they are folded with combine_system.
ReductionOutput reduce_to_gaussian(const Expr& f,
                                   NonzeroEncoding encoding = NonzeroEncoding::Product);

/// Lifts an integer solution of f (with z10 != 0) to a full assignment of
/// the compiled unknowns, using constructed integrality witnesses and the
/// (2s+1)(3t+1) factorization. The result satisfies P = 0 exactly; this is
/// re-checked before returning.
Assignment lift_witness(const Expr& f, const Int& parameter_value,
                        const std::array<Int, 10>& z_values,
                        NonzeroEncoding encoding = NonzeroEncoding::Product);

}  // namespace gint
