#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gint/gaussian.hpp"

namespace gint {

/// Immutable multivariate polynomial expression over Z[i] with named
/// variables. Nodes form a DAG: shared subgraphs are permitted and
/// preserved by substitution. Structural equality treats Sum/Product
/// children as unordered.
class Expr {
  public:
    enum class Kind { Constant, Variable, Sum, Product, Power, Negate };

    static Expr constant(GaussianInt value);
    static Expr constant(long value) { return constant(GaussianInt(value)); }
    /// Throws ReservedName for "i" (the imaginary-unit literal).
    static Expr variable(std::string name);
    /// Empty list folds to 0, a single element is returned unchanged.
    static Expr sum(std::vector<Expr> children);
    /// Empty list folds to 1, a single element is returned unchanged.
    static Expr product(std::vector<Expr> children);
    /// Exponent 0 folds to the constant 1, exponent 1 returns the base.
    static Expr power(Expr base, std::uint64_t exponent);
    static Expr negate(Expr child);

    Kind kind() const noexcept;
    const GaussianInt& value() const;          // Constant
    const std::string& name() const;           // Variable
    const std::vector<Expr>& children() const; // Sum, Product
    const Expr& child() const;                 // Power, Negate
    std::uint64_t exponent() const;            // Power

    /// Stable identity of the underlying node; usable as a memo key.
    const void* id() const noexcept;

    bool operator==(const Expr& other) const;
    bool operator!=(const Expr& other) const { return !(*this == other); }

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Total order on expressions; Sum/Product children are compared as sorted
/// sequences, which makes the order (and equality) independent of child
/// ordering.
int compare(const Expr& a, const Expr& b);

using Assignment = std::map<std::string, GaussianInt>;

/// Parses the polynomial text grammar (see the project README). Errors carry
/// 1-based line/column positions.
Expr parse(std::string_view text);

/// Emits text that reparses to an evaluation-equivalent expression.
std::string render(const Expr& e);

/// Exact evaluation; every DAG node is computed once per call.
/// Unassigned free variables throw UnboundVariable.
GaussianInt evaluate(const Expr& e, const Assignment& assignment);

/// Simultaneous substitution; variables without a binding pass through.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings);

/// Sorted, duplicate-free list of free variable names.
std::vector<std::string> free_vars(const Expr& e);

/// Upper bound on total degree, computed structurally on the DAG.
std::uint64_t degree_bound(const Expr& e);

/// Number of distinct DAG nodes reachable from e.
std::size_t dag_node_count(const Expr& e);

}  // namespace gint
