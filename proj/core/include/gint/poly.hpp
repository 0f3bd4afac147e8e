#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gint/expr.hpp"

namespace gint {

/// Expanded normal form of a polynomial over an ordered variable list:
/// a map from exponent vectors to nonzero coefficients.
class SparsePoly {
  public:
    using Exponents = std::vector<std::uint64_t>;
    using TermMap = std::map<Exponents, GaussianInt>;

    explicit SparsePoly(std::vector<std::string> variables)
        : variables_(std::move(variables)) {}

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    GaussianInt evaluate(const Assignment& assignment) const;

    /// Mutating primitive used by expansion; drops the term if the resulting
    /// coefficient is zero.
    void add_term(const Exponents& exponents, const GaussianInt& coefficient);

  private:
    std::vector<std::string> variables_;
    TermMap terms_;
};

/// Full multinomial expansion with collected terms. The variable list is the
/// sorted free-variable list of e. Throws TooLarge (carrying the limit in its
/// message) as soon as any intermediate result exceeds term_limit terms.
SparsePoly expand(const Expr& e, std::size_t term_limit);

}  // namespace gint
