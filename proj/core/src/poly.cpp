#include "gint/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "gint/error.hpp"

namespace gint {

void SparsePoly::add_term(const Exponents& exponents, const GaussianInt& coefficient) {
    if (coefficient.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussianInt SparsePoly::evaluate(const Assignment& assignment) const {
    GaussianInt sum(0);
    for (const auto& [exponents, coeff] : terms_) {
        GaussianInt term = coeff;
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            if (exponents[i] == 0) continue;
            auto it = assignment.find(variables_[i]);
            if (it == assignment.end())
                raise(ErrorCode::UnboundVariable, "unbound variable: " + variables_[i]);
            term *= pow_ui(it->second, exponents[i]);
        }
        sum += term;
    }
    return sum;
}

namespace {

[[noreturn]] void too_large(std::size_t limit) {
    raise(ErrorCode::TooLarge,
          "expansion exceeds the term limit of " + std::to_string(limit) + " terms");
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b, std::size_t limit) {
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    if (out.term_count() > limit) too_large(limit);
    return out;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b, std::size_t limit) {
    SparsePoly out(a.variables());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            SparsePoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
            if (out.term_count() > limit) too_large(limit);
        }
    }
    return out;
}

SparsePoly poly_neg(const SparsePoly& a) {
    SparsePoly out(a.variables());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

SparsePoly poly_pow(const SparsePoly& base, std::uint64_t exponent, std::size_t limit,
                    const std::vector<std::string>& vars) {
    SparsePoly acc(vars);
    acc.add_term(SparsePoly::Exponents(vars.size(), 0), GaussianInt(1));
    SparsePoly sq = base;
    std::uint64_t e = exponent;
    while (e != 0) {
        if (e & 1) acc = poly_mul(acc, sq, limit);
        e >>= 1;
        if (e != 0) sq = poly_mul(sq, sq, limit);
    }
    return acc;
}

}  // namespace

SparsePoly expand(const Expr& e, std::size_t term_limit) {
    const std::vector<std::string> vars = free_vars(e);
    std::unordered_map<const void*, SparsePoly> memo;

    auto rec = [&](auto&& self, const Expr& node) -> const SparsePoly& {
        auto it = memo.find(node.id());
        if (it != memo.end()) return it->second;
        SparsePoly out(vars);
        switch (node.kind()) {
            case Expr::Kind::Constant:
                out.add_term(SparsePoly::Exponents(vars.size(), 0), node.value());
                break;
            case Expr::Kind::Variable: {
                SparsePoly::Exponents exps(vars.size(), 0);
                const auto pos = std::lower_bound(vars.begin(), vars.end(), node.name());
                exps[static_cast<std::size_t>(pos - vars.begin())] = 1;
                out.add_term(exps, GaussianInt(1));
                break;
            }
            case Expr::Kind::Sum: {
                for (const Expr& c : node.children()) out = poly_add(out, self(self, c), term_limit);
                break;
            }
            case Expr::Kind::Product: {
                out.add_term(SparsePoly::Exponents(vars.size(), 0), GaussianInt(1));
                for (const Expr& c : node.children()) out = poly_mul(out, self(self, c), term_limit);
                break;
            }
            case Expr::Kind::Power:
                out = poly_pow(self(self, node.child()), node.exponent(), term_limit, vars);
                break;
            case Expr::Kind::Negate:
                out = poly_neg(self(self, node.child()));
                break;
        }
        if (out.term_count() > term_limit) too_large(term_limit);
        return memo.emplace(node.id(), std::move(out)).first->second;
    };
    return rec(rec, e);
}

}  // namespace gint
