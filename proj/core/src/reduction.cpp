#include "gint/reduction.hpp"

#include <algorithm>
#include <set>

#include "gint/error.hpp"

namespace gint {

namespace {

const char* const kFTemplateText =
    "(4*(2*v*(2*(2*z+1)^2+1)-y)^2-3*y^2-1)^2"
    "+2*(w^2-1-3*y^2*(2*z+1-x*y)^2)^2";

// (2s+1)(3t+1) over the given variable names.
Expr nonzero_product(const std::string& s_name, const std::string& t_name) {
    Expr two_s_plus_one = Expr::sum({Expr::product({Expr::constant(2), Expr::variable(s_name)}),
                                     Expr::constant(1)});
    Expr three_t_plus_one = Expr::sum({Expr::product({Expr::constant(3), Expr::variable(t_name)}),
                                       Expr::constant(1)});
    return Expr::product({two_s_plus_one, three_t_plus_one});
}

Expr join(Expr a, Expr b) {
    return Expr::sum({Expr::power(std::move(a), 2),
                      Expr::product({Expr::constant(2), Expr::power(std::move(b), 2)})});
}

Expr fold_balanced(const std::vector<Expr>& eqs, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return eqs[lo];
    const std::size_t mid = lo + (hi - lo + 1) / 2;  // left half takes the extra element
    return join(fold_balanced(eqs, lo, mid), fold_balanced(eqs, mid, hi));
}

std::string numbered(const char* stem, int k) { return stem + std::to_string(k); }

}  // namespace

Expr build_F_template() {
    static const Expr F = parse(kFTemplateText);
    return F;
}

Expr combine_system(std::vector<Expr> equations) {
    if (equations.empty()) raise(ErrorCode::BadParams, "cannot combine an empty system");
    return fold_balanced(equations, 0, equations.size());
}

ReductionOutput reduce_to_gaussian(const Expr& f, NonzeroEncoding encoding) {
    // f may mention the parameter z0 and the unknowns z1..z10, nothing else.
    std::set<std::string> allowed{"z0"};
    for (int k = 1; k <= 10; ++k) allowed.insert(numbered("z", k));
    std::string offenders;
    for (const std::string& name : free_vars(f)) {
        if (allowed.count(name)) continue;
        if (!offenders.empty()) offenders += ", ";
        offenders += name;
    }
    if (!offenders.empty())
        raise(ErrorCode::BadVariables, "f may only use z0..z10; found: " + offenders);

    const Expr F = build_F_template();
    std::vector<Expr> equations;
    equations.push_back(f);
    for (int k = 1; k <= 10; ++k) {
        std::map<std::string, Expr> bindings{
            {"v", Expr::variable(numbered("v", k))}, {"w", Expr::variable(numbered("w", k))},
            {"x", Expr::variable(numbered("x", k))}, {"y", Expr::variable(numbered("y", k))},
            {"z", Expr::variable(numbered("z", k))}};
        equations.push_back(substitute(F, bindings));
    }

    std::vector<std::string> unknowns;
    for (const char* stem : {"v", "w", "x", "y", "z"})
        for (int k = 1; k <= 10; ++k) unknowns.push_back(numbered(stem, k));

    if (encoding == NonzeroEncoding::Product) {
        // z10 * prod v_k = (2s+1)(3t+1): one equation forcing z10 != 0 and
        // every v_k != 0 at once.
        std::vector<Expr> factors{Expr::variable("z10")};
        for (int k = 1; k <= 10; ++k) factors.push_back(Expr::variable(numbered("v", k)));
        equations.push_back(Expr::sum(
            {Expr::product(std::move(factors)), Expr::negate(nonzero_product("s", "t"))}));
        unknowns.push_back("s");
        unknowns.push_back("t");
    } else {
        // v_k = (2s_k+1)(3t_k+1) per k, plus z10 = (2s0+1)(3t0+1) so the
        // z10 != 0 side condition survives the unrolling.
        for (int k = 1; k <= 10; ++k)
            equations.push_back(Expr::sum(
                {Expr::variable(numbered("v", k)),
                 Expr::negate(nonzero_product(numbered("s", k), numbered("t", k)))}));
        equations.push_back(
            Expr::sum({Expr::variable("z10"), Expr::negate(nonzero_product("s0", "t0"))}));
        for (int k = 0; k <= 10; ++k) unknowns.push_back(numbered("s", k));
        for (int k = 0; k <= 10; ++k) unknowns.push_back(numbered("t", k));
    }

    ReductionOutput out{combine_system(std::move(equations)), std::move(unknowns),
                        std::nullopt, ReductionStats{}, encoding};

    const std::vector<std::string> pv = free_vars(out.P);
    if (std::find(pv.begin(), pv.end(), "z0") != pv.end()) out.parameter = "z0";

    // The free variables of P must be exactly the manifest plus the parameter.
    std::set<std::string> expected(out.unknowns.begin(), out.unknowns.end());
    if (out.parameter) expected.insert(*out.parameter);
    if (std::set<std::string>(pv.begin(), pv.end()) != expected)
        raise(ErrorCode::InternalInconsistency, "compiled unknown set mismatch");

    out.stats.dag_nodes = dag_node_count(out.P);
    out.stats.degree_bound = degree_bound(out.P);
    return out;
}

Assignment lift_witness(const Expr& f, const Int& parameter_value,
                        const std::array<Int, 10>& z_values, NonzeroEncoding encoding) {
    Assignment f_assignment;
    f_assignment["z0"] = GaussianInt(parameter_value);
    for (int k = 1; k <= 10; ++k) f_assignment[numbered("z", k)] = GaussianInt(z_values[k - 1]);

    if (z_values[9] == 0)
        raise(ErrorCode::PreconditionFailed, "z10 must be nonzero");
    if (!evaluate(f, f_assignment).is_zero())
        raise(ErrorCode::PreconditionFailed, "f does not vanish at the given solution");

    Assignment assignment;
    Int v_product(1);
    std::array<Int, 10> v_values;
    for (int k = 1; k <= 10; ++k) {
        const IntegralityWitness wit = make_integrality_witness(z_values[k - 1]);
        assignment[numbered("v", k)] = GaussianInt(wit.v);
        assignment[numbered("w", k)] = GaussianInt(wit.w);
        assignment[numbered("x", k)] = GaussianInt(wit.x);
        assignment[numbered("y", k)] = GaussianInt(wit.y);
        assignment[numbered("z", k)] = GaussianInt(wit.z);
        v_values[k - 1] = wit.v;
        v_product *= wit.v;
    }

    if (encoding == NonzeroEncoding::Product) {
        const Int m(z_values[9] * v_product);  // nonzero: every v_k > 0, z10 != 0
        const auto [s, t] = nonzero_witness(m);
        assignment["s"] = GaussianInt(s);
        assignment["t"] = GaussianInt(t);
    } else {
        for (int k = 1; k <= 10; ++k) {
            const auto [s, t] = nonzero_witness(v_values[k - 1]);
            assignment[numbered("s", k)] = GaussianInt(s);
            assignment[numbered("t", k)] = GaussianInt(t);
        }
        const auto [s0, t0] = nonzero_witness(z_values[9]);
        assignment["s0"] = GaussianInt(s0);
        assignment["t0"] = GaussianInt(t0);
    }

    const ReductionOutput compiled = reduce_to_gaussian(f, encoding);
    Assignment full = assignment;
    full["z0"] = GaussianInt(parameter_value);
    if (!evaluate(compiled.P, full).is_zero())
        raise(ErrorCode::InternalInconsistency, "lifted assignment does not satisfy P");
    return assignment;
}

}  // namespace gint
