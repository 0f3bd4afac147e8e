#pragma once

// Shared helpers for the test binaries: deterministic random generators and
// the slow independent oracles the fast paths are checked against.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gint/error.hpp"
#include "gint/expr.hpp"
#include "gint/gaussian.hpp"

#define CHECK_RAISES(code_expected, ...)                      \
    do {                                                      \
        bool caught_ = false;                                 \
        try {                                                 \
            __VA_ARGS__;                                      \
        } catch (const gint::Error& e_) {                     \
            caught_ = true;                                   \
            CHECK(e_.code() == (code_expected));              \
        }                                                     \
        CHECK_MESSAGE(caught_, "expected an error: " #__VA_ARGS__); \
    } while (0)

namespace testsupport {

using gint::Expr;
using gint::GaussianInt;
using gint::Int;

inline long random_long(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

/// Uniformly random integer of roughly the given bit width, either sign.
inline Int random_int_bits(std::mt19937_64& rng, unsigned bits) {
    Int v = 0;
    for (unsigned produced = 0; produced < bits; produced += 32) {
        v <<= 32;
        v += static_cast<unsigned long>(rng() & 0xffffffffUL);
    }
    if (rng() & 1) v = -v;
    return v;
}

inline GaussianInt random_gaussian_bits(std::mt19937_64& rng, unsigned bits) {
    return GaussianInt(random_int_bits(rng, bits), random_int_bits(rng, bits));
}

inline GaussianInt random_gaussian_box(std::mt19937_64& rng, long bound) {
    return GaussianInt(random_long(rng, -bound, bound), random_long(rng, -bound, bound));
}

/// Random expression of bounded depth over the given variable pool.
inline Expr random_expr(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars) {
    const long leaf = depth <= 0 ? random_long(rng, 0, 2) : random_long(rng, 0, 6);
    switch (leaf) {
        case 0:
            return Expr::constant(random_gaussian_box(rng, 9));
        case 1:
            return Expr::constant(GaussianInt(random_long(rng, -9, 9)));
        case 2:
            return Expr::variable(vars[static_cast<std::size_t>(random_long(
                rng, 0, static_cast<long>(vars.size()) - 1))]);
        case 3: {
            std::vector<Expr> children;
            const long n = random_long(rng, 2, 3);
            for (long i = 0; i < n; ++i) children.push_back(random_expr(rng, depth - 1, vars));
            return Expr::sum(std::move(children));
        }
        case 4: {
            std::vector<Expr> children;
            const long n = random_long(rng, 2, 3);
            for (long i = 0; i < n; ++i) children.push_back(random_expr(rng, depth - 1, vars));
            return Expr::product(std::move(children));
        }
        case 5:
            return Expr::power(random_expr(rng, depth - 1, vars),
                               static_cast<std::uint64_t>(random_long(rng, 2, 3)));
        default:
            return Expr::negate(random_expr(rng, depth - 1, vars));
    }
}

inline gint::Assignment random_assignment(std::mt19937_64& rng,
                                          const std::vector<std::string>& vars, long bound) {
    gint::Assignment a;
    for (const std::string& v : vars) a[v] = random_gaussian_box(rng, bound);
    return a;
}

/// Literal quadruple-loop oracle for the Gaussian Pell box scan, kept as dumb
/// as possible. int64 components; bounds stay tiny in tests.
inline std::vector<std::pair<GaussianInt, GaussianInt>> naive_box_scan(long bound) {
    std::vector<std::pair<GaussianInt, GaussianInt>> out;
    for (long xr = -bound; xr <= bound; ++xr)
        for (long xi = -bound; xi <= bound; ++xi)
            for (long yr = -bound; yr <= bound; ++yr)
                for (long yi = -bound; yi <= bound; ++yi) {
                    // x^2 - 4xy + y^2 componentwise over int64.
                    const long long x2r = xr * xr - xi * xi, x2i = 2LL * xr * xi;
                    const long long y2r = yr * yr - yi * yi, y2i = 2LL * yr * yi;
                    const long long xyr = xr * yr - xi * yi, xyi = xr * yi + xi * yr;
                    const long long re = x2r - 4 * xyr + y2r;
                    const long long im = x2i - 4 * xyi + y2i;
                    if (re == 1 && im == 0)
                        out.emplace_back(GaussianInt(xr, xi), GaussianInt(yr, yi));
                }
    return out;
}

}  // namespace testsupport
