#include "gint/suites.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gint/error.hpp"
#include "gint/gadgets.hpp"
#include "gint/lucas.hpp"

namespace gint {

namespace {

std::string pair_str(const GaussianInt& x, const GaussianInt& y) {
    return "(" + x.str() + ", " + y.str() + ")";
}

}  // namespace

SuiteReport run_identities(std::uint64_t scale) {
    if (scale < 1) raise(ErrorCode::BadParams, "scale must be >= 1");
    SuiteReport report{"identities", scale, 0, std::nullopt};
    const long s = static_cast<long>(scale);

    // Binomial expansion identity.
    for (long a = -s; a <= s && report.passed(); ++a) {
        for (long b = -s; b <= s && report.passed(); ++b) {
            const LucasParams p{Int(a), Int(b)};
            for (std::uint64_t k = 0; k <= 6 && report.passed(); ++k)
                for (std::uint64_t n = 0; n <= 6 && report.passed(); ++n)
                    for (std::uint64_t r = 0; r <= 6; ++r) {
                        ++report.checks;
                        if (rhs_expansion(p, k, n, r) != lucas_pair(p, k * n + r).low) {
                            report.counterexample =
                                "expansion identity fails at A=" + std::to_string(a) +
                                " B=" + std::to_string(b) + " k=" + std::to_string(k) +
                                " n=" + std::to_string(n) + " r=" + std::to_string(r);
                            break;
                        }
                    }
        }
    }

    // Zero-index criterion vs gcd(B, M) = 1.
    for (long a = -s; a <= s && report.passed(); ++a)
        for (long b = -s; b <= s && report.passed(); ++b)
            for (long m = 2; m <= 10 * s; ++m) {
                ++report.checks;
                const LucasParams p{Int(a), Int(b)};
                bool found = true;
                try {
                    find_zero_index(p, Int(m), /*require_unit_next=*/true);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NotFound) throw;
                    found = false;
                }
                const bool coprime = gcd(Int(b), Int(m)) == 1;
                if (found != coprime) {
                    report.counterexample = "zero-index criterion fails at A=" + std::to_string(a) +
                                            " B=" + std::to_string(b) + " M=" + std::to_string(m);
                    break;
                }
            }

    // Growth bounds for A > B >= 0.
    for (long a = 2; a <= s + 2 && report.passed(); ++a)
        for (long b = 0; b < a && report.passed(); ++b) {
            const LucasParams p{Int(a), Int(b)};
            Int low(0), high(1);
            for (std::uint64_t n = 0; n <= 60; ++n) {
                ++report.checks;
                // high is u_{n+1} here.
                if (!(pow_ui(Int(a - b), n) <= high && high <= pow_ui(Int(a), n))) {
                    report.counterexample = "growth bound fails at A=" + std::to_string(a) +
                                            " B=" + std::to_string(b) + " n=" + std::to_string(n);
                    break;
                }
                Int next(p.A * high - p.B * low);
                low = high;
                high = next;
            }
        }

    return report;
}

SuiteReport run_oracles(std::uint64_t scale) {
    if (scale < 1) raise(ErrorCode::BadParams, "scale must be >= 1");
    SuiteReport report{"oracles", scale, 0, std::nullopt};

    // enumerate_pell cross-checks its two routes internally; a mismatch
    // surfaces as InternalInconsistency.
    const Int pell_bound(Int(static_cast<long>(scale)) * static_cast<long>(scale));
    for (long a = 2; a <= 6; ++a) {
        ++report.checks;
        try {
            enumerate_pell(Int(a), pell_bound);
        } catch (const Error& e) {
            report.counterexample = std::string("pell oracle disagreement: ") + e.what();
            return report;
        }
    }

    const auto pairs = gaussian_pell_box_scan(scale);
    for (const auto& [x, y] : pairs) {
        ++report.checks;
        if (x.im != 0 || y.im != 0) {
            report.counterexample = "non-real box-scan pair " + pair_str(x, y);
            return report;
        }
    }

    // The real pairs must be exactly the +-/swap closure of the family.
    std::set<std::pair<std::pair<Int, Int>, std::pair<Int, Int>>> expected;
    for (const PellSolution& s : enumerate_pell(Int(4), Int(static_cast<long>(scale)))) {
        for (int sign = -1; sign <= 1; sign += 2) {
            Int x(sign * s.x), y(sign * s.y);
            expected.insert({{x, Int(0)}, {y, Int(0)}});
            expected.insert({{y, Int(0)}, {x, Int(0)}});
        }
    }
    ++report.checks;
    std::set<std::pair<std::pair<Int, Int>, std::pair<Int, Int>>> actual;
    for (const auto& [x, y] : pairs) actual.insert({{x.re, x.im}, {y.re, y.im}});
    if (actual != expected) {
        report.counterexample = "box scan does not match the +-/swap closure of the Pell family";
        return report;
    }

    return report;
}

SuiteReport run_roundtrip(std::uint64_t scale) {
    if (scale < 1) raise(ErrorCode::BadParams, "scale must be >= 1");
    SuiteReport report{"roundtrip", scale, 0, std::nullopt};
    const long s = static_cast<long>(scale);
    for (long zi = -s; zi <= s; ++zi) {
        ++report.checks;
        const Int z(zi);
        const IntegralityWitness w = make_integrality_witness(z);
        const std::string at = " for z=" + std::to_string(zi);

        if (!(w.v > 0)) {
            report.counterexample = "constructed v is not positive" + at;
            return report;
        }
        const Int back = verify_integrality_witness(GaussianInt(w.v), GaussianInt(w.w),
                                                    GaussianInt(w.x), GaussianInt(w.y),
                                                    GaussianInt(w.z));
        if (back != z) {
            report.counterexample = "round trip returned " + back.get_str() + at;
            return report;
        }
        const Int t(2 * z + 1);
        const Int lhs1(4 * pow_ui(Int(2 * w.v * (2 * t * t + 1) - w.y), 2));
        if (lhs1 != 3 * w.y * w.y + 1) {
            report.counterexample = "first constituent identity fails" + at;
            return report;
        }
        const Int c(t - w.x * w.y);
        if (w.w * w.w - 3 * w.y * w.y * c * c != 1) {
            report.counterexample = "second constituent identity fails" + at;
            return report;
        }
    }
    return report;
}

}  // namespace gint
