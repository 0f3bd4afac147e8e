#include "gint/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace gint {

namespace {

// First bracket of the form: 4(2v(2(2z+1)^2+1) - y)^2 - 3y^2 - 1.
GaussianInt bracket_one(const GaussianInt& v, const GaussianInt& y, const GaussianInt& z) {
    GaussianInt t = z * 2 + 1;
    GaussianInt inner = v * 2 * (t * t * 2 + 1) - y;
    return inner * inner * 4 - y * y * 3 - 1;
}

// Second bracket: w^2 - 1 - 3y^2(2z+1-xy)^2.
GaussianInt bracket_two(const GaussianInt& w, const GaussianInt& x, const GaussianInt& y,
                        const GaussianInt& z) {
    GaussianInt t = z * 2 + 1;
    GaussianInt c = t - x * y;
    return w * w - 1 - y * y * 3 * (c * c);
}

}  // namespace

GaussianInt eval_F(const GaussianInt& v, const GaussianInt& w, const GaussianInt& x,
                   const GaussianInt& y, const GaussianInt& z) {
    GaussianInt a = bracket_one(v, y, z);
    GaussianInt b = bracket_two(w, x, y, z);
    return a * a + b * b * 2;
}

IntegralityWitness make_integrality_witness(const Int& z) {
    const Int two_z_plus_one(2 * z + 1);
    const Int k(abs(two_z_plus_one));
    const Int modulus(4 * (2 * k * k + 1));

    const LucasParams p41{Int(4), Int(1)};
    const std::uint64_t j = find_zero_index(p41, modulus, /*require_unit_next=*/false);
    const std::uint64_t n = j - 1;  // j >= 2 since u_1 = 1 and M >= 12

    const LucasPair base = lucas_pair(p41, n);
    const Int v = div_exact(base.high, modulus);
    const Int y = base.low;

    if (!k.fits_ulong_p() || k.get_ui() > UINT64_MAX / (n == 0 ? 1 : n))
        raise(ErrorCode::BadParams, "witness index k*n exceeds 64 bits");
    const std::uint64_t kn = k.get_ui() * n;

    const LucasPair ext = lucas_pair(p41, kn);
    const Int q = div_exact(ext.low, y);

    const Int epsilon(z >= 0 ? 1 : -1);
    const Int x(epsilon * div_exact(Int(k - q), y));
    const Int w(epsilon * (ext.high - 2 * ext.low));

    const Int y_star(4 * v * (2 * two_z_plus_one * two_z_plus_one + 1));
    const Int w_star(w + 2 * (two_z_plus_one - x * y) * y);

    IntegralityWitness out{z, v, w, x, y, WitnessDiagnostics{n, epsilon, q, y_star, w_star}};
    if (!eval_F(GaussianInt(v), GaussianInt(w), GaussianInt(x), GaussianInt(y), GaussianInt(z))
             .is_zero())
        raise(ErrorCode::InternalInconsistency,
              "constructed witness fails the form for z = " + z.get_str());
    return out;
}

Int verify_integrality_witness(const GaussianInt& v, const GaussianInt& w, const GaussianInt& x,
                               const GaussianInt& y, const GaussianInt& z) {
    if (v.is_zero()) raise(ErrorCode::VIsZero, "witness rejected: v = 0");
    if (!eval_F(v, w, x, y, z).is_zero())
        raise(ErrorCode::NotSatisfied, "witness rejected: the form does not vanish");
    if (z.im != 0)
        raise(ErrorCode::InternalInconsistency,
              "tripwire: form vanished with v != 0 yet im(z) != 0");
    return z.re;
}

GaussianInt combine_pair(const GaussianInt& a, const GaussianInt& b) {
    return a * a + b * b * 2;
}

std::pair<Int, Int> nonzero_witness(const Int& m) {
    if (m == 0) raise(ErrorCode::ZeroInput, "0 has no (2s+1)(3t+1) representation");
    const std::uint64_t e = two_adic_valuation(m);
    Int d = pow_ui(Int(2), e);
    if (e % 2 == 1) d = -d;  // makes d = 1 (mod 3)
    const Int t = div_exact(Int(d - 1), Int(3));
    const Int u = div_exact(m, d);  // odd
    const Int s = div_exact(Int(u - 1), Int(2));
    return {s, t};
}

namespace {

std::vector<PellSolution> pell_family(const Int& coeff_a, const Int& bound) {
    std::vector<PellSolution> out;
    Int low(0), high(1);
    std::uint64_t n = 0;
    while (high <= bound) {
        out.push_back(PellSolution{high, low, n});
        Int next(coeff_a * high - low);
        low = high;
        high = next;
        ++n;
    }
    return out;
}

std::vector<std::pair<Int, Int>> pell_grid_scan(const Int& coeff_a, const Int& bound) {
    std::vector<std::pair<Int, Int>> out;
    // Small parameters take the int64 path; beyond that, exact big-int
    // arithmetic (the values stay modest because solutions are sparse,
    // but the scan itself is then slow).
    if (coeff_a <= 100000 && bound <= 1000000) {
        const long long a = static_cast<long long>(coeff_a.get_si());
        const long long b = static_cast<long long>(bound.get_si());
        for (long long y = 0; y <= b; ++y) {
            for (long long x = y; x <= b; ++x) {
                const long long g = x * x - a * x * y + y * y;
                if (g == 1) out.emplace_back(Int(static_cast<long>(x)), Int(static_cast<long>(y)));
                if (2 * x >= a * y && g > 1) break;  // past the vertex and climbing
            }
        }
    } else {
        for (Int y(0); y <= bound; ++y) {
            for (Int x(y); x <= bound; ++x) {
                const Int g(x * x - coeff_a * x * y + y * y);
                if (g == 1) out.emplace_back(x, y);
                if (2 * x >= coeff_a * y && g > 1) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<PellSolution> enumerate_pell(const Int& coeff_a, const Int& bound) {
    if (coeff_a < 2) raise(ErrorCode::BadParams, "A must be >= 2, got " + coeff_a.get_str());
    if (bound < 1) raise(ErrorCode::BadParams, "bound must be >= 1, got " + bound.get_str());

    const std::vector<PellSolution> family = pell_family(coeff_a, bound);
    const std::vector<std::pair<Int, Int>> grid = pell_grid_scan(coeff_a, bound);

    bool match = family.size() == grid.size();
    for (std::size_t i = 0; match && i < family.size(); ++i)
        match = family[i].x == grid[i].first && family[i].y == grid[i].second;
    if (!match)
        raise(ErrorCode::InternalInconsistency,
              "grid scan and Lucas family disagree for A = " + coeff_a.get_str() +
                  ", bound = " + bound.get_str());
    return family;
}

namespace {

// Gaussian square roots of c: at most one pair {r, -r}. Candidates are
// derived from norm(r)^2 = norm(c) and verified by squaring.
std::vector<GaussianInt> gaussian_sqrt(const GaussianInt& c) {
    std::vector<GaussianInt> roots;
    if (c.is_zero()) {
        roots.emplace_back(0);
        return roots;
    }
    const Int nc = c.norm();
    Int n, rem;
    mpz_sqrtrem(n.get_mpz_t(), rem.get_mpz_t(), nc.get_mpz_t());
    if (rem != 0) return roots;

    const Int two_p2(n + c.re);
    const Int two_q2(n - c.re);
    if (mpz_odd_p(two_p2.get_mpz_t()) || mpz_odd_p(two_q2.get_mpz_t())) return roots;
    const Int p2 = div_exact(two_p2, Int(2));
    const Int q2 = div_exact(two_q2, Int(2));
    if (mpz_perfect_square_p(p2.get_mpz_t()) == 0 || mpz_perfect_square_p(q2.get_mpz_t()) == 0)
        return roots;
    Int p = sqrt(p2);
    Int q = sqrt(q2);

    for (int sp = -1; sp <= 1; sp += 2) {
        for (int sq = -1; sq <= 1; sq += 2) {
            GaussianInt r(Int(sp * p), Int(sq * q));
            if (r * r == c && std::find(roots.begin(), roots.end(), r) == roots.end())
                roots.push_back(r);
        }
    }
    return roots;
}

using GaussianPair = std::pair<GaussianInt, GaussianInt>;

bool pair_less(const GaussianPair& a, const GaussianPair& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

// Scans the given range of y.re values; sharded across workers.
std::vector<GaussianPair> box_scan_rows(long lo, long hi, long bound) {
    std::vector<GaussianPair> hits;
    for (long yr = lo; yr <= hi; ++yr) {
        for (long yi = -bound; yi <= bound; ++yi) {
            const GaussianInt y(yr, yi);
            const GaussianInt c = y * y * 3 + 1;  // (x - 2y)^2 = 3y^2 + 1
            for (const GaussianInt& r : gaussian_sqrt(c)) {
                for (int sign = -1; sign <= 1; sign += 2) {
                    GaussianInt x = y * 2 + (sign == 1 ? r : -r);
                    if (abs(x.re) <= bound && abs(x.im) <= bound) {
                        GaussianPair cand{x, y};
                        if (std::find(hits.begin(), hits.end(), cand) == hits.end())
                            hits.push_back(cand);
                    }
                }
            }
        }
    }
    return hits;
}

}  // namespace

std::vector<GaussianPair> gaussian_pell_box_scan(std::uint64_t bound, unsigned workers) {
    if (bound < 1) raise(ErrorCode::BadParams, "bound must be >= 1");
    if (workers == 0) workers = 1;
    const long b = static_cast<long>(bound);

    std::vector<std::vector<GaussianPair>> parts(workers);
    const long total = 2 * b + 1;
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < workers; ++wi) {
        const long lo = -b + static_cast<long>(static_cast<long long>(total) * wi / workers);
        const long hi = -b + static_cast<long>(static_cast<long long>(total) * (wi + 1) / workers) - 1;
        threads.emplace_back([&parts, wi, lo, hi, b] { parts[wi] = box_scan_rows(lo, hi, b); });
    }
    for (auto& t : threads) t.join();

    std::vector<GaussianPair> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), pair_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

// One v slice of the counterexample scan, in (z, y, w, x) canonical order.
std::optional<CounterexampleTuple> counterexample_slice(const GaussianInt& v, long bound) {
    for (long zr = -bound; zr <= bound; ++zr)
        for (long zi = -bound; zi <= bound; ++zi) {
            if (zi == 0) continue;  // rational z can never be a counterexample
            const GaussianInt z(zr, zi);
            for (long yr = -bound; yr <= bound; ++yr)
                for (long yi = -bound; yi <= bound; ++yi) {
                    const GaussianInt y(yr, yi);
                    if (!bracket_one(v, y, z).is_zero()) continue;
                    for (long wr = -bound; wr <= bound; ++wr)
                        for (long wi = -bound; wi <= bound; ++wi) {
                            const GaussianInt w(wr, wi);
                            for (long xr = -bound; xr <= bound; ++xr)
                                for (long xi = -bound; xi <= bound; ++xi) {
                                    const GaussianInt x(xr, xi);
                                    if (!bracket_two(w, x, y, z).is_zero()) continue;
                                    return CounterexampleTuple{v, w, x, y, z};
                                }
                        }
                }
        }
    return std::nullopt;
}

}  // namespace

std::optional<CounterexampleTuple> integrality_counterexample_scan(std::uint64_t bound,
                                                                   unsigned workers) {
    if (bound < 1) raise(ErrorCode::BadParams, "bound must be >= 1");
    if (workers == 0) workers = 1;
    const long b = static_cast<long>(bound);

    // Canonical (v, z, y, w, x) order: enumerate v slices in order and keep
    // the hit from the earliest slice.
    std::vector<GaussianInt> vs;
    for (long vr = -b; vr <= b; ++vr)
        for (long vi = -b; vi <= b; ++vi)
            if (vr != 0 || vi != 0) vs.emplace_back(vr, vi);

    std::vector<std::optional<CounterexampleTuple>> results(vs.size());
    std::vector<std::thread> threads;
    std::size_t chunk = (vs.size() + workers - 1) / workers;
    for (unsigned wi = 0; wi < workers; ++wi) {
        const std::size_t lo = wi * chunk;
        const std::size_t hi = std::min(vs.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&vs, &results, lo, hi, b] {
            for (std::size_t i = lo; i < hi; ++i) results[i] = counterexample_slice(vs[i], b);
        });
    }
    for (auto& t : threads) t.join();

    for (auto& r : results)
        if (r.has_value()) return r;
    return std::nullopt;
}

}  // namespace gint
