#include "gint/lucas.hpp"

#include <vector>

namespace gint {

namespace {

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    Int a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y, const Int* modulus) {
    Mat2 r{Int(x.a * y.a + x.b * y.c), Int(x.a * y.b + x.b * y.d),
           Int(x.c * y.a + x.d * y.c), Int(x.c * y.b + x.d * y.d)};
    if (modulus != nullptr) {
        r.a = mod_nonneg(r.a, *modulus);
        r.b = mod_nonneg(r.b, *modulus);
        r.c = mod_nonneg(r.c, *modulus);
        r.d = mod_nonneg(r.d, *modulus);
    }
    return r;
}

Mat2 mat_pow(Mat2 base, std::uint64_t e, const Int* modulus) {
    Mat2 acc{Int(1), Int(0), Int(0), Int(1)};
    if (modulus != nullptr) {
        acc.a = mod_nonneg(acc.a, *modulus);
        acc.d = mod_nonneg(acc.d, *modulus);
    }
    while (e != 0) {
        if (e & 1) acc = mat_mul(acc, base, modulus);
        e >>= 1;
        if (e != 0) base = mat_mul(base, base, modulus);
    }
    return acc;
}

// Companion matrix of the recurrence: [u_{n+1}; u_n] = M^n [1; 0].
Mat2 companion(const LucasParams& p, const Int* modulus) {
    Mat2 m{p.A, Int(-p.B), Int(1), Int(0)};
    if (modulus != nullptr) {
        m.a = mod_nonneg(m.a, *modulus);
        m.b = mod_nonneg(m.b, *modulus);
        m.c = mod_nonneg(m.c, *modulus);
        m.d = mod_nonneg(m.d, *modulus);
    }
    return m;
}

}  // namespace

LucasPair lucas_pair(const LucasParams& params, std::uint64_t n) {
    Mat2 p = mat_pow(companion(params, nullptr), n, nullptr);
    return LucasPair{n, p.c, p.a};
}

LucasPair lucas_pair_iterative(const LucasParams& params, std::uint64_t n) {
    Int low(0), high(1);
    for (std::uint64_t i = 0; i < n; ++i) {
        Int next(params.A * high - params.B * low);
        low = high;
        high = next;
    }
    return LucasPair{n, low, high};
}

LucasPair lucas_pair_mod(const LucasParams& params, std::uint64_t n, const Int& modulus) {
    if (modulus < 1) raise(ErrorCode::BadModulus, "modulus must be >= 1, got " + modulus.get_str());
    Mat2 p = mat_pow(companion(params, &modulus), n, &modulus);
    return LucasPair{n, p.c, p.a};
}

std::uint64_t find_zero_index(const LucasParams& params, const Int& modulus,
                              bool require_unit_next) {
    if (modulus < 2) raise(ErrorCode::BadModulus, "modulus must be >= 2, got " + modulus.get_str());
    const Int bound(modulus * modulus);
    Int a = mod_nonneg(Int(1), modulus);       // u_j, starting at j = 1
    Int b = mod_nonneg(params.A, modulus);     // u_{j+1}
    Int j(1);
    for (; j <= bound; ++j) {
        if (a == 0 && (!require_unit_next || b == 1)) {
            if (!j.fits_ulong_p())
                raise(ErrorCode::InternalInconsistency, "zero index exceeds 64 bits");
            return static_cast<std::uint64_t>(j.get_ui());
        }
        Int next = mod_nonneg(Int(params.A * b - params.B * a), modulus);
        a = b;
        b = next;
    }
    raise(ErrorCode::NotFound,
          require_unit_next
              ? "no index with u_j = 0, u_{j+1} = 1 (mod " + modulus.get_str() +
                    ") within M^2 steps; certifies gcd(B, M) > 1"
              : "no index with u_j = 0 (mod " + modulus.get_str() + ") within M^2 steps");
}

Int binomial(std::uint64_t n, std::uint64_t j) {
    if (j > n) return Int(0);
    if (j > n - j) j = n - j;
    Int c(1);
    for (std::uint64_t t = 1; t <= j; ++t) {
        c *= Int(static_cast<unsigned long>(n - j + t));
        c = div_exact(c, Int(static_cast<unsigned long>(t)));
    }
    return c;
}

Int rhs_expansion(const LucasParams& params, std::uint64_t k, std::uint64_t n, std::uint64_t r) {
    // All subscripts drawn from the same sequence; largest needed is
    // max(k+1, n+r).
    std::uint64_t top = k + 1;
    if (n + r > top) top = n + r;
    std::vector<Int> u(static_cast<std::size_t>(top) + 1);
    u[0] = 0;
    if (top >= 1) u[1] = 1;
    for (std::uint64_t m = 2; m <= top; ++m)
        u[m] = Int(params.A * u[m - 1] - params.B * u[m - 2]);

    const Int d(u[k + 1] - params.A * u[k]);
    Int sum(0);
    for (std::uint64_t j = 0; j <= n; ++j) {
        Int term = binomial(n, j);
        term *= pow_ui(d, n - j);
        term *= pow_ui(u[k], j);
        term *= u[j + r];
        sum += term;
    }
    return sum;
}

}  // namespace gint
