#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gint/gadgets.hpp"
#include "gint/json_io.hpp"
#include "support.hpp"

using namespace gint;
using testsupport::naive_box_scan;

TEST_CASE("pinned form values") {
    CHECK(eval_F(GaussianInt(65), GaussianInt(362), GaussianInt(0), GaussianInt(209),
                 GaussianInt(0)) == GaussianInt(0));
    CHECK(eval_F(GaussianInt(1), GaussianInt(1), GaussianInt(0), GaussianInt(0),
                 GaussianInt(0)) == GaussianInt(20449));
    CHECK(eval_F(GaussianInt(0), GaussianInt(1), GaussianInt(0), GaussianInt(0),
                 GaussianInt(0)) == GaussianInt(1));
}

TEST_CASE("witness anchors") {
    IntegralityWitness w = make_integrality_witness(Int(0));
    CHECK(w.v == 65);
    CHECK(w.w == 362);
    CHECK(w.x == 0);
    CHECK(w.y == 209);
    CHECK(w.diagnostics.n == 5);
    CHECK(w.diagnostics.epsilon == 1);
    CHECK(w.diagnostics.q == 1);

    w = make_integrality_witness(Int(-1));
    CHECK(w.v == 65);
    CHECK(w.w == -362);
    CHECK(w.x == 0);
    CHECK(w.y == 209);
    CHECK(w.diagnostics.n == 5);
    CHECK(w.diagnostics.epsilon == -1);

    w = make_integrality_witness(Int(1));
    CHECK(w.diagnostics.n == 9);
    CHECK(w.v == 1991);
    CHECK(w.y == 40545);
}

TEST_CASE("witness diagnostics satisfy their defining identities") {
    const LucasParams p41{Int(4), Int(1)};
    for (long zi = -8; zi <= 8; ++zi) {
        const IntegralityWitness w = make_integrality_witness(Int(zi));
        const Int t(2 * zi + 1);
        const Int k(abs(t));
        const Int modulus(4 * (2 * k * k + 1));

        // y and v come from the Lucas pair at the found index.
        const LucasPair base = lucas_pair(p41, w.diagnostics.n);
        CHECK(w.y == base.low);
        CHECK(w.v * modulus == base.high);
        CHECK(w.v > 0);

        // q is the exact quotient u_{kn}/u_n.
        REQUIRE(k.fits_ulong_p());
        const std::uint64_t kn = k.get_ui() * w.diagnostics.n;
        const LucasPair ext = lucas_pair(p41, kn);
        CHECK(w.diagnostics.q * w.y == ext.low);

        // y* and w* as defined.
        CHECK(w.diagnostics.y_star == 4 * w.v * (2 * t * t + 1));
        CHECK(w.diagnostics.y_star == base.high);
        CHECK(w.diagnostics.w_star == w.w + 2 * (t - w.x * w.y) * w.y);
        CHECK(w.diagnostics.w_star == w.diagnostics.epsilon * ext.high);
    }
}

TEST_CASE("witness round trip with constituent identities") {
    for (long zi = -8; zi <= 8; ++zi) {
        const Int z(zi);
        const IntegralityWitness w = make_integrality_witness(z);
        CHECK(verify_integrality_witness(GaussianInt(w.v), GaussianInt(w.w), GaussianInt(w.x),
                                         GaussianInt(w.y), GaussianInt(w.z)) == z);
        const Int t(2 * z + 1);
        CHECK(4 * pow_ui(Int(2 * w.v * (2 * t * t + 1) - w.y), 2) == 3 * w.y * w.y + 1);
        const Int c(t - w.x * w.y);
        CHECK(w.w * w.w - 3 * w.y * w.y * c * c == 1);
    }
}

TEST_CASE("verifier rejections") {
    CHECK_RAISES(ErrorCode::VIsZero,
                 verify_integrality_witness(GaussianInt(0), GaussianInt(362), GaussianInt(0),
                                            GaussianInt(209), GaussianInt(0)));
    CHECK_RAISES(ErrorCode::NotSatisfied,
                 verify_integrality_witness(GaussianInt(65), GaussianInt(362), GaussianInt(0),
                                            GaussianInt(209), GaussianInt(1)));
    // Gaussian witnesses are fine as long as the form vanishes; sign flips
    // of w are invisible to the form.
    CHECK(verify_integrality_witness(GaussianInt(65), GaussianInt(-362), GaussianInt(0),
                                     GaussianInt(209), GaussianInt(0)) == 0);
}

TEST_CASE("combine_pair on pinned values and exhaustively") {
    CHECK(combine_pair(GaussianInt(0), GaussianInt(0)) == GaussianInt(0));
    CHECK(combine_pair(GaussianInt(1), GaussianInt::unit_i()) == GaussianInt(-1));
    CHECK(combine_pair(GaussianInt::unit_i(), GaussianInt(1)) == GaussianInt(1));
    for (long ar = -3; ar <= 3; ++ar)
        for (long ai = -3; ai <= 3; ++ai)
            for (long br = -3; br <= 3; ++br)
                for (long bi = -3; bi <= 3; ++bi) {
                    const GaussianInt a(ar, ai), b(br, bi);
                    CHECK(combine_pair(a, b).is_zero() == (a.is_zero() && b.is_zero()));
                }
}

TEST_CASE("nonzero witness pinned values") {
    auto [s, t] = nonzero_witness(Int(12));
    CHECK(s == 1);
    CHECK(t == 1);
    std::tie(s, t) = nonzero_witness(Int(-6));
    CHECK(s == 1);
    CHECK(t == -1);
    std::tie(s, t) = nonzero_witness(Int(1));
    CHECK(s == 0);
    CHECK(t == 0);
    CHECK_RAISES(ErrorCode::ZeroInput, nonzero_witness(Int(0)));
}

TEST_CASE("nonzero witness reconstructs every small m") {
    for (long m = -1000; m <= 1000; ++m) {
        if (m == 0) continue;
        const auto [s, t] = nonzero_witness(Int(m));
        CHECK((2 * s + 1) * (3 * t + 1) == m);
    }
}

TEST_CASE("no (2s+1)(3t+1) pair represents zero") {
    for (long s = -50; s <= 50; ++s)
        for (long t = -50; t <= 50; ++t)
            CHECK((2 * Int(s) + 1) * (3 * Int(t) + 1) != 0);
}

TEST_CASE("pell enumeration pinned lists") {
    auto sols = enumerate_pell(Int(4), Int(100));
    REQUIRE(sols.size() == 4);
    const long expected4[][2] = {{1, 0}, {4, 1}, {15, 4}, {56, 15}};
    for (std::size_t i = 0; i < sols.size(); ++i) {
        CHECK(sols[i].x == expected4[i][0]);
        CHECK(sols[i].y == expected4[i][1]);
        CHECK(sols[i].index == i);
    }

    sols = enumerate_pell(Int(3), Int(60));
    REQUIRE(sols.size() == 5);
    const long expected3[][2] = {{1, 0}, {3, 1}, {8, 3}, {21, 8}, {55, 21}};
    for (std::size_t i = 0; i < sols.size(); ++i) {
        CHECK(sols[i].x == expected3[i][0]);
        CHECK(sols[i].y == expected3[i][1]);
    }

    sols = enumerate_pell(Int(2), Int(5));
    REQUIRE(sols.size() == 5);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        CHECK(sols[i].x == static_cast<long>(i) + 1);
        CHECK(sols[i].y == static_cast<long>(i));
    }

    CHECK_RAISES(ErrorCode::BadParams, enumerate_pell(Int(1), Int(10)));
    CHECK_RAISES(ErrorCode::BadParams, enumerate_pell(Int(4), Int(0)));
}

TEST_CASE("pell enumeration big-parameter path agrees with the family") {
    // A above the int64 fast-path threshold exercises the exact big-int
    // scan. The bound stays small: the grid route is quadratic in it.
    const Int big_a(100001);
    const auto sols = enumerate_pell(big_a, Int(2000));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].x == 1);
    CHECK(sols[0].y == 0);
}

TEST_CASE("pell solutions satisfy the equation and are sorted") {
    for (long a = 2; a <= 6; ++a) {
        const auto sols = enumerate_pell(Int(a), Int(100));
        for (std::size_t i = 0; i < sols.size(); ++i) {
            const auto& s = sols[i];
            CHECK(s.x * s.x - a * s.x * s.y + s.y * s.y == 1);
            CHECK(s.x >= s.y);
            CHECK(s.y >= 0);
            if (i > 0) CHECK(sols[i - 1].x < s.x);
        }
    }
}

TEST_CASE("box scan pinned results") {
    auto pairs = gaussian_pell_box_scan(1);
    REQUIRE(pairs.size() == 4);
    for (const auto& [x, y] : pairs) {
        CHECK(x.im == 0);
        CHECK(y.im == 0);
        CHECK(x.re * x.re - 4 * x.re * y.re + y.re * y.re == 1);
    }

    pairs = gaussian_pell_box_scan(16);
    CHECK(pairs.size() == 12);
    for (const auto& [x, y] : pairs) {
        CHECK(x.im == 0);
        CHECK(y.im == 0);
    }
}

TEST_CASE("box scan equals the naive oracle on small boxes") {
    for (long bound : {1L, 2L, 5L, 8L}) {
        auto expected = naive_box_scan(bound);
        std::sort(expected.begin(), expected.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return a.second < b.second;
                  });
        const auto actual = gaussian_pell_box_scan(static_cast<std::uint64_t>(bound));
        REQUIRE(actual.size() == expected.size());
        for (std::size_t i = 0; i < actual.size(); ++i) {
            CHECK(actual[i].first == expected[i].first);
            CHECK(actual[i].second == expected[i].second);
        }
    }
}

TEST_CASE("box scan output is canonical for any worker count") {
    const auto one = gaussian_pell_box_scan(12, 1);
    const auto four = gaussian_pell_box_scan(12, 4);
    const auto seven = gaussian_pell_box_scan(12, 7);
    CHECK(one == four);
    CHECK(one == seven);
}

TEST_CASE("counterexample scan finds nothing in small boxes") {
    CHECK(!integrality_counterexample_scan(1).has_value());
    CHECK(!integrality_counterexample_scan(2).has_value());
    CHECK(!integrality_counterexample_scan(2, 3).has_value());
}

TEST_CASE("the bound-2 box holds no satisfying tuple at all") {
    // Even with z real nothing satisfies the form at this size: the first
    // bracket alone never vanishes (the smallest witnesses have y = 209).
    // The first bracket involves only (v, y, z), so the box is small.
    for (long vr = -2; vr <= 2; ++vr)
        for (long vi = -2; vi <= 2; ++vi) {
            if (vr == 0 && vi == 0) continue;
            const GaussianInt v(vr, vi);
            for (long zr = -2; zr <= 2; ++zr)
                for (long zi = -2; zi <= 2; ++zi) {
                    const GaussianInt z(zr, zi);
                    const GaussianInt t = z * 2 + 1;
                    for (long yr = -2; yr <= 2; ++yr)
                        for (long yi = -2; yi <= 2; ++yi) {
                            const GaussianInt y(yr, yi);
                            const GaussianInt inner = v * 2 * (t * t * 2 + 1) - y;
                            const GaussianInt bracket = inner * inner * 4 - y * y * 3 - 1;
                            CHECK(!bracket.is_zero());
                        }
                }
        }
}
