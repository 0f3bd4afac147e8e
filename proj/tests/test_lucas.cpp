#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gint/lucas.hpp"
#include "support.hpp"

using namespace gint;

TEST_CASE("pinned exact pairs") {
    const LucasParams p41{Int(4), Int(1)};
    LucasPair p = lucas_pair(p41, 0);
    CHECK(p.low == 0);
    CHECK(p.high == 1);
    p = lucas_pair(p41, 5);
    CHECK(p.low == 209);
    CHECK(p.high == 780);
    // Fibonacci via (A, B) = (1, -1).
    p = lucas_pair(LucasParams{Int(1), Int(-1)}, 6);
    CHECK(p.low == 8);
    CHECK(p.high == 13);
}

TEST_CASE("pinned modular pairs") {
    const LucasParams p41{Int(4), Int(1)};
    LucasPair p = lucas_pair_mod(p41, 6, Int(12));
    CHECK(p.low == 0);
    CHECK(p.high == 7);
    p = lucas_pair_mod(p41, 3, Int(5));
    CHECK(p.low == 0);
    CHECK(p.high == 1);
    p = lucas_pair_mod(LucasParams{Int(-3), Int(9)}, 0, Int(7));
    CHECK(p.low == 0);
    CHECK(p.high == 1);
    p = lucas_pair_mod(p41, 9, Int(1));
    CHECK(p.low == 0);
    CHECK(p.high == 0);
    CHECK_RAISES(ErrorCode::BadModulus, lucas_pair_mod(p41, 3, Int(0)));
    CHECK_RAISES(ErrorCode::BadModulus, lucas_pair_mod(p41, 3, Int(-5)));
}

TEST_CASE("modular pairs are the exact pairs reduced") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const LucasParams p{Int(testsupport::random_long(rng, -6, 6)),
                            Int(testsupport::random_long(rng, -6, 6))};
        const auto n = static_cast<std::uint64_t>(testsupport::random_long(rng, 0, 80));
        const Int m(testsupport::random_long(rng, 1, 50));
        const LucasPair exact = lucas_pair(p, n);
        const LucasPair reduced = lucas_pair_mod(p, n, m);
        CHECK(reduced.low == mod_nonneg(exact.low, m));
        CHECK(reduced.high == mod_nonneg(exact.high, m));
    }
}

TEST_CASE("modular pairs at huge indices") {
    // Doubling makes astronomically large indices cheap modulo M. The pair
    // sequence mod 10 for (4,1) cycles (0,1),(1,4),(4,5),(5,6),(6,9),(9,0):
    // period 6, so the huge index reduces mod 6.
    const LucasParams p41{Int(4), Int(1)};
    const std::uint64_t huge = 0xffffffffffffffffULL;
    const LucasPair direct = lucas_pair_mod(p41, huge, Int(10));
    const LucasPair reduced = lucas_pair_mod(p41, huge % 6, Int(10));
    CHECK(direct.low == reduced.low);
    CHECK(direct.high == reduced.high);
}

TEST_CASE("pinned zero indices") {
    const LucasParams p41{Int(4), Int(1)};
    CHECK(find_zero_index(p41, Int(12), true) == 12);
    CHECK(find_zero_index(p41, Int(12), false) == 6);
    CHECK(find_zero_index(p41, Int(76), false) == 10);
    CHECK_RAISES(ErrorCode::BadModulus, find_zero_index(p41, Int(1), false));
    // gcd(B, M) > 1: the unit-next search must exhaust.
    CHECK_RAISES(ErrorCode::NotFound, find_zero_index(LucasParams{Int(2), Int(2)}, Int(4), true));
}

TEST_CASE("zero-index criterion matches coprimality") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long m = 2; m <= 20; ++m) {
                bool found = true;
                try {
                    find_zero_index(LucasParams{Int(a), Int(b)}, Int(m), true);
                } catch (const Error& e) {
                    REQUIRE(e.code() == ErrorCode::NotFound);
                    found = false;
                }
                CHECK_MESSAGE(found == (gcd(Int(b), Int(m)) == 1),
                              "A=", a, " B=", b, " M=", m);
            }
}

TEST_CASE("pinned expansion values") {
    CHECK(rhs_expansion(LucasParams{Int(4), Int(1)}, 2, 3, 1) == 2911);
    CHECK(rhs_expansion(LucasParams{Int(4), Int(1)}, 0, 5, 2) == 4);
    CHECK(rhs_expansion(LucasParams{Int(3), Int(1)}, 1, 4, 0) == 21);
}

TEST_CASE("expansion identity on a small grid") {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            const LucasParams p{Int(a), Int(b)};
            for (std::uint64_t k = 0; k <= 4; ++k)
                for (std::uint64_t n = 0; n <= 4; ++n)
                    for (std::uint64_t r = 0; r <= 4; ++r)
                        CHECK(rhs_expansion(p, k, n, r) == lucas_pair(p, k * n + r).low);
        }
}

TEST_CASE("doubling equals the slow recurrence") {
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            const LucasParams p{Int(a), Int(b)};
            Int low(0), high(1);
            for (std::uint64_t n = 0; n <= 300; ++n) {
                if (n <= 40 || n % 37 == 0 || n >= 298) {
                    const LucasPair fast = lucas_pair(p, n);
                    REQUIRE(fast.low == low);
                    REQUIRE(fast.high == high);
                }
                Int next(p.A * high - p.B * low);
                low = high;
                high = next;
            }
        }
}

TEST_CASE("growth bounds for A > B >= 0") {
    for (long a = 1; a <= 8; ++a)
        for (long b = 0; b < a; ++b) {
            const LucasParams p{Int(a), Int(b)};
            Int low(0), high(1);
            for (std::uint64_t n = 0; n <= 60; ++n) {
                CHECK(pow_ui(Int(a - b), n) <= high);
                CHECK(high <= pow_ui(Int(a), n));
                Int next(p.A * high - p.B * low);
                low = high;
                high = next;
            }
        }
}

TEST_CASE("u_n(A,1) divides u_kn(A,1)") {
    for (long a = 2; a <= 6; ++a)
        for (std::uint64_t n = 1; n <= 10; ++n)
            for (std::uint64_t k = 1; k <= 6; ++k) {
                const LucasParams p{Int(a), Int(1)};
                const Int num = lucas_pair(p, k * n).low;
                const Int den = lucas_pair(p, n).low;
                CHECK(mod_nonneg(num, den) == 0);
            }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
}
