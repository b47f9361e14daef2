#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "wchow/class_calculus.hpp"
#include "wchow/delta_one.hpp"
#include "wchow/io.hpp"
#include "wchow/presentation.hpp"
#include "wchow/rings.hpp"

using namespace wchow;

TEST_CASE("N = 1: the displayed class") {
    auto res = delta1_odd(1);
    CHECK(res.cls == fixtures::delta1_n1());
    CHECK(res.cls.is_homogeneous_of(9));
}

TEST_CASE("N = 3: degree and round-trip") {
    auto res = delta1_odd(3);
    CHECK(res.cls.is_homogeneous_of(25));
    // q * c7(V^3_6) = c13(V^3_12) * c19(V^3_18)
    auto top = [&](int d) {
        int m = 6 * d;
        return chern_gl2_sym(m, 2 * d, m + 1).piece(m + 1);
    };
    CHECK(res.cls * top(1) == top(2) * top(3));
}

TEST_CASE("N = 2: the displayed class, torsion freeness, cross-check") {
    auto res = delta1(2, /*with_crosscheck=*/true);
    CHECK(res.cls == fixtures::delta1_n2());
    CHECK(res.cls.is_homogeneous_of(17));
    int c3 = rings::pgl2gm()->var_index("c3");
    for (const auto& [m, c] : res.cls.terms()) CHECK(m[std::size_t(c3)] == 0);

    REQUIRE(res.crosscheck_mod_c3.has_value());
    CHECK(restrict_c3_zero(res.cls) == *res.crosscheck_mod_c3);
}

TEST_CASE("N = 2: SL2 x G_m intermediate class matches the display") {
    CHECK(delta1_sl2gm_raw(2) == fixtures::delta1_n2_sl2gm());
    // the substitution c2 -> c2/4 is exact on the raw class
    auto cross = delta1_even_crosscheck(2);
    CHECK(cross.is_homogeneous_of(17));
}

TEST_CASE("SL2 x G_m route round-trips for N = 4 (advisory generalization)") {
    auto raw = delta1_sl2gm_raw(4);
    CHECK(raw.is_homogeneous_of(33));
    auto cross = delta1_even_crosscheck(4);  // integrality of c2 -> c2/4
    CHECK(cross.is_homogeneous_of(33));
}

TEST_CASE("parity validation") {
    CHECK_THROWS_AS((void)delta1_odd(2), ring_error);
    CHECK_THROWS_AS((void)delta1_even(3), ring_error);
    CHECK_THROWS_AS((void)delta1(1, true), ring_error);
}
