// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criteria 3 and 6 compare against four printed values whose published forms
// do not agree with the machinery that produced every other verified value.
// Those comparisons are implemented as stated and reported honestly; see
// README.md ("Known discrepancies with the published tables") for the
// analysis and the independent cross-checks pinning the computed classes.

#include <array>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wchow/class_calculus.hpp"
#include "wchow/delta_one.hpp"
#include "wchow/delta_two.hpp"
#include "wchow/ideal.hpp"
#include "wchow/io.hpp"
#include "wchow/presentation.hpp"
#include "wchow/pushforward.hpp"
#include "wchow/rings.hpp"

using namespace wchow;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& note = "") {
    std::cout << "criterion " << criterion << " [" << (pass ? "PASS" : "FAIL") << "] " << what;
    if (!pass && !note.empty()) std::cout << " -- " << note;
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool total_is_one(const TotalClass& t) {
    if (t.piece(0) != GradedPolynomial::constant(t.ring, Int(1))) return false;
    for (int d = 1; d <= t.cutoff; ++d)
        if (!t.piece_is_zero(d)) return false;
    return true;
}

void criterion_1() {
    bool ok = delta1_odd(1).cls == fixtures::delta1_n1() &&
              relation_f(1, 1, 0).polynomial == fixtures::f_1_0() &&
              relation_f(1, 1, 1).polynomial == fixtures::f_1_1();
    report(1, "N=1 exact reproduction of the three displayed classes", ok);
}

void criterion_2() {
    auto gl2 = rings::gl2();
    auto r6 = fixtures::r6();
    std::vector<GradedPolynomial> computed{delta1_odd(1).cls, relation_f(1, 1, 0).polynomial,
                                           relation_f(1, 1, 1).polynomial};
    std::vector<GradedPolynomial> published{Int(6) * parse_polynomial(gl2, "c1*c2") * r6,
                                            parse_polynomial(gl2, "c1^3") * r6,
                                            parse_polynomial(gl2, "c1^2*c2") * r6};
    auto eq = ideal_equal(computed, published);
    bool ok = eq.equal;
    for (const auto& c : eq.a_in_b) ok = ok && c.verify();
    for (const auto& c : eq.b_in_a) ok = ok && c.verify();
    report(2, "N=1 ideal equality with (6c1c2r6, c1^3r6, c1^2c2r6)", ok);
}

void criterion_3() {
    auto g10 = relation_g_odd_k(2, 1, 0).polynomial;
    auto g11 = relation_g_odd_k(2, 1, 1).polynomial;
    auto g20 = relation_g_even_k(2, 2, 0).polynomial;
    auto g21 = relation_g_even_k(2, 2, 1).polynomial;
    auto g22 = relation_g_even_k(2, 2, 2).polynomial;
    bool k1 = (g10 == -fixtures::r9()) && (g11 == -fixtures::r10());
    bool k2 = (g20 == fixtures::g_2_0()) && (g21 == fixtures::g_2_1());
    bool id = g22 == -(GradedPolynomial::variable(rings::pgl2gm(), 1) * g20);
    report(3, "N=2 exact reproduction of the five stratum relations", k1 && k2 && id,
           k1 ? "the printed k=2 tables disagree with the class computation pinned by "
                "fixed-point localization; see README"
              : "k=1 values disagree");
}

void criterion_4() {
    auto res = delta1(2, /*with_crosscheck=*/true);
    bool value = res.cls == fixtures::delta1_n2();
    bool no_c3 = true;
    int c3 = rings::pgl2gm()->var_index("c3");
    for (const auto& [m, c] : res.cls.terms()) no_c3 = no_c3 && m[std::size_t(c3)] == 0;
    bool cross = res.crosscheck_mod_c3.has_value() &&
                 restrict_c3_zero(res.cls) == *res.crosscheck_mod_c3;
    bool raw = delta1_sl2gm_raw(2) == fixtures::delta1_n2_sl2gm();
    report(4, "N=2 excision class: displayed value, no c3 term, cross-check agreement",
           value && no_c3 && cross && raw);
}

void criterion_5() {
    auto d1 = delta1_even(2);
    auto cert = graded_membership(
        d1.cls, {relation_g_odd_k(2, 1, 0).polynomial, relation_g_odd_k(2, 1, 1).polynomial});
    report(5, "N=2 membership of the excision class in (g_{1,0}, g_{1,1})",
           cert.member && cert.verify());
}

void criterion_6() {
    auto g10 = relation_g_odd_k(2, 1, 0).polynomial;
    auto g11 = relation_g_odd_k(2, 1, 1).polynomial;
    std::vector<GradedPolynomial> raw{delta1_even(2).cls,
                                      g10,
                                      g11,
                                      relation_g_even_k(2, 2, 0).polynomial,
                                      relation_g_even_k(2, 2, 1).polynomial,
                                      relation_g_even_k(2, 2, 2).polynomial};
    std::vector<GradedPolynomial> published{fixtures::r9(), fixtures::r10(), fixtures::r18(),
                                            fixtures::r19()};
    auto eq = ideal_equal(raw, published, {fixtures::two_c3()});
    bool verified = true;
    for (const auto& c : eq.a_in_b) verified = verified && (!c.member || c.verify());
    for (const auto& c : eq.b_in_a) verified = verified && (!c.member || c.verify());
    report(6, "N=2 ideal equality with (2c3, r9, r10, r18, r19)", eq.equal && verified,
           "r18 and r19 are not members of the computed relation ideal (definite lattice "
           "answer); the computed ideal is strictly smaller; see README");
}

void criterion_7() {
    bool ok = true;
    std::string note;
    try {
        for (int N = 1; N <= 5; ++N) {
            auto p = present(N);
            bool counts = p.relation_count() == std::size_t((N + 1) * (N + 2) / 2);
            std::multiset<long> degrees{ p.delta1.cls.degree() };
            bool homog = p.delta1.cls.is_homogeneous_of(8L * N + 1);
            for (const auto& r : p.relations) {
                degrees.insert(r.degree);
                homog = homog && r.polynomial.is_homogeneous_of(9L * r.k + r.m);
            }
            std::multiset<long> expected{8L * N + 1};
            for (int k = 1; k <= N; ++k)
                for (int m = 0; m <= k; ++m) expected.insert(9L * k + m);
            ok = ok && counts && homog && (degrees == expected);
        }
        // the integrality and divisibility assertions: k-division and 2-power
        // clearing run inside every odd-k builder above; the c2 -> c2/4
        // substitution is asserted on both even cases
        (void)delta1_even_crosscheck(2);
        (void)delta1_even_crosscheck(4);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    report(7, "structural counts, degrees and assertions for N <= 5", ok, note);
}

void criterion_8() {
    bool ok = true;
    // segre * chern = 1 for every family at the parameters the N <= 5 runs use
    for (int d = 1; d <= 3; ++d) {
        ok = ok && total_is_one(total_mul(chern_gl2_sym(6 * d, 2 * d, 12),
                                          segre(chern_gl2_sym(6 * d, 2 * d, 12))));
        ok = ok && total_is_one(
                       total_mul(chern_pgl2_V(8 * d, 12), segre(chern_pgl2_V(8 * d, 12))));
        ok = ok && total_is_one(total_mul(chern_sl2gm_sym(8 * d, -2 * d, 12),
                                          segre(chern_sl2gm_sym(8 * d, -2 * d, 12))));
    }

    // the rank-two case is c(E^dual) itself; the rank-three V_2 case is exact
    auto ring = rings::pgl2gm();
    auto v2 = chern_pgl2_V(2, 3);
    ok = ok && v2.piece(1).is_zero() &&
         v2.piece(2) == GradedPolynomial::variable(ring, 1) &&
         v2.piece(3) == GradedPolynomial::variable(ring, 2);

    // closed formulas for m <= 12 (root product against the displayed product)
    for (int m = 0; m <= 12 && ok; ++m) {
        auto roots = chern_gl2_sym(m, 0, m + 1);
        auto closed = [&] {
            auto gl2 = rings::gl2();
            auto c1 = GradedPolynomial::variable(gl2, 0);
            auto c2 = GradedPolynomial::variable(gl2, 1);
            std::vector<GradedPolynomial> acc(std::size_t(m) + 2, GradedPolynomial(gl2));
            acc[0] = GradedPolynomial::constant(gl2, Int(1));
            auto mul_quadratic = [&](const GradedPolynomial& a, const GradedPolynomial& b) {
                for (int dd = m + 1; dd >= 1; --dd) {
                    auto next = acc[std::size_t(dd)] + acc[std::size_t(dd - 1)] * a;
                    if (dd >= 2) next += acc[std::size_t(dd - 2)] * b;
                    acc[std::size_t(dd)] = next;
                }
            };
            auto mul_linear = [&](const GradedPolynomial& a) {
                for (int dd = m + 1; dd >= 1; --dd)
                    acc[std::size_t(dd)] += acc[std::size_t(dd - 1)] * a;
            };
            if (m % 2 == 0) {
                if (m > 0) mul_linear(Int(-m / 2) * c1);
                for (int j = 0; j < m - j; ++j)
                    mul_quadratic(Int(-m) * c1, Int(j * (m - j)) * c1 * c1 +
                                                    Int((2 * j - m) * (2 * j - m)) * c2);
            } else {
                for (int j = 0; 2 * j <= m; ++j)
                    mul_quadratic(Int(-m) * c1, Int(j * (m - j)) * c1 * c1 +
                                                    Int((2 * j - m) * (2 * j - m)) * c2);
            }
            return acc;
        }();
        for (int dd = 0; dd <= m + 1; ++dd) ok = ok && roots.piece(dd) == closed[std::size_t(dd)];
    }

    // Whitney identity for the W-bundle sequences in play
    for (int N : {2, 4})
        for (int d = 1; d <= 3; ++d) {
            int cutoff = (N == 2) ? 2 * d * N + 3 : 2 * d * N + 1;
            auto wb = w_bundle_classes(N, d, cutoff);
            auto prod = total_mul(wb.sub, wb.w);
            for (int e = 0; e <= cutoff; ++e) ok = ok && prod.piece(e) == wb.ambient.piece(e);
            if (N == 2) ok = ok && wb.w.piece_is_zero(wb.rank_w + 1) &&
                             wb.w.piece_is_zero(wb.rank_w + 2);
        }

    // numeric root-substitution oracle, >= 100 cases
    auto gen = testutil::rng(127);
    std::uniform_int_distribution<long> val(-7, 7);
    int cases = 0;
    for (int m = 1; m <= 10; ++m) {
        int a = m % 4;
        auto c = chern_gl2_sym(m, a, m + 1);
        for (int trial = 0; trial < 11; ++trial, ++cases) {
            Int l1(val(gen)), l2(val(gen));
            std::vector<Int> roots;
            for (int j = 0; j <= m; ++j)
                roots.push_back(Int(j - a) * l1 + Int(m - j - a) * l2);
            std::vector<Int> e(std::size_t(m) + 2, Int(0));
            e[0] = 1;
            for (const auto& r : roots)
                for (int i = m + 1; i >= 1; --i) e[std::size_t(i)] += e[std::size_t(i - 1)] * r;
            for (int dd = 1; dd <= m + 1; ++dd)
                ok = ok && testutil::evaluate(c.piece(dd), {-(l1 + l2), l1 * l2}) ==
                               e[std::size_t(dd)];
        }
    }
    report(8, "class-calculus property suite (ranks, inverses, closed forms, Whitney, "
              "numeric oracle on " + std::to_string(cases) + " cases)",
           ok && cases >= 100);
}

void criterion_9() {
    bool ok = true;
    auto segre_v0 = segre(chern_pgl2_V(0, 12));
    ok = ok && push_odd(1, 0, 1, segre_v0) ==
                   GradedPolynomial::constant(rings::pgl2gm(), Int(2));
    for (int n = 0; n <= 6 && ok; ++n)
        for (int m = 0; m <= 6 && ok; ++m)
            for (int q = 0; q <= 6 && ok; ++q) {
                Int sum(0);
                for (int a = 0; a <= m; ++a) {
                    int b = 2 * q + 1 - a;
                    if (b < 0 || b > n) continue;
                    Int p;
                    mpz_ui_pow_ui(p.get_mpz_t(), 2, unsigned(m - a));
                    sum += p * binomial(m, a) * binomial(n, b);
                }
                if (q % 2 == 1) sum = -sum;
                ok = ok && e_coeff(n, m, q) == sum;
            }
    for (int k = 1; k <= 8 && ok; ++k) {
        auto s = segre(chern_gl2_sym(k, 0, 12));
        ok = ok && push_even(k - 1, k, s).is_zero();
        for (int m = k; m <= k + 4; ++m) ok = ok && push_even(m, k, s) == s.piece(m - k);
    }
    report(9, "pushforward fixtures and oracles", ok);
}

void criterion_10() {
    auto gen = testutil::rng(251);
    std::uniform_int_distribution<long> small(-1000, 1000);
    bool ok = true;

    auto round_trip = [&](const IntegerMatrix& A) {
        std::vector<Int> x0(A.cols);
        for (auto& v : x0) v = Int(small(gen));
        std::vector<Int> b(A.rows, Int(0));
        for (std::size_t j = 0; j < A.cols; ++j)
            for (std::size_t r = 0; r < A.rows; ++r) b[r] += A.col[j][r] * x0[j];
        auto x = hermite_solve(A, b);
        if (!x) return false;
        std::vector<Int> check(A.rows, Int(0));
        for (std::size_t j = 0; j < A.cols; ++j)
            for (std::size_t r = 0; r < A.rows; ++r) check[r] += A.col[j][r] * (*x)[j];
        return check == b;
    };

    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 64);
    std::uniform_int_distribution<long> tiny(-3, 3);
    std::uniform_int_distribution<int> sign(0, 1);

    // 300 x 400 with entries up to 2^64: a full-lattice block (random lower
    // triangular with unit diagonal) plus a hundred random wide-entry columns
    IntegerMatrix A(300, 400);
    for (std::size_t j = 0; j < 300; ++j) {
        A.col[j][j] = sign(gen) ? 1 : -1;
        for (std::size_t r = j + 1; r < A.rows; ++r) A.col[j][r] = tiny(gen);
    }
    for (std::size_t j = 300; j < 400; ++j)
        for (std::size_t r = 0; r < A.rows; ++r)
            A.col[j][r] = Int(small(gen)) * (big / Int(1000)) + Int(small(gen));
    ok = ok && round_trip(A);

    // dense instances: moderate entries at 100 x 130, 2^64-scale at 40 x 60
    IntegerMatrix B(100, 130);
    for (auto& col : B.col)
        for (auto& e : col) e = small(gen);
    ok = ok && round_trip(B);
    IntegerMatrix C(40, 60);
    for (auto& col : C.col)
        for (auto& e : col) e = Int(small(gen)) * (big / Int(1000)) + Int(small(gen));
    ok = ok && round_trip(C);

    // membership certificates re-multiply exactly
    auto ring = rings::pgl2gm();
    auto g10 = relation_g_odd_k(2, 1, 0).polynomial;
    auto g11 = relation_g_odd_k(2, 1, 1).polynomial;
    auto cert = graded_membership(delta1_even(2).cls, {g10, g11});
    ok = ok && cert.member && cert.verify();
    auto rnd = testutil::random_homogeneous(ring, 4, gen);
    auto cert2 = graded_membership(rnd * g10, {g10, g11});
    ok = ok && cert2.member && cert2.verify();
    report(10, "integer linear algebra suite (300x400 round-trip, certificates)", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
