#pragma once

// Graded integer linear algebra: lattice solving by column echelon reduction
// (Hermite-style), homogeneous ideal membership with re-verified
// certificates, greedy minimal generating subsets, ideal equality, and the
// graded solver used for non-zero-divisor division.

#include <optional>
#include <vector>

#include "wchow/ring.hpp"

namespace wchow {

// column-major so the unimodular column operations of the echelon reduction
// act on contiguous storage
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Int>> col;  // col[j] has length rows

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), col(c, std::vector<Int>(r, Int(0))) {}
    Int& at(std::size_t r, std::size_t c) { return col[c][r]; }
    const Int& at(std::size_t r, std::size_t c) const { return col[c][r]; }
};

// Solve A x = b over the integers; returns a solution or nullopt when none
// exists. Deterministic: pivots are chosen by smallest nonzero magnitude,
// ties broken by lowest column index. Solutions are re-verified internally.
std::optional<std::vector<Int>> hermite_solve(const IntegerMatrix& A, const std::vector<Int>& b);

// all monomials of the ring with weighted degree exactly d that are in normal
// form (not divisible by any rewrite lead), in descending graded-lex order
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, long d);

struct MembershipCertificate {
    GradedPolynomial target;
    std::vector<GradedPolynomial> generators;
    std::vector<GradedPolynomial> cofactors;
    GradedPolynomial residual;  // zero iff member
    bool member = false;

    // recompute sum(cofactor_i * generator_i) + residual and compare to target
    bool verify() const;
};

// Decide homogeneous ideal membership in the fixed degree of `target` by an
// integer lattice computation over the monomial basis: columns are the
// normal forms of m * g_i over all monomials m of complementary degree, plus
// p * (monomial) columns absorbing each torsion identification.
MembershipCertificate graded_membership(const GradedPolynomial& target,
                                        const std::vector<GradedPolynomial>& gens);

// Greedy sweep in ascending degree: drop any generator that is a member of
// the ideal of the kept ones. Ties in degree keep the input order.
std::vector<GradedPolynomial> minimal_generators(const std::vector<GradedPolynomial>& gens);

struct IdealEqualResult {
    bool equal = false;
    std::vector<MembershipCertificate> a_in_b;
    std::vector<MembershipCertificate> b_in_a;
};

// Mutual membership of homogeneous generating sets; `torsion_extras` are
// appended to both sides (e.g. the polynomial 2c3 when the compared
// presentations list it explicitly).
IdealEqualResult ideal_equal(const std::vector<GradedPolynomial>& a,
                             const std::vector<GradedPolynomial>& b,
                             const std::vector<GradedPolynomial>& torsion_extras = {});

// Solve xi * divisor = target for homogeneous xi of the given degree over the
// monomial basis, as an integer linear system. Returns nullopt when the
// system is unsolvable.
std::optional<GradedPolynomial> graded_solve(const GradedPolynomial& divisor,
                                             const GradedPolynomial& target, long xi_degree);

}  // namespace wchow
