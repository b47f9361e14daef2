#pragma once

// Fundamental class of the non-minimal locus with identically vanishing
// discriminant, for both parities of the fundamental invariant, plus the
// SL2 x G_m cross-check of the even case.

#include <optional>

#include "wchow/ring.hpp"

namespace wchow {

enum class Parity { odd, even };

struct DeltaOneResult {
    int N = 0;
    Parity parity = Parity::odd;
    GradedPolynomial cls;  // homogeneous of weighted degree 8N+1
    std::optional<GradedPolynomial> crosscheck_mod_c3;
};

// N odd: quotient of top Chern classes of the twisted GL2 symmetric powers,
// by exact division in Z[c1,c2]
DeltaOneResult delta1_odd(int N);

// N even: solve xi * c_{2N+1}(W^N_{2N}) = c_{4N+1}(W^N_{4N}) c_{6N+1}(W^N_{6N})
// in the equivariant Chow ring of P^5, evaluate at h = c1 = 0, and reduce
// into Z[t1,c2,c3]/(2c3)
DeltaOneResult delta1_even(int N);

// SL2 x G_m route: exact division of top Chern classes in Z[c2,t1] followed
// by the substitution c2 -> c2/4 with integrality assertion; the result is
// the even-case class modulo c3
GradedPolynomial delta1_even_crosscheck(int N);

// the pre-substitution SL2 x G_m class, exposed for verification
GradedPolynomial delta1_sl2gm_raw(int N);

// drop every c3-divisible term of a class in Z[t1,c2,c3]/(2c3) and move the
// rest into Z[c2,t1], for comparison against the cross-check route
GradedPolynomial restrict_c3_zero(const GradedPolynomial& cls);

// convenience dispatcher; attaches the cross-check for N even when requested
DeltaOneResult delta1(int N, bool with_crosscheck = false);

}  // namespace wchow
