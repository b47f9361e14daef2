#pragma once

// Relation generators coming from the stratified second excision locus: the
// coefficients C_k(i,j,l) and the three families f_{k,m} (N odd), g_{k,m'}
// with k even and with k odd (N even).

#include <vector>

#include "wchow/ring.hpp"

namespace wchow {

enum class RelationFamily { f, g_even, g_odd };

struct RelationRecord {
    int N = 0;
    int k = 0;
    int m = 0;  // m for the f family, m' for the g families
    RelationFamily family = RelationFamily::f;
    GradedPolynomial polynomial;
    long degree = 0;  // always 9k + m
};

const char* family_name(RelationFamily f);

// C_k(i,j,l): the coefficient of xi_1^(i-j-l) in the fundamental class of the
// stratum, by direct enumeration of index splittings across d = 2,3. Parity
// of N selects the class tables (GL2 for N odd, PGL2 for N even) and the
// zeta_1 symbol ((N-1)c1/2 resp. -t1). Out-of-range indices give zero.
GradedPolynomial c_coefficient(int N, int k, int i, int j, int l);

RelationRecord relation_f(int N, int k, int m);
RelationRecord relation_g_even_k(int N, int k, int m_prime);
RelationRecord relation_g_odd_k(int N, int k, int m_prime);

// all relations for the given N: k = 1..N, m = 0..k, parity dispatched
std::vector<RelationRecord> delta_two_relations(int N);

}  // namespace wchow
