#pragma once

// Total Chern classes and Segre classes of the representation families in
// play: GL2 symmetric powers with determinant twists, the PGL2
// representations V_{2m}, the SL2 x G_m symmetric powers, and the W-bundles
// on the equivariant P^5. Classes are computed from Chern-root products and
// reduced to the symbol rings; Segre classes come from formal inversion of
// the total class.

#include <vector>

#include "wchow/ring.hpp"

namespace wchow {

// Degree-truncated total class: piece d is homogeneous of weighted degree d
// and piece 0 equals 1 for any total Chern or Segre class.
struct TotalClass {
    RingPtr ring;
    int cutoff = 0;
    std::vector<GradedPolynomial> pieces;  // size cutoff + 1

    TotalClass() = default;
    TotalClass(RingPtr r, int d)
        : ring(std::move(r)), cutoff(d), pieces(static_cast<std::size_t>(d) + 1,
                                                GradedPolynomial(ring)) {}

    const GradedPolynomial& piece(int d) const {
        if (d < 0 || d > cutoff) throw ring_error("total class piece out of range");
        return pieces[static_cast<std::size_t>(d)];
    }
    bool piece_is_zero(int d) const { return d < 0 || d > cutoff || pieces[std::size_t(d)].is_zero(); }
};

// truncated product of total classes
TotalClass total_mul(const TotalClass& a, const TotalClass& b);

// formal inverse: s with s * c = 1 up to the cutoff; requires piece 0 == 1
TotalClass segre(const TotalClass& c);

// binomial with the falling-factorial convention for negative top arguments;
// bottom argument must be >= 0
Int binomial(long top, long bottom);

// c(Sym^m(E_2^dual) (x) det(E_2)^a) in Z[c1,c2], via the 2-root product
TotalClass chern_gl2_sym(int m, int det_twist, int cutoff);

// c of the PGL2-representation V_{2m} in Z[t1,c2,c3]/(2c3) (t1 unused),
// from the closed even/odd formulas; `reduced=false` returns the literal
// integer-coefficient lift in Z[t1,c2,c3]
TotalClass chern_pgl2_V(int two_m, int cutoff, bool reduced = true);

// c(Sym^{2m}(E_2^dual) (x) L^{gm_weight}) for SL2 x G_m in Z[c2,t1], from the
// root product with l1 + l2 = 0, l1*l2 = c2
TotalClass chern_sl2gm_sym(int two_m, int gm_weight, int cutoff);

// degree-j Segre class of V (x) M for a line bundle M with c1(M) = t, from
// s_j(V(x)M) = sum_l (-1)^(j-l) C(r-1+j, r-1+l) s_l(V) t^(j-l), rank r = rank V
GradedPolynomial twist_segre(const TotalClass& s, int rank, const GradedPolynomial& t, int j);

// The three total classes attached to the bundle W^N_{2dN} on the equivariant
// P^5: the ambient representation Sym^{dN}(E_3^dual) (x) L^{-2d}, the
// sub-bundle O(-1) (x) Sym^{dN-2}(E_3^dual) (x) L^{-2d}, and their quotient.
struct WBundleClasses {
    TotalClass ambient;
    TotalClass sub;
    TotalClass w;  // c(ambient) * segre(sub), truncated
    int rank_ambient = 0;
    int rank_sub = 0;
    int rank_w = 0;
};

WBundleClasses w_bundle_classes(int N, int d, int cutoff);

// top Chern class c_{2dN+1}(W^N_{2dN}); N even, d in {1,2,3}
GradedPolynomial chern_w_top(int N, int d, int cutoff);

}  // namespace wchow
