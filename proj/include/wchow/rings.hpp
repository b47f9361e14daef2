#pragma once

// The concrete ring specs used throughout: coefficient rings of the
// classifying stacks, the equivariant Chow ring of P^5, and the Chern-root
// rings feeding symmetric-function reduction. Each factory returns a shared
// singleton so ring identity is pointer identity.

#include "wchow/ring.hpp"

namespace wchow::rings {

// Z[c1,c2], deg c1 = 1, c2 = 2
RingPtr gl2();

// Z[t1,c2,c3]/(2c3), deg t1 = 1, c2 = 2, c3 = 3 (t1 is the G_m class)
RingPtr pgl2gm();

// Z[t1,c2,c3] with no relations; integer lifts for rational intermediates
RingPtr pgl2gm_free();

// Z[c2,t1], deg c2 = 2, t1 = 1
RingPtr sl2gm();

// Z[t1,c1,c2,c3,h] modulo the degree-6 relation
// (h^3-2c1h^2+4c2h-8c3)(h^3-2c1h^2+(c1^2+c2)h+c3-c1c2), rewritten on h^6;
// free module over Z[t1,c1,c2,c3] with basis h^0..h^5
RingPtr p5();

// Z[t1,c1,c2,c3], the coefficient subring of p5()
RingPtr p5_base();

// p5() with every coefficient reduced modulo 2
RingPtr p5_mod2();

// Chern-root rings (roots first so symmetric leading terms sort canonically)
RingPtr gl2_roots();   // Z[l1,l2]
RingPtr sl2_roots();   // Z[l1,l2,t1]
RingPtr gl3_roots();   // Z[l1,l2,l3,t1,h]

// Symmetric reduction maps
SymmetrizeMap gl2_roots_to_gl2();    // e1 -> -c1, e2 -> c2
SymmetrizeMap sl2_roots_to_sl2gm();  // e1 -> 0, e2 -> c2, t1 passes through
SymmetrizeMap gl3_roots_to_p5();     // e_d -> (-1)^d c_d, t1 and h pass through

// look up a CLI-facing ring by name ("gl2", "pgl2gm", "sl2gm", "p5"); throws
RingPtr by_name(const std::string& name);

}  // namespace wchow::rings
