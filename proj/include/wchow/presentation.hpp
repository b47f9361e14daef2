#pragma once

// Assembly of the full Chow-ring presentation for a given fundamental
// invariant, the reproduction battery for the two explicit cases, and the
// text/JSON emitters.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wchow/delta_one.hpp"
#include "wchow/delta_two.hpp"

namespace wchow {

struct GeneratorMeta {
    std::string name;
    int degree = 0;
    std::string source;  // geometric origin, as a documentation string
};

struct Presentation {
    int N = 0;
    RingPtr ring;
    std::vector<GeneratorMeta> generators;
    DeltaOneResult delta1;
    std::vector<RelationRecord> relations;                       // the f/g families
    std::optional<std::vector<GradedPolynomial>> reduced;        // minimal_generators output

    std::size_t relation_count() const { return relations.size() + 1; }  // + delta1
};

// Build the presentation: the degree-(8N+1) class plus all stratum relations,
// with homogeneity and count invariants enforced. `simplify` attaches the
// greedy minimal generating subset. `cutoff_override` (expert use) replaces
// the default truncation cutoff 10N+4 where total classes are materialized.
Presentation present(int N, bool simplify = false, int cutoff_override = 0);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
};

// The reproduction battery for N = 1 or 2: every displayed value reproduced
// term-for-term, the membership fact, and the ideal equalities with the
// published presentations.
std::vector<CheckResult> verify_paper(int N);

// published relation polynomials, as fixtures
namespace fixtures {
GradedPolynomial r6();   // in Z[c1,c2]
GradedPolynomial r9();   // in Z[t1,c2,c3]/(2c3)
GradedPolynomial r10();
GradedPolynomial r18();
GradedPolynomial r19();
GradedPolynomial two_c3();
GradedPolynomial delta1_n1();       // -3456 c1 c2 (30c1^6 + ...)
GradedPolynomial f_1_0();           // -576 c1^3 (30c1^6 + ...)
GradedPolynomial f_1_1();           // -576 c1^2 c2 (30c1^6 + ...)
GradedPolynomial delta1_n2();       // expanded even-case class, degree 17
GradedPolynomial delta1_n2_sl2gm(); // pre-substitution SL2 x G_m class
GradedPolynomial g_2_0();
GradedPolynomial g_2_1();
}  // namespace fixtures

void emit_text(const Presentation& p, std::ostream& os, bool normalize_signs = false);
std::string emit_json(const Presentation& p, bool normalize_signs = false);

}  // namespace wchow
