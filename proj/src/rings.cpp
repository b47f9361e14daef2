#include "wchow/rings.hpp"

namespace wchow::rings {

namespace {

Monomial mono(std::size_t nvars, std::initializer_list<std::pair<std::size_t, std::uint32_t>> es) {
    Monomial m(nvars);
    for (auto [i, e] : es) m.exps[i] = e;
    return m;
}

// expanded degree-6 relation of the equivariant Chow ring of P^5, monic in h
std::vector<std::pair<Monomial, Int>> p5_h6_replacement() {
    // build (h^3-2c1h^2+4c2h-8c3)(h^3-2c1h^2+(c1^2+c2)h+c3-c1c2) in the free
    // ring Z[t1,c1,c2,c3,h], then solve for h^6
    auto free_ring = RingSpec::make(
        "p5_free", {{"t1", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}, {"h", 1}});
    auto var = [&](std::size_t i) { return GradedPolynomial::variable(free_ring, i); };
    auto c1 = var(1), c2 = var(2), c3 = var(3), h = var(4);
    auto cubic1 = h.pow(3) - Int(2) * c1 * h.pow(2) + Int(4) * c2 * h - Int(8) * c3;
    auto cubic2 = h.pow(3) - Int(2) * c1 * h.pow(2) + (c1 * c1 + c2) * h + c3 - c1 * c2;
    auto rel = cubic1 * cubic2;
    // h^6 = h^6 - rel (rel is monic in h^6)
    std::vector<std::pair<Monomial, Int>> repl;
    Monomial h6 = mono(5, {{4, 6}});
    for (const auto& [m, c] : rel.terms()) {
        if (m == h6) continue;
        repl.emplace_back(m, -c);
    }
    return repl;
}

}  // namespace

RingPtr gl2() {
    static RingPtr r = RingSpec::make("gl2", {{"c1", 1}, {"c2", 2}});
    return r;
}

RingPtr pgl2gm() {
    static RingPtr r = RingSpec::make("pgl2gm", {{"t1", 1}, {"c2", 2}, {"c3", 3}},
                                      {TorsionRule{2, mono(3, {{2, 1}})}});
    return r;
}

RingPtr pgl2gm_free() {
    static RingPtr r = RingSpec::make("pgl2gm_free", {{"t1", 1}, {"c2", 2}, {"c3", 3}});
    return r;
}

RingPtr sl2gm() {
    static RingPtr r = RingSpec::make("sl2gm", {{"c2", 2}, {"t1", 1}});
    return r;
}

RingPtr p5() {
    static RingPtr r = RingSpec::make(
        "p5", {{"t1", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}, {"h", 1}}, {},
        {RewriteRule{mono(5, {{4, 6}}), p5_h6_replacement()}});
    return r;
}

RingPtr p5_base() {
    static RingPtr r = RingSpec::make("p5_base", {{"t1", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}});
    return r;
}

RingPtr p5_mod2() {
    static RingPtr r = RingSpec::make(
        "p5_mod2", {{"t1", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}, {"h", 1}},
        {TorsionRule{2, Monomial(5)}}, {RewriteRule{mono(5, {{4, 6}}), p5_h6_replacement()}});
    return r;
}

RingPtr gl2_roots() {
    static RingPtr r = RingSpec::make("gl2_roots", {{"l1", 1}, {"l2", 1}});
    return r;
}

RingPtr sl2_roots() {
    static RingPtr r = RingSpec::make("sl2_roots", {{"l1", 1}, {"l2", 1}, {"t1", 1}});
    return r;
}

RingPtr gl3_roots() {
    static RingPtr r =
        RingSpec::make("gl3_roots", {{"l1", 1}, {"l2", 1}, {"l3", 1}, {"t1", 1}, {"h", 1}});
    return r;
}

SymmetrizeMap gl2_roots_to_gl2() {
    auto src = gl2_roots();
    auto tgt = gl2();
    return SymmetrizeMap{src,
                         tgt,
                         {0, 1},
                         {-GradedPolynomial::variable(tgt, 0), GradedPolynomial::variable(tgt, 1)},
                         {}};
}

SymmetrizeMap sl2_roots_to_sl2gm() {
    auto src = sl2_roots();
    auto tgt = sl2gm();
    return SymmetrizeMap{src,
                         tgt,
                         {0, 1},
                         {GradedPolynomial::zero(tgt), GradedPolynomial::variable(tgt, 0)},
                         {{2, 1}}};
}

SymmetrizeMap gl3_roots_to_p5() {
    auto src = gl3_roots();
    auto tgt = p5();
    return SymmetrizeMap{src,
                         tgt,
                         {0, 1, 2},
                         {-GradedPolynomial::variable(tgt, 1), GradedPolynomial::variable(tgt, 2),
                          -GradedPolynomial::variable(tgt, 3)},
                         {{3, 0}, {4, 4}}};
}

RingPtr by_name(const std::string& name) {
    if (name == "gl2") return gl2();
    if (name == "pgl2gm") return pgl2gm();
    if (name == "sl2gm") return sl2gm();
    if (name == "p5") return p5();
    throw ring_error("unknown ring: " + name);
}

}  // namespace wchow::rings
