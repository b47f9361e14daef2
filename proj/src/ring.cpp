#include "wchow/ring.hpp"

#include <algorithm>

namespace wchow {

GradedPolynomial exact_divide(const GradedPolynomial& num, const GradedPolynomial& den) {
    num.require_same_ring(den);
    if (!num.ring()->is_domain())
        throw ring_error("exact_divide requires a ring without reduction relations");
    if (den.is_zero()) throw ring_error("division by zero polynomial");

    GradedPolynomial q(num.ring());
    GradedPolynomial rem(num);
    const auto& [dm, dc] = den.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!rm.divisible_by(dm)) throw not_divisible_error("not divisible");
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
        if (sgn(r) != 0) throw not_divisible_error("not divisible");
        GradedPolynomial t = GradedPolynomial::from_terms(num.ring(), {{rm.over(dm), qc}});
        q += t;
        rem -= t * den;
    }
    return q;
}

GradedPolynomial divide_scalar_exact(const GradedPolynomial& p, const Int& k) {
    if (sgn(k) == 0) throw ring_error("division by zero scalar");
    std::vector<std::pair<Monomial, Int>> ts;
    for (const auto& [m, c] : p.terms()) {
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        if (sgn(r) != 0) throw integrality_error("integrality violation");
        ts.emplace_back(m, qc);
    }
    return GradedPolynomial::from_terms(p.ring(), ts);
}

RationalGradedPolynomial substitute(
    const GradedPolynomial& p, const std::map<std::size_t, RationalGradedPolynomial>& bindings) {
    const RingPtr& ring = p.ring();
    for (const auto& [idx, val] : bindings) {
        if (idx >= ring->nvars()) throw ring_error("substitute: variable index out of range");
        val.require_same_ring(RationalGradedPolynomial(ring));
        if (!val.is_homogeneous_of(ring->var(idx).degree) && !val.is_zero())
            throw ring_error("substitute: binding for " + ring->var(idx).name +
                             " is not homogeneous of the variable's degree");
    }
    RationalGradedPolynomial out(ring);
    for (const auto& [m, c] : p.terms()) {
        RationalGradedPolynomial term = RationalGradedPolynomial::constant(ring, Rat(c));
        Monomial rest(ring->nvars());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = bindings.find(i);
            if (it == bindings.end())
                rest.exps[i] = m[i];
            else
                term *= it->second.pow(m[i]);
            if (term.is_zero()) break;
        }
        out += term.times_monomial(rest, Rat(1));
    }
    return out;
}

namespace {

// elementary symmetric polynomial e_d of the given variables, in `ring`
GradedPolynomial elementary_symmetric(const RingPtr& ring, const std::vector<std::size_t>& vars,
                                      std::size_t d) {
    std::vector<std::pair<Monomial, Int>> ts;
    std::vector<std::size_t> pick(d);
    // iterate over d-subsets of vars
    auto emit = [&]() {
        Monomial m(ring->nvars());
        for (auto v : pick) m.exps[vars[v]] = 1;
        ts.emplace_back(std::move(m), Int(1));
    };
    if (d == 0) return GradedPolynomial::constant(ring, Int(1));
    std::size_t n = vars.size();
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        emit();
        std::size_t i = d;
        while (i-- > 0) {
            if (pick[i] + (d - i) <= n - 1) {
                ++pick[i];
                for (std::size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return GradedPolynomial::from_terms(ring, ts);
        }
    }
}

GradedPolynomial permute_roots(const GradedPolynomial& p, const std::vector<std::size_t>& roots,
                               std::size_t a, std::size_t b) {
    std::vector<std::pair<Monomial, Int>> ts;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm(m);
        std::swap(mm.exps[roots[a]], mm.exps[roots[b]]);
        ts.emplace_back(std::move(mm), c);
    }
    return GradedPolynomial::from_terms(p.ring(), ts);
}

}  // namespace

GradedPolynomial symmetrize(const GradedPolynomial& p, const SymmetrizeMap& map) {
    if (p.ring().get() != map.source.get()) throw ring_error("ring mismatch");
    const std::size_t n = map.root_vars.size();
    if (map.e_images.size() != n) throw ring_error("symmetrize: need images of e_1..e_n");

    for (std::size_t i = 0; i + 1 < n; ++i)
        if (permute_roots(p, map.root_vars, i, i + 1) != p)
            throw not_symmetric_error("not symmetric");

    std::vector<GradedPolynomial> e_src;
    for (std::size_t d = 1; d <= n; ++d)
        e_src.push_back(elementary_symmetric(map.source, map.root_vars, d));

    GradedPolynomial work(p);
    GradedPolynomial out(map.target);
    while (!work.is_zero()) {
        const auto& [lm, lc] = work.leading_term();
        std::vector<std::uint32_t> alpha(n);
        for (std::size_t i = 0; i < n; ++i) alpha[i] = lm[map.root_vars[i]];
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (alpha[i] < alpha[i + 1]) throw not_symmetric_error("not symmetric");

        GradedPolynomial src_prod = GradedPolynomial::constant(map.source, lc);
        GradedPolynomial tgt_prod = GradedPolynomial::constant(map.target, lc);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t e = alpha[i] - (i + 1 < n ? alpha[i + 1] : 0);
            if (e == 0) continue;
            src_prod *= e_src[i].pow(e);
            tgt_prod *= map.e_images[i].pow(e);
        }
        // pass-through part of the leading monomial
        Monomial rest_src(map.source->nvars());
        Monomial rest_tgt(map.target->nvars());
        for (std::size_t i = 0; i < lm.size(); ++i) {
            if (lm[i] == 0) continue;
            bool is_root = false;
            for (auto rv : map.root_vars) is_root |= (rv == i);
            if (is_root) continue;
            bool mapped = false;
            for (const auto& [s, t] : map.passthrough)
                if (s == i) {
                    rest_tgt.exps[t] += lm[i];
                    mapped = true;
                    break;
                }
            if (!mapped)
                throw ring_error("symmetrize: no pass-through mapping for variable " +
                                 map.source->var(i).name);
            rest_src.exps[i] = lm[i];
        }
        work -= src_prod.times_monomial(rest_src, Int(1));
        out += tgt_prod.times_monomial(rest_tgt, Int(1));
    }
    return out;
}

}  // namespace wchow
