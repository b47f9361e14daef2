#include "wchow/class_calculus.hpp"

#include <algorithm>

#include "wchow/rings.hpp"

namespace wchow {

TotalClass total_mul(const TotalClass& a, const TotalClass& b) {
    if (a.ring.get() != b.ring.get()) throw ring_error("ring mismatch");
    TotalClass r(a.ring, std::min(a.cutoff, b.cutoff));
    for (int d = 0; d <= r.cutoff; ++d) {
        GradedPolynomial acc(a.ring);
        for (int i = 0; i <= d; ++i) {
            if (a.piece_is_zero(i) || b.piece_is_zero(d - i)) continue;
            acc += a.piece(i) * b.piece(d - i);
        }
        r.pieces[std::size_t(d)] = std::move(acc);
    }
    return r;
}

TotalClass segre(const TotalClass& c) {
    if (c.piece(0) != GradedPolynomial::constant(c.ring, Int(1)))
        throw ring_error("not a unit");
    TotalClass s(c.ring, c.cutoff);
    s.pieces[0] = GradedPolynomial::constant(c.ring, Int(1));
    for (int d = 1; d <= c.cutoff; ++d) {
        GradedPolynomial acc(c.ring);
        for (int i = 1; i <= d; ++i) {
            if (c.piece_is_zero(i) || s.piece_is_zero(d - i)) continue;
            acc += c.piece(i) * s.pieces[std::size_t(d - i)];
        }
        s.pieces[std::size_t(d)] = -acc;
    }
    return s;
}

Int binomial(long top, long bottom) {
    if (bottom < 0) throw ring_error("binomial: negative bottom argument");
    Int r(1);
    for (long t = 0; t < bottom; ++t) {
        r *= Int(top - t);
    }
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(bottom));
    return r / f;
}

namespace {

// prod over the given degree-1 root polynomials of (1 + r*x), truncated;
// piece d of the result is the degree-d elementary symmetric value
std::vector<GradedPolynomial> product_of_linear_factors(
    const RingPtr& ring, const std::vector<GradedPolynomial>& roots, int cutoff) {
    std::vector<GradedPolynomial> acc(std::size_t(cutoff) + 1, GradedPolynomial(ring));
    acc[0] = GradedPolynomial::constant(ring, Int(1));
    int top = 0;
    for (const auto& r : roots) {
        top = std::min(top + 1, cutoff);
        for (int d = top; d >= 1; --d) {
            if (!acc[std::size_t(d - 1)].is_zero()) acc[std::size_t(d)] += acc[std::size_t(d - 1)] * r;
        }
    }
    return acc;
}

TotalClass symmetrized_root_class(const std::vector<GradedPolynomial>& roots,
                                  const SymmetrizeMap& map, int cutoff) {
    auto raw = product_of_linear_factors(map.source, roots, cutoff);
    TotalClass out(map.target, cutoff);
    for (int d = 0; d <= cutoff; ++d) out.pieces[std::size_t(d)] = symmetrize(raw[std::size_t(d)], map);
    return out;
}

}  // namespace

TotalClass chern_gl2_sym(int m, int det_twist, int cutoff) {
    if (m < 0) throw ring_error("chern_gl2_sym: negative symmetric power");
    auto map = rings::gl2_roots_to_gl2();
    auto ring = map.source;
    auto l1 = GradedPolynomial::variable(ring, 0);
    auto l2 = GradedPolynomial::variable(ring, 1);
    // roots of Sym^m(E^dual) are j*l1 + (m-j)*l2; tensoring with det(E)^a
    // shifts every root by a*c1 = -a*(l1+l2)
    std::vector<GradedPolynomial> roots;
    for (int j = 0; j <= m; ++j)
        roots.push_back(Int(j - det_twist) * l1 + Int(m - j - det_twist) * l2);
    return symmetrized_root_class(roots, map, cutoff);
}

TotalClass chern_pgl2_V(int two_m, int cutoff, bool reduced) {
    if (two_m < 0 || two_m % 2 != 0) throw ring_error("chern_pgl2_V: degree must be even, >= 0");
    const int m = two_m / 2;
    auto ring = reduced ? rings::pgl2gm() : rings::pgl2gm_free();
    auto c2 = GradedPolynomial::variable(ring, 1);
    auto c3 = GradedPolynomial::variable(ring, 2);

    // polynomial in an auxiliary variable t, stored by t-exponent; the
    // coefficient of t^(2m+1-d) is c_d
    std::vector<GradedPolynomial> P(std::size_t(2 * m + 2), GradedPolynomial(ring));
    // t * prod_{j=1..m} (t^2 + j^2 c2)
    std::vector<GradedPolynomial> main(1, GradedPolynomial::constant(ring, Int(1)));
    for (int j = 1; j <= m; ++j) {
        std::vector<GradedPolynomial> next(main.size() + 2, GradedPolynomial(ring));
        for (std::size_t e = 0; e < main.size(); ++e) {
            next[e + 2] += main[e];
            next[e] += main[e] * (Int(j) * Int(j) * c2);
        }
        main = std::move(next);
    }
    for (std::size_t e = 0; e < main.size(); ++e) P[e + 1] += main[e];

    // c3 correction; (t^3 + c2 t)^k expanded by k
    const int jmax = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
    const int tshift = (m % 2 == 0) ? m / 2 + 1 : (m - 1) / 2;
    for (int j = 1; j <= jmax; ++j) {
        // (t^3 + c2 t)^(jmax - j) = sum_i C(jmax-j, i) c2^i t^(3(jmax-j-i)+i)
        const int k = jmax - j;
        for (int i = 0; i <= k; ++i) {
            GradedPolynomial coef = binomial(jmax, j) * binomial(k, i) * c2.pow(unsigned(i)) *
                                    c3.pow(unsigned(j));
            std::size_t e = std::size_t(tshift + 3 * (k - i) + i);
            P[e] += coef;
        }
    }

    TotalClass out(ring, cutoff);
    for (int d = 0; d <= cutoff; ++d) {
        int e = 2 * m + 1 - d;
        if (e >= 0 && e < int(P.size())) out.pieces[std::size_t(d)] = P[std::size_t(e)];
    }
    return out;
}

TotalClass chern_sl2gm_sym(int two_m, int gm_weight, int cutoff) {
    if (two_m < 0 || two_m % 2 != 0)
        throw ring_error("chern_sl2gm_sym: degree must be even, >= 0");
    auto map = rings::sl2_roots_to_sl2gm();
    auto ring = map.source;
    auto l1 = GradedPolynomial::variable(ring, 0);
    auto l2 = GradedPolynomial::variable(ring, 1);
    auto t1 = GradedPolynomial::variable(ring, 2);
    std::vector<GradedPolynomial> roots;
    for (int i = 0; i <= two_m; ++i)
        roots.push_back(Int(i) * l1 + Int(two_m - i) * l2 + Int(gm_weight) * t1);
    return symmetrized_root_class(roots, map, cutoff);
}

GradedPolynomial twist_segre(const TotalClass& s, int rank, const GradedPolynomial& t, int j) {
    GradedPolynomial acc(s.ring);
    for (int l = 0; l <= j; ++l) {
        if (s.piece_is_zero(l)) continue;
        Int sign = (j - l) % 2 == 0 ? Int(1) : Int(-1);
        acc += sign * binomial(rank - 1 + j, rank - 1 + l) * s.piece(l) * t.pow(unsigned(j - l));
    }
    return acc;
}

namespace {

// multiset {(i,j,k) : i+j+k = m} split into S3-orbits; each orbit product is
// symmetric, so its coefficients reduce to the symbol ring before the series
// accumulates — intermediate objects stay small
void accumulate_orbit_products(std::vector<GradedPolynomial>& series, int m, int gm_weight,
                               bool minus_h, const SymmetrizeMap& map, int cutoff) {
    auto src = map.source;
    auto l1 = GradedPolynomial::variable(src, 0);
    auto l2 = GradedPolynomial::variable(src, 1);
    auto l3 = GradedPolynomial::variable(src, 2);
    auto t1 = GradedPolynomial::variable(src, 3);
    auto h = GradedPolynomial::variable(src, 4);

    for (int a = m; a >= 0; --a)
        for (int b = a; b >= 0; --b) {
            int c = m - a - b;
            if (c < 0 || c > b) continue;
            // orbit of (a, b, c) with a >= b >= c
            std::vector<std::array<int, 3>> orbit;
            int vals[3] = {a, b, c};
            std::sort(vals, vals + 3);
            do {
                orbit.push_back({vals[0], vals[1], vals[2]});
            } while (std::next_permutation(vals, vals + 3));

            std::vector<GradedPolynomial> roots;
            for (auto& o : orbit) {
                GradedPolynomial r = Int(o[0]) * l1 + Int(o[1]) * l2 + Int(o[2]) * l3 +
                                     Int(gm_weight) * t1;
                if (minus_h) r -= h;
                roots.push_back(std::move(r));
            }
            auto raw = product_of_linear_factors(src, roots, std::min<int>(cutoff, int(roots.size())));
            std::vector<GradedPolynomial> sym;
            for (auto& piece : raw) sym.push_back(symmetrize(piece, map));

            // multiply into the accumulating series, truncated
            std::vector<GradedPolynomial> next(series.size(), GradedPolynomial(map.target));
            for (std::size_t d = 0; d < series.size(); ++d) {
                if (series[d].is_zero()) continue;
                for (std::size_t e = 0; e < sym.size() && d + e < next.size(); ++e) {
                    if (sym[e].is_zero()) continue;
                    next[d + e] += series[d] * sym[e];
                }
            }
            series = std::move(next);
        }
}

}  // namespace

WBundleClasses w_bundle_classes(int N, int d, int cutoff) {
    if (N < 2 || N % 2 != 0) throw ring_error("w_bundle_classes: N must be even, >= 2");
    if (d < 1 || d > 3) throw ring_error("w_bundle_classes: d must be 1, 2 or 3");
    const int m = d * N;
    auto map = rings::gl3_roots_to_p5();
    auto tgt = map.target;

    WBundleClasses out;
    out.rank_ambient = (m + 1) * (m + 2) / 2;
    out.rank_sub = m * (m - 1) / 2;
    out.rank_w = 2 * m + 1;

    std::vector<GradedPolynomial> amb(std::size_t(cutoff) + 1, GradedPolynomial(tgt));
    amb[0] = GradedPolynomial::constant(tgt, Int(1));
    accumulate_orbit_products(amb, m, -2 * d, false, map, cutoff);
    std::vector<GradedPolynomial> sub(std::size_t(cutoff) + 1, GradedPolynomial(tgt));
    sub[0] = GradedPolynomial::constant(tgt, Int(1));
    if (m >= 2) accumulate_orbit_products(sub, m - 2, -2 * d, true, map, cutoff);

    out.ambient = TotalClass(tgt, cutoff);
    out.ambient.pieces = std::move(amb);
    out.sub = TotalClass(tgt, cutoff);
    out.sub.pieces = std::move(sub);
    out.w = total_mul(out.ambient, segre(out.sub));
    return out;
}

GradedPolynomial chern_w_top(int N, int d, int cutoff) {
    int needed = 2 * d * N + 1;
    auto wb = w_bundle_classes(N, d, std::max(cutoff, needed));
    return wb.w.piece(needed);
}

}  // namespace wchow
