#include "wchow/delta_one.hpp"

#include <algorithm>
#include <cstdint>

#include "wchow/class_calculus.hpp"
#include "wchow/ideal.hpp"
#include "wchow/rings.hpp"

namespace wchow {

namespace {

// top Chern class of V^N_{2dN} = Sym^{2dN}(E^dual) (x) det(E)^{d(N-1)} for
// N odd, as the product of its Chern roots
GradedPolynomial gl2_rep_top(int N, int d) {
    int m = 2 * d * N;
    return chern_gl2_sym(m, d * (N - 1), m + 1).piece(m + 1);
}

// --- mod-2 verification that the excision class carries no torsion --------
//
// In Z[t1,c2,c3]/(2c3) the class decomposes as the lift of its SL2 x G_m
// restriction plus a c3-multiple, and the c3-multiple is 2-torsion. The
// integral division of W-bundle top Chern classes on P^5 does not exist (at
// a diagonal conic x_i^2 the fixed-point weights of the divisor contain
// factors <a,l> - 2*t1 with a_i = 1 whose doubles and triples are divisible
// by the conic, so they cannot divide the numerator restriction). What does
// exist, and what the torsion argument needs, is the mod-2 solution: we
// solve xi * c_{2N+1} = c_{10N+2} over F_2 on the free monomial basis and
// check that every solution vanishes at h = c1 = 0, which forces the
// 2-torsion part of the class to vanish.

struct F2System {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::uint64_t>> row_bits;  // augmented: cols + 1 bits

    F2System(std::size_t r, std::size_t c)
        : rows(r), cols(c), row_bits(r, std::vector<std::uint64_t>((c + 1 + 63) / 64, 0)) {}
    void set(std::size_t r, std::size_t c) { row_bits[r][c >> 6] ^= (1ull << (c & 63)); }
    bool get(const std::vector<std::uint64_t>& v, std::size_t c) const {
        return (v[c >> 6] >> (c & 63)) & 1;
    }
};

struct F2Solution {
    bool solvable = false;
    std::vector<std::uint8_t> particular;               // length cols
    std::vector<std::vector<std::uint8_t>> nullspace;   // basis vectors
};

F2Solution f2_solve(F2System& sys) {
    const std::size_t words = sys.row_bits.empty() ? 0 : sys.row_bits[0].size();
    std::vector<std::size_t> pivot_row_of_col(sys.cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < sys.cols && rank < sys.rows; ++c) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = rank; r < sys.rows; ++r)
            if (sys.get(sys.row_bits[r], c)) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(sys.row_bits[rank], sys.row_bits[pr]);
        for (std::size_t r = 0; r < sys.rows; ++r) {
            if (r == rank || !sys.get(sys.row_bits[r], c)) continue;
            for (std::size_t w = 0; w < words; ++w) sys.row_bits[r][w] ^= sys.row_bits[rank][w];
        }
        pivot_row_of_col[c] = rank;
        ++rank;
    }
    F2Solution sol;
    // inconsistency: a zero row with augmented bit set
    for (std::size_t r = rank; r < sys.rows; ++r)
        if (sys.get(sys.row_bits[r], sys.cols)) return sol;
    sol.solvable = true;
    sol.particular.assign(sys.cols, 0);
    for (std::size_t c = 0; c < sys.cols; ++c)
        if (pivot_row_of_col[c] != SIZE_MAX)
            sol.particular[c] = sys.get(sys.row_bits[pivot_row_of_col[c]], sys.cols);
    for (std::size_t f = 0; f < sys.cols; ++f) {
        if (pivot_row_of_col[f] != SIZE_MAX) continue;
        std::vector<std::uint8_t> v(sys.cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < sys.cols; ++c)
            if (pivot_row_of_col[c] != SIZE_MAX)
                v[c] = sys.get(sys.row_bits[pivot_row_of_col[c]], f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

// Affine subspace of F_2^n as a point plus a row-reduced span.
struct AffineF2 {
    bool empty = true;
    std::vector<std::uint8_t> point;
    std::vector<std::vector<std::uint8_t>> span;

    bool is_single_zero() const {
        if (empty || !span.empty()) return false;
        for (auto b : point)
            if (b) return false;
        return true;
    }
};

// The possible c3-restrictions of mod-2 solutions of xi * divisor = target
// whose c3-free restriction vanishes. Returns an empty space when no such
// solution exists. `verified` receives one particular solution.
AffineF2 mod2_c3_restrictions(const GradedPolynomial& divisor, const GradedPolynomial& target,
                              long xi_degree, GradedPolynomial* verified) {
    auto ring = rings::p5_mod2();
    auto cols_basis = monomials_of_degree(ring, xi_degree);
    auto rows_basis = monomials_of_degree(ring, xi_degree + divisor.degree());
    std::map<Monomial, std::size_t, GlexDesc> row_of{GlexDesc{ring.get()}};
    for (std::size_t r = 0; r < rows_basis.size(); ++r) row_of.emplace(rows_basis[r], r);

    F2System sys(rows_basis.size(), cols_basis.size());
    for (std::size_t j = 0; j < cols_basis.size(); ++j) {
        auto prod = divisor.times_monomial(cols_basis[j], Int(1));
        for (const auto& [m, c] : prod.terms()) sys.set(row_of.at(m), j);
    }
    for (const auto& [m, c] : target.terms()) sys.set(row_of.at(m), cols_basis.size());

    AffineF2 out;
    auto sol = f2_solve(sys);
    if (!sol.solvable) return out;

    const int h_idx = ring->var_index("h");
    const int c1_idx = ring->var_index("c1");
    const int c3_idx = ring->var_index("c3");
    std::vector<std::size_t> free_coords, c3_coords;
    for (std::size_t c = 0; c < cols_basis.size(); ++c) {
        const Monomial& m = cols_basis[c];
        if (m[std::size_t(h_idx)] != 0 || m[std::size_t(c1_idx)] != 0) continue;
        (m[std::size_t(c3_idx)] == 0 ? free_coords : c3_coords).push_back(c);
    }
    // solutions with vanishing c3-free restriction
    F2System pin(free_coords.size(), sol.nullspace.size());
    for (std::size_t r = 0; r < free_coords.size(); ++r) {
        for (std::size_t j = 0; j < sol.nullspace.size(); ++j)
            if (sol.nullspace[j][free_coords[r]]) pin.set(r, j);
        if (sol.particular[free_coords[r]]) pin.set(r, sol.nullspace.size());
    }
    auto pinned = f2_solve(pin);
    if (!pinned.solvable) return out;

    auto c3_image = [&](const std::vector<std::uint8_t>& combo, bool affine) {
        std::vector<std::uint8_t> v(c3_coords.size(), 0);
        for (std::size_t i = 0; i < c3_coords.size(); ++i) {
            int bit = affine && sol.particular[c3_coords[i]] ? 1 : 0;
            for (std::size_t j = 0; j < combo.size(); ++j)
                if (combo[j] && sol.nullspace[j][c3_coords[i]]) bit ^= 1;
            v[i] = std::uint8_t(bit);
        }
        return v;
    };
    out.empty = false;
    out.point = c3_image(pinned.particular, true);
    for (const auto& u : pinned.nullspace) {
        auto v = c3_image(u, false);
        if (std::any_of(v.begin(), v.end(), [](std::uint8_t b) { return b != 0; }))
            out.span.push_back(std::move(v));
    }
    if (verified) {
        std::vector<std::pair<Monomial, Int>> ts;
        for (std::size_t c = 0; c < cols_basis.size(); ++c)
            if (sol.particular[c]) ts.emplace_back(cols_basis[c], Int(1));
        *verified = GradedPolynomial::from_terms(ring, ts);
    }
    return out;
}

// intersection of two affine F_2 subspaces (point + span form)
AffineF2 affine_intersect(const AffineF2& a, const AffineF2& b) {
    AffineF2 out;
    if (a.empty || b.empty) return out;
    const std::size_t n = a.point.size();
    // solve p_a + A x = p_b + B y: [A | B] z = p_a + p_b
    std::size_t cols = a.span.size() + b.span.size();
    F2System sys(n, cols);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < a.span.size(); ++j)
            if (a.span[j][r]) sys.set(r, j);
        for (std::size_t j = 0; j < b.span.size(); ++j)
            if (b.span[j][r]) sys.set(r, a.span.size() + j);
        if (a.point[r] ^ b.point[r]) sys.set(r, cols);
    }
    auto sol = f2_solve(sys);
    if (!sol.solvable) return out;
    out.empty = false;
    auto apply_a = [&](const std::vector<std::uint8_t>& z, bool affine) {
        std::vector<std::uint8_t> v(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            int bit = affine ? a.point[r] : 0;
            for (std::size_t j = 0; j < a.span.size(); ++j)
                if (z[j] && a.span[j][r]) bit ^= 1;
            v[r] = std::uint8_t(bit);
        }
        return v;
    };
    out.point = apply_a(sol.particular, true);
    for (const auto& u : sol.nullspace) {
        auto v = apply_a(u, false);
        if (std::any_of(v.begin(), v.end(), [](std::uint8_t b) { return b != 0; }))
            out.span.push_back(std::move(v));
    }
    return out;
}

// top Chern class of W (x) det(E_3)^w from the total class of W
GradedPolynomial twisted_top(const TotalClass& w_total, int rank, int det_weight) {
    auto ring = w_total.ring;
    auto c1 = GradedPolynomial::variable(ring, std::size_t(ring->var_index("c1")));
    GradedPolynomial acc(ring);
    for (int j = 0; j <= rank; ++j) {
        if (w_total.piece_is_zero(j)) continue;
        acc += w_total.piece(j) * (Int(det_weight) * c1).pow(unsigned(rank - j));
    }
    return acc;
}

}  // namespace

DeltaOneResult delta1_odd(int N) {
    if (N < 1 || N % 2 == 0) throw ring_error("delta1_odd: N must be odd, >= 1");
    auto num = gl2_rep_top(N, 2) * gl2_rep_top(N, 3);
    auto den = gl2_rep_top(N, 1);
    DeltaOneResult res;
    res.N = N;
    res.parity = Parity::odd;
    res.cls = exact_divide(num, den);
    if (res.cls * den != num) throw ring_error("delta1_odd: division round-trip failed");
    if (!res.cls.is_homogeneous_of(8L * N + 1))
        throw ring_error("delta1_odd: class is not homogeneous of degree 8N+1");
    return res;
}

GradedPolynomial delta1_sl2gm_raw(int N) {
    if (N < 2 || N % 2 != 0) throw ring_error("delta1 crosscheck: N must be even, >= 2");
    auto top = [&](int d) {
        int m = 2 * d * N;
        return chern_sl2gm_sym(m, -2 * d, m + 1).piece(m + 1);
    };
    auto num = top(2) * top(3);
    auto den = top(1);
    auto q = exact_divide(num, den);
    if (q * den != num) throw ring_error("delta1 crosscheck: division round-trip failed");
    return q;
}

GradedPolynomial restrict_c3_zero(const GradedPolynomial& cls) {
    auto src = rings::pgl2gm();
    if (cls.ring().get() != src.get()) throw ring_error("restrict_c3_zero: wrong ring");
    int c3_idx = src->var_index("c3");
    std::vector<std::pair<Monomial, Int>> ts;
    for (const auto& [m, c] : cls.terms())
        if (m[std::size_t(c3_idx)] == 0) ts.emplace_back(m, c);
    return transfer(GradedPolynomial::from_terms(src, ts), rings::sl2gm());
}

GradedPolynomial delta1_even_crosscheck(int N) {
    GradedPolynomial raw = delta1_sl2gm_raw(N);
    auto ring = rings::sl2gm();
    auto quarter = RationalGradedPolynomial::constant(ring, Rat(1, 4)) *
                   to_rational(GradedPolynomial::variable(ring, 0));
    std::map<std::size_t, RationalGradedPolynomial> bind;
    bind.emplace(std::size_t(0), quarter);
    return to_integral(substitute(raw, bind));
}

DeltaOneResult delta1_even(int N) {
    if (N < 2 || N % 2 != 0) throw ring_error("delta1_even: N must be even, >= 2");

    // The class equals the lift of its SL2 x G_m restriction plus a 2-torsion
    // c3-multiple. The restriction is an exact division of top Chern classes.
    GradedPolynomial partial = delta1_even_crosscheck(N);
    GradedPolynomial lift = transfer(partial, rings::pgl2gm());
    if (!lift.is_homogeneous_of(8L * N + 1))
        throw ring_error("delta1_even: class is not homogeneous of degree 8N+1");

    // The mod-2 step needs the lift itself to vanish modulo 2.
    for (const auto& [m, c] : lift.terms())
        if (mpz_odd_p(c.get_mpz_t()))
            throw ring_error("delta1_even: the c3-free part is not even, the mod-2 "
                             "vanishing argument does not apply");

    // Kill the torsion part: on P^5, the c3-restrictions of the mod-2
    // solutions of the W-bundle division, across the det-twisted models of
    // the same squaring-cubing map, intersect in the zero vector alone; the
    // class is therefore 0 mod 2 and its c3-part vanishes in
    // Z[t1,c2,c3]/(2c3). (Twists of weight w send the three bundles to
    // twists of weight w, 2w, 3w; modulo 2 only w = 0, 1 differ.)
    auto mod2 = rings::p5_mod2();
    auto wb1 = w_bundle_classes(N, 1, 2 * N + 1);
    auto wb2 = w_bundle_classes(N, 2, 4 * N + 1);
    auto wb3 = w_bundle_classes(N, 3, 6 * N + 1);
    AffineF2 pinned;
    for (int w = 0; w <= 1; ++w) {
        GradedPolynomial divisor = transfer(twisted_top(wb1.w, 2 * N + 1, w), mod2);
        GradedPolynomial target =
            transfer(twisted_top(wb2.w, 4 * N + 1, 2 * w), mod2) *
            transfer(twisted_top(wb3.w, 6 * N + 1, 3 * w), mod2);
        GradedPolynomial xi(mod2);
        auto space = mod2_c3_restrictions(divisor, target, 8L * N + 1, &xi);
        if (space.empty) {
            if (w == 0)
                throw ring_error("delta1_even: the mod-2 division on P^5 is unsolvable");
            continue;  // this twist contributes no constraint
        }
        if (!xi.is_zero() && xi * divisor != target)
            throw ring_error("delta1_even: mod-2 solution fails the defining equation");
        pinned = (w == 0) ? space : affine_intersect(pinned, space);
        if (pinned.is_single_zero()) break;
    }
    if (pinned.empty)
        throw ring_error("delta1_even: no mod-2 solution matches the known c3-free part");
    if (!pinned.is_single_zero())
        throw ring_error("delta1_even: the c3-part of the class is not determined "
                         "by the mod-2 computation");

    DeltaOneResult res;
    res.N = N;
    res.parity = Parity::even;
    res.cls = std::move(lift);
    return res;
}

DeltaOneResult delta1(int N, bool with_crosscheck) {
    if (N < 1) throw ring_error("delta1: N must be >= 1");
    if (N % 2 == 1) {
        if (with_crosscheck) throw ring_error("delta1: the cross-check applies to even N only");
        return delta1_odd(N);
    }
    DeltaOneResult res = delta1_even(N);
    if (with_crosscheck) res.crosscheck_mod_c3 = delta1_even_crosscheck(N);
    return res;
}

}  // namespace wchow
