#include "wchow/delta_two.hpp"

#include "wchow/class_calculus.hpp"
#include "wchow/pushforward.hpp"
#include "wchow/rings.hpp"

namespace wchow {

const char* family_name(RelationFamily f) {
    switch (f) {
        case RelationFamily::f: return "f";
        case RelationFamily::g_even: return "g_even";
        case RelationFamily::g_odd: return "g_odd";
    }
    return "?";
}

namespace {

// Chern and Segre tables for one stratum level k at invariant N, over the
// ring appropriate to the parity; `free_lift` selects the literal
// integer-coefficient lifts in Z[t1,c2,c3] used by the rational odd-k
// assembly.
struct StratumTables {
    RingPtr ring;
    TotalClass chern_V2dN[2];   // d = 2, 3
    TotalClass segre_V2dNk[2];  // of V_{2d(N-k)}
    GradedPolynomial zeta1;     // (N-1)c1/2 or -t1
};

StratumTables make_tables(int N, int k, bool free_lift) {
    StratumTables t;
    const bool even = (N % 2 == 0);
    if (even) {
        t.ring = free_lift ? rings::pgl2gm_free() : rings::pgl2gm();
        t.zeta1 = -GradedPolynomial::variable(t.ring, 0);
        for (int d = 2; d <= 3; ++d) {
            t.chern_V2dN[d - 2] = chern_pgl2_V(2 * d * N, 2 * d * k, !free_lift);
            t.segre_V2dNk[d - 2] = segre(chern_pgl2_V(2 * d * (N - k), 2 * d * k, !free_lift));
        }
    } else {
        if (free_lift) throw ring_error("free lifts apply to the even case only");
        t.ring = rings::gl2();
        t.zeta1 = Int((N - 1) / 2) * GradedPolynomial::variable(t.ring, 0);
        for (int d = 2; d <= 3; ++d) {
            t.chern_V2dN[d - 2] = chern_gl2_sym(2 * d * N, 0, 2 * d * k);
            t.segre_V2dNk[d - 2] = segre(chern_gl2_sym(2 * d * (N - k), 0, 2 * d * k));
        }
    }
    return t;
}

// S_d(u) = sum_{w=0}^{2dk-u} (2d)^{2dk-w} zeta1^{2dk-u-w} P_d(u,w), where
// P_d(u,w) = sum_{j+l=w} C(2d(N-k)+u+l, 2d(N-k)+l) c_j(V_{2dN}) s_l(V_{2d(N-k)}).
// The relation polynomial is then sum over (u2,u3) of S_2(u2) S_3(u3) times
// the pushforward of xi_1^(u2+u3) against the chosen module generator.
std::vector<GradedPolynomial> s_table(const StratumTables& t, int N, int k, int d) {
    const int dk2 = 2 * d * k;
    const int rho = 2 * d * (N - k);  // Segre-table rank offset
    const auto& cV = t.chern_V2dN[d - 2];
    const auto& sV = t.segre_V2dNk[d - 2];

    // pairwise products c_j * s_l, indexed [j][l]
    std::vector<std::vector<GradedPolynomial>> prod(
        std::size_t(dk2) + 1, std::vector<GradedPolynomial>(std::size_t(dk2) + 1,
                                                            GradedPolynomial(t.ring)));
    for (int j = 0; j <= dk2; ++j)
        for (int l = 0; j + l <= dk2; ++l) {
            if (cV.piece_is_zero(j) || sV.piece_is_zero(l)) continue;
            prod[std::size_t(j)][std::size_t(l)] = cV.piece(j) * sV.piece(l);
        }

    std::vector<GradedPolynomial> S(std::size_t(dk2) + 1, GradedPolynomial(t.ring));
    for (int u = 0; u <= dk2; ++u) {
        GradedPolynomial acc(t.ring);
        for (int w = 0; w <= dk2 - u; ++w) {
            GradedPolynomial pw(t.ring);
            for (int l = 0; l <= w; ++l) {
                const auto& p = prod[std::size_t(w - l)][std::size_t(l)];
                if (p.is_zero()) continue;
                pw += binomial(rho + u + l, rho + l) * p;
            }
            if (pw.is_zero()) continue;
            Int two_d_pow;
            mpz_ui_pow_ui(two_d_pow.get_mpz_t(), unsigned(2 * d), unsigned(dk2 - w));
            acc += two_d_pow * t.zeta1.pow(unsigned(dk2 - u - w)) * pw;
        }
        S[std::size_t(u)] = std::move(acc);
    }
    return S;
}

void check_record(const RelationRecord& r) {
    if (!r.polynomial.is_homogeneous_of(r.degree))
        throw ring_error("relation builder produced an inhomogeneous polynomial");
}

}  // namespace

GradedPolynomial c_coefficient(int N, int k, int i, int j, int l) {
    if (N < 1 || k < 1 || k > N) throw ring_error("c_coefficient: need 1 <= k <= N");
    auto t = make_tables(N, k, false);
    GradedPolynomial out(t.ring);
    if (i < 0 || j < 0 || l < 0 || j + l > i || i > 10 * k) return out;

    for (int i2 = 0; i2 <= std::min(i, 4 * k); ++i2)
        for (int j2 = 0; j2 <= std::min(j, i2); ++j2)
            for (int l2 = 0; l2 <= std::min(l, i2 - j2); ++l2) {
                int i3 = i - i2, j3 = j - j2, l3 = l - l2;
                if (i3 > 6 * k || j3 + l3 > i3) continue;
                GradedPolynomial term = GradedPolynomial::constant(t.ring, Int(1));
                bool zero = false;
                int idx[2][3] = {{i2, j2, l2}, {i3, j3, l3}};
                for (int d = 2; d <= 3; ++d) {
                    int id = idx[d - 2][0], jd = idx[d - 2][1], ld = idx[d - 2][2];
                    int rho = 2 * d * (N - k);
                    if (t.chern_V2dN[d - 2].piece_is_zero(jd) ||
                        t.segre_V2dNk[d - 2].piece_is_zero(ld)) {
                        zero = true;
                        break;
                    }
                    Int two_d_pow;
                    mpz_ui_pow_ui(two_d_pow.get_mpz_t(), unsigned(2 * d),
                                  unsigned(2 * d * k - jd - ld));
                    term *= binomial(rho + id - jd, rho + ld) * two_d_pow *
                            t.chern_V2dN[d - 2].piece(jd) * t.segre_V2dNk[d - 2].piece(ld);
                }
                if (!zero) out += term;
            }
    return t.zeta1.pow(unsigned(10 * k - i)) * out;
}

RelationRecord relation_f(int N, int k, int m) {
    if (N % 2 == 0) throw ring_error("relation_f: N must be odd");
    if (k < 1 || k > N || m < 0 || m > k) throw ring_error("relation_f: need 1<=k<=N, 0<=m<=k");
    auto t = make_tables(N, k, false);
    auto S2 = s_table(t, N, k, 2);
    auto S3 = s_table(t, N, k, 3);
    auto segre_Vk = segre(chern_gl2_sym(k, 0, 10 * k));

    GradedPolynomial acc(t.ring);
    for (int u2 = 0; u2 <= 4 * k; ++u2) {
        if (S2[std::size_t(u2)].is_zero()) continue;
        for (int u3 = 0; u3 <= 6 * k; ++u3) {
            if (S3[std::size_t(u3)].is_zero()) continue;
            int idx = u2 + u3 - (k - m);
            if (idx < 0 || segre_Vk.piece_is_zero(idx)) continue;
            acc += S2[std::size_t(u2)] * S3[std::size_t(u3)] * segre_Vk.piece(idx);
        }
    }
    RelationRecord rec{N, k, m, RelationFamily::f, std::move(acc), 9L * k + m};
    check_record(rec);
    return rec;
}

RelationRecord relation_g_even_k(int N, int k, int m_prime) {
    if (N % 2 != 0 || k % 2 != 0) throw ring_error("relation_g_even_k: N and k must be even");
    if (k < 1 || k > N || m_prime < 0 || m_prime > k)
        throw ring_error("relation_g_even_k: need 1<=k<=N, 0<=m'<=k");
    auto t = make_tables(N, k, false);
    auto S2 = s_table(t, N, k, 2);
    auto S3 = s_table(t, N, k, 3);
    auto segre_Vk = segre(chern_pgl2_V(k, 10 * k));

    GradedPolynomial acc(t.ring);
    for (int u2 = 0; u2 <= 4 * k; ++u2) {
        if (S2[std::size_t(u2)].is_zero()) continue;
        for (int u3 = 0; u3 <= 6 * k; ++u3) {
            if (S3[std::size_t(u3)].is_zero()) continue;
            int idx = u2 + u3 - (k - m_prime);
            if (idx < 0 || segre_Vk.piece_is_zero(idx)) continue;
            acc += S2[std::size_t(u2)] * S3[std::size_t(u3)] * segre_Vk.piece(idx);
        }
    }
    RelationRecord rec{N, k, m_prime, RelationFamily::g_even, std::move(acc), 9L * k + m_prime};
    check_record(rec);
    return rec;
}

RelationRecord relation_g_odd_k(int N, int k, int m_prime) {
    if (N % 2 != 0 || k % 2 != 1) throw ring_error("relation_g_odd_k: N even, k odd required");
    if (k < 1 || k > N || m_prime < 0 || m_prime > k)
        throw ring_error("relation_g_odd_k: need 1<=k<=N, 0<=m'<=k");
    const int n = m_prime / 2;
    const int m = m_prime % 2;

    auto t = make_tables(N, k, /*free_lift=*/true);
    auto S2 = s_table(t, N, k, 2);
    auto S3 = s_table(t, N, k, 3);
    auto segre_Vkm1 = segre(chern_pgl2_V(k - 1, 10 * k, /*reduced=*/false));

    // pushforward factor per total xi_1 exponent u, assembled rationally:
    // k^{-1} 2^{-u} sum_q E_{n,m+u}(q) s_{2(n-q)+m+u-k}(V_{k-1}) 2 c2^q
    std::vector<RationalGradedPolynomial> push(std::size_t(10 * k) + 1,
                                               RationalGradedPolynomial(t.ring));
    for (int u = 0; u <= 10 * k; ++u) {
        auto sum = push_odd_sum(m + u, n, k, segre_Vkm1);
        if (sum.is_zero()) continue;
        Int denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, unsigned(u));
        denom *= Int(k);
        push[std::size_t(u)] = to_rational(sum) * Rat(Int(1), denom);
    }

    RationalGradedPolynomial acc(t.ring);
    for (int u2 = 0; u2 <= 4 * k; ++u2) {
        if (S2[std::size_t(u2)].is_zero()) continue;
        for (int u3 = 0; u3 <= 6 * k; ++u3) {
            if (S3[std::size_t(u3)].is_zero() || push[std::size_t(u2 + u3)].is_zero()) continue;
            acc += to_rational(S2[std::size_t(u2)] * S3[std::size_t(u3)]) *
                   push[std::size_t(u2 + u3)];
        }
    }
    GradedPolynomial value = transfer(to_integral(acc), rings::pgl2gm());
    RelationRecord rec{N, k, m_prime, RelationFamily::g_odd, std::move(value), 9L * k + m_prime};
    check_record(rec);
    return rec;
}

std::vector<RelationRecord> delta_two_relations(int N) {
    if (N < 1) throw ring_error("delta_two_relations: N must be >= 1");
    std::vector<RelationRecord> out;
    for (int k = 1; k <= N; ++k)
        for (int m = 0; m <= k; ++m) {
            if (N % 2 == 1)
                out.push_back(relation_f(N, k, m));
            else if (k % 2 == 0)
                out.push_back(relation_g_even_k(N, k, m));
            else
                out.push_back(relation_g_odd_k(N, k, m));
        }
    return out;
}

}  // namespace wchow
