#include "wchow/pushforward.hpp"

namespace wchow {

Int e_coeff(int n, int m, int q) {
    if (n < 0 || m < 0 || q < 0) throw ring_error("e_coeff: negative argument");
    Int sum(0);
    for (int a = 0; a <= m; ++a) {
        int b = 2 * q + 1 - a;
        if (b < 0 || b > n) continue;
        Int term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, unsigned(m - a));
        sum += term * binomial(m, a) * binomial(n, b);
    }
    return (q % 2 == 0) ? sum : Int(-sum);
}

GradedPolynomial push_even(int m, int k, const TotalClass& segre_vk) {
    if (m < k) return GradedPolynomial(segre_vk.ring);
    if (m - k > segre_vk.cutoff) throw ring_error("push_even: Segre table cutoff too small");
    return segre_vk.piece(m - k);
}

GradedPolynomial push_odd_sum(int m, int n, int k, const TotalClass& segre_vkm1) {
    if (k < 1 || k % 2 == 0) throw ring_error("push_odd: k must be odd, >= 1");
    if (m < 0 || n < 0) throw ring_error("push_odd: negative exponent");
    const RingPtr& ring = segre_vkm1.ring;
    int c2_idx = ring->var_index("c2");
    if (c2_idx < 0) throw ring_error("push_odd: ring has no c2 variable");
    auto c2 = GradedPolynomial::variable(ring, std::size_t(c2_idx));

    GradedPolynomial acc(ring);
    for (int q = 0;; ++q) {
        int segre_index = 2 * (n - q) + m - k;
        if (segre_index < 0) break;
        if (segre_index > segre_vkm1.cutoff)
            throw ring_error("push_odd: Segre table cutoff too small");
        if (segre_vkm1.piece_is_zero(segre_index)) continue;
        acc += e_coeff(n, m, q) * Int(2) * segre_vkm1.piece(segre_index) * c2.pow(unsigned(q));
    }
    return acc;
}

GradedPolynomial push_odd(int m, int n, int k, const TotalClass& segre_vkm1) {
    return divide_scalar_exact(push_odd_sum(m, n, k, segre_vkm1), Int(k));
}

}  // namespace wchow
