#pragma once

// Pushforwards to the base of the two projective-bundle situations: the
// Segre-class formula for hyperplane powers, and the odd-degree PGL2 case
// written in the gamma basis with E_{n,m}(q) coefficients.

#include "wchow/class_calculus.hpp"
#include "wchow/ring.hpp"

namespace wchow {

// E_{n,m}(q) = (-1)^q sum_{a+b=2q+1, 0<=a<=m, 0<=b<=n} 2^(m-a) C(m,a) C(n,b)
Int e_coeff(int n, int m, int q);

// pi_*(h^m) = s_{m-k}(V_k); zero when m < k
GradedPolynomial push_even(int m, int k, const TotalClass& segre_vk);

// the bracketed sum of the odd-k pushforward, before the division by k:
//   sum_q E_{n,m}(q) * s_{2(n-q)+m-k}(V_{k-1}) * 2 c2^q
// `segre_vkm1` lives in a ring whose c2 variable is named "c2"
GradedPolynomial push_odd_sum(int m, int n, int k, const TotalClass& segre_vkm1);

// pi_*(gamma1^m gamma2^n) = k^{-1} * push_odd_sum(m, n, k, .), with the
// division performed on the fully assembled polynomial
GradedPolynomial push_odd(int m, int n, int k, const TotalClass& segre_vkm1);

}  // namespace wchow
