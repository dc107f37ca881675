#pragma once

#include "rzs/numcore/big_rational.hpp"

namespace rzs::numcore {

/// B_n with the z/(e^z - 1) convention (B_1 = -1/2). Memoized per process.
BigRational bernoulli(int n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k), exact.
BigRational bernoulli_polynomial(int n, const BigRational& x);

/// H_n, with H_0 = 0.
BigRational harmonic(int n);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// 1 for even e, -1 for odd e (negative e allowed).
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Floor of a/b for b > 0, correct for negative a.
inline long floor_div(long a, long b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

}  // namespace rzs::numcore
