#pragma once

#include <ordpat/bigint.hpp>

namespace ordpat {

BigInt binomial(long long n, long long k);
BigInt factorial(int n);

/// Sum over k <= n/2 of C(n, 2k) k!: the number of G(n, A, pi).
BigInt lb_formula(int n);

/// C(2k, k) / (k + 1).
BigInt catalan(int k);

/// Involution numbers: T(n) = T(n - 1) + (n - 1) T(n - 2), T(0) = T(1) = 1.
BigInt telephone(int n);

/// Sum over i < D of (i + 1) C(x, i). For x > 3D this also checks g_D(x) < 2D C(x, D - 1)
/// and throws std::logic_error if it fails.
BigInt g_d(int d, long long x);

/// The bounds used in the linear extremal argument, as exact integers.
struct Constants {
    int k = 0;
    BigInt c_bound;          // 2 k^4 C(k^2, k), a bound on the permutation-matrix constant C(k)
    BigInt c_1;              // 2 c_bound(k + 1) + 1
    BigInt c_k;              // 32 k^4 C(16 k^6 c_1, 4 k^3)
    BigInt threshold_2_pow;  // 2^(8 k^3); always below c_k
};

/// Throws std::logic_error if c_k <= 2^(8k^3). Requires k >= 1.
Constants constants(int k);

BigInt c_bound(int k);

/// Iterates f(n) <= (2k-1)k f(ceil(n/t)) + C(t, 2k)(k-1)n + g_D(2 C(D,2) C_1(k)) n with
/// t = 2k^2 and D = (2k-1)t, down to the base case f(n) = n 2^n for n <= 8k^3.
BigInt f_recurrence_bound(int n, int k);

} // namespace ordpat
