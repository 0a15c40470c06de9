// Binomial coefficients, the trinomial triangle, Motzkin numbers and the
// endpoint distribution of free {-1,0,+1} walks. All values exact.
#pragma once

#include <vector>

#include "lipwalk/rational.hpp"

namespace lipwalk {

// Standard binomial coefficient with the convention used by every sum in
// this library: zero whenever b < 0 or b > a (so a < 0 with b >= 0 is zero
// as well).
BigInt binomial(long long a, long long b);

// Irregular trinomial triangle T*(n,k), 0 <= k <= 2n, built row by row from
//   T*(n,k) = T*(n-1,k) + T*(n-1,k-1) + T*(n-1,k-2),  T*(0,0) = 1.
// Row n lists the coefficients of (1 + x + x^2)^n.
class TrinomialTable {
public:
    // Grows the table to hold rows 0..n. Not safe to call concurrently with
    // queries; grow before sharing.
    void ensure_rows(int n);

    int rows() const { return static_cast<int>(rows_.size()); }

    // T*(n,k); zero for k < 0 or k > 2n.
    BigInt t_star(int n, int k) const;

    // Centered trinomial coefficient; zero for |k| > n, symmetric in +-k.
    BigInt trinomial(int n, int k) const { return t_star(n, k + n); }

    // Central trinomial coefficient: the middle entry of row n.
    BigInt central(int n) const { return t_star(n, n); }

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Motzkin triangle M(n,k): number of lattice paths (0,0) -> (n,k) with
// steps -1/0/+1 whose height never goes negative.
//   M(0,0) = 1,  M(n,k) = M(n-1,k) + M(n-1,k-1) + M(n-1,k+1),
// zero outside 0 <= k <= n.
class MotzkinTable {
public:
    void ensure_rows(int n);
    BigInt motzkin(int n, int k) const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Memoized module-level accessors backed by shared tables; thread-safe.
BigInt trinomial(int n, int k);
BigInt irregular_trinomial(int n, int k);
BigInt central_trinomial(int n);
BigInt motzkin(int n, int k);

// Exact probability that a uniformly random 1-Lipschitz mapping of the path
// on n vertices sends the far endpoint to k:
//   P(X_n = k) = 3^-(n-1) * sum_i C(n-1, k+i) * C(n-k-i-1, i).
// Symmetric in +-k, zero for |k| > n-1.
ExactRational path_endpoint_probability(int n, long long k);

}  // namespace lipwalk
