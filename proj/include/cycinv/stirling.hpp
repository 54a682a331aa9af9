#pragma once

#include <vector>

#include "cycinv/permutation.hpp"

namespace cycinv {

/// Tables use exact 64-bit integers; every entry for n <= 20 fits because
/// c(n,i) <= n! and 20! < 2^63. Larger n is rejected rather than overflowing.
inline constexpr int kStirlingMaxN = 20;

/// n! for 0 <= n <= 20.
i64 factorial(int n);

/// Unsigned Stirling number of the first kind c(n,i): the number of
/// permutations of [n] with exactly i cycles. Recurrence
/// c(n,i) = c(n-1,i-1) + (n-1)*c(n-1,i). Requires 1 <= n <= 20, 0 <= i <= n.
i64 stirling_cycle(int n, int i);

/// The row c(n,0), c(n,1), ..., c(n,n).
std::vector<i64> stirling_row(int n);

/// Coefficients of x(x+1)...(x+n-1), indexed by power 0..n. Computed by
/// polynomial expansion, independently of the Stirling recurrence; the two
/// agree coefficient-by-coefficient.
std::vector<i64> rising_factorial_coefficients(int n);

}  // namespace cycinv
