#include "cycinv/stirling.hpp"

#include <array>
#include <stdexcept>

namespace cycinv {

namespace {

using Triangle = std::array<std::array<i64, kStirlingMaxN + 1>, kStirlingMaxN + 1>;

Triangle build_triangle() {
  Triangle c{};
  c[0][0] = 1;
  for (int n = 1; n <= kStirlingMaxN; ++n) {
    c[n][0] = 0;
    for (int i = 1; i <= n; ++i)
      c[n][i] = c[n - 1][i - 1] + static_cast<i64>(n - 1) * c[n - 1][i];
  }
  return c;
}

const Triangle& triangle() {
  static const Triangle table = build_triangle();
  return table;
}

void require_table_range(const char* who, int n) {
  if (n < 1 || n > kStirlingMaxN)
    throw std::domain_error(std::string(who) + ": n must be in [1," +
                            std::to_string(kStirlingMaxN) +
                            "]; larger n needs arbitrary-precision integers");
}

}  // namespace

i64 factorial(int n) {
  if (n < 0 || n > kStirlingMaxN)
    throw std::domain_error("factorial: n must be in [0,20] for exact 64-bit arithmetic");
  i64 f = 1;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

i64 stirling_cycle(int n, int i) {
  require_table_range("stirling_cycle", n);
  if (i < 0 || i > n)
    throw std::out_of_range("stirling_cycle: i must be in [0," + std::to_string(n) + "]");
  return triangle()[n][i];
}

std::vector<i64> stirling_row(int n) {
  require_table_range("stirling_row", n);
  const auto& row = triangle()[n];
  return std::vector<i64>(row.begin(), row.begin() + n + 1);
}

std::vector<i64> rising_factorial_coefficients(int n) {
  require_table_range("rising_factorial_coefficients", n);
  // Start from the polynomial x, then multiply by (x+1), ..., (x+n-1).
  std::vector<i64> coeff{0, 1};
  for (int m = 1; m < n; ++m) {
    std::vector<i64> next(coeff.size() + 1, 0);
    for (size_t d = 0; d < coeff.size(); ++d) {
      next[d] += static_cast<i64>(m) * coeff[d];
      next[d + 1] += coeff[d];
    }
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace cycinv
