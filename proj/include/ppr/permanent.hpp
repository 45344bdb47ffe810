#ifndef PPR_PERMANENT_HPP
#define PPR_PERMANENT_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ppr/matrix.hpp"

namespace ppr {

/// Permanent by direct expansion over all n! permutations. Exponential in
/// factorial time; kept as the independent reference for permanent_ryser.
template <typename Derived>
typename Derived::Scalar permanent_naive(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || n < 1) throw std::invalid_argument("permanent: matrix must be square, order >= 1");

  Scalar total = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Row-by-row recursion carrying the running diagonal product.
  auto expand = [&](auto&& self, Eigen::Index row, const Scalar& prod) -> void {
    if (row == n) {
      total += prod;
      return;
    }
    for (Eigen::Index col = 0; col < n; ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      self(self, row + 1, Scalar(prod * a(row, col)));
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  expand(expand, 0, Scalar(1));
  return total;
}

/// Ryser inclusion-exclusion permanent, O(2^n * n). Column subsets are
/// walked in Gray-code order so each step updates the row sums by a
/// single column.
template <typename Derived>
typename Derived::Scalar permanent_ryser(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || n < 1) throw std::invalid_argument("permanent: matrix must be square, order >= 1");
  if (n > 62) throw std::invalid_argument("permanent_ryser: order too large for subset masks");

  std::vector<Scalar> rowsum(static_cast<std::size_t>(n), Scalar(0));
  Scalar total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t t = 1; t < count; ++t) {
    const std::uint64_t next = t ^ (t >> 1);
    const std::uint64_t diff = gray ^ next;
    const int col = std::countr_zero(diff);
    const bool added = (next & diff) != 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (added)
        rowsum[static_cast<std::size_t>(i)] += a(i, col);
      else
        rowsum[static_cast<std::size_t>(i)] -= a(i, col);
    }
    gray = next;
    Scalar prod = 1;
    for (Eigen::Index i = 0; i < n; ++i) prod *= rowsum[static_cast<std::size_t>(i)];
    if (std::popcount(gray) % 2 == 0)
      total -= prod;
    else
      total += prod;
  }
  if (n % 2 == 0) total = -total;
  return total;
}

}  // namespace ppr

#endif  // PPR_PERMANENT_HPP
