#pragma once

#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace wreath {

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
template <class Derived>
mpz_class exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Index = Eigen::Index;
  const Index n = m.rows();
  eigen_assert(n == m.cols());
  if (n == 0) return 1;
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  auto at = [&](Index i, Index j) -> mpz_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) at(i, j) = static_cast<long>(m(i, j));

  mpz_class sign = 1;
  mpz_class prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (Index j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

/// det of the top-left k x k block for k = 1..n.
template <class Derived>
std::vector<mpz_class> leading_principal_minors(const Eigen::MatrixBase<Derived>& m) {
  std::vector<mpz_class> minors;
  for (Eigen::Index k = 1; k <= m.rows(); ++k)
    minors.push_back(exact_determinant(m.topLeftCorner(k, k)));
  return minors;
}

}  // namespace wreath
