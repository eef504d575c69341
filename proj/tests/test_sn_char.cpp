#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "wreath/sn_char.hpp"

using namespace wreath;

namespace {

// Frobenius formula in l = length(lambda) variables: chi(rho) is the
// coefficient of x^{lambda+delta} in a_delta * p_rho. Each monomial x^a of
// p_rho contributes sgn(pi) when lambda + delta - a is the permutation pi of delta.
std::int64_t frobenius_value(const Partition& lambda, const CycleType& rho) {
  const int l = std::max(1, lambda.length());
  std::vector<int> target(l);
  for (int i = 0; i < l; ++i) target[i] = lambda[i] + (l - 1 - i);
  std::int64_t total = 0;
  std::vector<int> choice(rho.length(), 0);
  while (true) {
    std::vector<int> rest = target;
    bool ok = true;
    for (int c = 0; c < rho.length(); ++c) {
      rest[choice[c]] -= rho[c];
      if (rest[choice[c]] < 0) ok = false;
    }
    if (ok) {
      // rest must be a permutation of (l-1, ..., 0)
      std::vector<int> sorted = rest;
      std::sort(sorted.rbegin(), sorted.rend());
      bool perm = true;
      for (int i = 0; i < l; ++i) perm = perm && sorted[i] == l - 1 - i;
      if (perm) {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
          for (int j = i + 1; j < l; ++j) inversions += rest[i] < rest[j];
        total += inversions % 2 ? -1 : 1;
      }
    }
    int c = 0;
    while (c < rho.length() && ++choice[c] == l) choice[c++] = 0;
    if (c == rho.length()) break;
  }
  return total;
}

CycleType ones(int k) { return Partition(std::vector<int>(k, 1)); }

}  // namespace

TEST_CASE("murnaghan-nakayama examples") {
  CHECK(mn_value(Partition{}, Partition{}) == 1);
  CHECK(mn_value(Partition({2, 1}), Partition({3})) == -1);
  CHECK(mn_value(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_value(Partition({3}), Partition({2, 1})) == 1);
  CHECK(mn_value(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(mn_value(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(mn_value(Partition({3, 1}), Partition({4})) == -1);
  CHECK(mn_value(Partition({3, 2}), Partition({5})) == 0);
  CHECK_THROWS_AS(mn_value(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("murnaghan-nakayama agrees with the Frobenius formula") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& lambda : generate_partitions(k))
      for (const auto& rho : generate_partitions(k)) {
        CHECK(mn_value(lambda, rho) == frobenius_value(lambda, rho));
        CHECK(mn_value_uncached(lambda, rho) == mn_value(lambda, rho));
      }
}

TEST_CASE("degree") {
  CHECK(degree(Partition{}) == 1);
  CHECK(degree(Partition({2, 1})) == 2);
  CHECK(degree(Partition({3, 2})) == 5);
  CHECK(degree(Partition({4, 2, 1})) == 35);
  CHECK(degree(Partition({5, 3, 2, 1})) == 2310);
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t sum = 0;
    for (const auto& lambda : generate_partitions(k)) {
      CHECK(static_cast<std::int64_t>(degree(lambda)) == mn_value(lambda, ones(k)));
      CHECK(degree(lambda) == degree(lambda.conjugate()));
      sum += degree(lambda) * degree(lambda);
    }
    CHECK(sum == factorial(k));
  }
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(centralizer_order(Partition({1, 1, 1})) == 6);
  CHECK(centralizer_order(Partition({2, 2})) == 8);
  CHECK(centralizer_order(Partition({3, 1})) == 3);
  for (int k = 1; k <= 10; ++k) {
    // class sizes k!/z_rho add up to k!
    std::uint64_t total = 0;
    for (const auto& rho : generate_partitions(k)) total += factorial(k) / centralizer_order(rho);
    CHECK(total == factorial(k));
  }
}

TEST_CASE("character tables") {
  CHECK(character_table_sn(1) == IntMatrix::Constant(1, 1, 1));
  IntMatrix two(2, 2);
  two << 1, 1, -1, 1;
  CHECK(character_table_sn(2) == two);
  IntMatrix three(3, 3);
  // rows [3],[2,1],[1,1,1]; columns (3),(2,1),(1,1,1)
  three << 1, 1, 1, -1, 0, 2, 1, -1, 1;
  CHECK(character_table_sn(3) == three);
  CHECK_THROWS_AS(character_table_sn(0), std::out_of_range);
  CHECK_THROWS_AS(character_table_sn(kMaxCharacterTableSize + 1), std::out_of_range);

  for (int k = 1; k <= 8; ++k) {
    const auto table = character_table_sn(k);
    const auto parts = generate_partitions(k);
    const int n = static_cast<int>(parts.size());
    // first orthogonality with class weights k!/z_rho
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::int64_t s = 0;
        for (int c = 0; c < n; ++c)
          s += table(a, c) * table(b, c) *
               static_cast<std::int64_t>(factorial(k) / centralizer_order(parts[c]));
        CHECK(s == (a == b ? static_cast<std::int64_t>(factorial(k)) : 0));
      }
    // second orthogonality
    const IntMatrix cols = table.transpose() * table;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(cols(a, b) == (a == b ? static_cast<std::int64_t>(centralizer_order(parts[a])) : 0));
  }
}
