#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wreath/cyclotomic.hpp"
#include "wreath/lr.hpp"
#include "wreath/sn_char.hpp"

using namespace wreath;

namespace {

// Every assignment of values 1..t to the cells, filtered by the definition.
std::uint64_t brute_force_lr(const Partition& outer, const Partition& inner,
                             const Partition& content) {
  if (outer.size() - inner.size() != content.size() || !outer.contains(inner)) return 0;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < outer.length(); ++i)
    for (int j = inner[i]; j < outer[i]; ++j) cells.emplace_back(i, j);
  const int t = std::max(1, content.length());
  std::vector<int> fill(cells.size(), 1);
  std::uint64_t count = 0;
  auto at = [&](int i, int j) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c] == std::pair{i, j}) return fill[c];
    return 0;
  };
  while (true) {
    bool ok = true;
    std::vector<int> seen(t + 1, 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      if (j > inner[i] && at(i, j - 1) > fill[c]) ok = false;
      if (i > 0 && j >= inner[i - 1] && j < outer[i - 1] && at(i - 1, j) >= fill[c]) ok = false;
      ++seen[fill[c]];
    }
    for (int v = 1; v <= t && ok; ++v) ok = seen[v] == content[v - 1];
    if (ok) {
      // reading word: rows top to bottom, right to left
      std::vector<int> running(t + 2, 0);
      for (int i = 0; i < outer.length() && ok; ++i)
        for (int j = outer[i] - 1; j >= inner[i] && ok; --j) {
          const int v = at(i, j);
          ++running[v];
          if (v > 1 && running[v] > running[v - 1]) ok = false;
        }
    }
    if (ok) ++count;
    std::size_t c = 0;
    while (c < cells.size() && ++fill[c] > t) fill[c++] = 1;
    if (c == cells.size()) break;
  }
  return count;
}

// <Res chi_alpha, chi_beta x chi_gamma> over S_j x S_{k-j}, from MN values.
Rational character_lr(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  Rational total = 0;
  for (const auto& rho : generate_partitions(beta.size()))
    for (const auto& sigma : generate_partitions(gamma.size())) {
      std::vector<int> joined(rho.parts().begin(), rho.parts().end());
      joined.insert(joined.end(), sigma.parts().begin(), sigma.parts().end());
      std::sort(joined.rbegin(), joined.rend());
      const Partition tau(joined);
      Rational term(mn_value(beta, rho) * mn_value(gamma, sigma) * mn_value(alpha, tau));
      term /= Rational(static_cast<long>(centralizer_order(rho) * centralizer_order(sigma)));
      total += term;
    }
  return total;
}

}  // namespace

TEST_CASE("lr_coefficient examples") {
  CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({2})) == 1);
  CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({1, 1})) == 0);
  CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
  CHECK(lr_coefficient(Partition({4, 2, 2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  CHECK(lr_coefficient(Partition({2}), Partition({2}), Partition{}) == 1);
  CHECK(lr_coefficient(Partition{}, Partition{}, Partition{}) == 1);
  CHECK(lr_coefficient(Partition({2}), Partition({1, 1}), Partition{}) == 0);
  CHECK(lr_coefficient(Partition({2}), Partition({3}), Partition{}) == 0);
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({1, 1})), std::invalid_argument);
}

TEST_CASE("lr_coefficient agrees with brute-force tableau enumeration") {
  for (int k = 0; k <= 6; ++k)
    for (const auto& outer : generate_partitions(k))
      for (int j = 0; j <= k; ++j)
        for (const auto& inner : generate_partitions(j)) {
          if (!outer.contains(inner)) continue;
          for (const auto& content : generate_partitions(k - j))
            CHECK(lr_coefficient(outer, inner, content) == brute_force_lr(outer, inner, content));
        }
}

TEST_CASE("lr_coefficient agrees with character inner products") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& alpha : generate_partitions(k))
      for (int j = 0; j <= k; ++j)
        for (const auto& beta : generate_partitions(j))
          for (const auto& gamma : generate_partitions(k - j))
            CHECK(Rational(static_cast<long>(lr_coefficient(alpha, beta, gamma))) ==
                  character_lr(alpha, beta, gamma));
}

TEST_CASE("lr symmetries") {
  for (int k = 0; k <= 7; ++k)
    for (const auto& alpha : generate_partitions(k))
      for (int j = 0; j <= k; ++j)
        for (const auto& beta : generate_partitions(j))
          for (const auto& gamma : generate_partitions(k - j)) {
            const auto c = lr_coefficient(alpha, beta, gamma);
            CHECK(c == lr_coefficient(alpha, gamma, beta));
            CHECK(c == lr_coefficient(alpha.conjugate(), beta.conjugate(), gamma.conjugate()));
          }
}

TEST_CASE("iterated_lr") {
  CHECK(iterated_lr(Partition{}, {}) == 1);
  CHECK(iterated_lr(Partition({1}), {}) == 0);
  const std::vector<Partition> three_boxes{Partition({1}), Partition({1}), Partition({1})};
  for (const auto& target : generate_partitions(3)) CHECK(iterated_lr(target, three_boxes) == degree(target));

  const std::vector<Partition> two{Partition({2, 1}), Partition({1})};
  for (const auto& target : generate_partitions(4))
    CHECK(iterated_lr(target, two) == lr_coefficient(target, Partition({2, 1}), Partition({1})));

  // permutation invariance on random factor lists
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Partition> factors;
    int total = 0;
    const int count = 2 + static_cast<int>(rng() % 3);
    for (int f = 0; f < count; ++f) {
      const auto choices = generate_partitions(static_cast<int>(rng() % 3));
      factors.push_back(choices[rng() % choices.size()]);
      total += factors.back().size();
    }
    auto shuffled = factors;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::uint64_t dim = 0;
    for (const auto& target : generate_partitions(total)) {
      const auto m = iterated_lr(target, factors);
      CHECK(m == iterated_lr(target, shuffled));
      dim += m * degree(target);
    }
    // dimension of the induced module
    std::uint64_t expected = factorial(total);
    for (const auto& f : factors) expected = expected / factorial(f.size()) * degree(f);
    CHECK(dim == expected);
  }

  const auto product = lr_product(two);
  std::uint64_t mass = 0;
  for (const auto& [target, m] : product) mass += m * degree(target);
  CHECK(mass == 2 * 4);
  const Partition bound({3, 1});
  for (const auto& [target, m] : lr_product(two, &bound)) CHECK(bound.contains(target));
}

TEST_CASE("restriction_expansion") {
  const auto terms = restriction_expansion(Partition({2, 1}), 1);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].left == Partition({1}));
  CHECK(terms[0].right == Partition({2}));
  CHECK(terms[1].right == Partition({1, 1}));
  CHECK(restriction_expansion(Partition({3}), 0).size() == 1);
  CHECK_THROWS_AS(restriction_expansion(Partition({3}), 4), std::out_of_range);
  CHECK_THROWS_AS(restriction_expansion(Partition({3}), -1), std::out_of_range);

  for (int k = 0; k <= 7; ++k)
    for (const auto& alpha : generate_partitions(k)) {
      // sum_j binom(k,j) sum c deg deg = 2^k deg
      std::uint64_t total = 0;
      for (int j = 0; j <= k; ++j) {
        std::uint64_t part = 0;
        for (const auto& t : restriction_expansion(alpha, j)) {
          CHECK(t.coefficient > 0);
          part += t.coefficient * degree(t.left) * degree(t.right);
        }
        CHECK(part == degree(alpha));
        total += binomial(k, j) * part;
      }
      CHECK(total == (std::uint64_t{1} << k) * degree(alpha));
    }
}

TEST_CASE("weighted degree identity") {
  for (int p : {3, 5, 7})
    for (int k = 0; k <= 6; ++k)
      for (const auto& alpha : generate_partitions(k)) {
        std::uint64_t lhs = 0, pk = 1, pj = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        for (int j = 0; j <= k; ++j, pj *= (p - 1)) {
          std::uint64_t inner = 0;
          for (const auto& t : restriction_expansion(alpha, j))
            inner += t.coefficient * degree(t.left) * degree(t.right);
          lhs += binomial(k, j) * pj * inner;
        }
        CHECK(lhs == pk * degree(alpha));
      }
}
