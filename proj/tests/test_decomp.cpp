#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "wreath/decomp.hpp"
#include "wreath/exact_linalg.hpp"
#include "wreath/lr.hpp"

using namespace wreath;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int count_without_multiples(int n, int p) {
  int count = 0;
  for (const auto& lambda : generate_partitions(n)) {
    bool ok = true;
    for (int part : lambda.parts()) ok = ok && part % p != 0;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(index_set(3) == std::vector<int>{1, 3});
  CHECK(index_set(5) == std::vector<int>{1, 2, 4, 5});
  CHECK(g_labels(3, 1).size() == 3);
  CHECK(h_labels(3, 1).size() == 2);
  CHECK(g_labels(5, 2).size() == 20);
  CHECK(h_labels(5, 2).size() == 14);
  const auto gamma = GLabel::parse("[[1],[2],[]]", 3);
  CHECK(gamma.middle() == Partition({2}));
  CHECK(gamma.weight() == 3);
  const auto alpha = HLabel::parse("[[1],[1,1]]", 3);
  CHECK(alpha.at(3) == Partition({1, 1}));
  CHECK(hat(alpha).to_string() == "[[1],[],[1,1]]");
  CHECK_THROWS_AS(GLabel::parse("[[1],[]]", 3), std::invalid_argument);
  CHECK_THROWS_AS(HLabel::parse("[[1],[],[]]", 3), std::invalid_argument);
  CHECK_THROWS_AS(g_labels(4, 1), std::invalid_argument);
}

TEST_CASE("k_coefficient examples") {
  const auto a = HLabel::parse("[[1],[]]", 3);
  const auto b = HLabel::parse("[[],[1]]", 3);
  const auto g1 = GLabel::parse("[[1],[],[]]", 3);
  const auto g2 = GLabel::parse("[[],[1],[]]", 3);
  const auto g3 = GLabel::parse("[[],[],[1]]", 3);
  CHECK(k_coefficient(a, g1) == 1);
  CHECK(k_coefficient(a, g2) == 1);
  CHECK(k_coefficient(a, g3) == 0);
  CHECK(k_coefficient(b, g1) == 0);
  CHECK(k_coefficient(b, g2) == 1);
  CHECK(k_coefficient(b, g3) == 1);

  // psi_r restricted to a two-fold product: gamma = (0,[2],0), alpha = ([1],[1])
  CHECK(k_coefficient(HLabel::parse("[[1],[1]]", 3), GLabel::parse("[[],[2],[]]", 3)) == 1);
  CHECK(k_coefficient(HLabel::parse("[[1],[1]]", 3), GLabel::parse("[[],[1,1],[]]", 3)) == 1);
  CHECK(k_coefficient(HLabel::parse("[[2],[]]", 3), GLabel::parse("[[],[1,1],[]]", 3)) == 0);
  CHECK(k_coefficient(HLabel::parse("[[1,1],[]]", 3), GLabel::parse("[[],[1,1],[]]", 3)) == 1);
  CHECK(k_coefficient(HLabel::parse("[[2],[]]", 3), GLabel::parse("[[1],[1],[]]", 3)) == 1);
  CHECK(k_coefficient(HLabel::parse("[[1,1],[]]", 3), GLabel::parse("[[1],[1],[]]", 3)) == 1);

  CHECK_THROWS_AS(k_coefficient(a, GLabel::parse("[[1],[],[],[],[]]", 5)), std::invalid_argument);
  CHECK_THROWS_AS(k_coefficient(a, GLabel::parse("[[2],[],[]]", 3)), std::invalid_argument);
}

TEST_CASE("weight zero") {
  for (int p : {3, 5, 7}) {
    REQUIRE(g_labels(p, 0).size() == 1);
    REQUIRE(h_labels(p, 0).size() == 1);
    CHECK(k_coefficient(h_labels(p, 0)[0], g_labels(p, 0)[0]) == 1);
    CHECK(degree_G(g_labels(p, 0)[0]) == 1);
    const auto k = decomposition_matrix(p, 0);
    CHECK(k.entries.coeff(0, 0) == 1);
  }
}

TEST_CASE("degrees") {
  const auto w1 = g_labels(3, 1);
  CHECK(degree_G(w1[0]) == 1);
  CHECK(degree_G(w1[1]) == 2);
  CHECK(degree_G(w1[2]) == 1);
  // sum of squared degrees = |G_w| = (p(p-1))^w w!
  for (int p : {3, 5})
    for (int w = 0; w <= 3; ++w) {
      std::uint64_t g = 0, h = 0;
      for (const auto& gamma : g_labels(p, w)) g += degree_G(gamma) * degree_G(gamma);
      for (const auto& alpha : h_labels(p, w)) h += degree_H(alpha) * degree_H(alpha);
      CHECK(g == ipow(p * (p - 1), w) * factorial(w));
      CHECK(h == ipow(p - 1, w) * factorial(w));
    }
}

TEST_CASE("degree conservation and scaling") {
  for (int p : {3, 5, 7})
    for (int w = 0; w <= 4; ++w) {
      const auto k = decomposition_matrix(p, w);
      for (int c = 0; c < static_cast<int>(k.cols.size()); ++c) {
        std::uint64_t s = 0;
        for (int r = 0; r < static_cast<int>(k.rows.size()); ++r)
          s += static_cast<std::uint64_t>(k.entries.coeff(r, c)) * degree_H(k.rows[r]);
        CHECK(s == degree_G(k.cols[c]));
      }
      for (int r = 0; r < static_cast<int>(k.rows.size()); ++r) {
        std::uint64_t s = 0;
        for (SparseIntMatrix::InnerIterator it(k.entries, r); it; ++it)
          s += static_cast<std::uint64_t>(it.value()) * degree_G(k.cols[it.col()]);
        CHECK(s == ipow(p, w) * degree_H(k.rows[r]));
      }
    }
}

TEST_CASE("restriction and induction maps agree with the matrix") {
  for (int p : {3, 5})
    for (int w = 0; w <= 3; ++w) {
      const auto k = decomposition_matrix(p, w);
      for (int c = 0; c < static_cast<int>(k.cols.size()); ++c) {
        const auto res = restrict_G_to_H(k.cols[c]);
        for (int r = 0; r < static_cast<int>(k.rows.size()); ++r) {
          const auto it = res.find(k.rows[r]);
          CHECK(k.entries.coeff(r, c) == (it == res.end() ? 0 : static_cast<std::int64_t>(it->second)));
        }
      }
      for (int r = 0; r < static_cast<int>(k.rows.size()); ++r)
        for (const auto& [gamma, m] : induce_H_to_G(k.rows[r]))
          CHECK(m == k_coefficient(k.rows[r], gamma));
    }
}

TEST_CASE("hat rows are single unit terms") {
  for (int p : {3, 5, 7})
    for (int w = 0; w <= 4; ++w)
      for (const auto& gamma : g_labels(p, w)) {
        if (!gamma.middle().empty()) continue;
        for (const auto& alpha : h_labels(p, w))
          CHECK(k_coefficient(alpha, gamma) == (hat(alpha) == gamma ? 1u : 0u));
      }
}

TEST_CASE("single unit terms occur only on hat labels") {
  int checked = 0;
  int counterexamples = 0;
  for (int p : {3, 5, 7})
    for (int w = 1; w <= 4; ++w)
      for (const auto& gamma : g_labels(p, w)) {
        if (gamma.middle().empty()) continue;
        const auto res = restrict_G_to_H(gamma);
        ++checked;
        if (res.size() == 1 && res.begin()->second == 1) ++counterexamples;
      }
  std::cout << "labels with nonempty middle component checked: " << checked
            << ", single unit restrictions: " << counterexamples << '\n';
  CHECK(counterexamples == 0);
}

TEST_CASE("gram matrix") {
  const auto g = gram_matrix(3, 1);
  IntMatrix expected(3, 3);
  expected << 1, 1, 0, 1, 2, 1, 0, 1, 1;
  CHECK(g.entries == expected);
  for (int p : {3, 5})
    for (int w = 0; w <= 3; ++w) {
      const auto gm = gram_matrix(p, w);
      CHECK(gm.entries == gm.entries.transpose());
      for (std::size_t a = 0; a < gm.labels.size(); ++a)
        for (std::size_t b = 0; b < gm.labels.size(); ++b)
          if (gm.labels[a].middle().empty() && gm.labels[b].middle().empty())
            CHECK(gm.entries(a, b) == (a == b ? 1 : 0));
      for (const auto& minor : leading_principal_minors(gm.entries)) CHECK(minor >= 0);
      // diagonal = number of constituents counted with squared multiplicity
      for (std::size_t a = 0; a < gm.labels.size(); ++a) {
        std::int64_t s = 0;
        for (const auto& [alpha, m] : restrict_G_to_H(gm.labels[a])) s += static_cast<std::int64_t>(m * m);
        CHECK(gm.entries(a, a) == s);
      }
    }
}

TEST_CASE("exact determinant") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 2;
  CHECK(exact_determinant(m) == 6);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(exact_determinant(swap) == -1);
  IntMatrix singular(2, 2);
  singular << 2, 4, 1, 2;
  CHECK(exact_determinant(singular) == 0);
  CHECK(exact_determinant(gram_matrix(3, 1).entries) == 0);
}

TEST_CASE("basic sets") {
  CHECK(basic_set(2, 3) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(basic_set(3, 3) == std::vector<Partition>{Partition({3}), Partition({1, 1, 1})});
  for (int p : {3, 5, 7})
    for (int n = 1; n <= 10; ++n) {
      const auto basic = basic_set(n, p);
      CHECK(static_cast<int>(basic.size()) == count_without_multiples(n, p));
      if (n < p) CHECK(basic == generate_partitions(n));
      for (const auto& lambda : basic) CHECK(p_core_and_quotient(lambda, p).quotient.at_position(middle_index(p)).empty());
    }
}

TEST_CASE("blocks") {
  const auto three = block_partition(3, 3);
  REQUIRE(three.size() == 1);
  CHECK(three.at(BlockKey{Partition{}, 1}) == generate_partitions(3));
  const auto four = block_partition(4, 3);
  REQUIRE(four.size() == 3);
  CHECK(four.at(BlockKey{Partition({1}), 1}).size() == 3);
  CHECK(four.at(BlockKey{Partition({3, 1}), 0}) == std::vector<Partition>{Partition({3, 1})});
  CHECK(four.at(BlockKey{Partition({2, 1, 1}), 0}) == std::vector<Partition>{Partition({2, 1, 1})});
  const auto five = block_partition(5, 3);
  CHECK(five.size() == 3);
  CHECK(five.at(BlockKey{Partition({3, 1, 1}), 0}).size() == 1);
  CHECK(five.at(BlockKey{Partition({2}), 1}).size() == 3);
  CHECK(five.at(BlockKey{Partition({1, 1}), 1}).size() == 3);

  for (int p : {3, 5, 7})
    for (int n = 1; n <= 10; ++n) {
      const auto blocks = block_partition(n, p);
      std::size_t total = 0;
      for (const auto& [key, members] : blocks) {
        total += members.size();
        CHECK(key.core.size() + p * key.weight == n);
        CHECK(members.size() == generate_multipartitions(key.weight, p).size());
        std::size_t basic_here = 0;
        for (const auto& lambda : members) {
          const auto res = p_core_and_quotient(lambda, p);
          CHECK(res.core == key.core);
          basic_here += res.quotient.at_position(middle_index(p)).empty();
        }
        CHECK(basic_here == generate_multipartitions(key.weight, p - 1).size());
      }
      CHECK(total == generate_partitions(n).size());
      if (n < p) CHECK(blocks.size() == generate_partitions(n).size());
    }
}
