#include "wreath/decomp.hpp"

#include <functional>
#include <stdexcept>

#include "wreath/lr.hpp"

namespace wreath {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("degree overflows 64 bits");
  return out;
}

MultiPartition with_indexing(MultiPartition m, Indexing indexing, int p) {
  return MultiPartition(std::vector<Partition>(m.components().begin(), m.components().end()),
                        indexing, p);
}

void require_same(const HLabel& alpha, const GLabel& gamma) {
  if (alpha.prime() != gamma.prime()) throw std::invalid_argument("labels for different primes");
  if (alpha.weight() != gamma.weight()) throw std::invalid_argument("labels of different weight");
}

}  // namespace

GLabel::GLabel(MultiPartition label, int p)
    : label_(with_indexing(std::move(label), Indexing::FullP, (require_odd_prime(p), p))) {}

GLabel GLabel::parse(std::string_view text, int p) { return GLabel(parse_multipartition(text), p); }

HLabel::HLabel(MultiPartition label, int p)
    : label_(with_indexing(std::move(label), Indexing::HIndexed, (require_odd_prime(p), p))) {}

HLabel HLabel::parse(std::string_view text, int p) { return HLabel(parse_multipartition(text), p); }

std::vector<int> index_set(int p) {
  std::vector<int> out;
  for (int i = 1; i <= p; ++i)
    if (i != middle_index(p)) out.push_back(i);
  return out;
}

std::vector<GLabel> g_labels(int p, int w) {
  require_odd_prime(p);
  std::vector<GLabel> out;
  for (auto& m : generate_multipartitions(w, p)) out.emplace_back(std::move(m), p);
  return out;
}

std::vector<HLabel> h_labels(int p, int w) {
  require_odd_prime(p);
  std::vector<HLabel> out;
  for (auto& m : generate_multipartitions(w, p - 1)) out.emplace_back(std::move(m), p);
  return out;
}

GLabel hat(const HLabel& alpha) { return GLabel(hat(alpha.value(), alpha.prime()), alpha.prime()); }

std::uint64_t k_coefficient(const HLabel& alpha, const GLabel& gamma) {
  require_same(alpha, gamma);
  const int p = alpha.prime();
  const auto positions = index_set(p);

  // Candidate beta^i with their factor c^{alpha^i}_{beta^i, gamma^i} != 0.
  std::vector<std::vector<std::pair<Partition, std::uint64_t>>> options;
  int removed = 0;
  for (int i : positions) {
    const Partition& a = alpha.at(i);
    const Partition& g = gamma.at(i);
    if (g.size() > a.size() || !a.contains(g)) return 0;
    const int b = a.size() - g.size();
    removed += b;
    auto& opts = options.emplace_back();
    for (auto& beta : generate_partitions(b))
      if (const auto c = lr_coefficient(a, beta, g)) opts.emplace_back(std::move(beta), c);
    if (opts.empty()) return 0;
  }
  const Partition& middle = gamma.middle();
  if (middle.size() != removed) return 0;

  std::uint64_t total = 0;
  std::vector<Partition> betas(positions.size());
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t slot, std::uint64_t prod) {
    if (slot == options.size()) {
      total += prod * iterated_lr(middle, betas);
      return;
    }
    for (const auto& [beta, c] : options[slot]) {
      betas[slot] = beta;
      rec(slot + 1, prod * c);
    }
  };
  rec(0, 1);
  return total;
}

std::map<GLabel, std::uint64_t> induce_H_to_G(const HLabel& alpha) {
  const int p = alpha.prime();
  const int r = middle_index(p);
  const auto positions = index_set(p);

  // gamma^i ranges over sub-diagrams of alpha^i.
  std::vector<std::vector<Partition>> choices;
  for (int i : positions) {
    auto& list = choices.emplace_back();
    for (int s = 0; s <= alpha.at(i).size(); ++s)
      for (auto& g : generate_partitions(s))
        if (alpha.at(i).contains(g)) list.push_back(std::move(g));
  }

  std::map<GLabel, std::uint64_t> out;
  std::vector<Partition> comps(p);
  std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int used) {
    if (slot == positions.size()) {
      for (auto& mid : generate_partitions(alpha.weight() - used)) {
        comps[r - 1] = std::move(mid);
        GLabel gamma(MultiPartition(comps), p);
        if (const auto k = k_coefficient(alpha, gamma)) out.emplace(std::move(gamma), k);
      }
      return;
    }
    for (const auto& g : choices[slot]) {
      comps[positions[slot] - 1] = g;
      rec(slot + 1, used + g.size());
    }
  };
  rec(0, 0);
  return out;
}

std::map<HLabel, std::uint64_t> restrict_G_to_H(const GLabel& gamma) {
  std::map<HLabel, std::uint64_t> out;
  for (const auto& alpha : h_labels(gamma.prime(), gamma.weight()))
    if (const auto k = k_coefficient(alpha, gamma)) out.emplace(alpha, k);
  return out;
}

std::uint64_t degree_G(const GLabel& gamma) {
  const int p = gamma.prime();
  std::uint64_t deg = factorial(gamma.weight());
  for (int i = 1; i <= p; ++i) {
    const Partition& part = gamma.at(i);
    deg /= factorial(part.size());
    deg = checked_mul(deg, degree(part));
  }
  for (int k = 0; k < gamma.middle().size(); ++k) deg = checked_mul(deg, p - 1);
  return deg;
}

std::uint64_t degree_H(const HLabel& alpha) {
  std::uint64_t deg = factorial(alpha.weight());
  for (int i : index_set(alpha.prime())) {
    const Partition& part = alpha.at(i);
    deg /= factorial(part.size());
    deg = checked_mul(deg, degree(part));
  }
  return deg;
}

DecompositionMatrix decomposition_matrix(int p, int w) {
  DecompositionMatrix k{p, w, h_labels(p, w), g_labels(p, w), {}};
  std::map<GLabel, Eigen::Index> col_of;
  for (std::size_t c = 0; c < k.cols.size(); ++c) col_of.emplace(k.cols[c], c);

  std::vector<Eigen::Triplet<std::int64_t>> triplets;
  for (std::size_t row = 0; row < k.rows.size(); ++row)
    for (const auto& [gamma, value] : induce_H_to_G(k.rows[row]))
      triplets.emplace_back(row, col_of.at(gamma), static_cast<std::int64_t>(value));

  k.entries.resize(static_cast<Eigen::Index>(k.rows.size()),
                   static_cast<Eigen::Index>(k.cols.size()));
  k.entries.setFromTriplets(triplets.begin(), triplets.end());
  return k;
}

GramMatrix gram_matrix(const DecompositionMatrix& k) {
  const SparseIntMatrix product = SparseIntMatrix(k.entries.transpose()) * k.entries;
  return {k.p, k.w, k.cols, IntMatrix(product)};
}

GramMatrix gram_matrix(int p, int w) { return gram_matrix(decomposition_matrix(p, w)); }

std::vector<Partition> basic_set(int n, int p) {
  std::vector<Partition> out;
  for (auto& lambda : generate_partitions(n))
    if (p_core_and_quotient(lambda, p).quotient[middle_index(p) - 1].empty())
      out.push_back(std::move(lambda));
  return out;
}

std::map<BlockKey, std::vector<Partition>> block_partition(int n, int p) {
  std::map<BlockKey, std::vector<Partition>> blocks;
  for (auto& lambda : generate_partitions(n)) {
    auto res = p_core_and_quotient(lambda, p);
    blocks[BlockKey{std::move(res.core), res.weight}].push_back(std::move(lambda));
  }
  return blocks;
}

}  // namespace wreath
