#include "wreath/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("skew shape: " + inner_.to_string() + " not contained in " +
                                outer_.to_string());
}

namespace {

// Fills cells in reading order (rows top to bottom, each row right to left),
// pruning on row weakness, column strictness, and the lattice condition.
class LrEnumerator {
 public:
  LrEnumerator(const SkewShape& shape, const Partition& content)
      : outer_(shape.outer()), inner_(shape.inner()), content_(content) {
    for (int i = 0; i < outer_.length(); ++i) {
      rows_.emplace_back(outer_[i], 0);
      for (int c = outer_[i] - 1; c >= inner_[i]; --c) cells_.push_back({i, c});
    }
    used_.assign(content_.length() + 1, 0);
  }

  std::uint64_t count() { return descend(0); }

 private:
  struct Cell {
    int row, col;
  };

  std::uint64_t descend(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [i, c] = cells_[k];
    int hi = content_.length();
    if (c + 1 < outer_[i]) hi = std::min(hi, rows_[i][c + 1]);
    int lo = 1;
    if (i > 0 && c >= inner_[i - 1]) lo = rows_[i - 1][c] + 1;

    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= content_[v - 1]) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      rows_[i][c] = v;
      total += descend(k + 1);
      --used_[v];
    }
    rows_[i][c] = 0;
    return total;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& content_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;
  std::vector<int> used_;
};

}  // namespace

std::uint64_t count_lr_tableaux(const SkewShape& shape, const Partition& content) {
  if (shape.size() != content.size()) return 0;
  return LrEnumerator(shape, content).count();
}

std::uint64_t lr_coefficient(const Partition& outer, const Partition& inner,
                             const Partition& content) {
  if (outer.size() != inner.size() + content.size() || !outer.contains(inner) ||
      !outer.contains(content))
    return 0;
  return count_lr_tableaux(SkewShape(outer, inner), content);
}

std::map<Partition, std::uint64_t> lr_product(std::span<const Partition> factors,
                                              const Partition* bound) {
  std::map<Partition, std::uint64_t> acc{{Partition{}, 1}};
  int total = 0;
  for (const auto& factor : factors) {
    total += factor.size();
    std::map<Partition, std::uint64_t> next;
    const auto candidates = generate_partitions(total);
    for (const auto& [mu, mult] : acc) {
      for (const auto& nu : candidates) {
        if (bound && !bound->contains(nu)) continue;
        if (!nu.contains(mu) || !nu.contains(factor)) continue;
        const std::uint64_t c = lr_coefficient(nu, mu, factor);
        if (c) next[nu] += mult * c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::uint64_t iterated_lr(const Partition& target, std::span<const Partition> factors) {
  int total = 0;
  for (const auto& f : factors) total += f.size();
  if (total != target.size()) return 0;
  const auto product = lr_product(factors, &target);
  const auto it = product.find(target);
  return it == product.end() ? 0 : it->second;
}

std::vector<RestrictionTerm> restriction_expansion(const Partition& alpha, int j) {
  if (j < 0 || j > alpha.size())
    throw std::out_of_range("restriction_expansion: j outside [0, |alpha|]");
  std::vector<RestrictionTerm> terms;
  const auto rights = generate_partitions(alpha.size() - j);
  for (const auto& beta : generate_partitions(j)) {
    if (!alpha.contains(beta)) continue;
    for (const auto& gamma : rights)
      if (const auto c = lr_coefficient(alpha, beta, gamma)) terms.push_back({beta, gamma, c});
  }
  return terms;
}

}  // namespace wreath
