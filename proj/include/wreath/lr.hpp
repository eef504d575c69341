#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wreath/partition.hpp"

namespace wreath {

/// Skew diagram outer/inner. Throws unless inner is contained in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);
  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

 private:
  Partition outer_;
  Partition inner_;
};

/// Number of LR tableaux: semistandard fillings of `shape` with content
/// `content` whose reverse reading word is a lattice word.
std::uint64_t count_lr_tableaux(const SkewShape& shape, const Partition& content);

/// c^outer_{inner,content}; 0 when sizes disagree or inner is not contained in outer.
std::uint64_t lr_coefficient(const Partition& outer, const Partition& inner,
                             const Partition& content);

/// Multiplicity of chi_target in the induction of the outer product of
/// chi_{factors[i]} from the Young subgroup. Empty factors list: 1 iff target empty.
std::uint64_t iterated_lr(const Partition& target, std::span<const Partition> factors);

/// Expansion of the product of the factors' characters, pruned to partitions
/// contained in `bound` when it is given.
std::map<Partition, std::uint64_t> lr_product(std::span<const Partition> factors,
                                              const Partition* bound = nullptr);

struct RestrictionTerm {
  Partition left;   // partition of j
  Partition right;  // partition of |alpha| - j
  std::uint64_t coefficient;
};

/// Res^{S_k}_{S_j x S_{k-j}} chi_alpha as its nonzero LR terms, left factors
/// in generate_partitions order. Throws std::out_of_range unless 0 <= j <= |alpha|.
std::vector<RestrictionTerm> restriction_expansion(const Partition& alpha, int j);

}  // namespace wreath
