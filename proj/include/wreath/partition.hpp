#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// Integer partition: weakly decreasing positive parts. Immutable value type.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 beyond the last part.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Cell-wise containment of Young diagrams.
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

enum class Indexing { FullP, HIndexed };

/// Tuple of partitions. FullP tuples have p components at positions 1..p;
/// HIndexed tuples have p-1 components at positions I = {1..p} minus r,
/// r = (p+1)/2, stored in increasing position order.
class MultiPartition {
 public:
  MultiPartition() = default;
  /// Generic t-tuple (FullP indexing, no prime attached).
  explicit MultiPartition(std::vector<Partition> components);
  MultiPartition(std::vector<Partition> components, Indexing indexing, int p);

  std::span<const Partition> components() const { return components_; }
  const Partition& operator[](int i) const { return components_.at(i); }
  int length() const { return static_cast<int>(components_.size()); }
  int size() const { return size_; }
  Indexing indexing() const { return indexing_; }
  /// Attached prime, 0 when none.
  int prime() const { return p_; }

  /// Component at 1-based position. For HIndexed labels the
  /// position must lie in I.
  const Partition& at_position(int position) const;

  std::string to_string() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  Indexing indexing_ = Indexing::FullP;
  int p_ = 0;
  int size_ = 0;
};

struct PQuotientResult {
  Partition core;
  MultiPartition quotient;
  int weight = 0;
};

/// r = (p+1)/2.
constexpr int middle_index(int p) { return (p + 1) / 2; }

bool is_prime(int n);
/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(int p);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> generate_partitions(int n);

/// All t-tuples of partitions of total size w. Order: the size vector runs
/// lexicographically decreasing, then each slot in generate_partitions order.
std::vector<MultiPartition> generate_multipartitions(int w, int t);

/// Hook length of every cell; row i has parts[i] entries.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// Beta-set (first-column hook lengths) of lambda padded to `count` entries,
/// decreasing. Requires count >= lambda.length().
std::vector<int> beta_set(const Partition& lambda, int count);
/// Inverse of beta_set for any finite set of distinct nonnegative integers.
Partition from_beta_set(std::vector<int> beta);

bool is_p_core(const Partition& lambda, int p);

/// Abacus computation: runner q holds beads congruent to q mod p, and
/// quotient position q+1 reads runner q. The bead count is the least
/// multiple of p that is >= lambda.length().
PQuotientResult p_core_and_quotient(const Partition& lambda, int p);

/// Inverse of p_core_and_quotient. Throws if `core` is not a p-core or the
/// quotient does not have p components.
Partition reconstruct_from_core_quotient(const Partition& core, const MultiPartition& quotient,
                                         int p);

/// Inserts an empty partition at position r.
MultiPartition hat(const MultiPartition& alpha, int p);
/// Drops position r; requires it to be empty.
MultiPartition unhat(const MultiPartition& gamma, int p);

/// Text formats: "[3,1,1]" and "[[2],[1,1],[]]", whitespace-insensitive.
Partition parse_partition(std::string_view text);
MultiPartition parse_multipartition(std::string_view text);

}  // namespace wreath
