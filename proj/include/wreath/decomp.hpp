#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/SparseCore>

#include "wreath/partition.hpp"
#include "wreath/sn_char.hpp"

namespace wreath {

/// Label of an irreducible character of G_w = (Z_p x| Z_{p-1}) wr S_w:
/// a p-multipartition of w.
class GLabel {
 public:
  /// Throws unless `label` has p components (p an odd prime).
  GLabel(MultiPartition label, int p);
  static GLabel parse(std::string_view text, int p);

  const MultiPartition& value() const { return label_; }
  int prime() const { return label_.prime(); }
  int weight() const { return label_.size(); }
  /// gamma^i, i in 1..p.
  const Partition& at(int position) const { return label_.at_position(position); }
  /// gamma^r.
  const Partition& middle() const { return at(middle_index(prime())); }
  std::string to_string() const { return label_.to_string(); }

  friend bool operator==(const GLabel&, const GLabel&) = default;
  friend auto operator<=>(const GLabel& a, const GLabel& b) { return a.label_ <=> b.label_; }

 private:
  MultiPartition label_;
};

/// Label of an irreducible character of H_w = Z_{p-1} wr S_w: a
/// (p-1)-multipartition of w indexed by I = {1..p} minus r.
class HLabel {
 public:
  HLabel(MultiPartition label, int p);
  static HLabel parse(std::string_view text, int p);

  const MultiPartition& value() const { return label_; }
  int prime() const { return label_.prime(); }
  int weight() const { return label_.size(); }
  /// alpha^i for i in I.
  const Partition& at(int position) const { return label_.at_position(position); }
  std::string to_string() const { return label_.to_string(); }

  friend bool operator==(const HLabel&, const HLabel&) = default;
  friend auto operator<=>(const HLabel& a, const HLabel& b) { return a.label_ <=> b.label_; }

 private:
  MultiPartition label_;
};

/// Positions I = {1..p} minus r, increasing.
std::vector<int> index_set(int p);

/// All labels of weight w in generate_multipartitions order.
std::vector<GLabel> g_labels(int p, int w);
std::vector<HLabel> h_labels(int p, int w);

GLabel hat(const HLabel& alpha);

/// Multiplicity of chi^gamma in Ind_{H_w}^{G_w} xi^alpha (equivalently of
/// xi^alpha in Res chi^gamma). Throws std::invalid_argument on p or w mismatch.
std::uint64_t k_coefficient(const HLabel& alpha, const GLabel& gamma);

std::map<GLabel, std::uint64_t> induce_H_to_G(const HLabel& alpha);
std::map<HLabel, std::uint64_t> restrict_G_to_H(const GLabel& gamma);

std::uint64_t degree_G(const GLabel& gamma);
std::uint64_t degree_H(const HLabel& alpha);

using SparseIntMatrix = Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>;

struct DecompositionMatrix {
  int p = 0;
  int w = 0;
  std::vector<HLabel> rows;
  std::vector<GLabel> cols;
  SparseIntMatrix entries;
};

DecompositionMatrix decomposition_matrix(int p, int w);

struct GramMatrix {
  int p = 0;
  int w = 0;
  std::vector<GLabel> labels;
  IntMatrix entries;
};

/// <Res chi^g1, Res chi^g2>_{H_w} for all pairs, i.e. K^T K.
GramMatrix gram_matrix(int p, int w);
GramMatrix gram_matrix(const DecompositionMatrix& k);

/// Partitions of n whose p-quotient has empty component r.
std::vector<Partition> basic_set(int n, int p);

struct BlockKey {
  Partition core;
  int weight = 0;
  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Partitions of n grouped by p-core; members keep generate_partitions order.
std::map<BlockKey, std::vector<Partition>> block_partition(int n, int p);

}  // namespace wreath
