#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "wreath/partition.hpp"

namespace wreath {

/// Cycle type of a permutation in S_k, stored as a partition of k.
using CycleType = Partition;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// chi_lambda(rho) by the Murnaghan-Nakayama rule. Memoized; the cache is
/// shared and thread-safe. Throws std::invalid_argument on size mismatch.
std::int64_t mn_value(const Partition& lambda, const CycleType& rho);
/// Same recursion with no memo table.
std::int64_t mn_value_uncached(const Partition& lambda, const CycleType& rho);

/// Hook length formula.
std::uint64_t degree(const Partition& lambda);

/// z_rho = prod_m m^{a_m} a_m!, the centralizer order of a permutation of type rho.
std::uint64_t centralizer_order(const CycleType& rho);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

inline constexpr int kMaxCharacterTableSize = 12;

/// Rows and columns indexed by generate_partitions(k).
IntMatrix character_table_sn(int k);

}  // namespace wreath
