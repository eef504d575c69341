#pragma once

#include <cstdint>
#include <string>

namespace wreath::cli {

inline constexpr int kMaxWeight = 8;
inline constexpr int kMaxN = 40;

struct RunConfig {
  int p = 3;
  int w = 0;
  int n = 1;
  std::string format = "json";
  std::string out;
  bool quiet = false;
  std::string outer, inner, content;
};

/// Throws std::invalid_argument on a non-prime p or w, n outside the guards.
void check_config(const RunConfig& cfg, bool uses_w, bool uses_n);

std::string kmatrix(const RunConfig& cfg);
std::string gram(const RunConfig& cfg);
/// Basic-set listing, or every partition plus the block grouping.
std::string partitions_report(const RunConfig& cfg, bool blocks_view);
std::string lr(const RunConfig& cfg);
/// Oracle element guard: WREATH_GUARD_ELEMS when set, else the library default.
std::uint64_t element_guard();
/// Sets `ok` to whether every claim passed (skips do not count as failures).
std::string verify(const RunConfig& cfg, bool& ok);

}  // namespace wreath::cli
