#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/oracle.hpp"

namespace wreath::oracle {

enum class Outcome { Pass, Fail, Skipped };

struct VerificationRecord {
  std::string claim;
  std::string parameters;
  std::string expected;
  std::string computed;
  Outcome outcome = Outcome::Pass;
};

const char* to_string(Outcome outcome);

/// Runs every brute-force check available at (p, w): base-group character
/// relations, class structure, irreducibility, the restriction identities, the
/// Mackey multiplicities, the induced-character reconstruction, and full
/// agreement of oracle restrictions with the label-level engine. Groups above
/// `guard` elements produce Skipped records instead of failures.
std::vector<VerificationRecord> run_verification(int p, int w,
                                                 std::uint64_t guard = kDefaultElementGuard);

bool all_passed(const std::vector<VerificationRecord>& records);

}  // namespace wreath::oracle
