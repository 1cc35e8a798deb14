#pragma once

#include <optional>
#include <string>

namespace treecount {

// Outcome of one exact identity check over an index range [lo, hi].
// passed is true iff failure_index is absent. For single-point checks
// (lo == hi) lhs/rhs carry both sides whether or not the check passed.
struct VerificationReport {
  std::string identity;
  long lo = 0;
  long hi = 0;
  bool passed = true;
  std::optional<long> failure_index;
  std::string lhs;
  std::string rhs;
  std::string note;
};

}  // namespace treecount
