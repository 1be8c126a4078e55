#pragma once

#include <string>
#include <vector>

namespace qpd {

/// Outcome of checking one published claim. Hard verdicts gate the exit status
/// of `qpd verify`; soft ones are measured and reported.
struct Verdict {
  std::string name;
  bool passed = false;
  bool hard = false;
  double measured = 0.0;
  std::string detail;
};

inline bool all_hard_passed(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.hard && !v.passed) return false;
  }
  return true;
}

}  // namespace qpd
