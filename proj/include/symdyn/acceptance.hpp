#pragma once

#include <string>
#include <vector>

namespace symdyn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The ten acceptance criteria, windows and tolerances pinned in code. The
/// window may extend the exact-equality checks beyond the pinned minimum of
/// 12 but never below it.
std::vector<CriterionResult> run_acceptance(int window = 12);

}  // namespace symdyn
