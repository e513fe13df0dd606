#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bmt {

enum class SelftestLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs acceptance criteria 1-9 (or only criterion `only` when nonzero).
/// Quick shrinks sample sizes and sweep bounds; Full uses the counts and
/// time budgets the criteria state.
std::vector<CriterionResult> run_acceptance(SelftestLevel level, int threads = 1,
                                            const std::function<void(const CriterionResult&)>& on_result = {},
                                            int only = 0);

/// "[PASS] 3 chi bound ... (1.2s / 120s) detail"
std::string format_result(const CriterionResult& r);

}  // namespace bmt
