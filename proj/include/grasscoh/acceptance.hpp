#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grasscoh/bott.hpp"

namespace grasscoh {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `id` (1..10). Criterion 1 yields two lines: the
/// literal statement and its Serre-closed form.
std::vector<CriterionResult> run_criterion(int id, TwistWindow window = {});

/// All criteria in order; `on_result` is called as each line completes.
std::vector<CriterionResult> run_acceptance(TwistWindow window = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3  sequence ledger (0.42 s)" followed by indented details.
std::string format_result(const CriterionResult& r, bool with_details = true);

}  // namespace grasscoh
