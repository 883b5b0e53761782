#pragma once

#include <functional>
#include <string>
#include <vector>

#include "redux/parallel.hpp"

namespace redux::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  ///< wall-clock budget in seconds
};

struct Options {
  Exec exec = Exec::parallel;
  std::vector<int> only;  ///< empty runs all fourteen
};

/// Runs the acceptance criteria in order; `on_result` sees each one as it finishes.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [k] title: detail (t s)".
std::string format_line(const CriterionResult& r);

inline constexpr int kCriterionCount = 14;

}  // namespace redux::acceptance
