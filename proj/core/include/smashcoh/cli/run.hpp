#pragma once

#include <string>

#include "smashcoh/cli/job.hpp"

namespace smashcoh {

inline constexpr const char* kVersion = "0.1.0";

struct Report {
  std::string text;
  /// Serialized JSON document.
  std::string json;
  int exit_code = 0;
};

/// Runs the job's task. Output is deterministic: exact scalars, fixed key order.
Report run_job(const JobSpec& job);

}  // namespace smashcoh
