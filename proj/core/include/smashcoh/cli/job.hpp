#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smashcoh/ext/lhs.hpp"

namespace smashcoh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::vector<std::string> errors)
      : std::runtime_error(what), errors_(std::move(errors)) {}
  /// One "line N: ..." entry per problem.
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct LHSInput {
  FiniteGroup n, g;
  GroupAction action;
};

struct JobSpec {
  std::string name;
  Field field;
  std::string task = "hh";
  int maxdeg = 3;
  int pages = 4;
  Filtration filtration = Filtration::column;
  /// "text" or "json".
  std::string output = "text";
  std::optional<ModuleAlgebraAction> action;
  std::optional<AlgebraExtension> extension;
  std::optional<SmashModule> module;
  std::optional<LHSInput> lhs;
};

/// Command-line values that take precedence over the file.
struct JobOverrides {
  std::optional<std::string> field, task;
  std::optional<int> maxdeg, pages;
};

inline const std::vector<std::string>& job_tasks() {
  static const std::vector<std::string> t{"validate", "hh", "ext", "ss", "oracle-compare", "lhs"};
  return t;
}

/// Throws ParseError for malformed input and ValidationError when the described
/// structures violate their axioms.
JobSpec parse_job(const std::string& path, const JobOverrides& over = {});
JobSpec parse_job_text(const std::string& text, const std::string& name, const JobOverrides& over = {});

}  // namespace smashcoh
