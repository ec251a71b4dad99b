#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcat/errors.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/io.hpp"
#include "fibcat/verdict.hpp"

namespace fibcat {

// Names accepted by --predicates, in report order.
const std::vector<std::string>& predicate_names();

struct PredicateOutcome {
  std::string predicate;
  bool applicable = true;
  std::string reason;  // why it was skipped
  std::vector<PredicateVerdict> verdicts;
  double millis = 0;
};

struct AnalysisReport {
  std::string input_digest;
  std::vector<PredicateOutcome> outcomes;
  bool all_hold() const;
};

// An empty list runs every predicate and skips those whose preconditions
// fail. An explicit list rethrows the first precondition error instead.
// Unknown names throw SchemaError.
AnalysisReport analyze(const Fibration& p, const std::vector<std::string>& predicates = {},
                       unsigned jobs = 1);

Json report_to_json(const Fibration& p, const AnalysisReport& r, bool with_timing = true);

}  // namespace fibcat
