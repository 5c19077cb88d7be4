#pragma once

#include <string>

#include "fspt/io.hpp"

namespace fspt {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,              // ok / equivalent / reduced
  kExitViolation = 1,       // violation / inequivalent / internal inconsistency
  kExitBudgetExceeded = 2,  // search budget exhausted without a decision
  kExitInputError = 3,      // parse, schema, or argument errors
};

struct Report {
  std::string command;
  Json options = Json::object();
  Json result = Json::object();
  int exit_status = kExitOk;
};

/// Deterministic JSON bytes (sorted keys, canonical fractions, no floats).
std::string emit_json(const Report& r);
/// Human-oriented rendering of the same data.
std::string emit_text(const Report& r);

}  // namespace fspt
