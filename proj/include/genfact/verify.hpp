#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genfact/ordering.hpp"

namespace genfact {

struct VerifyOptions {
  std::uint64_t seed = 7;
  double scale = 1.0;        // multiplies every random instance count
  std::string golden_dir;    // required by the "tables" suite
  std::size_t series_cap = 10;  // truncation of random series; transport raises it as needed
  EngineLimits limits;
};

struct InstanceRecord {
  std::size_t index = 0;
  std::string description;
  bool passed = true;
  std::string detail;  // values compared, or the counterexample
};

struct SuiteReport {
  std::string name;
  std::vector<InstanceRecord> instances;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

/// well-definedness, majorization, superadditivity, monotonicity,
/// divisibility, transport, maxmin, closed-forms, tables.
const std::vector<std::string>& suite_names();

/// Deterministic for fixed options. Throws std::invalid_argument for an
/// unknown suite name; "all" runs every suite in order.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& options);

}  // namespace genfact
