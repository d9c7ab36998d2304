#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zosc/zeros.hpp"

namespace zosc {

struct AcceptConfig {
  std::size_t n_zeros = 100'000;
  // X_max of the Goldbach sums; 1e6 is the full profile, below that the
  // reduced spread tolerance applies.
  std::int64_t n_max = 1'000'000;
  std::uint64_t seed = 1;
  // Worker count for the determinism re-run; 0 picks max(2, hardware).
  unsigned threads = 0;
  // Re-run criteria 1-9 on one thread and compare (criterion 10).
  bool check_determinism = true;
};

enum class Status { Pass, Fail, SoftFail };

[[nodiscard]] const char* status_name(Status s);

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string summary;
  nlohmann::ordered_json metrics;
};

struct AcceptReport {
  AcceptConfig config;
  std::string zeros_source;
  std::vector<CriterionResult> criteria;

  [[nodiscard]] bool passed() const;  // no criterion has Status::Fail
  // Thread counts are left out so reports from different runs can be compared byte for byte.
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// Runs criteria 1-10. Progress lines (with timings) go to `log` when given;
/// the report itself carries no timings.
[[nodiscard]] AcceptReport run_acceptance(const AcceptConfig& config, const ZeroTable& table,
                                          std::ostream* log = nullptr);

/// One line per criterion: "[PASS] 3 name: summary".
void print_summary(const AcceptReport& report, std::ostream& out);

}  // namespace zosc
