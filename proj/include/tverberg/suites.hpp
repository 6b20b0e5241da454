#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/io.hpp"

namespace tverberg {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Worker threads for independent checks; 0 means the OpenMP default.
  int jobs = 0;
  /// Adds elapsed milliseconds to the records.
  bool timing = false;
  /// Random denominators in [1, 100] instead of 1.
  bool dense_rationals = false;
  /// Primes for degree-factorial.
  std::vector<int> primes = {3, 5, 7};
  /// Overrides the number of random instances per parameter set.
  std::optional<int> trials;
};

struct CheckRecord {
  std::string id;
  Json parameters;
  Json expected;
  Json observed;
  bool pass = false;
  double elapsed_ms = 0;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  bool pass() const;
  Json to_json(const SuiteOptions& options) const;
  std::string to_table(const SuiteOptions& options) const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite; std::invalid_argument for an unknown name.
/// Records come back ordered by id whatever the completion order.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace tverberg
