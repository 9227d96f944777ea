#pragma once

// Suite reports: one record per check plus free-form notes that never affect
// the verdict.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lozlab/sampler/mcmc.hpp"
#include "lozlab/sampler/rescale.hpp"

namespace lozlab {

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string expected;
  std::string observed;
  std::string tol;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  double wall_ms = 0.0;

  [[nodiscard]] bool pass() const;
  CheckRecord& add(CheckRecord record);
  void note(const std::string& name, nlohmann::ordered_json value);
  void absorb(const SuiteReport& other);

  /// `{suite, seed, checks, notes, pass, wall_ms}`; wall_ms is written as 0
  /// when `timing` is false so reruns are byte-identical.
  [[nodiscard]] nlohmann::ordered_json to_json(bool timing = true) const;
  [[nodiscard]] std::string dump(bool timing = true) const;
};

/// Fixed-precision decimal formatting used for every numeric field.
std::string fmt(double value, int digits = 10);

nlohmann::ordered_json sampler_json(const SamplerReport& report);

/// Scaling regime with size parameters; validate() throws std::invalid_argument.
struct RegimeParams {
  Regime regime = Regime::standard;
  long n = 0;
  long m = 0;
  double a = 1.0;  // standard regime only

  void validate() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

}  // namespace lozlab
