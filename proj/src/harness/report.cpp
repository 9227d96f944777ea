#include "lozlab/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lozlab {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

CheckRecord& SuiteReport::add(CheckRecord record) {
  checks.push_back(std::move(record));
  return checks.back();
}

void SuiteReport::note(const std::string& name, nlohmann::ordered_json value) {
  notes.push_back({{"name", name}, {"value", std::move(value)}});
}

void SuiteReport::absorb(const SuiteReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
  for (const auto& n : other.notes) notes.push_back(n);
}

nlohmann::ordered_json SuiteReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"inputs", c.inputs},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"tol", c.tol},
                   {"pass", c.pass}});
  }
  j["checks"] = std::move(arr);
  j["notes"] = notes;
  j["pass"] = pass();
  j["wall_ms"] = timing ? std::round(wall_ms) : 0.0;
  return j;
}

std::string SuiteReport::dump(bool timing) const { return to_json(timing).dump(2); }

std::string fmt(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

nlohmann::ordered_json sampler_json(const SamplerReport& r) {
  nlohmann::ordered_json j;
  j["method"] = r.method;
  j["samples"] = r.samples;
  j["burn_in_sweeps"] = r.burn_in_sweeps;
  j["thin"] = r.thin;
  j["updates"] = r.updates;
  j["changes"] = r.changes;
  if (r.has_diagnostic) {
    auto means = nlohmann::ordered_json::array();
    auto ses = nlohmann::ordered_json::array();
    for (double v : r.chain_means) means.push_back(fmt(v));
    for (double v : r.chain_ses) ses.push_back(fmt(v));
    j["chain_means_Y1"] = means;
    j["chain_ses_Y1"] = ses;
    j["mean_gap"] = fmt(r.mean_gap);
    j["gap_threshold"] = fmt(r.gap_threshold);
    j["two_chain_diagnostic_pass"] = r.diagnostic_pass;
  }
  return j;
}

void RegimeParams::validate() const {
  if (n <= 0) throw std::invalid_argument("regime needs n >= 1");
  if (m <= 0) throw std::invalid_argument("regime needs m >= 1 (m = 0 has a degenerate scale)");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  switch (regime) {
    case Regime::standard:
      if (!(a > 0.0)) throw std::invalid_argument("standard regime needs a > 0");
      if (std::abs(dm / dn - a) > 0.2 * a) throw std::invalid_argument("standard regime needs m/n within 20% of a");
      break;
    case Regime::tall:
      if (dn * dn > dm) throw std::invalid_argument("tall regime needs n^2 <= m");
      break;
    case Regime::wide:
      if (dm * dm > dn) throw std::invalid_argument("wide regime needs m^2 <= n");
      break;
  }
}

nlohmann::ordered_json RegimeParams::to_json() const {
  nlohmann::ordered_json j{{"regime", regime_name(regime)}, {"n", n}, {"m", m}};
  if (regime == Regime::standard) j["a"] = fmt(a);
  return j;
}

}  // namespace lozlab
