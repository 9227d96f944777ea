#include "lozlab/sampler/rescale.hpp"

#include <cmath>
#include <stdexcept>

namespace lozlab {

Regime parse_regime(const std::string& name) {
  if (name == "standard") return Regime::standard;
  if (name == "tall") return Regime::tall;
  if (name == "wide") return Regime::wide;
  throw std::invalid_argument("unknown regime '" + name + "' (expected standard, tall or wide)");
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::standard:
      return "standard";
    case Regime::tall:
      return "tall";
    case Regime::wide:
      return "wide";
  }
  return "?";
}

double regime_divisor(long n, long m, Regime regime) {
  if (m <= 0) throw std::invalid_argument("rescaling needs m >= 1");
  if (n <= 0) throw std::invalid_argument("rescaling needs n >= 1");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  switch (regime) {
    case Regime::standard: {
      const double a = dm / dn;
      return std::sqrt(dn * (a * a + 2 * a) / 8.0);
    }
    case Regime::tall:
      return dm / std::sqrt(8.0 * dn);
    case Regime::wide:
      return 2.0 * std::sqrt(dm);
  }
  throw std::logic_error("unknown regime");
}

std::vector<double> rescale_with(const std::vector<long>& Y, double center, double divisor) {
  std::vector<double> out;
  out.reserve(Y.size());
  for (long y : Y) out.push_back((static_cast<double>(y) - center) / divisor);
  return out;
}

std::vector<double> rescale_positions(const std::vector<long>& Y, long n, long m, Regime regime) {
  return rescale_with(Y, static_cast<double>(m) / 2.0, regime_divisor(n, m, regime));
}

}  // namespace lozlab
