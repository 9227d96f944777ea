#include "lozlab/gue/corners.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lozlab/charlib/characters.hpp"

namespace lozlab {

double CornersSample::interlacing_defect() const {
  double worst = 0.0;
  for (std::size_t j = 1; j < levels.size(); ++j) {
    const auto& lo = levels[j - 1];
    const auto& hi = levels[j];
    for (std::size_t i = 0; i < lo.size(); ++i) {
      worst = std::max(worst, lo[i] - hi[i]);
      worst = std::max(worst, hi[i + 1] - lo[i]);
    }
  }
  return worst;
}

HermitianMatrix sample_gue_matrix(std::size_t k, RngStream& rng) {
  if (k == 0) throw std::invalid_argument("GUE dimension must be positive");
  HermitianMatrix h(k);
  const double s = std::sqrt(0.5);
  for (std::size_t i = 0; i < k; ++i) {
    h.set(i, i, rng.gaussian());
    for (std::size_t j = i + 1; j < k; ++j) {
      const double re = s * rng.gaussian();
      const double im = s * rng.gaussian();
      h.set(i, j, {re, im});
    }
  }
  return h;
}

CornersSample corners_of(const HermitianMatrix& h) {
  CornersSample out;
  out.levels.reserve(h.size());
  for (std::size_t j = 1; j <= h.size(); ++j) out.levels.push_back(eigenvalues(h.leading(j)));
  return out;
}

CornersSample sample_gue_corners(std::size_t k, RngStream& rng) { return corners_of(sample_gue_matrix(k, rng)); }

namespace {

double log_normaliser(std::size_t k) {
  double z = 0.5 * static_cast<double>(k) * std::log(2.0 * std::numbers::pi);
  for (std::size_t j = 1; j <= k; ++j) z += std::lgamma(static_cast<double>(j) + 1.0);
  return z;
}

double vandermonde_squared(const std::vector<double>& e) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) v *= (e[i] - e[j]) * (e[i] - e[j]);
  return v;
}

MonteCarloEstimate summarise(double sum, double sum_sq, std::uint64_t n) {
  MonteCarloEstimate out;
  out.samples = n;
  const auto dn = static_cast<double>(n);
  out.estimate = sum / dn;
  const double var = n > 1 ? std::max(0.0, (sum_sq - dn * out.estimate * out.estimate) / (dn - 1.0)) : 0.0;
  out.standard_error = std::sqrt(var / dn);
  return out;
}

}  // namespace

double gue_density(std::size_t k, const std::vector<double>& eps) {
  if (k == 0 || eps.size() != k) throw std::invalid_argument("gue_density needs k >= 1 values");
  double sq = 0.0;
  for (double e : eps) sq += e * e;
  return vandermonde_squared(eps) * std::exp(-0.5 * sq - log_normaliser(k));
}

double mgf_gue(const std::vector<double>& x) {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  return std::exp(0.5 * sq);
}

MonteCarloEstimate mgf_gue_mc(const std::vector<double>& x, std::uint64_t samples, RngStream& rng) {
  if (x.empty()) throw std::invalid_argument("mgf_gue_mc needs at least one coordinate");
  if (samples == 0) throw std::invalid_argument("mgf_gue_mc needs samples > 0");
  const std::size_t k = x.size();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto ev = eigenvalues(sample_gue_matrix(k, rng));
    const double b = bessel_B(x, ev);
    sum += b;
    sum_sq += b * b;
  }
  return summarise(sum, sum_sq, samples);
}

MonteCarloEstimate gue_density_mass(std::size_t k, std::uint64_t samples, RngStream& rng) {
  if (k == 0 || samples == 0) throw std::invalid_argument("gue_density_mass needs k, samples > 0");
  // Proposal N(0, I_k): density ratio is Delta^2 / prod j!.
  const double log_fact = log_normaliser(k) - 0.5 * static_cast<double>(k) * std::log(2.0 * std::numbers::pi);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<double> e(k);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& v : e) v = rng.gaussian();
    const double w = vandermonde_squared(e) * std::exp(-log_fact);
    sum += w;
    sum_sq += w * w;
  }
  return summarise(sum, sum_sq, samples);
}

}  // namespace lozlab
