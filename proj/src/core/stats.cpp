#include "lozlab/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace lozlab::stats {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mu = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return s / static_cast<double>(xs.size() - 1);
}

double standard_error(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

double batch_means_se(const std::vector<double>& series, std::size_t batches) {
  const std::size_t n = series.size();
  if (batches < 2 || n < 2 * batches) return standard_error(series);
  const std::size_t len = n / batches;
  std::vector<double> means;
  means.reserve(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    double s = 0.0;
    for (std::size_t i = b * len; i < (b + 1) * len; ++i) s += series[i];
    means.push_back(s / static_cast<double>(len));
  }
  // Never report less than the iid standard error.
  return std::max(standard_error(means), standard_error(series));
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw std::invalid_argument("KS distance of an empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_normal(const std::vector<double>& xs) { return ks_distance(xs, normal_cdf); }

double ks_normal_smoothed(const std::vector<double>& xs, double half_width) {
  if (xs.empty()) throw std::invalid_argument("KS distance of an empty sample");
  if (!(half_width > 0.0)) return ks_normal(xs);
  std::map<double, double> atoms;
  for (double x : xs) atoms[x] += 1.0;
  const double n = static_cast<double>(xs.size());
  std::vector<double> centers;
  std::vector<double> cum;  // mass strictly left of each atom's cell
  double acc = 0.0;
  for (const auto& [c, w] : atoms) {
    centers.push_back(c);
    cum.push_back(acc);
    acc += w;
  }
  auto smooth_cdf = [&](double t) {
    // Cells may overlap only if atoms are closer than 2*half_width; handle generally.
    double f = 0.0;
    auto hi = std::upper_bound(centers.begin(), centers.end(), t + half_width);
    auto lo = std::lower_bound(centers.begin(), centers.end(), t - half_width);
    std::size_t first = static_cast<std::size_t>(lo - centers.begin());
    f = first < cum.size() ? cum[first] : acc;
    for (auto it = lo; it != hi; ++it) {
      double frac = std::clamp((t - (*it - half_width)) / (2 * half_width), 0.0, 1.0);
      f += atoms.at(*it) * frac;
    }
    return f / n;
  };
  // Piecewise-linear empirical CDF against a smooth CDF: scan a fine grid
  // inside every cell plus the cell edges.
  double d = 0.0;
  const int sub = 32;
  for (double c : centers) {
    for (int s = 0; s <= sub; ++s) {
      double t = c - half_width + 2 * half_width * s / sub;
      d = std::max(d, std::abs(smooth_cdf(t) - normal_cdf(t)));
    }
  }
  return d;
}

ChiSquare chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities) {
  if (counts.size() != probabilities.size() || counts.size() < 2)
    throw std::invalid_argument("chi-square needs matching count and probability vectors of length >= 2");
  double n = 0.0;
  for (auto c : counts) n += static_cast<double>(c);
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double e = n * probabilities[i];
    if (e <= 0.0) throw std::invalid_argument("chi-square needs positive expected counts");
    double diff = static_cast<double>(counts[i]) - e;
    stat += diff * diff / e;
  }
  double dof = static_cast<double>(counts.size() - 1);
  double p = boost::math::gamma_q(dof / 2.0, stat / 2.0);
  return {stat, dof, p};
}

double total_variation(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities) {
  if (counts.size() != probabilities.size()) throw std::invalid_argument("total variation needs matching vectors");
  double n = 0.0;
  for (auto c : counts) n += static_cast<double>(c);
  if (n == 0.0) throw std::invalid_argument("total variation of an empty sample");
  double s = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) s += std::abs(static_cast<double>(counts[i]) / n - probabilities[i]);
  return 0.5 * s;
}

void EmpiricalMeasure::add(double x, double weight) {
  if (weight < 0.0) throw std::invalid_argument("negative weight");
  xs_.push_back(x);
  ws_.push_back(weight);
  total_ += weight;
}

void EmpiricalMeasure::merge(const EmpiricalMeasure& other) {
  xs_.insert(xs_.end(), other.xs_.begin(), other.xs_.end());
  ws_.insert(ws_.end(), other.ws_.begin(), other.ws_.end());
  total_ += other.total_;
}

double EmpiricalMeasure::moment(int r) const {
  if (total_ <= 0.0) throw std::invalid_argument("moment of an empty measure");
  double s = 0.0;
  for (std::size_t i = 0; i < xs_.size(); ++i) s += ws_[i] * std::pow(xs_[i], r);
  return s / total_;
}

double EmpiricalMeasure::cdf(double t) const {
  if (total_ <= 0.0) throw std::invalid_argument("CDF of an empty measure");
  double s = 0.0;
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (xs_[i] <= t) s += ws_[i];
  return s / total_;
}

}  // namespace lozlab::stats
