#pragma once

// Small statistics toolkit for the verification suites.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lozlab::stats {

double normal_cdf(double x);
double normal_pdf(double x);

double mean(const std::vector<double>& xs);
/// Unbiased sample variance.
double variance(const std::vector<double>& xs);
/// Naive standard error sqrt(var/n).
double standard_error(const std::vector<double>& xs);
/// Batch-means standard error of the mean of a correlated series.
double batch_means_se(const std::vector<double>& series, std::size_t batches = 50);

/// Kolmogorov-Smirnov distance between the empirical law of xs and a continuous CDF.
double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf);
double ks_normal(const std::vector<double>& xs);

/// KS distance for lattice data: every sample is spread uniformly over
/// [x - half_width, x + half_width] before comparing with the standard normal CDF.
double ks_normal_smoothed(const std::vector<double>& xs, double half_width);

/// Pearson chi-square statistic and upper-tail p-value.
struct ChiSquare {
  double statistic;
  double dof;
  double p_value;
};
ChiSquare chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities);

/// Total-variation distance between empirical frequencies and a law.
double total_variation(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities);

/// Weighted sample of real points with moment and CDF queries; mergeable.
class EmpiricalMeasure {
 public:
  void add(double x, double weight = 1.0);
  void merge(const EmpiricalMeasure& other);

  [[nodiscard]] std::size_t size() const { return xs_.size(); }
  [[nodiscard]] double total_weight() const { return total_; }
  [[nodiscard]] double moment(int r) const;
  [[nodiscard]] double cdf(double t) const;
  [[nodiscard]] double mean() const { return moment(1); }
  [[nodiscard]] const std::vector<double>& points() const { return xs_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ws_;
  double total_ = 0.0;
};

}  // namespace lozlab::stats
