#pragma once

// Profile function w_lambda and counting measure m[lambda] of a signature.

#include <cstddef>
#include <vector>

#include "lozlab/core/signature.hpp"

namespace lozlab {

/// Border of the rotated Young diagram: x right of the diagram, x + 2N left of it.
double profile_eval(const Signature& lambda, double x);

/// m[lambda] = (1/N) sum_i delta((lambda_i + N - i)/N).
class CountingMeasure {
 public:
  explicit CountingMeasure(const Signature& lambda);
  explicit CountingMeasure(const std::vector<long>& parts);

  [[nodiscard]] const std::vector<double>& atoms() const { return atoms_; }
  [[nodiscard]] double weight() const { return atoms_.empty() ? 0.0 : 1.0 / static_cast<double>(atoms_.size()); }
  [[nodiscard]] double moment(int r) const;
  [[nodiscard]] double cdf(double t) const;

 private:
  std::vector<double> atoms_;
};

inline CountingMeasure counting_measure(const Signature& lambda) { return CountingMeasure(lambda); }

}  // namespace lozlab
