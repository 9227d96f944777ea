#pragma once

// Moments of the limiting counting measure on a vertical line, and their
// empirical counterparts from sampled tilings.

#include <cstddef>
#include <vector>

#include "lozlab/core/scalar.hpp"
#include "lozlab/tiling/pattern.hpp"

namespace lozlab {

/// r-th moment of the limit measure at line x in (0,1) for aspect ratio a.
/// Needs r <= order - 1.
Real limit_moment(int r, const Real& x, const Real& a, std::size_t order = 12);

/// Moments 0..r_max sharing one Psi jet.
std::vector<Real> limit_moments(int r_max, const Real& x, const Real& a, std::size_t order = 12);

/// Line index floor(fraction * n), never rounded.
std::size_t line_index(double fraction, std::size_t n);

struct MomentVector {
  double x = 0.0;   // line fraction
  std::size_t line = 0;
  std::size_t samples = 0;
  std::vector<double> values;           // r = 0..r_max
  std::vector<double> standard_errors;  // iid standard errors of the sample means
};

/// Mergeable running sums of per-tiling moments of m[mu] on one line.
class MomentAccumulator {
 public:
  MomentAccumulator(int r_max, std::size_t line);

  void add_row(const std::vector<long>& mu);
  void add(const GTPattern& pattern);
  void merge(const MomentAccumulator& other);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t samples() const { return count_; }
  [[nodiscard]] MomentVector result(double fraction) const;

 private:
  int r_max_;
  std::size_t line_;
  std::size_t count_ = 0;
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
};

/// Free-boundary tilings (depth n): line floor(fraction * n).
MomentVector empirical_moments(const std::vector<GTPattern>& samples, double line_fraction, int r_max);

/// Hexagon tilings (depth 2n): line floor(fraction * n).
MomentVector hexagon_moments(const std::vector<GTPattern>& samples, double line_fraction, int r_max);

}  // namespace lozlab
