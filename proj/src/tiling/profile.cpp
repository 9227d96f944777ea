#include "lozlab/tiling/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lozlab {

double profile_eval(const Signature& lambda, double x) {
  auto lam = lambda.parts();
  const std::size_t N = lam.size();
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i <= N; ++i) {
    const double li = static_cast<double>(lam[i - 1]);
    const double upper = (i == 1) ? inf : static_cast<double>(lam[i - 2]) - static_cast<double>(i) + 1;
    const double lower = li - static_cast<double>(i) + 1;
    if (x >= lower && x <= upper) return 2.0 * static_cast<double>(i - 1) + x;
    if (x >= li - static_cast<double>(i) && x <= lower) return 2.0 * li - x;
  }
  return 2.0 * static_cast<double>(N) + x;
}

CountingMeasure::CountingMeasure(const Signature& lambda) : CountingMeasure(lambda.parts()) {}

CountingMeasure::CountingMeasure(const std::vector<long>& parts) {
  const std::size_t N = parts.size();
  atoms_.reserve(N);
  for (std::size_t i = 1; i <= N; ++i)
    atoms_.push_back(static_cast<double>(parts[i - 1] + static_cast<long>(N - i)) / static_cast<double>(N));
  for (std::size_t i = 1; i < N; ++i)
    if (!(atoms_[i] < atoms_[i - 1])) throw std::invalid_argument("counting measure needs a weakly decreasing signature");
}

double CountingMeasure::moment(int r) const {
  if (atoms_.empty()) return 0.0;
  double s = 0.0;
  for (double a : atoms_) s += std::pow(a, r);
  return s / static_cast<double>(atoms_.size());
}

double CountingMeasure::cdf(double t) const {
  if (atoms_.empty()) return 0.0;
  auto below = std::count_if(atoms_.begin(), atoms_.end(), [t](double a) { return a <= t; });
  return static_cast<double>(below) / static_cast<double>(atoms_.size());
}

}  // namespace lozlab
