#include "lozlab/limitshape/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "lozlab/limitshape/psi.hpp"
#include "lozlab/tiling/profile.hpp"

namespace lozlab {

namespace {

void check_line(const Real& x) {
  if (x.sign() <= 0 || x >= Real(1)) throw std::invalid_argument("line coordinate x must lie in (0,1)");
}

Real moment_from_jet(int r, const Real& x, const Jet& dpsi) {
  // dpsi has order >= r; every derivative below needs order r only.
  const Jet u = Jet::variable(dpsi.order(), Real(1));
  const Jet ur = pow(u, static_cast<unsigned>(r));
  Real total(0);
  for (int l = 0; l <= r; ++l) {
    const Jet f = ur * pow(dpsi, static_cast<unsigned>(r - l));
    const Real term = Real(binomial(r, l)) / Real(factorial(l + 1)) * pow(x, static_cast<long>(l - r)) *
                      f.derivative(static_cast<std::size_t>(l));
    total += term;
  }
  return total;
}

}  // namespace

std::vector<Real> limit_moments(int r_max, const Real& x, const Real& a, std::size_t order) {
  check_line(x);
  if (r_max < 0) throw std::invalid_argument("moment order must be non-negative");
  if (static_cast<std::size_t>(r_max) + 1 > order)
    throw std::invalid_argument("moment order r needs a jet of order at least r + 1");
  const Jet dpsi = psi_jet(a, order).differentiate();
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(r_max) + 1);
  out.emplace_back(1);
  PrecisionScope scope(std::max(kPsiPrecisionBits, working_precision()));
  for (int r = 1; r <= r_max; ++r) out.push_back(moment_from_jet(r, x, dpsi));
  return out;
}

Real limit_moment(int r, const Real& x, const Real& a, std::size_t order) {
  return limit_moments(r, x, a, order).back();
}

std::size_t line_index(double fraction, std::size_t n) {
  if (!(fraction > 0.0) || fraction > 1.0) throw std::invalid_argument("line fraction must lie in (0,1]");
  const auto k = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
  if (k == 0) throw std::invalid_argument("line floor(fraction * n) must be at least 1");
  return k;
}

MomentAccumulator::MomentAccumulator(int r_max, std::size_t line)
    : r_max_(r_max), line_(line), sum_(static_cast<std::size_t>(r_max) + 1, 0.0), sum_sq_(sum_.size(), 0.0) {
  if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
  if (line == 0) throw std::invalid_argument("line must be at least 1");
}

void MomentAccumulator::add_row(const std::vector<long>& mu) {
  if (mu.size() != line_) throw std::invalid_argument("row length does not match the accumulator line");
  const CountingMeasure cm(mu);
  for (int r = 0; r <= r_max_; ++r) {
    const double v = cm.moment(r);
    sum_[r] += v;
    sum_sq_[r] += v * v;
  }
  ++count_;
}

void MomentAccumulator::add(const GTPattern& pattern) {
  if (pattern.depth() < line_) throw std::invalid_argument("pattern shallower than the accumulator line");
  add_row(pattern.row_vector(line_));
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.r_max_ != r_max_ || other.line_ != line_) throw std::invalid_argument("incompatible accumulators");
  for (std::size_t r = 0; r < sum_.size(); ++r) {
    sum_[r] += other.sum_[r];
    sum_sq_[r] += other.sum_sq_[r];
  }
  count_ += other.count_;
}

MomentVector MomentAccumulator::result(double fraction) const {
  if (count_ == 0) throw std::invalid_argument("no samples accumulated");
  MomentVector out;
  out.x = fraction;
  out.line = line_;
  out.samples = count_;
  const auto n = static_cast<double>(count_);
  for (std::size_t r = 0; r < sum_.size(); ++r) {
    const double mean = sum_[r] / n;
    const double var = count_ > 1 ? std::max(0.0, (sum_sq_[r] - n * mean * mean) / (n - 1.0)) : 0.0;
    out.values.push_back(r == 0 ? 1.0 : mean);
    out.standard_errors.push_back(r == 0 ? 0.0 : std::sqrt(var / n));
  }
  return out;
}

namespace {

MomentVector moments_on(const std::vector<GTPattern>& samples, double fraction, int r_max, std::size_t n) {
  MomentAccumulator acc(r_max, line_index(fraction, n));
  for (const auto& p : samples) acc.add(p);
  return acc.result(fraction);
}

}  // namespace

MomentVector empirical_moments(const std::vector<GTPattern>& samples, double line_fraction, int r_max) {
  if (samples.empty()) throw std::invalid_argument("empirical_moments needs at least one sample");
  return moments_on(samples, line_fraction, r_max, samples.front().depth());
}

MomentVector hexagon_moments(const std::vector<GTPattern>& samples, double line_fraction, int r_max) {
  if (samples.empty()) throw std::invalid_argument("hexagon_moments needs at least one sample");
  if (samples.front().depth() % 2 != 0) throw std::invalid_argument("hexagon patterns have even depth");
  return moments_on(samples, line_fraction, r_max, samples.front().depth() / 2);
}

}  // namespace lozlab
