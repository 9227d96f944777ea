#pragma once

// Exact uniform samplers for free-boundary and hexagon tilings.
//
// A uniform pattern is drawn top-down. The free top row lambda is drawn with
// probability s_lambda(1^n)/phi_m(1^n) from a cumulative big-integer table;
// each lower row mu is then drawn with probability s_mu(1^{k-1})/s_lambda(1^k).
// Lower rows are sampled entry by entry: the interval constraints on mu are
// independent and s_mu(1^{k-1}) is a Vandermonde in mu_i + k-1-i, so marginal
// weights are determinants whose unfixed rows are power sums over intervals.

#include <cstdint>
#include <utility>
#include <vector>

#include "lozlab/core/rng.hpp"
#include "lozlab/core/scalar.hpp"
#include "lozlab/tiling/pattern.hpp"

namespace lozlab {

/// Every mu interlacing lambda with its exact probability s_mu(1^{k-1})/s_lambda(1^k).
std::vector<std::pair<std::vector<long>, Rational>> branching_distribution(const std::vector<long>& lambda);

/// Draws rows depth-1..1 below a fixed top row.
void sample_below(GTPattern& pattern, RngStream& rng);

class ExactFreeSampler {
 public:
  /// Builds the top-row table; throws CapExceeded when C(n+m, n) exceeds the cap.
  ExactFreeSampler(std::size_t n, long m, std::uint64_t cap = kEnumerationCap);

  GTPattern sample(RngStream& rng) const;

  [[nodiscard]] const BigInt& total() const { return cumulative_.back(); }
  [[nodiscard]] std::size_t table_size() const { return tops_.size(); }

 private:
  std::size_t n_;
  long m_;
  std::vector<std::vector<long>> tops_;
  std::vector<BigInt> cumulative_;
};

class ExactHexSampler {
 public:
  ExactHexSampler(std::size_t n, long m);
  GTPattern sample(RngStream& rng) const;

 private:
  std::size_t n_;
  long m_;
};

inline GTPattern exact_sample_free(std::size_t n, long m, RngStream& rng) { return ExactFreeSampler(n, m).sample(rng); }
inline GTPattern exact_sample_hex(std::size_t n, long m, RngStream& rng) { return ExactHexSampler(n, m).sample(rng); }

}  // namespace lozlab
