#pragma once

// GUE-corners process: eigenvalues of the leading principal submatrices of a
// GUE matrix, its eigenvalue density and the Bessel moment generating function.
//
// Convention: diagonal entries N(0,1), off-diagonal real and imaginary parts
// N(0,1/2). Eigenvalue density on R^k is
//   Delta(e)^2 exp(-|e|^2/2) / ((2 pi)^{k/2} prod_{j=1}^{k} j!).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lozlab/core/rng.hpp"
#include "lozlab/gue/hermitian.hpp"

namespace lozlab {

struct CornersSample {
  /// levels[j-1] holds the j eigenvalues of the j x j corner, decreasing.
  std::vector<std::vector<double>> levels;

  [[nodiscard]] std::size_t depth() const { return levels.size(); }
  [[nodiscard]] const std::vector<double>& level(std::size_t j) const { return levels.at(j - 1); }
  /// Largest interlacing defect (0 when the array interlaces exactly).
  [[nodiscard]] double interlacing_defect() const;
};

HermitianMatrix sample_gue_matrix(std::size_t k, RngStream& rng);
CornersSample corners_of(const HermitianMatrix& h);
CornersSample sample_gue_corners(std::size_t k, RngStream& rng);

double gue_density(std::size_t k, const std::vector<double>& eps);

/// exp(|x|^2 / 2).
double mgf_gue(const std::vector<double>& x);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Average of B_k(x; eps^k) over GUE draws, k = x.size().
MonteCarloEstimate mgf_gue_mc(const std::vector<double>& x, std::uint64_t samples, RngStream& rng);

/// Importance-sampling estimate of the integral of gue_density over R^k.
MonteCarloEstimate gue_density_mass(std::size_t k, std::uint64_t samples, RngStream& rng);

}  // namespace lozlab
