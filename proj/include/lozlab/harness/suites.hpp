#pragma once
// Verification suites. Each returns a SuiteReport whose verdict depends only
// on its checks; diagnostics that do not decide anything go into notes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lozlab/core/rng.hpp"
#include "lozlab/core/scalar.hpp"
#include "lozlab/harness/report.hpp"
#include "lozlab/sampler/mcmc.hpp"

namespace lozlab {

// --- exact moment generating function ----------------------------------------

struct EbkComparison {
  Real lhs;            // E B_k(x; (Y^k - m/2)/sqrt n) by enumeration
  Real rhs;            // prod exp(-m x_i / (2 sqrt n)) Phi_m(e^{x/sqrt n}; n)
  Real vandermonde;    // prod_{i<j} (e^{a_i} - e^{a_j}) / (a_i - a_j), a = x / sqrt n
  Real relative_difference;            // lhs against rhs
  Real corrected_relative_difference;  // lhs against rhs * vandermonde
};

/// Enumerates every free tiling once and keeps the law of Y^1..Y^kmax.
class EbkOracle {
 public:
  EbkOracle(std::size_t n, long m, std::size_t k_max);
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] long m() const { return m_; }
  [[nodiscard]] const BigInt& total() const { return total_; }
  /// Both sides at the working precision; k = x.size() <= k_max.
  [[nodiscard]] EbkComparison compare(const std::vector<Real>& x) const;

 private:
  std::size_t n_;
  long m_;
  BigInt total_;
  // laws_[k-1]: distinct Y^k tuples with their multiplicities
  std::vector<std::vector<std::pair<std::vector<long>, std::uint64_t>>> laws_;
};

inline constexpr double kEbkTolerance = 1e-9;
inline constexpr unsigned kEbkPrecisionBits = 256;

struct EbkOptions {
  /// Decide on lhs == rhs * vandermonde instead of lhs == rhs.
  bool vandermonde_factor = false;
};

/// Enumeration feasibility bound: n <= 4 and m <= 4.
SuiteReport verify_ebk_identity(std::size_t n, long m, std::size_t k, const std::vector<std::vector<double>>& points,
                                const EbkOptions& options = {});

/// The grid {-1, -1/2, 1/2, 1}^k.
std::vector<std::vector<double>> ebk_grid(std::size_t k);

// --- GUE convergence -------------------------------------------------------------

enum class SamplerMethod { exact, mcmc };
SamplerMethod parse_method(const std::string& name);

struct GueConvergenceOptions {
  SamplerMethod method = SamplerMethod::mcmc;
  Boundary boundary = Boundary::free_top;
  McmcOptions mcmc;            // mcmc.sweeps is derived from samples * thin
  double ks_tolerance = 0.0;   // 0: 0.05 standard, 0.06 tall and wide
  std::uint64_t reference_samples = 0;  // GUE corners draws; 0: same as samples
  bool exact_law = true;       // compare with the exact law of Y^1 when m <= 64 or n m <= 8192
};

SuiteReport verify_gue_convergence(const RegimeParams& params, std::size_t k, std::uint64_t samples, RngStream& rng,
                                   const GueConvergenceOptions& options = {});

// --- MGF asymptotics -------------------------------------------------------------

inline constexpr double kMgfFinalGap = 0.02;

SuiteReport verify_mgf_convergence(double a, const std::vector<long>& n_grid, const std::vector<double>& y);

// --- exact identities --------------------------------------------------------------

struct ExactSuiteOptions {
  /// Binomial used by the Jacobi-Trudi dimension check; swappable so a test can
  /// corrupt it and watch the suite fail.
  std::function<BigInt(long, long)> binomial = [](long n, long k) { return lozlab::binomial(n, k); };
};

SuiteReport verify_exact_suite(const ExactSuiteOptions& options = {});

// --- limit shape -------------------------------------------------------------------

struct LimitShapeOptions {
  SamplerMethod method = SamplerMethod::mcmc;
  McmcOptions mcmc;
  bool hexagon = true;
  double relative_tolerance = 0.05;
  double se_multiplier = 3.0;
};

SuiteReport verify_limit_shape(double a, double x, std::size_t n, std::uint64_t samples, int r_max, RngStream& rng,
                               const LimitShapeOptions& options = {});

}  // namespace lozlab
