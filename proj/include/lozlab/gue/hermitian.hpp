#pragma once

// Small dense Hermitian matrices and a cyclic complex Jacobi eigensolver.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lozlab {

class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t k) : k_(k), a_(k * k) {}

  [[nodiscard]] std::size_t size() const { return k_; }
  [[nodiscard]] std::complex<double> operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }

  /// Sets entry (i, j) and its mirror; diagonal entries must be real.
  void set(std::size_t i, std::size_t j, std::complex<double> v);

  /// Leading principal j x j submatrix.
  [[nodiscard]] HermitianMatrix leading(std::size_t j) const;

  [[nodiscard]] double trace() const;
  [[nodiscard]] double frobenius_squared() const;

 private:
  std::size_t k_;
  std::vector<std::complex<double>> a_;
};

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-14;

/// Eigenvalues in decreasing order; throws EigenError past the sweep cap.
std::vector<double> eigenvalues(const HermitianMatrix& m);

}  // namespace lozlab
