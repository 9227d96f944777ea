#include "lozlab/gue/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lozlab {

void HermitianMatrix::set(std::size_t i, std::size_t j, std::complex<double> v) {
  if (i == j && v.imag() != 0.0) throw std::invalid_argument("Hermitian diagonal must be real");
  a_[i * k_ + j] = v;
  a_[j * k_ + i] = std::conj(v);
}

HermitianMatrix HermitianMatrix::leading(std::size_t j) const {
  if (j > k_) throw std::invalid_argument("leading submatrix larger than the matrix");
  HermitianMatrix out(j);
  for (std::size_t r = 0; r < j; ++r)
    for (std::size_t c = 0; c < j; ++c) out.a_[r * j + c] = a_[r * k_ + c];
  return out;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < k_; ++i) t += a_[i * k_ + i].real();
  return t;
}

double HermitianMatrix::frobenius_squared() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return s;
}

std::vector<double> eigenvalues(const HermitianMatrix& input) {
  const std::size_t k = input.size();
  std::vector<std::complex<double>> a(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = input(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> std::complex<double>& { return a[i * k + j]; };

  const double scale = std::max(input.frobenius_squared(), 1e-300);
  bool converged = k <= 1;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) off += std::norm(at(p, q));
    if (off <= kJacobiTolerance * kJacobiTolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double mag = std::abs(at(p, q));
        if (mag == 0.0) continue;
        // Phase q so that a_pq becomes real and positive.
        const std::complex<double> phase = at(p, q) / mag;  // e^{i phi}
        for (std::size_t r = 0; r < k; ++r) {
          at(r, q) *= std::conj(phase);
          at(q, r) *= phase;
        }
        at(q, q) = std::complex<double>(at(q, q).real(), 0.0);
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t r = 0; r < k; ++r) {
          if (r == p || r == q) continue;
          const std::complex<double> arp = at(r, p);
          const std::complex<double> arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
          at(p, r) = std::conj(at(r, p));
          at(q, r) = std::conj(at(r, q));
        }
        at(p, p) = app - t * mag;
        at(q, q) = aqq + t * mag;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) off += std::norm(at(p, q));
    if (off > kJacobiTolerance * kJacobiTolerance * scale)
      throw EigenError("Jacobi eigensolver did not converge within " + std::to_string(kJacobiMaxSweeps) + " sweeps");
  }
  std::vector<double> ev(k);
  for (std::size_t i = 0; i < k; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace lozlab
