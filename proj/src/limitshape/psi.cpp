#include "lozlab/limitshape/psi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lozlab {

namespace {

void check_args(const Real& a, std::size_t order) {
  if (a.sign() <= 0) throw std::invalid_argument("Psi_a needs a > 0");
  if (order < 2 || order > kMaxPsiOrder)
    throw std::invalid_argument("jet order must lie in [2, " + std::to_string(kMaxPsiOrder) + "]");
}

// Works for Real and Jet alike: both support +, -, * by Real, sqrt and log.
template <class T>
T h_of(const Real& a, const T& u) {
  const T up = u + Real(1);
  const T um = u - Real(1);
  return (up + sqrt(up * up + (a * a + Real(2) * a) * (um * um))) * Real(0.25);
}

// phi = y w0 - F(w0) - 1 - ln(u-1) at the saddle w0 = 1/2 + h/(u-1), with the
// ln(u-1) pieces cancelled; analytic at u = 1.
template <class T>
T phi_of(const Real& a, const T& u) {
  const T h = h_of(a, u);
  const T um = u - Real(1);
  const Real q = a / Real(4);
  const Real qh = q + Real(0.5);
  return qh * log(h - q * um) - (q + Real(1)) * log(h - qh * um) - q * log(h + qh * um) +
         (q - Real(0.5)) * log(h + q * um);
}

template <class T>
T psi_of(const Real& a, const T& u) {
  return (a / Real(2)) * log(u) + Real(2) * phi_of(a, u);
}

}  // namespace

Real psi_h(const Real& a, const Real& u) { return h_of(a, u); }

Real psi_phi(const Real& a, const Real& u) { return phi_of(a, u); }

Real psi_direct(const Real& a, const Real& u) {
  if (u.sign() <= 0) throw std::invalid_argument("Psi_a needs u > 0");
  return psi_of(a, u);
}

Jet psi_jet(const Real& a, std::size_t order) {
  check_args(a, order);
  PrecisionScope scope(std::max(kPsiPrecisionBits, working_precision()));
  const Real a_hi = Real(0) + a;  // lift to the scope precision
  return psi_of(a_hi, Jet::variable(order, Real(1)));
}

Jet h_jet(const Real& a, std::size_t order) {
  check_args(a, order);
  PrecisionScope scope(std::max(kPsiPrecisionBits, working_precision()));
  const Real a_hi = Real(0) + a;  // lift to the scope precision
  return h_of(a_hi, Jet::variable(order, Real(1)));
}

}  // namespace lozlab
