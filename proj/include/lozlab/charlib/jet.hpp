#pragma once

// Truncated Taylor series ("jets") at a base point, with exact truncation
// for arithmetic and the elementary functions used by the limit-shape code.

#include <cstddef>
#include <vector>

#include "lozlab/core/scalar.hpp"

namespace lozlab {

class Jet {
 public:
  /// Zero jet of the given order at `base`.
  Jet(std::size_t order, Real base);
  /// Constant jet.
  static Jet constant(std::size_t order, const Real& base, const Real& value);
  /// The independent variable t itself: value base, slope 1.
  static Jet variable(std::size_t order, const Real& base);

  [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
  [[nodiscard]] const Real& base() const { return base_; }
  [[nodiscard]] const Real& coeff(std::size_t k) const { return c_.at(k); }
  Real& coeff(std::size_t k) { return c_.at(k); }
  [[nodiscard]] const std::vector<Real>& coeffs() const { return c_; }

  /// k-th derivative at the base point: k! * coeff(k).
  [[nodiscard]] Real derivative(std::size_t k) const;
  /// d/dt as a jet of one lower order.
  [[nodiscard]] Jet differentiate() const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator/=(const Jet& rhs);
  Jet& operator+=(const Real& s);
  Jet& operator*=(const Real& s);
  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator+(Jet a, const Real& s) { return a += s; }
  friend Jet operator-(Jet a, const Real& s) { return a += -s; }
  friend Jet operator*(Jet a, const Real& s) { return a *= s; }
  friend Jet operator*(const Real& s, Jet a) { return a *= s; }

 private:
  void check_compatible(const Jet& other) const;

  Real base_;
  std::vector<Real> c_;
};

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, unsigned exponent);

/// outer(inner(t)): `outer` must be a jet at the point inner.coeff(0).
Jet compose(const Jet& outer, const Jet& inner);

}  // namespace lozlab
