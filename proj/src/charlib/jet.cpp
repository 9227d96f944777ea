#include "lozlab/charlib/jet.hpp"

#include <stdexcept>

namespace lozlab {

Jet::Jet(std::size_t order, Real base) : base_(std::move(base)), c_(order + 1, Real(0)) {}

Jet Jet::constant(std::size_t order, const Real& base, const Real& value) {
  Jet j(order, base);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(std::size_t order, const Real& base) {
  Jet j(order, base);
  j.c_[0] = base;
  if (order >= 1) j.c_[1] = Real(1);
  return j;
}

Real Jet::derivative(std::size_t k) const { return Real(factorial(static_cast<long>(k))) * c_.at(k); }

Jet Jet::differentiate() const {
  if (order() == 0) throw std::invalid_argument("cannot differentiate an order-0 jet");
  Jet d(order() - 1, base_);
  for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = Real(static_cast<long>(k)) * c_[k];
  return d;
}

void Jet::check_compatible(const Jet& other) const {
  if (other.c_.size() != c_.size()) throw std::invalid_argument("jets of different order");
  if (!(other.base_ == base_)) throw std::invalid_argument("jets at different base points");
}

Jet& Jet::operator+=(const Jet& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
  check_compatible(rhs);
  std::vector<Real> out(c_.size(), Real(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) out[k] += c_[j] * rhs.c_[k - j];
  c_ = std::move(out);
  return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
  check_compatible(rhs);
  if (rhs.c_[0].is_zero()) throw std::domain_error("jet division by a series with zero constant term");
  std::vector<Real> q(c_.size(), Real(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Real acc = c_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= rhs.c_[j] * q[k - j];
    q[k] = acc / rhs.c_[0];
  }
  c_ = std::move(q);
  return *this;
}

Jet& Jet::operator+=(const Real& s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator*=(const Real& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Jet exp(const Jet& a) {
  Jet e(a.order(), a.base());
  e.coeff(0) = exp(a.coeff(0));
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Real acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += Real(static_cast<long>(j)) * a.coeff(j) * e.coeff(k - j);
    e.coeff(k) = acc / Real(static_cast<long>(k));
  }
  return e;
}

Jet log(const Jet& a) {
  if (a.coeff(0).sign() <= 0) throw std::domain_error("jet logarithm needs a positive constant term");
  Jet l(a.order(), a.base());
  l.coeff(0) = log(a.coeff(0));
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Real acc(0);
    for (std::size_t j = 1; j < k; ++j) acc += Real(static_cast<long>(j)) * l.coeff(j) * a.coeff(k - j);
    l.coeff(k) = (a.coeff(k) - acc / Real(static_cast<long>(k))) / a.coeff(0);
  }
  return l;
}

Jet sqrt(const Jet& a) {
  if (a.coeff(0).sign() <= 0) throw std::domain_error("jet square root needs a positive constant term");
  Jet s(a.order(), a.base());
  s.coeff(0) = sqrt(a.coeff(0));
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Real acc(0);
    for (std::size_t j = 1; j < k; ++j) acc += s.coeff(j) * s.coeff(k - j);
    s.coeff(k) = (a.coeff(k) - acc) / (Real(2) * s.coeff(0));
  }
  return s;
}

Jet pow(const Jet& a, unsigned exponent) {
  Jet out = Jet::constant(a.order(), a.base(), Real(1));
  Jet b = a;
  while (exponent > 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return out;
}

Jet compose(const Jet& outer, const Jet& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("compose needs jets of equal order");
  if (!(outer.base() == inner.coeff(0))) throw std::invalid_argument("outer jet is not expanded at inner(base)");
  // Horner in d = inner - inner(base), which has zero constant term.
  Jet d = inner;
  d.coeff(0) = Real(0);
  Jet acc = Jet::constant(inner.order(), inner.base(), outer.coeff(outer.order()));
  for (std::size_t k = outer.order(); k-- > 0;) {
    acc *= d;
    acc += outer.coeff(k);
  }
  return acc;
}

}  // namespace lozlab
