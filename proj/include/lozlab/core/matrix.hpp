#pragma once

// Dense square matrices and determinants over exact and floating scalars.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lozlab/core/scalar.hpp"

namespace lozlab {

template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j) std::swap(a_[i * n_ + j], a_[k * n_ + j]);
  }

 private:
  std::size_t n_;
  std::vector<T> a_;
};

namespace detail {

// Fraction-free (Bareiss) elimination keeps intermediate sizes bounded by
// minors; valid over any field, so it is used for the exact scalars.
template <class T>
T bareiss(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ScalarTraits<T>::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && ScalarTraits<T>::is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <class T>
T partial_pivot(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    auto best = ScalarTraits<T>::magnitude(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      auto mag = ScalarTraits<T>::magnitude(m(i, k));
      if (best < mag) {
        best = mag;
        p = i;
      }
    }
    if (ScalarTraits<T>::is_zero(m(p, k))) return T(0);
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ScalarTraits<T>::is_zero(m(i, k))) continue;
      T f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

template <class T>
T determinant(const SquareMatrix<T>& m) {
  if constexpr (ScalarTraits<T>::exact) {
    return detail::bareiss(m);
  } else {
    return detail::partial_pivot(m);
  }
}

}  // namespace lozlab
