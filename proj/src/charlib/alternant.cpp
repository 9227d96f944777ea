#include "lozlab/charlib/alternant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <type_traits>
#include <stdexcept>

#include "lozlab/core/matrix.hpp"

namespace lozlab::alternant {
namespace {

bool same_node(const Rational& a, const Rational& b) { return a == b; }
bool same_node(double a, double b) { return a == b; }

bool same_node(const Real& a, const Real& b) {
  const long p = static_cast<long>(std::min(a.precision(), b.precision()));
  Real tol = pow(Real(2), -(3 * p) / 4);
  Real scale = std::max(abs(a), abs(b), [](const Real& x, const Real& y) { return x < y; });
  if (scale < Real(1)) scale = Real(1);
  return abs(a - b) <= tol * scale;
}

// Generalised binomial C(e, r) for integer e.
template <class T>
T gbinom(long e, std::size_t r) {
  return ScalarTraits<T>::from_bigint(binomial(e, static_cast<long>(r)));
}

template <class T>
T ipow(const T& base, long e) {
  if constexpr (std::is_same_v<T, Rational>) {
    return pow_int(base, e);
  } else if constexpr (std::is_same_v<T, double>) {
    return std::pow(base, static_cast<double>(e));
  } else {
    return pow(base, e);
  }
}

// Taylor vectors of A_0..A_lmax at v0, each truncated to `order` terms.
template <class T>
std::vector<std::vector<T>> cheb_table(const T& v0, long lmax, std::size_t order) {
  std::vector<std::vector<T>> t(static_cast<std::size_t>(lmax) + 2, std::vector<T>(order, T(0)));
  if (order == 0) return t;
  t[1][0] = T(1);
  for (long l = 1; l <= lmax; ++l) {
    const auto& cur = t[static_cast<std::size_t>(l)];
    const auto& prev = t[static_cast<std::size_t>(l - 1)];
    auto& next = t[static_cast<std::size_t>(l + 1)];
    for (std::size_t r = 0; r < order; ++r) {
      T val = v0 * cur[r] - prev[r];
      if (r > 0) val += cur[r - 1];
      next[r] = std::move(val);
    }
  }
  return t;
}

long cheb_reach(const Column& c) {
  switch (c.family) {
    case Family::ChebA:
      return std::labs(c.index);
    case Family::ChebB: {
      long k = (c.index - 1) / 2;
      return std::max(std::labs(k), std::labs(k + 1));
    }
    default:
      return 0;
  }
}

template <class T>
std::vector<T> cheb_lookup(const std::vector<std::vector<T>>& table, long l) {
  std::vector<T> out = table[static_cast<std::size_t>(std::labs(l))];
  if (l < 0)
    for (auto& x : out) x = -x;
  return out;
}

template <class T>
std::vector<T> column_taylor(const Column& c, const T& center, std::size_t order,
                             const std::vector<std::vector<T>>* table) {
  switch (c.family) {
    case Family::Power: {
      std::vector<T> out;
      out.reserve(order);
      for (std::size_t r = 0; r < order; ++r) {
        T coef = gbinom<T>(c.index, r);
        if (ScalarTraits<T>::is_zero(coef)) {
          out.push_back(T(0));
        } else {
          if (ScalarTraits<T>::is_zero(center) && c.index - static_cast<long>(r) < 0)
            throw std::domain_error("negative power at a zero node");
          out.push_back(coef * ipow(center, c.index - static_cast<long>(r)));
        }
      }
      return out;
    }
    case Family::ChebA:
      return cheb_lookup(*table, c.index);
    case Family::ChebB: {
      if ((c.index & 1) == 0) throw std::invalid_argument("ChebB index must be odd");
      long k = (c.index - 1) / 2;
      auto a = cheb_lookup(*table, k + 1);
      auto b = cheb_lookup(*table, k);
      for (std::size_t r = 0; r < order; ++r) a[r] += b[r];
      return a;
    }
  }
  throw std::logic_error("unknown column family");
}

}  // namespace

template <class T>
std::vector<Node<T>> group(const std::vector<T>& points) {
  std::vector<Node<T>> nodes;
  for (const auto& p : points) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node<T>& nd) { return same_node(nd.center, p); });
    if (it == nodes.end()) {
      nodes.push_back({p, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return nodes;
}

template <class T>
std::vector<T> taylor(const Column& column, const T& center, std::size_t order) {
  std::vector<std::vector<T>> table;
  if (column.family != Family::Power) table = cheb_table(center, cheb_reach(column), order);
  return column_taylor(column, center, order, &table);
}

template <class T>
T confluent_det(const std::vector<Column>& columns, const std::vector<Node<T>>& nodes) {
  const std::size_t n = columns.size();
  std::size_t total = 0;
  for (const auto& nd : nodes) total += nd.multiplicity;
  if (total != n) throw std::invalid_argument("node multiplicities do not match the column count");

  long reach = 0;
  for (const auto& c : columns) reach = std::max(reach, cheb_reach(c));
  bool needs_table = std::any_of(columns.begin(), columns.end(), [](const Column& c) { return c.family != Family::Power; });

  SquareMatrix<T> m(n);
  std::size_t row = 0;
  for (const auto& nd : nodes) {
    std::vector<std::vector<T>> table;
    if (needs_table) table = cheb_table(nd.center, reach, nd.multiplicity);
    for (std::size_t j = 0; j < n; ++j) {
      auto coeffs = column_taylor(columns[j], nd.center, nd.multiplicity, &table);
      for (std::size_t r = 0; r < nd.multiplicity; ++r) m(row + r, j) = std::move(coeffs[r]);
    }
    row += nd.multiplicity;
  }
  return determinant(m);
}

template <class T>
T schur_ratio(const std::vector<Column>& columns, const std::vector<Node<T>>& nodes) {
  const long k = static_cast<long>(columns.size());
  std::vector<Column> vander;
  for (long j = 0; j < k; ++j) vander.push_back({Family::Power, k - 1 - j});
  T den = confluent_det(vander, nodes);
  if (ScalarTraits<T>::is_zero(den)) throw std::domain_error("degenerate Vandermonde denominator");
  return confluent_det(columns, nodes) / den;
}

template std::vector<Node<Rational>> group(const std::vector<Rational>&);
template std::vector<Node<Real>> group(const std::vector<Real>&);
template std::vector<Rational> taylor(const Column&, const Rational&, std::size_t);
template std::vector<Real> taylor(const Column&, const Real&, std::size_t);
template Rational confluent_det(const std::vector<Column>&, const std::vector<Node<Rational>>&);
template Real confluent_det(const std::vector<Column>&, const std::vector<Node<Real>>&);
template Rational schur_ratio(const std::vector<Column>&, const std::vector<Node<Rational>>&);
template Real schur_ratio(const std::vector<Column>&, const std::vector<Node<Real>>&);

template std::vector<Node<double>> group(const std::vector<double>&);
template std::vector<double> taylor(const Column&, const double&, std::size_t);
template double confluent_det(const std::vector<Column>&, const std::vector<Node<double>>&);
template double schur_ratio(const std::vector<Column>&, const std::vector<Node<double>>&);

}  // namespace lozlab::alternant
