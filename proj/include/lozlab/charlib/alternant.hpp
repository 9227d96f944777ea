#pragma once

// Generalised alternants det[f_j(t_i)] with repeated nodes.
//
// When a node t appears with multiplicity mu, its mu rows are replaced by the
// Taylor coefficients f_j^{(r)}(t)/r!, r = 0..mu-1. The ratio of two such
// determinants over the same nodes is the exact limit of the ratio at
// distinct nodes, which is how characters are evaluated at repeated points.
//
// Column families:
//   Power(e)  f(x) = x^e, integer e
//   ChebA(L)  f(v) = (z^L - z^-L)/(z - 1/z) with v = z + 1/z; a polynomial in v
//   ChebB(s)  f(v) = sum_{|j|<=(s-1)/2} z^j for odd s, i.e. A_{K+1} + A_K

#include <cstddef>
#include <vector>

#include "lozlab/core/scalar.hpp"

namespace lozlab::alternant {

enum class Family { Power, ChebA, ChebB };

struct Column {
  Family family;
  long index;
};

template <class T>
struct Node {
  T center;
  std::size_t multiplicity;
};

/// Groups equal points, preserving first-occurrence order. Rational and double
/// group by equality; Real groups within relative tolerance 2^(-3p/4).
template <class T>
std::vector<Node<T>> group(const std::vector<T>& points);

/// Taylor coefficients f^{(r)}(c)/r! for r = 0..order-1.
template <class T>
std::vector<T> taylor(const Column& column, const T& center, std::size_t order);

/// Confluent determinant of the given columns over the grouped nodes. The
/// total multiplicity must equal the number of columns.
template <class T>
T confluent_det(const std::vector<Column>& columns, const std::vector<Node<T>>& nodes);

/// Vandermonde-normalised value: confluent_det(columns) / confluent_det(Power(k-1..0)).
template <class T>
T schur_ratio(const std::vector<Column>& columns, const std::vector<Node<T>>& nodes);

}  // namespace lozlab::alternant
