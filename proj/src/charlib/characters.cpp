#include "lozlab/charlib/characters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "lozlab/charlib/alternant.hpp"
#include "lozlab/core/matrix.hpp"

namespace lozlab {

using alternant::Column;
using alternant::Family;

namespace {

template <class T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

template <class T>
T from_q(const Rational& q) {
  return ScalarTraits<T>::from_rational(q);
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

// value^(1/2 * doubled_exponent); exact flavour throws when irrational.
template <class T>
T half_power(const T& value, long doubled_exponent) {
  if constexpr (std::is_same_v<T, Rational>) {
    auto r = exact_pow_half(value, doubled_exponent);
    if (!r) throw std::domain_error("half-integer power of " + to_string(value) + " is irrational; use the Real overload");
    return *r;
  } else {
    return pow_half(value, doubled_exponent);
  }
}

template <class T>
void require_nonzero(const std::vector<T>& xs) {
  for (const auto& x : xs)
    if (is_zero(x)) throw std::invalid_argument("evaluation point has a zero coordinate");
}

template <class T>
std::vector<T> check_point(const EvalPoint<T>& point, std::size_t N) {
  if (point.size() != N)
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(N));
  auto xs = point.expanded();
  require_nonzero(xs);
  return xs;
}

template <class T>
std::vector<T> v_coords(const std::vector<T>& xs) {
  std::vector<T> v;
  v.reserve(xs.size());
  for (const auto& x : xs) v.push_back(x + T(1) / x);
  return v;
}

// --- Schur -----------------------------------------------------------------------

template <class T>
T schur_impl(const Signature& lambda_in, const std::vector<T>& xs) {
  const std::size_t N = xs.size();
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  if (lambda.length() != N) throw std::invalid_argument("signature length must equal the number of variables");
  T prefactor(1);
  if (lambda.half_integer()) {
    // s_{mu + 1/2} = prod x_i^{1/2} s_mu
    T prod(1);
    for (const auto& x : xs) prod *= x;
    prefactor = half_power(prod, 1);
    lambda = lambda.shifted(-1);
  }
  std::vector<Column> cols;
  for (std::size_t j = 0; j < N; ++j)
    cols.push_back({Family::Power, lambda.doubled_part(j) / 2 + static_cast<long>(N - 1 - j)});
  return prefactor * alternant::schur_ratio(cols, alternant::group(xs));
}

template <class T>
T normalized_schur_impl(const Signature& lambda_in, const T& x, std::size_t N) {
  if (is_zero(x)) throw std::invalid_argument("normalized Schur function needs x != 0");
  if (x == T(1)) throw std::invalid_argument("normalized Schur function at x = 1 is 1 by definition");
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  if (lambda.length() != N) throw std::invalid_argument("signature length must equal N");
  // Doubled l_i = 2 lambda_i + 2(N - i); differences are even so weights are exact.
  std::vector<long> dl(N);
  for (std::size_t i = 0; i < N; ++i) dl[i] = lambda.doubled_part(i) + 2 * static_cast<long>(N - 1 - i);
  const bool half = lambda.half_integer();
  T sum(0);
  for (std::size_t i = 0; i < N; ++i) {
    BigInt den(1);
    for (std::size_t j = 0; j < N; ++j)
      if (j != i) den *= (dl[i] - dl[j]) / 2;
    long e = half ? (dl[i] - 1) / 2 : dl[i] / 2;
    sum += ipow(x, e) / ScalarTraits<T>::from_bigint(den);
  }
  if (half) sum *= half_power(x, 1);
  T scale = ScalarTraits<T>::from_bigint(factorial(static_cast<long>(N) - 1));
  return scale * sum / ipow(T(x - T(1)), static_cast<long>(N) - 1);
}

// --- Symplectic -------------------------------------------------------------------

// Numerator alternant of chi_lambda in the v coordinate; `half` reports whether
// the prod (v_i + 2)^(-1/2) factor applies.
template <class T>
T symplectic_numerator(const Signature& lambda, const std::vector<alternant::Node<T>>& nodes, bool& half) {
  const std::size_t N = lambda.length();
  half = lambda.half_integer();
  std::vector<Column> cols;
  for (std::size_t j = 0; j < N; ++j) {
    long doubled_L = lambda.doubled_part(j) + 2 * static_cast<long>(N - j);
    if (half) {
      cols.push_back({Family::ChebB, doubled_L});
    } else {
      cols.push_back({Family::ChebA, doubled_L / 2});
    }
  }
  return alternant::confluent_det(cols, nodes);
}

template <class T>
T v_shift_product(const std::vector<T>& v) {
  T prod(1);
  for (const auto& x : v) prod *= x + T(2);
  return prod;
}

template <class T>
T symplectic_impl(const Signature& lambda_in, const std::vector<T>& xs) {
  const std::size_t N = xs.size();
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  if (lambda.length() != N) throw std::invalid_argument("signature length must equal N");
  auto v = v_coords(xs);
  auto nodes = alternant::group(v);
  bool half = false;
  T num = symplectic_numerator(lambda, nodes, half);
  std::vector<Column> den_cols;
  for (std::size_t j = 0; j < N; ++j) den_cols.push_back({Family::Power, static_cast<long>(N - 1 - j)});
  T value = num / alternant::confluent_det(den_cols, nodes);
  if (half) value *= half_power(v_shift_product(v), -1);
  return value;
}

template <class T>
T orthogonal_impl(const Signature& lambda_in, const std::vector<T>& xs) {
  const std::size_t N = xs.size();
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  if (lambda.length() != N) throw std::invalid_argument("signature length must equal N");
  auto v = v_coords(xs);
  auto nodes = alternant::group(v);
  bool half_num = false;
  bool half_den = false;
  T num = symplectic_numerator(lambda.shifted(-1), nodes, half_num);
  T den = symplectic_numerator(Signature::constant(-1, N), nodes, half_den);
  T value = num / den;
  // Factors (v+2)^(-1/2) of numerator and denominator cancel unless parities differ.
  if (half_num != half_den) value *= half_power(v_shift_product(v), half_num ? -1 : 1);
  return value;
}

template <class T>
T normalized_symplectic_impl(const Signature& lambda_in, const T& x, std::size_t N) {
  if (x == T(1)) return T(1);
  if (is_zero(x) || x == T(-1)) throw std::invalid_argument("normalized symplectic character needs x not in {0, -1}");
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  if (lambda.length() != N) throw std::invalid_argument("signature length must equal N");
  std::vector<long> dnu(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    dnu[i] = lambda.doubled_part(i) + 2;
    dnu[N + i] = -lambda.doubled_part(N - 1 - i);
  }
  Signature nu = Signature::from_doubled(dnu);
  return T(2) / (x + T(1)) * normalized_schur_impl(nu, x, 2 * N);
}

template <class T>
T normalized_symplectic_direct_impl(const Signature& lambda, const T& x, std::size_t N) {
  if (x == T(1)) return T(1);
  std::vector<T> xs(N, T(1));
  xs[0] = x;
  require_nonzero(xs);
  std::vector<T> ones(N, T(1));
  return symplectic_impl(lambda, xs) / symplectic_impl(lambda, ones);
}

// --- Boxed sums ------------------------------------------------------------------

template <class T>
T phi_impl(long m, const std::vector<T>& xs) {
  if (m < 0) throw std::invalid_argument("box width m must be non-negative");
  const std::size_t n = xs.size();
  if (m == 0) return T(1);
  auto v = v_coords(xs);
  auto nodes = alternant::group(v);
  std::vector<Column> num_cols;
  std::vector<Column> den_cols;
  const bool odd = (m % 2) != 0;
  for (std::size_t j = 1; j <= n; ++j) {
    long doubled_c = m + 2 * static_cast<long>(n) + 1 - 2 * static_cast<long>(j);
    if (odd) {
      num_cols.push_back({Family::ChebA, doubled_c / 2});
    } else {
      num_cols.push_back({Family::ChebB, doubled_c});
    }
    den_cols.push_back({Family::Power, static_cast<long>(n - j)});
  }
  T value = alternant::confluent_det(num_cols, nodes) / alternant::confluent_det(den_cols, nodes);
  for (const auto& x : xs) {
    if (odd) {
      value *= ipow(x, (m - 1) / 2) * (x + T(1));
    } else {
      value *= ipow(x, m / 2);
    }
  }
  return value;
}

template <class T>
T Phi_impl(long m, const std::vector<T>& xs) {
  std::vector<T> ones(xs.size(), T(1));
  return phi_impl(m, xs) / phi_impl(m, ones);
}

// --- Bessel ------------------------------------------------------------------------

template <class T>
T t_exp(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return std::exp(x);
  } else {
    return exp(x);
  }
}

template <class T>
T bessel_impl(const std::vector<T>& x, const std::vector<T>& y) {
  const std::size_t k = x.size();
  if (y.size() != k) throw std::invalid_argument("bessel_B needs tuples of equal length");
  if (k == 0) return T(1);
  auto xn = alternant::group(x);
  auto yn = alternant::group(y);
  SquareMatrix<T> m(k);
  std::size_t row = 0;
  for (const auto& a : xn) {
    for (std::size_t r = 0; r < a.multiplicity; ++r, ++row) {
      std::size_t col = 0;
      for (const auto& b : yn) {
        T e = t_exp(T(a.center * b.center));
        for (std::size_t s = 0; s < b.multiplicity; ++s, ++col) {
          // (1/(r! s!)) d^r/dx^r d^s/dy^s exp(xy)
          //   = sum_i C(r,i) s!/(s-i)! x^{s-i} y^{r-i} exp(xy) / (r! s!)
          T acc(0);
          for (std::size_t i = 0; i <= std::min(r, s); ++i) {
            BigInt c = binomial(static_cast<long>(r), static_cast<long>(i)) * factorial(static_cast<long>(s)) /
                       factorial(static_cast<long>(s - i));
            T term = ScalarTraits<T>::from_bigint(c);
            if (s > i) term *= ipow(a.center, static_cast<long>(s - i));
            if (r > i) term *= ipow(b.center, static_cast<long>(r - i));
            acc += term;
          }
          BigInt norm = factorial(static_cast<long>(r)) * factorial(static_cast<long>(s));
          m(row, col) = acc * e / ScalarTraits<T>::from_bigint(norm);
        }
      }
    }
  }
  std::vector<Column> vander;
  for (std::size_t j = 0; j < k; ++j) vander.push_back({Family::Power, static_cast<long>(k - 1 - j)});
  T dx = alternant::confluent_det(vander, xn);
  T dy = alternant::confluent_det(vander, yn);
  BigInt superfactorial(1);
  for (std::size_t j = 1; j < k; ++j) superfactorial *= factorial(static_cast<long>(j));
  return determinant(m) * ScalarTraits<T>::from_bigint(superfactorial) / (dx * dy);
}

}  // namespace

// --- public: Schur -----------------------------------------------------------------

BigInt schur_dim(const Signature& lambda_in, std::size_t N) {
  if (lambda_in.half_integer()) throw std::invalid_argument("schur_dim needs an integer signature");
  auto lam = lambda_in.padded(N).parts();
  Rational prod(1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      prod *= Rational(lam[i] - lam[j] + static_cast<long>(j - i), static_cast<long>(j - i));
  prod.canonicalize();
  return prod.get_num();
}

BigInt skew_schur_dim(const Signature& lambda_in, const Signature& mu_in, long M) {
  if (M < 0) throw std::invalid_argument("skew_schur_dim needs M >= 0");
  if (lambda_in.half_integer() || mu_in.half_integer()) throw std::invalid_argument("skew shapes need integer parts");
  const std::size_t len = std::max(lambda_in.length(), mu_in.length());
  auto lam = lambda_in.padded(len).parts();
  auto mu = mu_in.padded(len).parts();
  for (std::size_t i = 0; i < len; ++i)
    if (mu[i] > lam[i]) return 0;
  SquareMatrix<Rational> h(len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      long r = lam[i] - mu[j] - static_cast<long>(i) + static_cast<long>(j);
      h(i, j) = r < 0 ? Rational(0) : Rational(binomial(M + r - 1, r));
    }
  }
  Rational d = determinant(h);
  return d.get_num();
}

Rational schur_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N) {
  return schur_impl(lambda, check_point(point, N));
}

Real schur_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N) {
  auto xs = check_point(point, N);
  return adaptive_eval([&] { return schur_impl(lambda, xs); });
}

Rational normalized_schur(const Signature& lambda, const Rational& x, std::size_t N) {
  return normalized_schur_impl(lambda, x, N);
}

Real normalized_schur(const Signature& lambda, const Real& x, std::size_t N) {
  return adaptive_eval([&] { return normalized_schur_impl(lambda, x, N); });
}

// --- public: symplectic / orthogonal -----------------------------------------------

Rational symplectic_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N) {
  return symplectic_impl(lambda, check_point(point, N));
}

Real symplectic_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N) {
  auto xs = check_point(point, N);
  return adaptive_eval([&] { return symplectic_impl(lambda, xs); });
}

Rational symplectic_denominator_det(const std::vector<Rational>& x) {
  require_nonzero(x);
  const std::size_t N = x.size();
  SquareMatrix<Rational> m(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      long e = static_cast<long>(N - j);
      m(i, j) = pow_int(x[i], e) - pow_int(x[i], -e);
    }
  return determinant(m);
}

Rational symplectic_denominator_product(const std::vector<Rational>& x) {
  require_nonzero(x);
  Rational prod(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    prod *= x[i] - 1 / x[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) prod *= (x[i] + 1 / x[i]) - (x[j] + 1 / x[j]);
  }
  return prod;
}

Rational normalized_symplectic(const Signature& lambda, const Rational& x, std::size_t N) {
  return normalized_symplectic_impl(lambda, x, N);
}

Real normalized_symplectic(const Signature& lambda, const Real& x, std::size_t N) {
  return adaptive_eval([&] { return normalized_symplectic_impl(lambda, x, N); });
}

Rational normalized_symplectic_direct(const Signature& lambda, const Rational& x, std::size_t N) {
  return normalized_symplectic_direct_impl(lambda, x, N);
}

Real normalized_symplectic_direct(const Signature& lambda, const Real& x, std::size_t N) {
  return adaptive_eval([&] { return normalized_symplectic_direct_impl(lambda, x, N); });
}

Rational orthogonal_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N) {
  return orthogonal_impl(lambda, check_point(point, N));
}

Real orthogonal_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N) {
  auto xs = check_point(point, N);
  return adaptive_eval([&] { return orthogonal_impl(lambda, xs); });
}

Rational orthogonal_eval_weyl(const Signature& lambda_in, const std::vector<Rational>& x) {
  // det[x_i^{a_j} - x_i^{-a_j}] with half-integer a_j = lambda_j + N - j + 1/2; every
  // row is multiplied by x_i^{1/2} so that all exponents are integers.
  require_nonzero(x);
  const std::size_t N = x.size();
  Signature lambda = lambda_in.padded(N);
  if (lambda.half_integer()) throw std::invalid_argument("orthogonal_eval_weyl needs an integer signature");
  auto build = [&](const std::vector<long>& parts) {
    SquareMatrix<Rational> m(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        long a2 = 2 * (parts[j] + static_cast<long>(N - 1 - j)) + 1;  // 2 a_j
        m(i, j) = pow_int(x[i], (a2 + 1) / 2) - pow_int(x[i], (1 - a2) / 2);
      }
    return determinant(m);
  };
  Rational den = build(std::vector<long>(N, 0));
  if (sgn(den) == 0) throw std::domain_error("points are not distinct for the Weyl determinant");
  return build(lambda.parts()) / den;
}

// --- public: boxed sums ------------------------------------------------------------

Rational phi_m_eval(long m, const EvalPoint<Rational>& point, std::size_t n) {
  return phi_impl(m, check_point(point, n));
}

Real phi_m_eval(long m, const EvalPoint<Real>& point, std::size_t n) {
  auto xs = check_point(point, n);
  return adaptive_eval([&] { return phi_impl(m, xs); });
}

Rational phi_m_bruteforce(long m, const EvalPoint<Rational>& point, std::size_t n) {
  auto xs = check_point(point, n);
  Rational sum(0);
  for (const auto& lam : box_partitions(n, m)) sum += schur_impl(Signature::from_parts(lam), xs);
  return sum;
}

Rational Phi_m_eval(long m, const EvalPoint<Rational>& point, std::size_t n) {
  return Phi_impl(m, check_point(point, n));
}

Real Phi_m_eval(long m, const EvalPoint<Real>& point, std::size_t n) {
  auto xs = check_point(point, n);
  return adaptive_eval([&] { return Phi_impl(m, xs); });
}

Real Phi_m_eval_characters(long m, const EvalPoint<Real>& point, std::size_t n) {
  auto xs = check_point(point, n);
  for (const auto& x : point.values)
    if (x.sign() <= 0) throw std::invalid_argument("the character path needs positive coordinates");
  const Signature tau_m = Signature::tau(m, n);
  const Signature tau_0 = Signature::tau(0, n);
  return adaptive_eval([&] {
    Real prefactor(1);
    for (const auto& x : point.values) prefactor *= pow_half(x, m);
    if (point.values.size() == 1) {
      const Real& x = point.values[0];
      return prefactor * normalized_symplectic_impl(tau_m, x, n) / normalized_symplectic_impl(tau_0, x, n);
    }
    std::vector<Real> ones(n, Real(1));
    Real num = symplectic_impl(tau_m, xs) / symplectic_impl(tau_m, ones);
    Real den = symplectic_impl(tau_0, xs) / symplectic_impl(tau_0, ones);
    return prefactor * num / den;
  });
}

// --- public: Bessel, beta shift --------------------------------------------------------

Real bessel_B(const std::vector<Real>& x, const std::vector<Real>& y) {
  return adaptive_eval([&] { return bessel_impl(x, y); });
}

double bessel_B(const std::vector<double>& x, const std::vector<double>& y) { return bessel_impl(x, y); }

BetaShiftReport beta_shift_check(const Signature& lambda_in, std::size_t N, long beta, const Real& x) {
  if (beta < 1) throw std::invalid_argument("beta must be a positive integer");
  if (x.sign() <= 0 || x == Real(1)) throw std::invalid_argument("beta shift needs x > 0, x != 1");
  Signature lambda = lambda_in.half_integer() ? lambda_in : lambda_in.padded(N);
  std::vector<long> dhat(N);
  for (std::size_t i = 0; i < N; ++i)
    dhat[i] = beta * lambda.doubled_part(i) + 2 * (beta - 1) * static_cast<long>(N - 1 - i);
  Signature hat = Signature::from_doubled(dhat);
  BetaShiftReport rep;
  rep.shifted_signature = hat.str();
  rep.lhs = normalized_schur(lambda, x, N);
  rep.rhs = adaptive_eval([&] {
    Real y = pow(x, Real(1) / Real(beta));
    Real factor = Real(beta) * (y - Real(1)) / (x - Real(1));
    return pow(factor, static_cast<long>(N) - 1) * normalized_schur_impl(hat, y, N);
  });
  rep.relative_difference = relative_difference(rep.lhs, rep.rhs);
  return rep;
}

}  // namespace lozlab
