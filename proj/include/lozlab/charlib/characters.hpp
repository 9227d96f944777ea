#pragma once

// Schur, symplectic and odd-orthogonal characters, boxed Schur sums and the
// multivariate Bessel function.
//
// Every evaluator comes in an exact (Rational) and a multiprecision (Real)
// flavour. The exact flavour throws std::domain_error when the value would be
// irrational (half-integer powers of a non-square). Repeated arguments are
// handled by confluent determinants, never by perturbation.

#include <cstddef>
#include <string>
#include <vector>

#include "lozlab/core/scalar.hpp"
#include "lozlab/core/signature.hpp"

namespace lozlab {

/// Argument pattern (x_1, ..., x_k, 1^{padding_ones}).
template <class T>
struct EvalPoint {
  std::vector<T> values;
  std::size_t padding_ones = 0;

  [[nodiscard]] std::size_t size() const { return values.size() + padding_ones; }
  [[nodiscard]] std::vector<T> expanded() const {
    std::vector<T> out = values;
    out.resize(size(), T(1));
    return out;
  }
  static EvalPoint ones(std::size_t n) { return {{}, n}; }
};

// --- Schur ------------------------------------------------------------------

/// s_lambda(1^N) by the Weyl product formula; integer lambda only.
BigInt schur_dim(const Signature& lambda, std::size_t N);

/// Number of SSYT of skew shape lambda/mu with entries in 1..M (Jacobi-Trudi).
BigInt skew_schur_dim(const Signature& lambda, const Signature& mu, long M);

Rational schur_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N);
Real schur_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N);

/// s_lambda(x, 1^{N-1}) / s_lambda(1^N) by the residue sum over l_i = lambda_i + N - i.
Rational normalized_schur(const Signature& lambda, const Rational& x, std::size_t N);
Real normalized_schur(const Signature& lambda, const Real& x, std::size_t N);

// --- Symplectic / odd orthogonal -------------------------------------------------

Rational symplectic_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N);
Real symplectic_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N);

/// det[x_i^{N+1-j} - x_i^{-(N+1-j)}] over distinct points.
Rational symplectic_denominator_det(const std::vector<Rational>& x);
/// prod_i (x_i - 1/x_i) prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j).
Rational symplectic_denominator_product(const std::vector<Rational>& x);

/// chi_lambda(x, 1^{N-1}) / chi_lambda(1^N) through the Schur relation of size 2N.
Rational normalized_symplectic(const Signature& lambda, const Rational& x, std::size_t N);
Real normalized_symplectic(const Signature& lambda, const Real& x, std::size_t N);

/// The same quantity by two confluent symplectic evaluations.
Rational normalized_symplectic_direct(const Signature& lambda, const Rational& x, std::size_t N);
Real normalized_symplectic_direct(const Signature& lambda, const Real& x, std::size_t N);

/// Odd-orthogonal character via chi_{lambda-1/2} / chi_{(-1/2)^n}.
Rational orthogonal_eval(const Signature& lambda, const EvalPoint<Rational>& point, std::size_t N);
Real orthogonal_eval(const Signature& lambda, const EvalPoint<Real>& point, std::size_t N);

/// Odd-orthogonal character from its own Weyl determinant; distinct points only.
Rational orthogonal_eval_weyl(const Signature& lambda, const std::vector<Rational>& x);

// --- Boxed sums ----------------------------------------------------------------

/// sum of s_lambda(point) over lambda inside the m^n box.
Rational phi_m_eval(long m, const EvalPoint<Rational>& point, std::size_t n);
Real phi_m_eval(long m, const EvalPoint<Real>& point, std::size_t n);

/// The same sum computed term by term (test oracle, small sizes only).
Rational phi_m_bruteforce(long m, const EvalPoint<Rational>& point, std::size_t n);

/// phi_m(x, 1^{n-k}) / phi_m(1^n).
Rational Phi_m_eval(long m, const EvalPoint<Rational>& point, std::size_t n);
Real Phi_m_eval(long m, const EvalPoint<Real>& point, std::size_t n);

/// prod x_i^{m/2} * X_{tau^m}(x; n) / X_{tau^0}(x; n); univariate points use the
/// Schur relation, longer ones the confluent symplectic ratio.
Real Phi_m_eval_characters(long m, const EvalPoint<Real>& point, std::size_t n);

// --- Bessel --------------------------------------------------------------------

/// det[exp(x_i y_j)] prod_{i<j}(j-i) / (Delta(x) Delta(y)); confluent in both tuples.
Real bessel_B(const std::vector<Real>& x, const std::vector<Real>& y);
double bessel_B(const std::vector<double>& x, const std::vector<double>& y);

// --- beta shift -------------------------------------------------------------------

struct BetaShiftReport {
  Real lhs;
  Real rhs;
  Real relative_difference;
  std::string shifted_signature;
};

/// S_lambda(x;N) against (beta(x^{1/beta}-1)/(x-1))^{N-1} S_{hat lambda}(x^{1/beta};N)
/// with hat lambda_i = beta lambda_i + (beta-1)(N-i). beta must be a positive integer.
BetaShiftReport beta_shift_check(const Signature& lambda, std::size_t N, long beta, const Real& x);

}  // namespace lozlab
