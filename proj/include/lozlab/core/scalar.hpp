#pragma once

// Exact and multiprecision scalars shared by every module.
//
// Rational/BigInt are the gmpxx classes. Real is a thin RAII wrapper over an
// mpfr_t whose precision is taken from a thread-local working precision, so
// evaluations on different threads never share mutable state.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lozlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an adaptive high-precision evaluation does not settle.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMaxPrecisionBits = 2048;

/// Precision (bits) used for Real values constructed on the calling thread.
unsigned working_precision();

/// Sets the thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

class Real {
 public:
  Real();
  Real(int value);   // NOLINT(google-explicit-constructor)
  Real(long value);  // NOLINT(google-explicit-constructor)
  Real(double value);  // NOLINT(google-explicit-constructor)
  explicit Real(const BigInt& value);
  explicit Real(const Rational& value);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal ("1.25", "-3e-4") at the working precision.
  static Real parse(std::string_view text);

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Scientific decimal representation with `digits` significant digits.
  [[nodiscard]] std::string str(int digits = 20) const;

  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real cosh(const Real& x);
Real expm1(const Real& x);
Real pi();

/// base^(doubled/2) for positive base; integral exponents allow any nonzero base.
Real pow_half(const Real& base, long doubled_exponent);

/// Relative difference |a-b| / max(|a|,|b|), zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

/// Evaluates `f()` at increasing precision (doubling from the working
/// precision) until two successive results agree to `rel_tol`. Throws
/// PrecisionError if that does not happen by kMaxPrecisionBits.
template <class F>
Real adaptive_eval(F&& f, double rel_tol = 1e-12) {
  unsigned bits = working_precision();
  Real previous;
  {
    PrecisionScope scope(bits);
    previous = f();
  }
  while (bits < kMaxPrecisionBits) {
    bits *= 2;
    PrecisionScope scope(bits);
    Real current = f();
    if (current.is_finite() && relative_difference(previous, current) <= Real(rel_tol)) return current;
    previous = std::move(current);
  }
  throw PrecisionError("evaluation did not stabilise by " + std::to_string(kMaxPrecisionBits) + " bits");
}

// --- Rational helpers -------------------------------------------------------

/// Parses "p", "p/q" or a finite decimal ("0.125", "-2.5e-3") exactly.
Rational parse_rational(std::string_view text);

/// base^e for integer e (negative allowed for nonzero base).
Rational pow_int(const Rational& base, long exponent);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

/// base^(doubled/2) exactly, or nullopt when the half power is irrational.
std::optional<Rational> exact_pow_half(const Rational& base, long doubled_exponent);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
BigInt binomial(long n, long k);
BigInt factorial(long n);

// --- Scalar traits used by templated numeric code ----------------------------

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_bigint(const BigInt& z) { return Rational(z); }
  static double magnitude(const Rational& q) { return std::abs(q.get_d()); }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
};

template <>
struct ScalarTraits<Real> {
  static constexpr bool exact = false;
  static Real from_rational(const Rational& q) { return Real(q); }
  static Real from_bigint(const BigInt& z) { return Real(z); }
  static Real magnitude(const Real& x) { return abs(x); }
  static bool is_zero(const Real& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double from_bigint(const BigInt& z) { return z.get_d(); }
  static double magnitude(double x) { return x < 0 ? -x : x; }
  static bool is_zero(double x) { return x == 0.0; }
};

}  // namespace lozlab
