#include "lozlab/core/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace lozlab {
namespace {

thread_local unsigned g_precision = kDefaultPrecisionBits;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Ensures `x` carries at least `prec` bits without losing its value.
void widen(mpfr_ptr x, mpfr_prec_t prec) {
  if (mpfr_get_prec(x) < prec) mpfr_prec_round(x, prec, MPFR_RNDN);
}

}  // namespace

unsigned working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(unsigned bits) : previous_(g_precision) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  g_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_precision = previous_; }

// --- Real ---------------------------------------------------------------------

Real::Real() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(int value) : Real(static_cast<long>(value)) {}

Real::Real(long value) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value) {
  mpfr_init2(v_, g_precision);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *v_ = *other.v_;
  mpfr_init2(other.v_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

Real Real::parse(std::string_view text) {
  Real out;
  std::string s(text);
  // mpfr_set_str demands the whole string be a valid literal.
  if (mpfr_set_str(out.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("malformed real literal: " + s);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen(v_, wider(*this, rhs));
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(v_, wider(*this, rhs));
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(v_, wider(*this, rhs));
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(v_, wider(*this, rhs));
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

template <class F>
Real unary(const Real& x, F f) {
  Real out;
  mpfr_set_prec(out.get(), std::max<mpfr_prec_t>(x.precision(), g_precision));
  f(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }

Real pow(const Real& base, const Real& exponent) {
  Real out;
  mpfr_set_prec(out.get(), std::max<mpfr_prec_t>(wider(base, exponent), g_precision));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out;
  mpfr_set_prec(out.get(), std::max<mpfr_prec_t>(base.precision(), g_precision));
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real pi() {
  Real out;
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real pow_half(const Real& base, long doubled_exponent) {
  if (doubled_exponent % 2 == 0) return pow(base, doubled_exponent / 2);
  if (base.sign() <= 0) throw std::domain_error("half-integer power of a non-positive base");
  return pow(sqrt(base), doubled_exponent);
}

Real relative_difference(const Real& a, const Real& b) {
  Real scale = std::max(abs(a), abs(b), [](const Real& p, const Real& q) { return p < q; });
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

// --- Rational helpers ----------------------------------------------------------

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent, converted exactly.
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw std::invalid_argument("x");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in: " + s);
    }
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("malformed rational literal: " + s);
  BigInt num(digits, 10);
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational q = exp10 >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("negative power of zero");
    return pow_int(Rational(1) / base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 || mpz_perfect_square_p(value.get_den_mpz_t()) == 0)
    return std::nullopt;
  Rational out;
  mpz_sqrt(out.get_num_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(out.get_den_mpz_t(), value.get_den_mpz_t());
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_pow_half(const Rational& base, long doubled_exponent) {
  if (doubled_exponent % 2 == 0) return pow_int(base, doubled_exponent / 2);
  auto root = exact_sqrt(base);
  if (!root || sgn(*root) == 0) return std::nullopt;
  return pow_int(*root, doubled_exponent);
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt out;
  if (n >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    // C(n,k) = (-1)^k C(k-n-1, k)
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) out = -out;
  }
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace lozlab
