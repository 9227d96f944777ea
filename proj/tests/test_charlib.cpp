#include <doctest.h>

#include <cmath>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/rng.hpp"
#include "lozlab/core/signature.hpp"

using namespace lozlab;

namespace {

EvalPoint<Rational> pt(std::vector<Rational> v, std::size_t ones = 0) { return {std::move(v), ones}; }

// Distinct positive rationals p/q with p, q in 1..9, none equal to 1.
std::vector<Rational> random_points(RngStream& r, std::size_t k) {
  std::vector<Rational> out;
  while (out.size() < k) {
    Rational q(r.uniform_int(1, 9), r.uniform_int(1, 9));
    q.canonicalize();
    if (q == 1 || std::find(out.begin(), out.end(), q) != out.end()) continue;
    out.push_back(q);
  }
  return out;
}

Signature random_partition(RngStream& r, std::size_t n, long max_part) {
  std::vector<long> p(n);
  for (auto& v : p) v = r.uniform_int(0, max_part);
  std::sort(p.rbegin(), p.rend());
  return Signature::from_parts(p);
}

// Brute-force monomial sum of s_lambda over all SSYT, by recursive filling.
Rational schur_monomial(const std::vector<long>& lambda, const std::vector<Rational>& x) {
  std::vector<long> shape;
  for (long v : lambda)
    if (v > 0) shape.push_back(v);
  std::vector<std::vector<long>> t(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(static_cast<std::size_t>(shape[i]), 0);
  Rational total = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
    if (i == shape.size()) {
      Rational term = 1;
      for (const auto& row : t)
        for (long v : row) term *= x[static_cast<std::size_t>(v - 1)];
      total += term;
      return;
    }
    if (j == t[i].size()) return fill(i + 1, 0);
    long lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (long v = lo; v <= static_cast<long>(x.size()); ++v) {
      t[i][j] = v;
      fill(i, j + 1);
    }
  };
  fill(0, 0);
  return total;
}

}  // namespace

TEST_CASE("schur dimension") {
  CHECK(schur_dim(Signature::from_parts({2, 2, 0}), 3) == 6);
  CHECK(schur_dim(Signature::from_parts({0, 0, 0, 0}), 4) == 1);
  CHECK(schur_dim(Signature::from_parts({1, 0}), 2) == 2);
}

TEST_CASE("skew schur dimension") {
  CHECK(skew_schur_dim(Signature::from_parts({2, 1}), Signature::from_parts({1, 0}), 2) == 4);
  CHECK(skew_schur_dim(Signature::from_parts({3, 1}), Signature::from_parts({3, 1}), 5) == 1);
  CHECK(skew_schur_dim(Signature::from_parts({2, 2}), Signature::from_parts({0, 0}), 2) == 1);
}

TEST_CASE("schur evaluation") {
  CHECK(schur_eval(Signature::from_parts({2, 2, 0}), pt({1, 1, 1}), 3) == 6);
  CHECK(schur_eval(Signature::from_parts({0, 0, 0}), pt({Rational(5, 3), 7, 2}), 3) == 1);
  CHECK(schur_eval(Signature::from_parts({1, 0}), pt({3}, 1), 2) == 4);
  // six SSYT of shape (2,2) in three letters: x^2y^2 + x^2z^2 + y^2z^2 + xyz(x + y + z) at (2,1,1)
  CHECK(schur_eval(Signature::from_parts({2, 2}), pt({2}, 2), 3) == 17);
}

TEST_CASE("schur evaluation matches the monomial expansion") {
  RngStream r(101, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t N = static_cast<std::size_t>(r.uniform_int(1, 4));
    const Signature l = random_partition(r, N, 3);
    std::vector<Rational> x = random_points(r, N);
    if (trial % 3 == 0) x.back() = x.front();  // repeated argument: confluent path
    CHECK(schur_eval(l, pt(x), N) == schur_monomial(l.parts(), x));
  }
}

TEST_CASE("normalized schur") {
  CHECK(normalized_schur(Signature::from_parts({0, 0, 0}), Rational(2), 3) == 1);
  CHECK(normalized_schur(Signature::from_parts({1, 0}), Rational(3), 2) == 2);
  CHECK(normalized_schur(Signature::from_parts({2, 2, 0}), Rational(2), 3) == Rational(17, 6));
}

TEST_CASE("residue sum agrees with the determinant") {
  for (std::size_t N = 1; N <= 6; ++N) {
    for (const auto& parts : box_partitions(N, 3)) {
      const Signature l = Signature::from_parts(parts);
      for (const Rational& x : {Rational(2), Rational(3), Rational(1, 2)}) {
        const Rational via_det = schur_eval(l, pt({x}, N - 1), N) / Rational(schur_dim(l, N));
        CHECK(normalized_schur(l, x, N) == via_det);
      }
    }
  }
}

TEST_CASE("symplectic characters") {
  CHECK(symplectic_eval(Signature::from_parts({0, 0}), pt({2, 5}), 2) == 1);
  // chi_(1,0)(x1, x2) = x1 + 1/x1 + x2 + 1/x2
  CHECK(symplectic_eval(Signature::from_parts({1, 0}), pt({2, 3}), 2) == Rational(2) + Rational(1, 2) + 3 + Rational(1, 3));
  CHECK(normalized_symplectic(Signature::from_parts({0, 0, 0}), Rational(2), 3) == 1);
  const Signature l = Signature::from_parts({1, 0});
  for (const Rational& x : {Rational(2), Rational(1, 3), Rational(7, 5)})
    CHECK(normalized_symplectic(l, x, 2) == normalized_symplectic_direct(l, x, 2));
}

TEST_CASE("symplectic tau^2 at n=2, x=2 is finite and both paths agree") {
  PrecisionScope scope(256);
  const Signature t = Signature::tau(2, 2);
  const Rational exact = normalized_symplectic(t, Rational(4), 2);
  const Real direct = normalized_symplectic_direct(t, Real(4), 2);
  CHECK(relative_difference(Real(exact), direct).to_double() < 1e-60);
  const Real at2 = normalized_symplectic(t, Real(2), 2);
  const Real at2_direct = normalized_symplectic_direct(t, Real(2), 2);
  CHECK(at2.is_finite());
  CHECK(relative_difference(at2, at2_direct).to_double() < 1e-12);
}

TEST_CASE("denominator identity") {
  RngStream r(202, 0);
  for (std::size_t N = 1; N <= 6; ++N) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> x;
      // avoid x_i = 1/x_j, which makes both sides vanish trivially
      while (x.size() < N) {
        auto c = random_points(r, 1)[0];
        bool bad = false;
        for (const auto& y : x) bad |= (y == c) || (y * c == 1);
        if (!bad) x.push_back(c);
      }
      CHECK(symplectic_denominator_det(x) == symplectic_denominator_product(x));
    }
  }
}

TEST_CASE("Schur and symplectic relation") {
  RngStream r(303, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto N = static_cast<std::size_t>(r.uniform_int(1, 6));
    const Signature l = random_partition(r, N, 4);
    const Rational x = random_points(r, 1)[0];
    std::vector<long> nu(2 * N);
    const auto p = l.parts();
    for (std::size_t i = 0; i < N; ++i) {
      nu[i] = p[i] + 1;
      nu[2 * N - 1 - i] = -p[i];
    }
    const Rational rhs = Rational(2) / (x + 1) * normalized_schur(Signature::from_parts(nu), x, 2 * N);
    CHECK(normalized_symplectic_direct(l, x, N) == rhs);
  }
}

TEST_CASE("odd orthogonal characters") {
  CHECK(orthogonal_eval(Signature::from_parts({0, 0}), pt({2, 3}), 2) == 1);
  const Signature l = Signature::from_parts({1, 0});
  CHECK(orthogonal_eval(l, pt({2, 3}), 2) == orthogonal_eval_weyl(l, {2, 3}));
  // (1,0): the vector representation, x1 + 1/x1 + x2 + 1/x2 + 1
  CHECK(orthogonal_eval(l, pt({2, 3}), 2) == Rational(2) + Rational(1, 2) + 3 + Rational(1, 3) + 1);
}

TEST_CASE("phi_m through the odd-orthogonal character") {
  // prod x_i^{m/2} gamma_{(m/2)^n}(x) at n = m = 2
  for (const auto& x : {std::vector<Rational>{4, Rational(9, 4)}, std::vector<Rational>{Rational(1, 3), 5}}) {
    const Rational rhs = x[0] * x[1] * orthogonal_eval(Signature::from_parts({1, 1}), pt(x), 2);
    CHECK(phi_m_eval(2, pt(x), 2) == rhs);
  }
}

TEST_CASE("boxed schur sums") {
  CHECK(phi_m_eval(0, pt({3, 5}), 2) == 1);
  for (long m = 0; m <= 6; ++m) CHECK(phi_m_eval(m, pt({1}), 1) == m + 1);
  CHECK(phi_m_eval(2, pt({1, 1}), 2) == 10);
  // 1 + 3 + 7 + 2 + 6 + 4 over the box partitions 0, (1), (2), (1,1), (2,1), (2,2)
  CHECK(phi_m_eval(2, pt({2, 1}), 2) == 23);
  CHECK(Phi_m_eval(2, pt({2}, 1), 2) == Rational(23, 10));
  CHECK(Phi_m_eval(3, pt({}, 3), 3) == 1);
  for (long m = 0; m <= 5; ++m) {
    const Rational x(5, 3);
    Rational s = 0;
    for (long j = 0; j <= m; ++j) s += pow_int(x, j);
    CHECK(Phi_m_eval(m, pt({x}), 1) == s / (m + 1));
  }
}

TEST_CASE("Macdonald identity against the brute-force sum") {
  RngStream r(505, 0);
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 3; ++m)
      for (int trial = 0; trial < 3; ++trial) {
        const auto x = random_points(r, n);
        CHECK(phi_m_eval(m, pt(x), n) == phi_m_bruteforce(m, pt(x), n));
      }
}

TEST_CASE("characters and Phi_m agree along both evaluation paths") {
  PrecisionScope scope(256);
  for (long m : {1L, 2L, 5L}) {
    const Real x = Real(13) / Real(10);
    const Real a = Phi_m_eval(m, EvalPoint<Real>{{x}, 3}, 4);
    const Real b = Phi_m_eval_characters(m, EvalPoint<Real>{{x}, 3}, 4);
    CHECK(relative_difference(a, b).to_double() < 1e-12);
  }
}

TEST_CASE("branching rule") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& lambda : box_partitions(n, 4)) {
      BigInt total = 0;
      if (n == 1) continue;
      for (const auto& mu : box_partitions(n - 1, 4))
        if (interlaces(lambda, mu)) total += schur_dim(Signature::from_parts(mu), n - 1);
      CHECK(total == schur_dim(Signature::from_parts(lambda), n));
    }
}

TEST_CASE("confluent evaluation is the limit of distinct arguments") {
  PrecisionScope scope(256);
  const Signature l = Signature::from_parts({3, 1, 0});
  const Real x(Rational(3, 2));
  const Real eps = Real(1) / Real(100000000);
  auto at = [&](const Real& e) { return schur_eval(l, EvalPoint<Real>{{x, x + e, Real(2)}, 0}, 3); };
  const Real conf = schur_eval(l, EvalPoint<Real>{{x, x, Real(2)}, 0}, 3);
  const Real richardson = Real(2) * at(eps / Real(2)) - at(eps);
  CHECK(relative_difference(conf, richardson).to_double() < 1e-10);

  const Signature s = Signature::from_parts({2, 1});
  auto sp = [&](const Real& e) { return symplectic_eval(s, EvalPoint<Real>{{x, x + e}, 0}, 2); };
  const Real sconf = symplectic_eval(s, EvalPoint<Real>{{x, x}, 0}, 2);
  CHECK(relative_difference(sconf, Real(2) * sp(eps / Real(2)) - sp(eps)).to_double() < 1e-10);
}

TEST_CASE("Bessel function") {
  PrecisionScope scope(128);
  CHECK(bessel_B(std::vector<double>{0.7}, std::vector<double>{1.3}) == doctest::Approx(std::exp(0.91)));
  CHECK(bessel_B(std::vector<double>{1, 0}, std::vector<double>{1, 0}) == doctest::Approx(std::exp(1.0) - 1.0));
  const std::vector<double> x{0.3, -0.4, 1.1}, y{0.2, 0.9, -0.5};
  const double alpha = 1.7;
  std::vector<double> xa, ya;
  for (double v : x) xa.push_back(v * alpha);
  for (double v : y) ya.push_back(v * alpha);
  CHECK(bessel_B(x, ya) == doctest::Approx(bessel_B(xa, y)).epsilon(1e-10));
  CHECK(bessel_B(std::vector<double>{0, 0}, std::vector<double>{0.2, 0.9}) == doctest::Approx(1.0));
}

TEST_CASE("beta shift") {
  PrecisionScope scope(128);
  const auto trivial = beta_shift_check(Signature::from_parts({0, 0, 0, 0}), 4, 2, Real(4));
  CHECK(trivial.lhs.to_double() == 1.0);
  CHECK(trivial.relative_difference.to_double() < 1e-30);
  const auto half = beta_shift_check(Signature::constant(1, 4), 4, 2, Real(4));
  CHECK(half.relative_difference.to_double() < 1e-20);
  const auto mixed = beta_shift_check(Signature::from_parts({2, 1, 0}), 3, 2, Real(9));
  CHECK(mixed.relative_difference.to_double() < 1e-20);
  CHECK_THROWS_AS(beta_shift_check(Signature::from_parts({1, 0}), 2, 0, Real(2)), std::invalid_argument);
}

TEST_CASE("exact evaluation refuses irrational values") {
  CHECK_THROWS_AS(normalized_symplectic(Signature::tau(2, 2), Rational(2), 2), std::domain_error);
}
