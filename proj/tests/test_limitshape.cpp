#include <doctest.h>

#include <cmath>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/limitshape/moments.hpp"
#include "lozlab/limitshape/psi.hpp"
#include "lozlab/sampler/exact.hpp"
#include "lozlab/tiling/profile.hpp"

using namespace lozlab;

namespace {

// Richardson-extrapolated central difference of Psi_a at u = 1.
Real psi_slope(const Real& a) {
  auto central = [&](const Real& h) {
    return (psi_direct(a, Real(1) + h) - psi_direct(a, Real(1) - h)) / (Real(2) * h);
  };
  const Real h1 = Real(1) / Real(1000), h2 = Real(1) / Real(2000);
  return (Real(4) * central(h2) - central(h1)) / Real(3);
}

// k-th derivative of Psi_a at 1 by a 2k+1-point stencil, Richardson in h.
Real psi_derivative(const Real& a, int k) {
  auto stencil = [&](const Real& h) {
    // forward-difference of order k centred by symmetric binomial weights
    Real s(0);
    for (int j = 0; j <= k; ++j) {
      const Real w = Real(binomial(k, j)) * Real((k - j) % 2 == 0 ? 1 : -1);
      s += w * psi_direct(a, Real(1) + (Real(j) - Real(k) / Real(2)) * h);
    }
    return s / pow(h, static_cast<long>(k));
  };
  const Real h1 = Real(1) / Real(1000), h2 = Real(1) / Real(2000);
  return (Real(4) * stencil(h2) - stencil(h1)) / Real(3);
}

}  // namespace

TEST_CASE("Psi vanishes at u=1 and h(1)=1") {
  PrecisionScope scope(256);
  for (const Real& a : {Real(0.5), Real(1), Real(2)}) {
    CHECK(abs(psi_h(a, Real(1)) - Real(1)).to_double() < 1e-70);
    const Jet j = psi_jet(a, 8);
    CHECK(abs(j.coeff(0)).to_double() < 1e-70);
    CHECK(j.order() == 8);
  }
}

TEST_CASE("Psi jet matches finite differences") {
  PrecisionScope scope(256);
  for (const Real& a : {Real(0.5), Real(1), Real(2)}) {
    const Jet j = psi_jet(a, 8);
    CHECK(relative_difference(j.coeff(1), psi_slope(a)).to_double() < 1e-8);
    for (int k = 2; k <= 4; ++k) {
      // Psi'' vanishes at a = 2, so compare against max(1, |value|)
      const Real exact = j.derivative(static_cast<std::size_t>(k));
      const Real scale = abs(exact) > Real(1) ? abs(exact) : Real(1);
      CHECK((abs(exact - psi_derivative(a, k)) / scale).to_double() < 1e-8);
    }
  }
}

TEST_CASE("Psi argument checks") {
  CHECK_THROWS_AS(psi_jet(Real(0), 8), std::invalid_argument);
  CHECK_THROWS_AS(psi_jet(Real(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(psi_jet(Real(1), kMaxPsiOrder + 1), std::invalid_argument);
}

TEST_CASE("univariate large deviations: (1/n) ln Phi_m(e^y; n) approaches Psi_a(e^y)") {
  PrecisionScope scope(256);
  for (double y : {-0.2, -0.1, 0.1, 0.2}) {
    const Real u = exp(Real(y));
    const double target = psi_direct(Real(1), u).to_double();
    double previous = 1e9;
    for (long n : {8L, 16L, 32L, 64L}) {
      const auto nn = static_cast<std::size_t>(n);
      const double v = log(Phi_m_eval(n, EvalPoint<Real>{{u}, nn - 1}, nn)).to_double() / static_cast<double>(n);
      const double gap = std::abs(v - target);
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous <= 0.02);
  }
}

TEST_CASE("limit moments") {
  PrecisionScope scope(256);
  CHECK(limit_moment(0, Real(0.3), Real(2)).to_double() == 1.0);
  for (const double x : {0.25, 0.5, 0.8}) {
    const Real slope = psi_slope(Real(1));
    const double expected = slope.to_double() / x + 0.5;
    CHECK(limit_moment(1, Real(x), Real(1)).to_double() == doctest::Approx(expected).epsilon(1e-8));
  }
  CHECK_THROWS_AS(limit_moment(1, Real(0), Real(1)), std::invalid_argument);
  CHECK_THROWS_AS(limit_moments(12, Real(0.5), Real(1), 12), std::invalid_argument);
}

TEST_CASE("line index uses the floor") {
  CHECK(line_index(0.5, 64) == 32);
  CHECK(line_index(0.5, 7) == 3);
  CHECK(line_index(0.99, 10) == 9);
  CHECK_THROWS_AS(line_index(0.05, 10), std::invalid_argument);
}

TEST_CASE("empirical moments: degenerate and enumerated cases") {
  SUBCASE("m=0") {
    MomentAccumulator acc(3, 4);
    acc.add(GTPattern(4, 0));
    const MomentVector v = acc.result(1.0);
    CHECK(v.values[0] == 1.0);
    CHECK(v.values[1] == doctest::Approx(3.0 / 8.0));
  }
  SUBCASE("n=2, m=2, line 2: sampling agrees with enumeration") {
    double exact = 0;
    const auto all = list_free(2, 2);
    for (const auto& p : all) exact += CountingMeasure(p.row_vector(2)).moment(2);
    exact /= static_cast<double>(all.size());
    RngStream rng(20, 0);
    const ExactFreeSampler s(2, 2);
    std::vector<GTPattern> draws;
    for (int i = 0; i < 20000; ++i) draws.push_back(s.sample(rng));
    const MomentVector v = empirical_moments(draws, 1.0, 3);
    CHECK(v.values[0] == 1.0);
    CHECK(std::abs(v.values[2] - exact) <= 3 * v.standard_errors[2]);
  }
  SUBCASE("hexagon n=2, m=1, line 1") {
    double exact = 0;
    const auto all = list_hex(2, 1);
    for (const auto& p : all) exact += CountingMeasure(p.row_vector(1)).moment(1);
    exact /= static_cast<double>(all.size());
    RngStream rng(21, 0);
    const ExactHexSampler s(2, 1);
    std::vector<GTPattern> draws;
    for (int i = 0; i < 20000; ++i) draws.push_back(s.sample(rng));
    const MomentVector v = hexagon_moments(draws, 0.5, 2);
    CHECK(v.line == 1);
    CHECK(std::abs(v.values[1] - exact) <= 3 * v.standard_errors[1]);
  }
}

TEST_CASE("moment accumulators merge") {
  MomentAccumulator a(2, 2), b(2, 2), all(2, 2);
  const auto patterns = list_free(3, 2);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    (i % 2 ? a : b).add(patterns[i]);
    all.add(patterns[i]);
  }
  a.merge(b);
  const auto x = a.result(0.7), y = all.result(0.7);
  CHECK(x.samples == y.samples);
  for (std::size_t r = 0; r <= 2; ++r) CHECK(x.values[r] == doctest::Approx(y.values[r]));
}
