#include <doctest.h>

#include <map>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/stats.hpp"
#include "lozlab/sampler/exact.hpp"
#include "lozlab/sampler/mcmc.hpp"
#include "lozlab/sampler/rescale.hpp"

using namespace lozlab;

namespace {

// chi-square p-value of pattern frequencies against the uniform law on `support`.
double uniform_p(const std::map<std::vector<long>, std::uint64_t>& seen, std::size_t support) {
  std::vector<std::uint64_t> counts;
  for (const auto& [k, c] : seen) counts.push_back(c);
  counts.resize(support, 0);
  return stats::chi_square(counts, std::vector<double>(support, 1.0 / static_cast<double>(support))).p_value;
}

}  // namespace

TEST_CASE("branching weights sum to one") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 3; ++m) {
      BigInt top_total = 0;
      for (const auto& lambda : box_partitions(n, m)) top_total += schur_dim(Signature::from_parts(lambda), n);
      CHECK(top_total == count_free(n, m));
      if (n < 2) continue;
      for (const auto& row : box_partitions(n, m)) {
        Rational s = 0;
        for (const auto& [mu, p] : branching_distribution(row)) {
          CHECK(interlaces(row, mu));
          s += p;
        }
        CHECK(s == 1);
      }
    }
}

TEST_CASE("exact free sampler is uniform") {
  RngStream rng(1, 0);
  SUBCASE("n=1, m=3: Y1 uniform on 0..3") {
    const ExactFreeSampler s(1, 3);
    std::map<std::vector<long>, std::uint64_t> seen;
    for (int i = 0; i < 10000; ++i) ++seen[s.sample(rng).flat()];
    CHECK(seen.size() == 4);
    CHECK(uniform_p(seen, 4) > 0.001);
  }
  SUBCASE("n=2, m=2: ten equiprobable patterns") {
    const ExactFreeSampler s(2, 2);
    std::map<std::vector<long>, std::uint64_t> seen;
    for (int i = 0; i < 100000; ++i) ++seen[s.sample(rng).flat()];
    CHECK(seen.size() == 10);
    CHECK(uniform_p(seen, 10) > 0.001);
  }
  SUBCASE("m=0 is deterministic") {
    const ExactFreeSampler s(2, 0);
    for (int i = 0; i < 10; ++i) CHECK(s.sample(rng) == GTPattern(2, 0));
  }
}

TEST_CASE("exact hexagon sampler is uniform") {
  RngStream rng(2, 0);
  SUBCASE("n=1, m=1") {
    const ExactHexSampler s(1, 1);
    std::map<std::vector<long>, std::uint64_t> seen;
    for (int i = 0; i < 10000; ++i) ++seen[s.sample(rng).flat()];
    CHECK(seen.size() == 2);
    CHECK(uniform_p(seen, 2) > 0.001);
  }
  SUBCASE("n=2, m=1") {
    const ExactHexSampler s(2, 1);
    std::map<std::vector<long>, std::uint64_t> seen;
    for (int i = 0; i < 30000; ++i) {
      const GTPattern p = s.sample(rng);
      CHECK(p.row_vector(4) == std::vector<long>{1, 1, 0, 0});
      ++seen[p.flat()];
    }
    CHECK(seen.size() == 6);
    CHECK(uniform_p(seen, 6) > 0.001);
  }
  SUBCASE("m=0") {
    const ExactHexSampler s(2, 0);
    CHECK(s.sample(rng) == GTPattern(4, 0));
  }
}

TEST_CASE("Gibbs property: completions below a fixed top row are uniform") {
  RngStream rng(3, 0);
  const ExactFreeSampler s(3, 2);
  std::map<std::vector<long>, std::map<std::vector<long>, std::uint64_t>> by_top;
  for (int i = 0; i < 60000; ++i) {
    const GTPattern p = s.sample(rng);
    ++by_top[p.row_vector(3)][p.flat()];
  }
  for (const auto& [top, seen] : by_top) {
    std::size_t completions = 0;
    enumerate_with_top(top, 2, [&](const GTPattern&) { ++completions; });
    CHECK(seen.size() <= completions);
    if (completions > 1) CHECK(uniform_p(seen, completions) > 1e-4);
  }
}

TEST_CASE("samplers are reproducible") {
  const ExactFreeSampler s(4, 3);
  RngStream a(9, 0), b(9, 0);
  for (int i = 0; i < 20; ++i) CHECK(s.sample(a) == s.sample(b));
  McmcOptions o;
  o.sweeps = 200;
  o.thin = 10;
  std::vector<GTPattern> x, y;
  RngStream c(9, 1), d(9, 1);
  mcmc_sample_free(5, 4, c, o, [&](const GTPattern& p) { x.push_back(p); });
  mcmc_sample_free(5, 4, d, o, [&](const GTPattern& p) { y.push_back(p); });
  CHECK(x == y);
  CHECK(x.size() == 20);
}

TEST_CASE("exact sampler refuses tables past the cap") {
  CHECK_THROWS_AS(ExactFreeSampler(30, 30), CapExceeded);
}

TEST_CASE("MCMC stationarity on n=2, m=2") {
  RngStream rng(4, 0);
  McmcOptions o;
  o.sweeps = 1000000;
  o.thin = 10;
  o.burn_in = 10000;
  std::map<std::vector<long>, std::uint64_t> seen;
  const SamplerReport rep = mcmc_sample_free(2, 2, rng, o, [&](const GTPattern& p) {
    CHECK(p.valid());
    ++seen[p.flat()];
  });
  std::vector<std::uint64_t> counts;
  for (const auto& [k, c] : seen) counts.push_back(c);
  counts.resize(10, 0);
  CHECK(stats::total_variation(counts, std::vector<double>(10, 0.1)) <= 0.02);
  CHECK(rep.has_diagnostic);
  CHECK(rep.samples == 100000);
  CHECK(rep.burn_in_sweeps == 10000);
}

TEST_CASE("MCMC with walk moves keeps the uniform law") {
  for (MoveSet moves : {MoveSet::sites_and_walks, MoveSet::walks}) {
    RngStream rng(5, 0);
    McmcOptions o;
    o.sweeps = 200000;
    o.thin = 2;
    o.burn_in = 1000;
    o.moves = moves;
    std::map<std::vector<long>, std::uint64_t> seen;
    mcmc_sample_free(3, 2, rng, o, [&](const GTPattern& p) { ++seen[p.flat()]; });
    std::vector<std::uint64_t> counts;
    for (const auto& [k, c] : seen) counts.push_back(c);
    const auto total = static_cast<std::size_t>(count_free(3, 2).get_ui());
    counts.resize(total, 0);
    CHECK(stats::total_variation(counts, std::vector<double>(total, 1.0 / static_cast<double>(total))) <= 0.02);
  }
}

TEST_CASE("MCMC edge cases") {
  SUBCASE("m=0 is frozen") {
    RngStream rng(6, 0);
    McmcOptions o;
    o.sweeps = 100;
    o.thin = 1;
    mcmc_sample_free(3, 0, rng, o, [&](const GTPattern& p) { CHECK(p == GTPattern(3, 0)); });
  }
  SUBCASE("n=1, m=5 is uniform on 0..5") {
    RngStream rng(7, 0);
    McmcOptions o;
    o.sweeps = 60000;
    o.thin = 1;
    std::map<std::vector<long>, std::uint64_t> seen;
    mcmc_sample_free(1, 5, rng, o, [&](const GTPattern& p) { ++seen[p.flat()]; });
    CHECK(uniform_p(seen, 6) > 0.001);
  }
  SUBCASE("hexagon chains keep the top row") {
    RngStream rng(8, 0);
    McmcOptions o;
    o.sweeps = 500;
    o.thin = 5;
    mcmc_sample_hex(3, 2, rng, o, [&](const GTPattern& p) {
      CHECK(p.row_vector(6) == std::vector<long>{2, 2, 2, 0, 0, 0});
      CHECK(p.valid());
    });
  }
  CHECK(default_burn_in(4, 6) == 1000);
  CHECK(parse_moves("sites+walks") == MoveSet::sites_and_walks);
  CHECK_THROWS_AS(parse_moves("jumps"), std::invalid_argument);
}

TEST_CASE("rescaling") {
  CHECK(rescale_positions({24}, 48, 48, Regime::standard)[0] == doctest::Approx(0.0));
  CHECK(regime_divisor(48, 48, Regime::standard) == doctest::Approx(std::sqrt(3.0 * 48 / 8)));
  CHECK(regime_divisor(16, 4096, Regime::tall) == doctest::Approx(4096 / std::sqrt(128.0)));
  CHECK(regime_divisor(512, 8, Regime::wide) == doctest::Approx(2 * std::sqrt(8.0)));
  CHECK(regime_divisor(100000, 8, Regime::wide) == regime_divisor(512, 8, Regime::wide));
  CHECK(parse_regime("tall") == Regime::tall);
  CHECK_THROWS_AS(parse_regime("flat"), std::invalid_argument);
}
