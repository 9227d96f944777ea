#include <doctest.h>

#include <cmath>
#include <map>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/tiling/pattern.hpp"
#include "lozlab/tiling/profile.hpp"

using namespace lozlab;

TEST_CASE("SSYT to pattern: the shape (4,3,3) example") {
  const Tableau t = {{1, 1, 2, 5}, {3, 4, 4}, {5, 5, 5}};
  const GTPattern p = from_ssyt(t, 5, 4);
  CHECK(p.row_vector(3) == std::vector<long>{3, 1, 0});
  CHECK(p.row_vector(5) == std::vector<long>{4, 3, 3, 0, 0});
  CHECK(to_ssyt(p) == t);
}

TEST_CASE("empty tableau gives the zero pattern") {
  const GTPattern p = from_ssyt({}, 3, 2);
  CHECK(p == GTPattern(3, 2));
}

TEST_CASE("SSYT bijection round trip") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 2; ++m) {
      std::map<std::vector<long>, std::size_t> shapes;
      for (const auto& p : list_free(n, m)) {
        const Tableau t = to_ssyt(p);
        CHECK(from_ssyt(t, n, m) == p);
        std::vector<long> shape(n, 0);
        for (std::size_t i = 0; i < t.size(); ++i) shape[i] = static_cast<long>(t[i].size());
        ++shapes[shape];
      }
      for (const auto& [shape, count] : shapes)
        CHECK(BigInt(static_cast<unsigned long>(count)) == schur_dim(Signature::from_parts(shape), n));
    }
}

TEST_CASE("positions add the staircase") {
  GTPattern p(3, 4);
  p.at(3, 1) = 4;
  p.at(3, 2) = 3;
  p.at(2, 1) = 3;
  p.at(2, 2) = 0;
  p.at(1, 1) = 2;
  REQUIRE(p.valid());
  CHECK(positions(p, 3) == std::vector<long>{6, 4, 0});
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<long> stair;
    for (std::size_t j = k; j-- > 0;) stair.push_back(static_cast<long>(j));
    CHECK(positions(GTPattern(4, 2), k) == stair);
  }
  const GTPattern q = GTPattern::from_rows({{1}, {2, 0}}, 2);
  CHECK(positions(q, 2) == std::vector<long>{3, 0});
}

TEST_CASE("positions are strictly decreasing, bounded and interlace") {
  for (const auto& p : list_free(4, 3)) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto y = positions(p, k);
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(y[j] >= 0);
        CHECK(y[j] <= 3 + static_cast<long>(k) - 1);
        if (j + 1 < k) CHECK(y[j] > y[j + 1]);
      }
      if (k < 4) {
        const auto z = positions(p, k + 1);
        for (std::size_t j = 0; j < k; ++j) {
          CHECK(z[j] > y[j]);
          CHECK(y[j] >= z[j + 1]);
        }
      }
    }
  }
}

TEST_CASE("pattern validation and JSON") {
  CHECK_THROWS_AS(GTPattern::from_rows({{3}, {2, 0}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(GTPattern::from_rows({{1}, {4, 0}}, 3), std::invalid_argument);
  const GTPattern p = GTPattern::from_rows({{1}, {2, 0}}, 2);
  CHECK(p.to_json() == "[[1],[2,0]]");
  CHECK(GTPattern::from_json(p.to_json(), 2) == p);
}

TEST_CASE("enumeration counts") {
  CHECK(list_free(1, 3).size() == 4);
  CHECK(list_free(2, 2).size() == 10);
  CHECK(list_free(3, 0).size() == 1);
  CHECK(list_free(3, 0)[0] == GTPattern(3, 0));
  CHECK(list_hex(1, 1).size() == 2);
  CHECK(list_hex(3, 0).size() == 1);
  CHECK(list_hex(2, 1).size() == 6);
  for (long m = 0; m <= 6; ++m) CHECK(count_free(1, m) == m + 1);
  CHECK(count_free(5, 0) == 1);
  CHECK(count_free(2, 2) == 10);
  CHECK(count_hex(2, 1) == 6);
}

TEST_CASE("enumeration is lexicographic and matches the counts") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long m = 0; m <= 4; ++m) {
      std::uint64_t c = 0;
      std::vector<long> prev;
      bool ordered = true;
      enumerate_free(n, m, [&](const GTPattern& p) {
        ordered &= c == 0 || prev < p.flat();
        prev = p.flat();
        ++c;
      });
      CHECK(ordered);
      CHECK(BigInt(static_cast<unsigned long>(c)) == count_free(n, m));
    }
  for (std::size_t n = 1; n <= 2; ++n)
    for (long m = 0; m <= 2; ++m)
      CHECK(BigInt(static_cast<unsigned long>(list_hex(n, m).size())) == count_hex(n, m));
}

TEST_CASE("enumeration refuses beyond the cap") {
  CHECK_THROWS_AS(enumerate_free(4, 4, [](const GTPattern&) {}, 100), CapExceeded);
}

TEST_CASE("position marginal counts") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m)
      for (std::size_t k = 1; k < n; ++k) {
        std::map<std::vector<long>, std::uint64_t> counts;
        enumerate_free(n, m, [&](const GTPattern& p) { ++counts[p.row_vector(k)]; });
        for (const auto& [y, c] : counts) {
          const Signature ys = Signature::from_parts(y);
          BigInt expected = 0;
          for (const auto& lambda : box_partitions(n, m)) {
            std::vector<long> padded = y;
            padded.resize(n, 0);
            bool contains = true;
            for (std::size_t i = 0; i < n; ++i) contains &= lambda[i] >= padded[i];
            if (contains)
              expected += skew_schur_dim(Signature::from_parts(lambda), Signature::from_parts(padded),
                                         static_cast<long>(n - k));
          }
          expected *= schur_dim(ys, k);
          CHECK(BigInt(static_cast<unsigned long>(c)) == expected);
        }
      }
}

TEST_CASE("first line law") {
  const auto law = first_line_law(1, 4);
  REQUIRE(law.size() == 5);
  for (const auto& p : law) CHECK(p == Rational(1, 5));
  std::map<long, std::uint64_t> counts;
  std::uint64_t total = 0;
  enumerate_free(3, 3, [&](const GTPattern& p) {
    ++counts[p.at(1, 1)];
    ++total;
  });
  const auto law3 = first_line_law(3, 3);
  Rational sum = 0;
  for (std::size_t j = 0; j < law3.size(); ++j) {
    Rational freq(static_cast<long>(counts[static_cast<long>(j)]), static_cast<long>(total));
    freq.canonicalize();
    CHECK(law3[j] == freq);
    sum += law3[j];
  }
  CHECK(sum == 1);
}

TEST_CASE("profile function") {
  const Signature zero = Signature::from_parts({0, 0, 0});
  CHECK(profile_eval(zero, 0.75) == doctest::Approx(0.75));
  CHECK(profile_eval(zero, -5.0) == doctest::Approx(1.0));
  CHECK(profile_eval(Signature::from_parts({1, 0}), 0.5) == doctest::Approx(1.5));
  const Signature l = Signature::from_parts({4, 2, 2, 1, 0});
  CHECK(profile_eval(l, 6.0) == doctest::Approx(6.0));
  CHECK(profile_eval(l, -8.0) == doctest::Approx(2.0));
  for (int x = -8; x <= 6; ++x) {
    const double d = profile_eval(l, x) - x;
    CHECK(d >= 0.0);
    CHECK(std::fmod(d, 2.0) == doctest::Approx(0.0));
  }
  for (double x = -8.0; x < 6.0; x += 0.25)
    CHECK(std::abs(profile_eval(l, x + 0.25) - profile_eval(l, x)) <= 0.25 + 1e-12);
}

TEST_CASE("counting measure") {
  const CountingMeasure z(Signature::from_parts({0, 0, 0, 0}));
  CHECK(z.atoms() == std::vector<double>{0.75, 0.5, 0.25, 0.0});
  CHECK(z.moment(0) == doctest::Approx(1.0));
  CHECK(z.moment(2) == doctest::Approx((0.0 + 1.0 / 16 + 4.0 / 16 + 9.0 / 16) / 4));
  const CountingMeasure t(Signature::from_parts({2, 0}));
  CHECK(t.atoms() == std::vector<double>{1.5, 0.0});
  CHECK(t.weight() == doctest::Approx(0.5));
  CHECK(t.cdf(1.0) == doctest::Approx(0.5));
  CHECK(t.cdf(2.0) == doctest::Approx(1.0));
}
