#include "lozlab/core/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lozlab {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x6c6f7a6cu};
  return std::mt19937_64(seq);
}

// splitmix64 finaliser, used to derive child ids.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id), engine_(make_engine(seed, stream_id)) {}

double RngStream::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::bounded(std::uint64_t range) {
  // Lemire's multiply-shift with rejection.
  std::uint64_t x = engine_();
  __uint128_t m = static_cast<__uint128_t>(x) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      x = engine_();
      m = static_cast<__uint128_t>(x) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

long RngStream::uniform_int(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int needs lo <= hi");
  auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long>(engine_());  // full 64-bit range
  return lo + static_cast<long>(bounded(range));
}

BigInt RngStream::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  while (true) {
    BigInt x(0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t r = engine_();
      if (w == 0 && spare > 0) r >>= spare;
      x <<= 64;
      x += BigInt(static_cast<unsigned long>(r));
    }
    if (x < bound) return x;
  }
}

double RngStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

void RngStream::shuffle(std::vector<std::uint32_t>& idx) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(bounded(i));
    std::swap(idx[i - 1], idx[j]);
  }
}

RngStream RngStream::split(std::uint64_t child) const { return RngStream(seed_, mix(stream_ ^ mix(child + 1))); }

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("LOZLAB_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used, 10);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace lozlab
