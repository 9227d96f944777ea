#pragma once

// Seeded, reproducible random streams. A stream is identified by (seed, id);
// distinct ids give independent-by-construction generators.

#include <cstdint>
#include <random>
#include <vector>

#include "lozlab/core/scalar.hpp"

namespace lozlab {

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer in [lo, hi]; unbiased.
  long uniform_int(long lo, long hi);
  /// Uniform integer in [0, bound) for a positive big integer bound.
  BigInt uniform_below(const BigInt& bound);
  /// Standard normal by Box-Muller (pairs are cached).
  double gaussian();
  /// Fisher-Yates shuffle of idx.
  void shuffle(std::vector<std::uint32_t>& idx);

  /// Child stream with an id derived from this stream's identity.
  [[nodiscard]] RngStream split(std::uint64_t child) const;

 private:
  std::uint64_t bounded(std::uint64_t range);  // uniform in [0, range)

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Seed from LOZLAB_SEED if set and parseable, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 20240517);

}  // namespace lozlab
