#pragma once

// Highest weights: weakly decreasing tuples of integers or half-integers.
// Parts are stored doubled so both kinds share one exact representation.

#include <cstdint>
#include <string>
#include <vector>

#include "lozlab/core/scalar.hpp"

namespace lozlab {

class Signature {
 public:
  Signature() = default;

  /// From doubled parts 2*lambda_i; validates ordering and common parity.
  static Signature from_doubled(std::vector<long> doubled);
  /// Integer signature from its parts.
  static Signature from_parts(const std::vector<long>& parts);
  /// Parses "2,1,0" or "1/2,1/2,-1/2" (largest part first).
  static Signature parse(const std::string& text);

  /// (v)^n with v given doubled.
  static Signature constant(long doubled_value, std::size_t n);
  /// (k-1, ..., 1, 0).
  static Signature staircase(std::size_t k);
  /// ((r-1)/2)^n; tau(0) is (-1/2)^n.
  static Signature tau(long r, std::size_t n);
  /// ((m/2 + 1/2)^n, (-m/2 + 1/2)^n), length 2n.
  static Signature nu(long m, std::size_t n);
  /// (m^n, 0^n), the top row of the hexagon.
  static Signature hexagon_top(long m, std::size_t n);

  [[nodiscard]] std::size_t length() const { return doubled_.size(); }
  [[nodiscard]] bool half_integer() const { return !doubled_.empty() && (doubled_.front() & 1) != 0; }
  [[nodiscard]] const std::vector<long>& doubled() const { return doubled_; }
  [[nodiscard]] long doubled_part(std::size_t i) const { return doubled_.at(i); }

  /// Integer parts; throws std::invalid_argument for half-integer signatures.
  [[nodiscard]] std::vector<long> parts() const;
  /// Part i as an exact rational.
  [[nodiscard]] Rational part(std::size_t i) const { return Rational(doubled_.at(i), 2); }

  /// Zero-padded (or validated) to length n.
  [[nodiscard]] Signature padded(std::size_t n) const;
  /// Every part shifted by doubled_shift/2.
  [[nodiscard]] Signature shifted(long doubled_shift) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  explicit Signature(std::vector<long> doubled) : doubled_(std::move(doubled)) {}
  std::vector<long> doubled_;
};

/// True when mu interlaces lambda from below: lambda_i >= mu_i >= lambda_{i+1},
/// with |mu| = |lambda| - 1 entries.
bool interlaces(const std::vector<long>& lambda, const std::vector<long>& mu);

/// All partitions with at most n parts, each at most m, in colex order
/// (compared from the last part backwards).
std::vector<std::vector<long>> box_partitions(std::size_t n, long m);

}  // namespace lozlab
