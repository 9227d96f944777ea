#pragma once

// Gelfand-Tsetlin patterns: the encoding of free-boundary tilings (depth n,
// free top row) and hexagon tilings (depth 2n, top row (m^n, 0^n)).
//
// Row k (1-based) has k entries, stored contiguously in a flat buffer at
// offset k(k-1)/2. Rows interlace: row_{k+1,i} >= row_{k,i} >= row_{k+1,i+1}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lozlab/core/scalar.hpp"
#include "lozlab/core/signature.hpp"

namespace lozlab {

class GTPattern {
 public:
  GTPattern() = default;
  /// All-zero pattern of the given depth and ceiling.
  GTPattern(std::size_t depth, long ceiling);
  /// From explicit rows (bottom row first); validates interlacing and bounds.
  static GTPattern from_rows(const std::vector<std::vector<long>>& rows, long ceiling);

  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] long ceiling() const { return ceiling_; }

  static constexpr std::size_t offset(std::size_t k) { return k * (k - 1) / 2; }

  /// Entry i (1-based) of row k (1-based).
  [[nodiscard]] long at(std::size_t k, std::size_t i) const { return data_[offset(k) + i - 1]; }
  long& at(std::size_t k, std::size_t i) { return data_[offset(k) + i - 1]; }

  [[nodiscard]] std::span<const long> row(std::size_t k) const { return {data_.data() + offset(k), k}; }
  [[nodiscard]] std::vector<long> row_vector(std::size_t k) const;
  [[nodiscard]] std::vector<std::vector<long>> rows() const;

  [[nodiscard]] const std::vector<long>& flat() const { return data_; }
  std::vector<long>& flat() { return data_; }

  /// Empty string when valid, otherwise a description of the first violation.
  [[nodiscard]] std::string violation() const;
  [[nodiscard]] bool valid() const { return violation().empty(); }

  /// `[[r1],[r2a,r2b],...]`, bottom row first.
  [[nodiscard]] std::string to_json() const;
  static GTPattern from_json(const std::string& text, long ceiling);

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern& a, const GTPattern& b) { return a.data_ <=> b.data_; }

 private:
  std::size_t depth_ = 0;
  long ceiling_ = 0;
  std::vector<long> data_;
};

/// A semistandard tableau: rows of weakly increasing entries (1-based letters).
using Tableau = std::vector<std::vector<long>>;

/// Pattern whose row k is the shape filled by letters <= k.
GTPattern from_ssyt(const Tableau& tableau, std::size_t n, long m);
/// Inverse of from_ssyt; row i of the tableau has top_row_i cells.
Tableau to_ssyt(const GTPattern& pattern);

/// Y^k_j = row_{k,j} + (k - j), strictly decreasing.
std::vector<long> positions(const GTPattern& pattern, std::size_t k);

/// Default enumeration cap.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/// Raised when an enumeration or exact table would exceed its cap; carries the exact count.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, BigInt count) : std::runtime_error(what), count_(std::move(count)) {}
  [[nodiscard]] const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

/// Number of free-boundary tilings, phi_m(1^n).
BigInt count_free(std::size_t n, long m);
/// Number of hexagon tilings, s_{(m^n,0^n)}(1^{2n}).
BigInt count_hex(std::size_t n, long m);

/// Exact law of the single entry on line 1: P(y^1 = j) for j = 0..m. These are
/// the coefficients of the degree-m polynomial Phi_m(x; n), recovered by exact
/// interpolation at perfect squares (so half-integer powers stay rational).
std::vector<Rational> first_line_law(std::size_t n, long m);

using PatternVisitor = std::function<void(const GTPattern&)>;

/// Visits every free pattern in lexicographic order of the concatenated rows.
void enumerate_free(std::size_t n, long m, const PatternVisitor& visit, std::uint64_t cap = kEnumerationCap);
/// Visits every hexagon pattern (depth 2n) in the same order.
void enumerate_hex(std::size_t n, long m, const PatternVisitor& visit, std::uint64_t cap = kEnumerationCap);

/// Patterns of depth `depth` with top row fixed to `top` (interlacing completions).
void enumerate_with_top(const std::vector<long>& top, long ceiling, const PatternVisitor& visit,
                        std::uint64_t cap = kEnumerationCap);

std::vector<GTPattern> list_free(std::size_t n, long m, std::uint64_t cap = kEnumerationCap);
std::vector<GTPattern> list_hex(std::size_t n, long m, std::uint64_t cap = kEnumerationCap);

}  // namespace lozlab
