#include "lozlab/core/signature.hpp"

#include <sstream>
#include <stdexcept>

namespace lozlab {

Signature Signature::from_doubled(std::vector<long> doubled) {
  for (std::size_t i = 1; i < doubled.size(); ++i) {
    if (doubled[i] > doubled[i - 1]) throw std::invalid_argument("signature parts must be weakly decreasing");
    if (((doubled[i] ^ doubled[0]) & 1) != 0) throw std::invalid_argument("signature mixes integer and half-integer parts");
  }
  return Signature(std::move(doubled));
}

Signature Signature::from_parts(const std::vector<long>& parts) {
  std::vector<long> d;
  d.reserve(parts.size());
  for (long p : parts) d.push_back(2 * p);
  return from_doubled(std::move(d));
}

Signature Signature::parse(const std::string& text) {
  std::vector<long> d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Rational q = parse_rational(item);
    Rational twice = 2 * q;
    if (twice.get_den() != 1) throw std::invalid_argument("signature part is not a half-integer: " + item);
    if (!twice.get_num().fits_slong_p()) throw std::invalid_argument("signature part too large: " + item);
    d.push_back(twice.get_num().get_si());
  }
  return from_doubled(std::move(d));
}

Signature Signature::constant(long doubled_value, std::size_t n) {
  return Signature(std::vector<long>(n, doubled_value));
}

Signature Signature::staircase(std::size_t k) {
  std::vector<long> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = 2 * static_cast<long>(k - 1 - i);
  return Signature(std::move(d));
}

Signature Signature::tau(long r, std::size_t n) { return constant(r - 1, n); }

Signature Signature::nu(long m, std::size_t n) {
  std::vector<long> d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = m + 1;
    d[n + i] = -m + 1;
  }
  return from_doubled(std::move(d));
}

Signature Signature::hexagon_top(long m, std::size_t n) {
  std::vector<long> d(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = 2 * m;
  return from_doubled(std::move(d));
}

std::vector<long> Signature::parts() const {
  if (half_integer()) throw std::invalid_argument("signature has half-integer parts: " + str());
  std::vector<long> out;
  out.reserve(doubled_.size());
  for (long d : doubled_) out.push_back(d / 2);
  return out;
}

Signature Signature::padded(std::size_t n) const {
  if (n < doubled_.size()) {
    for (std::size_t i = n; i < doubled_.size(); ++i)
      if (doubled_[i] != 0) throw std::invalid_argument("signature " + str() + " is longer than " + std::to_string(n));
    return Signature(std::vector<long>(doubled_.begin(), doubled_.begin() + static_cast<long>(n)));
  }
  if (half_integer() && n > doubled_.size()) throw std::invalid_argument("cannot zero-pad a half-integer signature");
  std::vector<long> d = doubled_;
  d.resize(n, 0);
  return from_doubled(std::move(d));
}

Signature Signature::shifted(long doubled_shift) const {
  std::vector<long> d = doubled_;
  for (long& v : d) v += doubled_shift;
  return Signature(std::move(d));
}

std::string Signature::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ",";
    out += (doubled_[i] % 2 == 0) ? std::to_string(doubled_[i] / 2) : std::to_string(doubled_[i]) + "/2";
  }
  return out + ")";
}

bool interlaces(const std::vector<long>& lambda, const std::vector<long>& mu) {
  if (mu.size() + 1 != lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i] || mu[i] < lambda[i + 1]) return false;
  return true;
}

namespace {

// Fills parts from the last one upward so the output is colex ascending.
void box_rec(std::vector<long>& cur, std::size_t filled, long lo, long m, std::vector<std::vector<long>>& out) {
  if (filled == cur.size()) {
    out.push_back(cur);
    return;
  }
  std::size_t i = cur.size() - 1 - filled;
  for (long v = lo; v <= m; ++v) {
    cur[i] = v;
    box_rec(cur, filled + 1, v, m, out);
  }
}

}  // namespace

std::vector<std::vector<long>> box_partitions(std::size_t n, long m) {
  if (n == 0) return {{}};
  std::vector<std::vector<long>> out;
  std::vector<long> cur(n, 0);
  box_rec(cur, 0, 0, m, out);
  return out;
}

}  // namespace lozlab
