#include "lozlab/tiling/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "lozlab/charlib/characters.hpp"

namespace lozlab {

GTPattern::GTPattern(std::size_t depth, long ceiling)
    : depth_(depth), ceiling_(ceiling), data_(offset(depth + 1), 0) {
  if (ceiling < 0) throw std::invalid_argument("pattern ceiling must be non-negative");
}

GTPattern GTPattern::from_rows(const std::vector<std::vector<long>>& rows, long ceiling) {
  GTPattern p(rows.size(), ceiling);
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    if (rows[k - 1].size() != k)
      throw std::invalid_argument("row " + std::to_string(k) + " must have " + std::to_string(k) + " entries");
    for (std::size_t i = 1; i <= k; ++i) p.at(k, i) = rows[k - 1][i - 1];
  }
  if (auto why = p.violation(); !why.empty()) throw std::invalid_argument("invalid pattern: " + why);
  return p;
}

std::vector<long> GTPattern::row_vector(std::size_t k) const {
  auto r = row(k);
  return {r.begin(), r.end()};
}

std::vector<std::vector<long>> GTPattern::rows() const {
  std::vector<std::vector<long>> out;
  for (std::size_t k = 1; k <= depth_; ++k) out.push_back(row_vector(k));
  return out;
}

std::string GTPattern::violation() const {
  for (std::size_t k = 1; k <= depth_; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      long v = at(k, i);
      if (v < 0 || v > ceiling_)
        return "entry (" + std::to_string(k) + "," + std::to_string(i) + ") outside [0," + std::to_string(ceiling_) + "]";
      if (k < depth_ && (at(k + 1, i) < v || v < at(k + 1, i + 1)))
        return "rows " + std::to_string(k) + " and " + std::to_string(k + 1) + " do not interlace at " + std::to_string(i);
    }
  }
  return {};
}

std::string GTPattern::to_json() const {
  std::string out = "[";
  for (std::size_t k = 1; k <= depth_; ++k) {
    if (k > 1) out += ",";
    out += "[";
    for (std::size_t i = 1; i <= k; ++i) {
      if (i > 1) out += ",";
      out += std::to_string(at(k, i));
    }
    out += "]";
  }
  return out + "]";
}

GTPattern GTPattern::from_json(const std::string& text, long ceiling) {
  auto j = nlohmann::json::parse(text);
  return from_rows(j.get<std::vector<std::vector<long>>>(), ceiling);
}

// --- SSYT bijection ---------------------------------------------------------------

GTPattern from_ssyt(const Tableau& t, std::size_t n, long m) {
  if (t.size() > n) throw std::invalid_argument("tableau has more rows than letters");
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto& row = t[r];
    if (static_cast<long>(row.size()) > m) throw std::invalid_argument("tableau row longer than the box width");
    if (r > 0 && row.size() > t[r - 1].size()) throw std::invalid_argument("tableau rows must weakly shrink");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > static_cast<long>(n)) throw std::invalid_argument("tableau letter out of range");
      if (c > 0 && row[c] < row[c - 1]) throw std::invalid_argument("tableau rows must weakly increase");
      if (r > 0 && row[c] <= t[r - 1][c]) throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
  GTPattern p(n, m);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= k && i <= t.size(); ++i)
      p.at(k, i) = std::count_if(t[i - 1].begin(), t[i - 1].end(), [k](long e) { return e <= static_cast<long>(k); });
  return p;
}

Tableau to_ssyt(const GTPattern& p) {
  const std::size_t n = p.depth();
  Tableau t(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i; k <= n; ++k) {
      long below = (i <= k - 1) ? p.at(k - 1, i) : 0;
      for (long c = below; c < p.at(k, i); ++c) t[i - 1].push_back(static_cast<long>(k));
    }
  }
  while (!t.empty() && t.back().empty()) t.pop_back();
  return t;
}

std::vector<long> positions(const GTPattern& p, std::size_t k) {
  if (k < 1 || k > p.depth()) throw std::invalid_argument("line index out of range");
  std::vector<long> y(k);
  for (std::size_t j = 1; j <= k; ++j) y[j - 1] = p.at(k, j) + static_cast<long>(k - j);
  return y;
}

// --- counting & enumeration --------------------------------------------------------

BigInt count_free(std::size_t n, long m) {
  if (n == 0) throw std::invalid_argument("count_free needs n >= 1");
  if (m < 0) throw std::invalid_argument("count_free needs m >= 0");
  Rational v = phi_m_eval(m, EvalPoint<Rational>::ones(n), n);
  return v.get_num();
}

BigInt count_hex(std::size_t n, long m) { return schur_dim(Signature::hexagon_top(m, n), 2 * n); }

std::vector<Rational> first_line_law(std::size_t n, long m) {
  if (n == 0 || m < 0) throw std::invalid_argument("first_line_law needs n >= 1 and m >= 0");
  const Signature tm = Signature::tau(m, n);
  const Signature t0 = Signature::tau(0, n);
  const auto K = static_cast<std::size_t>(m) + 1;
  std::vector<Rational> xs(K), c(K);
  for (std::size_t j = 0; j < K; ++j) {
    xs[j] = Rational(static_cast<long>((j + 2) * (j + 2)));
    c[j] = *exact_pow_half(xs[j], m) * normalized_symplectic(tm, xs[j], n) / normalized_symplectic(t0, xs[j], n);
  }
  // Newton divided differences, then expand the Newton form into monomials.
  for (std::size_t l = 1; l < K; ++l)
    for (std::size_t i = K - 1; i >= l; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - l]);
  std::vector<Rational> p(K, Rational(0));
  for (std::size_t i = K; i-- > 0;) {
    std::vector<Rational> q(K, Rational(0));
    for (std::size_t d = 0; d + 1 < K; ++d) {
      q[d + 1] += p[d];
      q[d] -= p[d] * xs[i];
    }
    q[0] += c[i];
    p = std::move(q);
  }
  return p;
}

namespace {

// Depth-first walk over entries in flat order; each entry ranges over an
// interval fixed by the previous row (and by the optional top row).
class Walker {
 public:
  Walker(std::size_t depth, long ceiling, const std::vector<long>* top, const PatternVisitor& visit)
      : p_(depth, ceiling), top_(top), visit_(visit) {}

  void run() { step(1, 1); }

 private:
  void step(std::size_t k, std::size_t i) {
    if (k > p_.depth()) {
      visit_(p_);
      return;
    }
    long lo = (i <= k - 1) ? p_.at(k - 1, i) : 0;
    long hi = (i >= 2) ? p_.at(k - 1, i - 1) : p_.ceiling();
    if (top_ != nullptr) {
      const std::size_t N = top_->size();
      lo = std::max(lo, (*top_)[i + N - k - 1]);
      hi = std::min(hi, (*top_)[i - 1]);
    }
    std::size_t nk = (i == k) ? k + 1 : k;
    std::size_t ni = (i == k) ? 1 : i + 1;
    for (long v = lo; v <= hi; ++v) {
      p_.at(k, i) = v;
      step(nk, ni);
    }
  }

  GTPattern p_;
  const std::vector<long>* top_;
  const PatternVisitor& visit_;
};

void check_cap(const BigInt& count, std::uint64_t cap, const std::string& what) {
  if (count > BigInt(static_cast<unsigned long>(cap)))
    throw CapExceeded(what + " has " + to_string(count) + " patterns, above the cap of " + std::to_string(cap), count);
}

}  // namespace

void enumerate_free(std::size_t n, long m, const PatternVisitor& visit, std::uint64_t cap) {
  check_cap(count_free(n, m), cap, "free tiling enumeration (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  Walker(n, m, nullptr, visit).run();
}

void enumerate_with_top(const std::vector<long>& top, long ceiling, const PatternVisitor& visit, std::uint64_t cap) {
  Signature::from_parts(top);  // validates ordering
  for (long v : top)
    if (v < 0 || v > ceiling) throw std::invalid_argument("top row outside [0, ceiling]");
  check_cap(schur_dim(Signature::from_parts(top), top.size()), cap, "completion enumeration");
  Walker(top.size(), ceiling, &top, visit).run();
}

void enumerate_hex(std::size_t n, long m, const PatternVisitor& visit, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("enumerate_hex needs n >= 1");
  enumerate_with_top(Signature::hexagon_top(m, n).parts(), m, visit, cap);
}

std::vector<GTPattern> list_free(std::size_t n, long m, std::uint64_t cap) {
  std::vector<GTPattern> out;
  enumerate_free(n, m, [&](const GTPattern& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<GTPattern> list_hex(std::size_t n, long m, std::uint64_t cap) {
  std::vector<GTPattern> out;
  enumerate_hex(n, m, [&](const GTPattern& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace lozlab
