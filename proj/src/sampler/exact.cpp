#include "lozlab/sampler/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/matrix.hpp"

namespace lozlab {
namespace {

std::vector<Rational> power_row(const BigInt& t, std::size_t K) {
  std::vector<Rational> row(K);
  BigInt p(1);
  for (std::size_t j = K; j-- > 0;) {
    row[j] = Rational(p);
    p *= t;
  }
  return row;  // [t^{K-1}, ..., t, 1]
}

std::vector<Rational> power_sum_row(long a, long b, long shift, std::size_t K) {
  std::vector<Rational> row(K, Rational(0));
  for (long v = a; v <= b; ++v) {
    auto r = power_row(BigInt(v + shift), K);
    for (std::size_t j = 0; j < K; ++j) row[j] += r[j];
  }
  return row;
}

// Draws mu interlacing lambda with probability proportional to s_mu(1^{K}).
std::vector<long> sample_row(const std::vector<long>& lambda, RngStream& rng) {
  const std::size_t K = lambda.size() - 1;
  std::vector<long> mu(K);
  if (K == 0) return mu;
  std::vector<std::vector<Rational>> rows(K);
  for (std::size_t i = 0; i < K; ++i)
    rows[i] = power_sum_row(lambda[i + 1], lambda[i], static_cast<long>(K - 1 - i), K);

  for (std::size_t i = 0; i < K; ++i) {
    const long lo = lambda[i + 1];
    const long hi = lambda[i];
    const long shift = static_cast<long>(K - 1 - i);
    if (lo == hi) {
      mu[i] = lo;
      rows[i] = power_row(BigInt(lo + shift), K);
      continue;
    }
    // Cofactors along row i: the marginal weight is linear in that row.
    std::vector<Rational> cof(K);
    for (std::size_t p = 0; p < K; ++p) {
      SquareMatrix<Rational> m(K);
      for (std::size_t r = 0; r < K; ++r)
        for (std::size_t c = 0; c < K; ++c) m(r, c) = (r == i) ? Rational(c == p ? 1 : 0) : rows[r][c];
      cof[p] = determinant(m);
    }
    std::vector<BigInt> cumulative;
    BigInt acc(0);
    for (long v = lo; v <= hi; ++v) {
      auto r = power_row(BigInt(v + shift), K);
      Rational w(0);
      for (std::size_t p = 0; p < K; ++p) w += cof[p] * r[p];
      if (w.get_den() != 1 || sgn(w) < 0) throw std::logic_error("branching weight is not a non-negative integer");
      acc += w.get_num();
      cumulative.push_back(acc);
    }
    BigInt u = rng.uniform_below(acc);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    mu[i] = lo + static_cast<long>(it - cumulative.begin());
    rows[i] = power_row(BigInt(mu[i] + shift), K);
  }
  return mu;
}

void interlacing_rec(const std::vector<long>& lambda, std::vector<long>& mu, std::size_t i,
                     std::vector<std::vector<long>>& out) {
  if (i == mu.size()) {
    out.push_back(mu);
    return;
  }
  for (long v = lambda[i + 1]; v <= lambda[i]; ++v) {
    mu[i] = v;
    interlacing_rec(lambda, mu, i + 1, out);
  }
}

}  // namespace

std::vector<std::pair<std::vector<long>, Rational>> branching_distribution(const std::vector<long>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("branching needs a non-empty row");
  const std::size_t k = lambda.size();
  std::vector<std::vector<long>> children;
  std::vector<long> mu(k - 1);
  interlacing_rec(lambda, mu, 0, children);
  const BigInt parent = schur_dim(Signature::from_parts(lambda), k);
  std::vector<std::pair<std::vector<long>, Rational>> out;
  for (auto& c : children) {
    Rational p(k == 1 ? BigInt(1) : schur_dim(Signature::from_parts(c), k - 1), parent);
    p.canonicalize();
    out.emplace_back(std::move(c), std::move(p));
  }
  return out;
}

void sample_below(GTPattern& pattern, RngStream& rng) {
  for (std::size_t k = pattern.depth(); k >= 2; --k) {
    auto mu = sample_row(pattern.row_vector(k), rng);
    for (std::size_t i = 1; i < k; ++i) pattern.at(k - 1, i) = mu[i - 1];
  }
}

ExactFreeSampler::ExactFreeSampler(std::size_t n, long m, std::uint64_t cap) : n_(n), m_(m) {
  if (n == 0 || m < 0) throw std::invalid_argument("exact free sampler needs n >= 1, m >= 0");
  BigInt table = binomial(static_cast<long>(n) + m, static_cast<long>(n));
  if (table > BigInt(static_cast<unsigned long>(cap)))
    throw CapExceeded("top-row table would hold " + to_string(table) + " partitions (cap " + std::to_string(cap) +
                          "); use the MCMC sampler for this size",
                      table);
  tops_ = box_partitions(n, m);
  BigInt acc(0);
  cumulative_.reserve(tops_.size());
  for (const auto& t : tops_) {
    acc += schur_dim(Signature::from_parts(t), n);
    cumulative_.push_back(acc);
  }
}

GTPattern ExactFreeSampler::sample(RngStream& rng) const {
  BigInt u = rng.uniform_below(total());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto& top = tops_[static_cast<std::size_t>(it - cumulative_.begin())];
  GTPattern p(n_, m_);
  for (std::size_t i = 1; i <= n_; ++i) p.at(n_, i) = top[i - 1];
  sample_below(p, rng);
  return p;
}

ExactHexSampler::ExactHexSampler(std::size_t n, long m) : n_(n), m_(m) {
  if (n == 0 || m < 0) throw std::invalid_argument("exact hexagon sampler needs n >= 1, m >= 0");
}

GTPattern ExactHexSampler::sample(RngStream& rng) const {
  const std::size_t depth = 2 * n_;
  GTPattern p(depth, m_);
  for (std::size_t i = 1; i <= n_; ++i) p.at(depth, i) = m_;
  sample_below(p, rng);
  return p;
}

}  // namespace lozlab
