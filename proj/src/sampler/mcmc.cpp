#include "lozlab/sampler/mcmc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lozlab/core/stats.hpp"

namespace lozlab {

GlauberChain::GlauberChain(std::size_t n, long m, Boundary boundary, StartState start)
    : depth_(boundary == Boundary::hexagon ? 2 * n : n), m_(m), fixed_top_(boundary == Boundary::hexagon) {
  if (n == 0) throw std::invalid_argument("Glauber chain needs n >= 1");
  if (m < 0) throw std::invalid_argument("Glauber chain needs m >= 0");
  const std::size_t E = GTPattern::offset(depth_ + 1);
  const auto zero = static_cast<std::uint32_t>(E);
  const auto ceil = static_cast<std::uint32_t>(E + 1);
  state_.assign(E + 2, 0);
  state_[ceil] = static_cast<std::int32_t>(m);
  lo1_.resize(E);
  lo2_.resize(E);
  hi1_.resize(E);
  hi2_.resize(E);

  // Top row of the hexagon: (m^n, 0^n).
  std::vector<long> top(depth_, 0);
  if (boundary == Boundary::hexagon)
    for (std::size_t i = 0; i < n; ++i) top[i] = m;

  for (std::size_t k = 1; k <= depth_; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t e = GTPattern::offset(k) + i - 1;
      auto idx = [](std::size_t kk, std::size_t ii) { return static_cast<std::uint32_t>(GTPattern::offset(kk) + ii - 1); };
      lo1_[e] = (i <= k - 1) ? idx(k - 1, i) : zero;
      hi1_[e] = (i >= 2) ? idx(k - 1, i - 1) : ceil;
      lo2_[e] = (k < depth_) ? idx(k + 1, i + 1) : zero;
      hi2_[e] = (k < depth_) ? idx(k + 1, i) : ceil;
      long v = 0;
      if (boundary == Boundary::hexagon) {
        v = (start == StartState::minimal) ? top[i + depth_ - k - 1] : top[i - 1];
      } else {
        v = (start == StartState::minimal) ? 0 : m;
      }
      state_[e] = static_cast<std::int32_t>(v);
      const bool frozen = boundary == Boundary::hexagon && k == depth_;
      if (!frozen) order_.push_back(static_cast<std::uint32_t>(e));
    }
  }
  free_entries_ = order_.size();
  for (long j = 1; j <= m; ++j) walk_order_.push_back(static_cast<std::uint32_t>(j));
}

void GlauberChain::sweep(RngStream& rng) {
  rng.shuffle(order_);
  std::int32_t* s = state_.data();
  for (std::uint32_t e : order_) {
    const std::int32_t lo = std::max(s[lo1_[e]], s[lo2_[e]]);
    const std::int32_t hi = std::min(s[hi1_[e]], s[hi2_[e]]);
    std::int32_t v = lo;
    if (hi > lo) v = static_cast<std::int32_t>(rng.uniform_int(lo, hi));
    if (v != s[e]) ++changes_;
    s[e] = v;
  }
  updates_ += free_entries_;
}

std::int32_t GlauberChain::column_length(std::size_t k, std::int32_t j) const {
  // Rows are weakly decreasing: count the leading entries >= j.
  const std::int32_t* row = state_.data() + GTPattern::offset(k);
  std::size_t lo = 0;
  std::size_t hi = k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (row[mid] >= j) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return static_cast<std::int32_t>(lo);
}

void GlauberChain::resample_walk(std::int32_t j, RngStream& rng) {
  const std::size_t D = depth_;
  lo_.resize(D + 1);
  hi_.resize(D + 1);
  walk_.resize(D + 1);
  count_off_.resize(D + 2);
  for (std::size_t k = 1; k <= D; ++k) {
    lo_[k] = j < m_ ? column_length(k, j + 1) : 0;
    hi_[k] = j > 1 ? column_length(k, j - 1) : static_cast<std::int32_t>(k);
  }
  if (fixed_top_) lo_[D] = hi_[D] = column_length(D, j);
  count_off_[1] = 0;
  for (std::size_t k = 1; k <= D; ++k) count_off_[k + 1] = count_off_[k] + static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
  counts_.assign(count_off_[D + 1], 0.0);
  auto cnt = [&](std::size_t k, std::int32_t h) -> double {
    if (h < lo_[k] || h > hi_[k]) return 0.0;
    return counts_[count_off_[k] + static_cast<std::size_t>(h - lo_[k])];
  };
  // Backward counts of completions, rescaled per row (only within-row ratios matter).
  for (std::int32_t h = lo_[D]; h <= hi_[D]; ++h) counts_[count_off_[D] + static_cast<std::size_t>(h - lo_[D])] = 1.0;
  for (std::size_t k = D - 1; k >= 1; --k) {
    double peak = 0.0;
    for (std::int32_t h = lo_[k]; h <= hi_[k]; ++h) {
      const double v = cnt(k + 1, h) + cnt(k + 1, h + 1);
      counts_[count_off_[k] + static_cast<std::size_t>(h - lo_[k])] = v;
      peak = std::max(peak, v);
    }
    if (peak > 0.0)
      for (std::size_t e = count_off_[k]; e < count_off_[k + 1]; ++e) counts_[e] /= peak;
  }
  std::int32_t w = 0;
  for (std::size_t k = 1; k <= D; ++k) {
    const double stay = cnt(k, w);
    const double step = cnt(k, w + 1);
    if (stay + step <= 0.0) throw std::logic_error("walk move reached an infeasible state");
    if (rng.uniform01() * (stay + step) >= stay) ++w;
    walk_[k] = w;
  }
  // Entries strictly between the neighbouring walks take values j-1 or j.
  for (std::size_t k = 1; k <= D; ++k) {
    std::int32_t* row = state_.data() + GTPattern::offset(k);
    for (std::int32_t i = lo_[k]; i < hi_[k]; ++i) {
      const std::int32_t v = i < walk_[k] ? j : j - 1;
      if (row[i] != v) ++changes_;
      row[i] = v;
    }
  }
  ++walk_updates_;
}

void GlauberChain::walk_sweep(RngStream& rng) {
  if (m_ == 0) return;
  rng.shuffle(walk_order_);
  for (std::uint32_t j : walk_order_) resample_walk(static_cast<std::int32_t>(j), rng);
}

GTPattern GlauberChain::pattern() const {
  GTPattern p(depth_, m_);
  for (std::size_t e = 0; e < p.flat().size(); ++e) p.flat()[e] = state_[e];
  return p;
}

void GlauberChain::row(std::size_t k, std::vector<long>& out) const {
  out.resize(k);
  const std::size_t off = GTPattern::offset(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = state_[off + i];
}

std::uint64_t default_burn_in(std::size_t n, long m) {
  const auto s = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(m);
  return 10 * s * s;
}

MoveSet parse_moves(const std::string& name) {
  if (name == "sites") return MoveSet::sites;
  if (name == "sites+walks") return MoveSet::sites_and_walks;
  if (name == "walks") return MoveSet::walks;
  throw std::invalid_argument("unknown move set '" + name + "' (sites, sites+walks, walks)");
}

std::string moves_name(MoveSet moves) {
  switch (moves) {
    case MoveSet::sites: return "sites";
    case MoveSet::sites_and_walks: return "sites+walks";
    case MoveSet::walks: return "walks";
  }
  return "sites";
}

SamplerReport run_glauber(std::size_t n, long m, Boundary boundary, RngStream& rng, const McmcOptions& options,
                          const ChainVisitor& visit) {
  if (options.sweeps == 0) throw std::invalid_argument("MCMC needs a positive number of sweeps");
  if (options.chains == 0) throw std::invalid_argument("MCMC needs at least one chain");
  const auto t0 = std::chrono::steady_clock::now();
  SamplerReport rep;
  rep.method = "mcmc";
  rep.burn_in_sweeps = options.burn_in == 0 ? default_burn_in(n, m) : options.burn_in;
  rep.thin = options.thin == 0 ? n : options.thin;
  if (rep.thin == 0) throw std::invalid_argument("thinning must be positive");
  const std::uint64_t total = options.sweeps / rep.thin;
  if (total == 0) throw std::invalid_argument("sweeps must be at least the thinning interval");

  auto step = [&](GlauberChain& chain, RngStream& stream) {
    if (options.moves != MoveSet::walks) chain.sweep(stream);
    if (options.moves != MoveSet::sites) chain.walk_sweep(stream);
  };
  rep.method = "mcmc/" + moves_name(options.moves);
  std::vector<std::vector<double>> series(options.chains);
  for (unsigned c = 0; c < options.chains; ++c) {
    RngStream stream = rng.split(c);
    GlauberChain chain(n, m, boundary, (c % 2 == 0) ? StartState::minimal : StartState::maximal);
    for (std::uint64_t s = 0; s < rep.burn_in_sweeps; ++s) step(chain, stream);
    const std::uint64_t mine = total / options.chains + (c < total % options.chains ? 1 : 0);
    series[c].reserve(mine);
    for (std::uint64_t i = 0; i < mine; ++i) {
      for (std::uint64_t s = 0; s < rep.thin; ++s) step(chain, stream);
      series[c].push_back(static_cast<double>(chain.first_entry()));
      visit(chain, c);
    }
    rep.updates += chain.updates();
    rep.changes += chain.changes();
    rep.walk_updates += chain.walk_updates();
    rep.samples += mine;
  }

  if (options.chains >= 2 && series[0].size() >= 2 && series[1].size() >= 2) {
    rep.has_diagnostic = true;
    for (const auto& s : series) {
      rep.chain_means.push_back(s.size() ? stats::mean(s) : 0.0);
      rep.chain_ses.push_back(s.size() >= 2 ? stats::batch_means_se(s) : 0.0);
    }
    rep.mean_gap = std::abs(rep.chain_means[0] - rep.chain_means[1]);
    rep.gap_threshold = 2.0 * std::hypot(rep.chain_ses[0], rep.chain_ses[1]);
    rep.diagnostic_pass = rep.mean_gap < rep.gap_threshold || (rep.gap_threshold == 0.0 && rep.mean_gap == 0.0);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SamplerReport mcmc_sample_free(std::size_t n, long m, RngStream& rng, const McmcOptions& options,
                               const PatternVisitor& visit) {
  return run_glauber(n, m, Boundary::free_top, rng, options,
                     [&](const GlauberChain& c, unsigned) { visit(c.pattern()); });
}

SamplerReport mcmc_sample_hex(std::size_t n, long m, RngStream& rng, const McmcOptions& options,
                              const PatternVisitor& visit) {
  return run_glauber(n, m, Boundary::hexagon, rng, options,
                     [&](const GlauberChain& c, unsigned) { visit(c.pattern()); });
}

}  // namespace lozlab
