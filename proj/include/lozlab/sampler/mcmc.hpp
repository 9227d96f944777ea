#pragma once

// Heat-bath Glauber dynamics on Gelfand-Tsetlin patterns.
//
// One sweep visits every free entry once in a fresh uniformly random order
// and redraws it uniformly from the integer interval allowed by its four
// neighbours and the ceiling. The uniform measure on patterns is reversible
// for this kernel.
//
// Optional walk moves: a pattern with ceiling m is also m non-intersecting
// walks c_j(k) = #{i : row_{k,i} >= j} with 0/1 steps in k. A walk move redraws
// one whole walk uniformly given its two neighbours (exact backward counts),
// which removes the slow diffusion of steps from the free top row when n >> m.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lozlab/core/rng.hpp"
#include "lozlab/tiling/pattern.hpp"

namespace lozlab {

enum class Boundary { free_top, hexagon };
enum class StartState { minimal, maximal };

class GlauberChain {
 public:
  GlauberChain(std::size_t n, long m, Boundary boundary, StartState start);

  /// One heat-bath update per free entry, in a random order.
  void sweep(RngStream& rng);

  [[nodiscard]] GTPattern pattern() const;
  /// Redraws every walk c_1..c_m once, in a random order.
  void walk_sweep(RngStream& rng);

  /// Row 1 entry (the single horizontal lozenge on the first line).
  [[nodiscard]] long first_entry() const { return state_[0]; }
  /// Row k entries copied into `out` (size k).
  void row(std::size_t k, std::vector<long>& out) const;

  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] std::uint64_t updates() const { return updates_; }
  [[nodiscard]] std::uint64_t changes() const { return changes_; }

 private:
  std::size_t depth_;
  long m_;
  std::size_t free_entries_;
  std::vector<std::int32_t> state_;  // flat entries, then the 0 and m sentinels
  std::vector<std::uint32_t> lo1_, lo2_, hi1_, hi2_;
  std::vector<std::uint32_t> order_;
  std::uint64_t updates_ = 0;
  std::uint64_t changes_ = 0;
  std::uint64_t walk_updates_ = 0;
  bool fixed_top_;
  std::vector<std::uint32_t> walk_order_;
  std::vector<double> counts_;
  std::vector<std::size_t> count_off_;
  std::vector<std::int32_t> lo_, hi_, walk_;

  void resample_walk(std::int32_t j, RngStream& rng);
  [[nodiscard]] std::int32_t column_length(std::size_t k, std::int32_t j) const;

 public:
  [[nodiscard]] std::uint64_t walk_updates() const { return walk_updates_; }
};

/// Kernel per step: a site sweep, a site sweep then a walk sweep, or a walk sweep alone.
enum class MoveSet { sites, sites_and_walks, walks };

MoveSet parse_moves(const std::string& name);
std::string moves_name(MoveSet moves);

struct McmcOptions {
  std::uint64_t sweeps = 0;   // post burn-in sweeps per run (all chains together)
  std::uint64_t burn_in = 0;  // 0 selects the default 10 (n+m)^2
  std::uint64_t thin = 0;     // 0 selects the default n
  unsigned chains = 2;        // chains start alternately from minimal and maximal states
  MoveSet moves = MoveSet::sites;
};

struct SamplerReport {
  std::string method;
  std::uint64_t samples = 0;
  std::uint64_t burn_in_sweeps = 0;
  std::uint64_t thin = 0;
  std::uint64_t updates = 0;
  std::uint64_t changes = 0;
  std::uint64_t walk_updates = 0;
  double wall_ms = 0.0;
  bool has_diagnostic = false;
  std::vector<double> chain_means;  // mean of Y^1 per chain
  std::vector<double> chain_ses;    // batch-means standard errors
  double mean_gap = 0.0;
  double gap_threshold = 0.0;  // 2 combined standard errors
  bool diagnostic_pass = true;
};

std::uint64_t default_burn_in(std::size_t n, long m);

/// Visitor receives (pattern-producing chain, chain index).
using ChainVisitor = std::function<void(const GlauberChain&, unsigned)>;

/// Runs the chains and calls `visit` after every `thin` sweeps past burn-in.
SamplerReport run_glauber(std::size_t n, long m, Boundary boundary, RngStream& rng, const McmcOptions& options,
                          const ChainVisitor& visit);

/// Convenience wrapper emitting full patterns for the free boundary.
SamplerReport mcmc_sample_free(std::size_t n, long m, RngStream& rng, const McmcOptions& options,
                               const PatternVisitor& visit);
SamplerReport mcmc_sample_hex(std::size_t n, long m, RngStream& rng, const McmcOptions& options,
                              const PatternVisitor& visit);

}  // namespace lozlab
