// Acceptance criteria 1-10. Each prints one verdict line and optional
// "note:" lines that never change the verdict.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/stats.hpp"
#include "lozlab/gue/corners.hpp"
#include "lozlab/harness/cli.hpp"
#include "lozlab/harness/suites.hpp"
#include "lozlab/sampler/exact.hpp"

using namespace lozlab;
using json = nlohmann::ordered_json;

namespace {

// Tolerances and sizes, fixed here.
constexpr long kMaxSmall = 4;
constexpr int kMacdonaldPoints = 20;
constexpr int kRelationSignatures = 50;
constexpr std::size_t kGueSamples = 10000;
constexpr std::uint64_t kGueThinFactor = 10;  // thin = 10 n sweeps at n = m = 48
constexpr std::uint64_t kTallBurnIn = 1000000;
constexpr std::uint64_t kTallThin = 500;
constexpr std::uint64_t kWideBurnIn = 2000;
constexpr std::uint64_t kWideThin = 20;
constexpr std::uint64_t kMgfGueSamples = 100000;
constexpr double kMgfSeMultiplier = 3.0;
constexpr std::size_t kLimitShapeSamples = 4000;
constexpr double kTvTolerance = 0.02;
constexpr double kChiSquareP = 0.001;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
  std::vector<SuiteReport> reports;
};

const json* find_note(const SuiteReport& r, const std::string& name) {
  for (const auto& n : r.notes)
    if (n["name"] == name) return &n["value"];
  return nullptr;
}

std::string failing_checks(const SuiteReport& r, std::size_t limit = 6) {
  std::ostringstream os;
  std::size_t shown = 0, total = 0;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    ++total;
    if (shown++ < limit) os << (shown > 1 ? "; " : "") << c.name << " observed " << c.observed << " (" << c.tol << ")";
  }
  if (total > limit) os << "; ... " << total - limit << " more";
  return os.str();
}

std::string check_value(const SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.observed + " (" + c.tol + (c.pass ? ", pass" : ", FAIL") + ")";
  return "missing";
}

Rational random_rational(RngStream& rng, bool allow_negative) {
  for (;;) {
    Rational q(rng.uniform_int(1, 12), rng.uniform_int(1, 12));
    q.canonicalize();
    if (allow_negative && rng.uniform01() < 0.5) q = -q;
    if (q != 1 && q != -1) return q;
  }
}

Outcome criterion1(std::uint64_t) {
  Outcome o;
  int cases = 0;
  for (long n = 1; n <= kMaxSmall; ++n)
    for (long m = 0; m <= kMaxSmall; ++m) {
      const std::string ns = std::to_string(n), ms = std::to_string(m);
      const char* argv[] = {"lozlab", "count", "--n", ns.c_str(), "--m", ms.c_str()};
      std::ostringstream out, err;
      const int code = cli_main(6, argv, out, err);
      std::uint64_t brute = 0;
      enumerate_free(static_cast<std::size_t>(n), m, [&](const GTPattern&) { ++brute; });
      const std::string expected = std::to_string(brute) + "\n";
      bool ok = code == 0 && out.str() == expected;
      if (n == 1) ok &= out.str() == std::to_string(m + 1) + "\n";
      if (!ok) {
        o.pass = false;
        o.notes.push_back("n=" + ns + " m=" + ms + ": count printed " + out.str() + " enumeration " + expected);
      }
      ++cases;
    }
  o.summary = std::to_string(cases) + " (n,m) cases, count equals enumeration; n=1 gives m+1";
  return o;
}

Outcome criterion2(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 2);
  int evals = 0, bad = 0;
  for (std::size_t n = 1; n <= kMaxSmall; ++n)
    for (long m = 0; m <= kMaxSmall; ++m)
      for (int t = 0; t < kMacdonaldPoints; ++t) {
        std::vector<Rational> x;
        while (x.size() < n) {
          const Rational q = random_rational(rng, true);
          if (std::find(x.begin(), x.end(), q) == x.end()) x.push_back(q);
        }
        const EvalPoint<Rational> p{x, 0};
        ++evals;
        if (phi_m_eval(m, p, n) != phi_m_bruteforce(m, p, n)) {
          ++bad;
          o.pass = false;
        }
      }
  o.summary = std::to_string(evals) + " exact comparisons, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome criterion3(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 3);
  int bad = 0;
  for (int t = 0; t < kRelationSignatures; ++t) {
    const auto N = static_cast<std::size_t>(rng.uniform_int(1, 6));
    std::vector<long> parts(N);
    for (auto& v : parts) v = rng.uniform_int(0, 6);
    std::sort(parts.rbegin(), parts.rend());
    Rational x = random_rational(rng, true);
    std::vector<long> nu(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
      nu[i] = parts[i] + 1;
      nu[2 * N - 1 - i] = -parts[i];
    }
    const Signature lambda = Signature::from_parts(parts);
    const Rational lhs = normalized_symplectic_direct(lambda, x, N);
    const Rational rhs = Rational(2) / (x + 1) * normalized_schur(Signature::from_parts(nu), x, 2 * N);
    if (lhs != rhs) {
      ++bad;
      o.pass = false;
      o.notes.push_back("lambda=" + lambda.str() + " x=" + to_string(x) + " lhs " + to_string(lhs) + " rhs " +
                        to_string(rhs));
    }
  }
  o.summary = std::to_string(kRelationSignatures) + " random signatures, N <= 6, " + std::to_string(bad) +
              " mismatches (exact rationals)";
  return o;
}

Outcome criterion4(std::uint64_t) {
  Outcome o;
  int total = 0, failed = 0, failed_with_factor = 0;
  double worst = 0, worst_factor = 0;
  std::map<std::size_t, double> worst_by_k;
  for (std::size_t n = 1; n <= kMaxSmall; ++n)
    for (long m = 0; m <= kMaxSmall; ++m)
      for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
        const SuiteReport r = verify_ebk_identity(n, m, k, ebk_grid(k));
        for (const auto& c : r.checks) {
          ++total;
          const double rel = std::stod(c.inputs["relative_difference"].get<std::string>());
          const double relf = std::stod(c.inputs["relative_difference_with_factor"].get<std::string>());
          worst = std::max(worst, rel);
          worst_factor = std::max(worst_factor, relf);
          worst_by_k[k] = std::max(worst_by_k[k], rel);
          if (!c.pass) ++failed;
          if (relf > kEbkTolerance) ++failed_with_factor;
        }
        if (!r.pass()) o.pass = false;
      }
  o.summary = std::to_string(total) + " points, " + std::to_string(failed) +
              " above 1e-9 relative difference; worst " + fmt(worst, 3);
  for (const auto& [k, w] : worst_by_k) o.notes.push_back("k=" + std::to_string(k) + ": worst relative difference " + fmt(w, 3));
  o.notes.push_back("with prod_{i<j}(e^{a_i}-e^{a_j})/(a_i-a_j), a = x/sqrt(n), on the right: " +
                    std::to_string(failed_with_factor) + " failures, worst " + fmt(worst_factor, 3));
  return o;
}

Outcome criterion5(std::uint64_t) {
  Outcome o;
  const SuiteReport r = verify_mgf_convergence(1.0, {8, 16, 32, 64}, {1.0});
  o.pass = r.pass();
  o.summary = "target 0.1875, exponent at n=64 " + check_value(r, "drift_corrected_exponent_final_gap");
  if (!o.pass) o.notes.push_back(failing_checks(r));
  o.reports.push_back(r);
  return o;
}

void gue_notes(const SuiteReport& r, Outcome& o) {
  if (const json* v = find_note(r, "ks_Y1_continuity_corrected"))
    o.notes.push_back("KS with continuity correction " + (*v)["ks"].get<std::string>());
  if (const json* v = find_note(r, "exact_law_Y1"))
    o.notes.push_back("exact law of Y1: KS floor " + (*v)["ks_floor"].get<std::string>() + ", corrected floor " +
                      (*v)["ks_floor_continuity_corrected"].get<std::string>() + ", TV sample vs exact " +
                      (*v)["tv_empirical_vs_exact"].get<std::string>());
  if (const json* v = find_note(r, "level_means_symmetric_center"))
    for (const auto& l : *v)
      o.notes.push_back("level " + std::to_string(l["level"].get<std::size_t>()) + " mean about (m+j-1)/2: " +
                        l["mean"].get<std::string>() + (l["within_3se"].get<bool>() ? " (within 3 SE)" : " (outside 3 SE)"));
  if (const json* v = find_note(r, "wide_half_sqrt_m_divisor")) {
    std::string s = "divisor sqrt(m)/2: KS " + (*v)["ks"].get<std::string>() + ", corrected " +
                    (*v)["ks_continuity_corrected"].get<std::string>() + ", variance " + (*v)["variance"].get<std::string>();
    if (v->contains("ks_floor")) s += ", KS floor " + (*v)["ks_floor"].get<std::string>();
    o.notes.push_back(s);
  }
  if (const json* v = find_note(r, "sampler"))
    if (v->contains("mean_gap"))
      o.notes.push_back("two-chain Y1 mean gap " + (*v)["mean_gap"].dump() + " vs threshold " +
                        (*v)["gap_threshold"].dump());
}

Outcome criterion6(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 6);
  GueConvergenceOptions opt;
  opt.mcmc.thin = kGueThinFactor * 48;
  const SuiteReport r = verify_gue_convergence({Regime::standard, 48, 48, 1.0}, 3, kGueSamples, rng, opt);
  o.pass = r.pass();
  o.summary = "KS " + check_value(r, "ks_Y1_vs_normal") + "; means " + check_value(r, "mean_level_1") + ", " +
              check_value(r, "mean_level_2") + ", " + check_value(r, "mean_level_3") + "; interlacing " +
              check_value(r, "interlacing_violations");
  gue_notes(r, o);
  o.reports.push_back(r);
  return o;
}

Outcome criterion7(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 7);
  GueConvergenceOptions tall;
  tall.mcmc.burn_in = kTallBurnIn;
  tall.mcmc.thin = kTallThin;
  const SuiteReport rt = verify_gue_convergence({Regime::tall, 16, 4096, 1.0}, 1, kGueSamples, rng, tall);
  GueConvergenceOptions wide;
  wide.mcmc.burn_in = kWideBurnIn;
  wide.mcmc.thin = kWideThin;
  wide.mcmc.moves = MoveSet::walks;
  RngStream rng_w = rng.split(1);
  const SuiteReport rw = verify_gue_convergence({Regime::wide, 512, 8, 1.0}, 1, kGueSamples, rng_w, wide);
  o.pass = rt.pass() && rw.pass();
  o.summary = "tall KS " + check_value(rt, "ks_Y1_vs_normal") + "; wide KS " + check_value(rw, "ks_Y1_vs_normal");
  Outcome nt, nw;
  gue_notes(rt, nt);
  gue_notes(rw, nw);
  for (auto& s : nt.notes) o.notes.push_back("tall: " + s);
  for (auto& s : nw.notes) o.notes.push_back("wide: " + s);
  o.reports = {rt, rw};
  return o;
}

Outcome criterion8(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 8);
  int total = 0, outside = 0;
  double worst_z = 0;
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& x : ebk_grid(k)) {
      const MonteCarloEstimate e = mgf_gue_mc(x, kMgfGueSamples, rng);
      const double exact = mgf_gue(x);
      const double z = std::abs(e.estimate - exact) / e.standard_error;
      worst_z = std::max(worst_z, z);
      ++total;
      if (z > kMgfSeMultiplier) {
        ++outside;
        o.pass = false;
        std::ostringstream s;
        s << "k=" << k << " x=(";
        for (std::size_t i = 0; i < x.size(); ++i) s << (i ? "," : "") << x[i];
        s << "): estimate " << fmt(e.estimate, 6) << " exact " << fmt(exact, 6) << " z " << fmt(z, 3);
        o.notes.push_back(s.str());
      }
    }
  o.summary = std::to_string(total) + " grid points, " + std::to_string(outside) + " outside 3 SE; largest |z| " +
              fmt(worst_z, 3);
  return o;
}

Outcome criterion9(std::uint64_t seed) {
  Outcome o;
  RngStream rng(seed, 9);
  const SuiteReport r = verify_limit_shape(1.0, 0.5, 64, kLimitShapeSamples, 4, rng);
  o.pass = r.pass();
  std::ostringstream s;
  std::size_t ok = 0;
  for (const auto& c : r.checks) ok += c.pass;
  s << ok << "/" << r.checks.size() << " moment checks within max(5%, 3 SE)";
  o.summary = s.str();
  if (!o.pass) o.notes.push_back(failing_checks(r, 12));
  if (const json* v = find_note(r, "moments"))
    for (const auto& row : *v) o.notes.push_back(row.dump());
  o.reports.push_back(r);
  return o;
}

Outcome criterion10(std::uint64_t seed) {
  Outcome o;
  std::ostringstream s;
  {
    RngStream rng(seed, 10);
    McmcOptions opt;
    opt.sweeps = 1000000;
    opt.thin = 10;
    opt.burn_in = 10000;
    std::map<std::vector<long>, std::uint64_t> seen;
    mcmc_sample_free(2, 2, rng, opt, [&](const GTPattern& p) { ++seen[p.flat()]; });
    std::vector<std::uint64_t> counts;
    for (const auto& [k, c] : seen) counts.push_back(c);
    counts.resize(10, 0);
    const double tv = stats::total_variation(counts, std::vector<double>(10, 0.1));
    o.pass &= tv <= kTvTolerance;
    s << "MCMC (2,2) TV " << fmt(tv, 5) << " (<= " << kTvTolerance << ")";
  }
  auto chi = [&](const std::string& label, std::size_t support, const std::function<GTPattern(RngStream&)>& draw,
                 std::size_t draws, std::uint64_t stream) {
    RngStream rng(seed, stream);
    std::map<std::vector<long>, std::uint64_t> seen;
    for (std::size_t i = 0; i < draws; ++i) ++seen[draw(rng).flat()];
    std::vector<std::uint64_t> counts;
    for (const auto& [k, c] : seen) counts.push_back(c);
    counts.resize(support, 0);
    const double p =
        stats::chi_square(counts, std::vector<double>(support, 1.0 / static_cast<double>(support))).p_value;
    o.pass &= p > kChiSquareP && seen.size() == support;
    s << "; exact " << label << " chi2 p " << fmt(p, 4);
  };
  const ExactFreeSampler f13(1, 3), f22(2, 2);
  const ExactHexSampler h21(2, 1);
  chi("(1,3)", 4, [&](RngStream& r) { return f13.sample(r); }, 10000, 11);
  chi("(2,2)", 10, [&](RngStream& r) { return f22.sample(r); }, 100000, 12);
  chi("hexagon (2,1)", 6, [&](RngStream& r) { return h21.sample(r); }, 30000, 13);
  o.summary = s.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> criteria;
  std::uint64_t seed = default_seed();
  std::string json_dir;
  app.add_option("--criterion", criteria, "criterion number(s) 1-10 (default: all)")->check(CLI::Range(1, 10));
  app.add_option("--seed", seed);
  app.add_option("--json-dir", json_dir, "write suite reports here");
  CLI11_PARSE(app, argc, argv);
  if (criteria.empty())
    for (int i = 1; i <= 10; ++i) criteria.push_back(i);

  using Fn = Outcome (*)(std::uint64_t);
  const Fn table[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                      criterion6, criterion7, criterion8, criterion9, criterion10};
  bool all = true;
  for (int c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = table[c - 1](seed);
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << "  ["
              << std::fixed << std::setprecision(1) << secs << std::defaultfloat << " s, seed " << seed << "]\n";
    for (const auto& n : o.notes) std::cout << "  note: " << n << '\n';
    std::cout.flush();
    if (!json_dir.empty())
      for (std::size_t i = 0; i < o.reports.size(); ++i) {
        std::ofstream f(json_dir + "/criterion" + std::to_string(c) + (i ? "_" + std::to_string(i) : "") + ".json");
        f << o.reports[i].dump() << '\n';
      }
    all &= o.pass;
  }
  return all ? 0 : 1;
}
