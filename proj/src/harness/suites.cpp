#include "lozlab/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/matrix.hpp"
#include "lozlab/core/stats.hpp"
#include "lozlab/gue/corners.hpp"
#include "lozlab/limitshape/moments.hpp"
#include "lozlab/sampler/exact.hpp"
#include "lozlab/tiling/profile.hpp"

namespace lozlab {

namespace {

using json = nlohmann::ordered_json;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string tuple_str(const std::vector<double>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + fmt(x[i], 6);
  return s + ")";
}

json doubles_json(const std::vector<double>& xs, int digits = 10) {
  json a = json::array();
  for (double v : xs) a.push_back(fmt(v, digits));
  return a;
}

// Y^k_i = row_{k,i} + (k - i).
void shift_row(std::vector<long>& row) {
  const std::size_t k = row.size();
  for (std::size_t i = 0; i < k; ++i) row[i] += static_cast<long>(k - 1 - i);
}

CheckRecord make_check(std::string name, json inputs, std::string expected, std::string observed, std::string tol,
                       bool pass) {
  CheckRecord c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.expected = std::move(expected);
  c.observed = std::move(observed);
  c.tol = std::move(tol);
  c.pass = pass;
  return c;
}

// KS distance of a lattice law p_j at (j - center)/divisor against N(0,1).
// With half_width > 0 each atom is spread uniformly over its cell first.
double lattice_law_ks(const std::vector<double>& p, double center, double divisor, double half_width) {
  double worst = 0.0;
  double F = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double x = (static_cast<double>(j) - center) / divisor;
    if (half_width <= 0.0) {
      worst = std::max(worst, std::abs(F - stats::normal_cdf(x)));
      F += p[j];
      worst = std::max(worst, std::abs(F - stats::normal_cdf(x)));
      continue;
    }
    const double a = x - half_width;
    const double b = x + half_width;
    auto gap = [&](double t) { return std::abs(F + p[j] * (t - a) / (b - a) - stats::normal_cdf(t)); };
    worst = std::max({worst, gap(a), gap(b)});
    // Interior extrema of the linear-minus-normal difference: normal_pdf(t) = p/(b-a).
    const double slope = p[j] / (b - a);
    if (slope > 0.0 && slope < stats::normal_pdf(0.0)) {
      const double t = std::sqrt(-2.0 * std::log(slope * std::sqrt(2.0 * M_PI)));
      for (double c : {t, -t})
        if (c > a && c < b) worst = std::max(worst, gap(c));
    }
    F += p[j];
  }
  return worst;
}

struct LevelStats {
  double mean = 0.0;
  double se = 0.0;
  double second = 0.0;
  double second_se = 0.0;
};

LevelStats summarize(const std::vector<double>& means, const std::vector<double>& squares, bool correlated) {
  LevelStats s;
  s.mean = stats::mean(means);
  s.second = stats::mean(squares);
  if (means.size() >= 2) {
    s.se = correlated ? stats::batch_means_se(means) : stats::standard_error(means);
    s.second_se = correlated ? stats::batch_means_se(squares) : stats::standard_error(squares);
  }
  return s;
}

}  // namespace

// --- exact moment generating function ----------------------------------------

EbkOracle::EbkOracle(std::size_t n, long m, std::size_t k_max) : n_(n), m_(m), laws_(k_max) {
  if (n == 0 || n > 4 || m < 0 || m > 4)
    throw std::invalid_argument("exact MGF check enumerates tilings: needs 1 <= n <= 4 and 0 <= m <= 4");
  if (k_max == 0 || k_max > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  std::vector<std::map<std::vector<long>, std::uint64_t>> hist(k_max);
  std::uint64_t count = 0;
  enumerate_free(n, m, [&](const GTPattern& p) {
    ++count;
    for (std::size_t k = 1; k <= k_max; ++k) ++hist[k - 1][positions(p, k)];
  });
  total_ = BigInt(static_cast<unsigned long>(count));
  for (std::size_t k = 0; k < k_max; ++k) laws_[k].assign(hist[k].begin(), hist[k].end());
}

EbkComparison EbkOracle::compare(const std::vector<Real>& x) const {
  const std::size_t k = x.size();
  if (k == 0 || k > laws_.size()) throw std::invalid_argument("point dimension outside 1..k_max");
  const Real sqrt_n = sqrt(Real(static_cast<long>(n_)));
  const Real half_m(Rational(m_, 2));

  EbkComparison out;
  Real acc(0);
  std::vector<Real> y(k);
  for (const auto& [Y, mult] : laws_[k - 1]) {
    for (std::size_t i = 0; i < k; ++i) y[i] = (Real(Y[i]) - half_m) / sqrt_n;
    acc += Real(static_cast<long>(mult)) * bessel_B(x, y);
  }
  out.lhs = acc / Real(total_);

  std::vector<Real> a(k), ea(k);
  Real drift(0);
  for (std::size_t i = 0; i < k; ++i) {
    a[i] = x[i] / sqrt_n;
    ea[i] = exp(a[i]);
    drift += a[i];
  }
  EvalPoint<Real> point{ea, n_ - k};
  out.rhs = exp(-half_m * drift) * Phi_m_eval(m_, point, n_);

  out.vandermonde = Real(1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Real d = a[i] - a[j];
      out.vandermonde *= d.is_zero() ? ea[j] : ea[j] * expm1(d) / d;
    }
  out.relative_difference = relative_difference(out.lhs, out.rhs);
  out.corrected_relative_difference = relative_difference(out.lhs, out.rhs * out.vandermonde);
  return out;
}

std::vector<std::vector<double>> ebk_grid(std::size_t k) {
  static const double values[] = {-1.0, -0.5, 0.5, 1.0};
  std::vector<std::vector<double>> out{{}};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<std::vector<double>> next;
    for (const auto& p : out)
      for (double v : values) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

SuiteReport verify_ebk_identity(std::size_t n, long m, std::size_t k, const std::vector<std::vector<double>>& points,
                                const EbkOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  PrecisionScope scope(std::max(kEbkPrecisionBits, working_precision()));
  SuiteReport rep;
  rep.suite = "ebk_identity";
  const EbkOracle oracle(n, m, k);
  double worst = 0.0;
  double worst_corrected = 0.0;
  for (const auto& xd : points) {
    if (xd.size() != k) throw std::invalid_argument("every point needs k coordinates");
    std::vector<Real> x;
    for (double v : xd) x.emplace_back(v);
    const EbkComparison c = oracle.compare(x);
    const double rel = c.relative_difference.to_double();
    const double rel_c = c.corrected_relative_difference.to_double();
    worst = std::max(worst, rel);
    worst_corrected = std::max(worst_corrected, rel_c);
    const Real rhs = options.vandermonde_factor ? c.rhs * c.vandermonde : c.rhs;
    const double decisive = options.vandermonde_factor ? rel_c : rel;
    json inputs{{"n", n},
                {"m", m},
                {"k", k},
                {"x", doubles_json(xd, 6)},
                {"precision_bits", working_precision()},
                {"form", options.vandermonde_factor ? "with_vandermonde_factor" : "as_stated"},
                {"relative_difference", fmt(rel, 4)},
                {"vandermonde_factor", c.vandermonde.str(20)},
                {"relative_difference_with_factor", fmt(rel_c, 4)}};
    std::ostringstream name;
    name << "ebk n=" << n << " m=" << m << " k=" << k << " x=" << tuple_str(xd);
    rep.add(make_check(name.str(), std::move(inputs), rhs.str(20), c.lhs.str(20),
                       "relative difference <= " + fmt(kEbkTolerance, 3), decisive <= kEbkTolerance));
  }
  rep.note("max_relative_difference_as_stated", fmt(worst, 4));
  rep.note("max_relative_difference_with_vandermonde_factor", fmt(worst_corrected, 4));
  rep.note("tilings_enumerated", to_string(oracle.total()));
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

// --- GUE convergence -------------------------------------------------------------

SamplerMethod parse_method(const std::string& name) {
  if (name == "exact") return SamplerMethod::exact;
  if (name == "mcmc") return SamplerMethod::mcmc;
  throw std::invalid_argument("unknown method '" + name + "' (exact, mcmc)");
}

SuiteReport verify_gue_convergence(const RegimeParams& params, std::size_t k, std::uint64_t samples, RngStream& rng,
                                   const GueConvergenceOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  params.validate();
  const auto n = static_cast<std::size_t>(params.n);
  const long m = params.m;
  if (k == 0 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (samples < 2) throw std::invalid_argument("need at least two samples");

  SuiteReport rep;
  rep.suite = "gue_convergence";
  rep.seed = rng.seed();
  const double divisor = regime_divisor(params.n, m, params.regime);
  const double center = static_cast<double>(m) / 2.0;

  std::vector<double> y1;  // rescaled Y^1
  std::vector<std::uint64_t> y1_counts(static_cast<std::size_t>(m) + 1, 0);
  std::vector<std::vector<double>> level_mean(k), level_sq(k);
  std::uint64_t violations = 0;
  std::vector<std::vector<double>> scaled(k);
  std::vector<long> buf;

  auto record = [&](const std::function<void(std::size_t, std::vector<long>&)>& row_of) {
    for (std::size_t j = 1; j <= k; ++j) {
      row_of(j, buf);
      shift_row(buf);
      scaled[j - 1] = rescale_with(buf, center, divisor);
      double s = 0.0, s2 = 0.0;
      for (double v : scaled[j - 1]) {
        s += v;
        s2 += v * v;
      }
      level_mean[j - 1].push_back(s / static_cast<double>(j));
      level_sq[j - 1].push_back(s2 / static_cast<double>(j));
      if (j >= 2) {
        const auto& lo = scaled[j - 2];
        const auto& hi = scaled[j - 1];
        for (std::size_t i = 0; i + 1 < j; ++i)
          if (lo[i] > hi[i] || hi[i + 1] > lo[i]) ++violations;
      }
    }
    y1.push_back(scaled[0][0]);
  };

  bool correlated = false;
  std::vector<long> first_entries;
  if (options.method == SamplerMethod::mcmc) {
    McmcOptions mo = options.mcmc;
    const std::uint64_t thin = mo.thin == 0 ? n : mo.thin;
    mo.thin = thin;
    mo.sweeps = samples * thin;
    const SamplerReport sr = run_glauber(n, m, options.boundary, rng, mo, [&](const GlauberChain& chain, unsigned) {
      record([&](std::size_t j, std::vector<long>& out) { chain.row(j, out); });
      first_entries.push_back(chain.first_entry());
    });
    correlated = true;
    rep.note("sampler", sampler_json(sr));
  } else {
    std::optional<ExactFreeSampler> free;
    std::optional<ExactHexSampler> hex;
    if (options.boundary == Boundary::free_top)
      free.emplace(n, m);
    else
      hex.emplace(n, m);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const GTPattern p = free ? free->sample(rng) : hex->sample(rng);
      record([&](std::size_t j, std::vector<long>& out) {
        const auto r = p.row(j);
        out.assign(r.begin(), r.end());
      });
      first_entries.push_back(p.at(1, 1));
    }
    rep.note("sampler", json{{"method", "exact"}, {"samples", samples}});
  }
  for (long v : first_entries) ++y1_counts[static_cast<std::size_t>(v)];

  const double ks_tol = options.ks_tolerance > 0.0 ? options.ks_tolerance
                        : params.regime == Regime::standard ? 0.05
                                                          : 0.06;
  const json base = json{{"regime", params.to_json()},
                         {"k", k},
                         {"samples", samples},
                         {"boundary", options.boundary == Boundary::free_top ? "free" : "hexagon"},
                         {"divisor", fmt(divisor)},
                         {"center", fmt(center)}};

  const double ks = stats::ks_normal(y1);
  const double half_cell = 0.5 / divisor;
  const double ks_smooth = stats::ks_normal_smoothed(y1, half_cell);
  rep.add(make_check("ks_Y1_vs_normal", base, "0", fmt(ks, 6), "<= " + fmt(ks_tol, 3), ks <= ks_tol));
  rep.note("ks_Y1_continuity_corrected", json{{"half_width", fmt(half_cell, 6)}, {"ks", fmt(ks_smooth, 6)}});

  // GUE corners reference for the level statistics.
  const std::uint64_t ref_n = options.reference_samples ? options.reference_samples : samples;
  RngStream ref_rng = rng.split(0x6775655fULL);
  std::vector<std::vector<double>> ref_mean(k), ref_sq(k);
  for (std::uint64_t s = 0; s < ref_n; ++s) {
    const CornersSample c = sample_gue_corners(k, ref_rng);
    for (std::size_t j = 1; j <= k; ++j) {
      double a = 0.0, b = 0.0;
      for (double v : c.level(j)) {
        a += v;
        b += v * v;
      }
      ref_mean[j - 1].push_back(a / static_cast<double>(j));
      ref_sq[j - 1].push_back(b / static_cast<double>(j));
    }
  }

  json levels = json::array();
  json symmetric = json::array();
  for (std::size_t j = 1; j <= k; ++j) {
    const LevelStats ls = summarize(level_mean[j - 1], level_sq[j - 1], correlated);
    const LevelStats rs = summarize(ref_mean[j - 1], ref_sq[j - 1], false);
    json in = base;
    in["level"] = j;
    in["standard_error"] = fmt(ls.se, 6);
    rep.add(make_check("mean_level_" + std::to_string(j), in, "0", fmt(ls.mean, 6),
                       "|mean| <= 3 SE = " + fmt(3.0 * ls.se, 6), std::abs(ls.mean) <= 3.0 * ls.se));
    levels.push_back({{"level", j},
                      {"mean", fmt(ls.mean, 6)},
                      {"mean_se", fmt(ls.se, 6)},
                      {"second_moment", fmt(ls.second, 6)},
                      {"second_moment_se", fmt(ls.second_se, 6)},
                      {"gue_mean", fmt(rs.mean, 6)},
                      {"gue_mean_se", fmt(rs.se, 6)},
                      {"gue_second_moment", fmt(rs.second, 6)},
                      {"gue_second_moment_se", fmt(rs.second_se, 6)},
                      {"second_moment_gap", fmt(ls.second - rs.second, 6)}});
    // Y^j is symmetric about (m + j - 1)/2 rather than m/2 at finite size.
    const double shifted = ls.mean - static_cast<double>(j - 1) / (2.0 * divisor);
    symmetric.push_back({{"level", j},
                         {"center", fmt((static_cast<double>(m) + static_cast<double>(j) - 1.0) / 2.0)},
                         {"mean", fmt(shifted, 6)},
                         {"within_3se", std::abs(shifted) <= 3.0 * ls.se}});
  }
  rep.note("level_statistics", levels);
  rep.note("level_means_symmetric_center", symmetric);

  rep.add(make_check("interlacing_violations", base, "0", std::to_string(violations), "== 0", violations == 0));

  // Exact law of Y^1 when it is cheap: separates finite-size effects from sampler error.
  const bool law_ok = options.exact_law && options.boundary == Boundary::free_top &&
                      (m <= 64 || static_cast<double>(n) * static_cast<double>(m) <= 8192.0);
  std::vector<double> law;
  if (law_ok) {
    for (const Rational& q : first_line_law(n, m)) law.push_back(q.get_d());
    rep.note("exact_law_Y1", json{{"ks_floor", fmt(lattice_law_ks(law, center, divisor, 0.0), 6)},
                                  {"ks_floor_continuity_corrected",
                                   fmt(lattice_law_ks(law, center, divisor, half_cell), 6)},
                                  {"tv_empirical_vs_exact", fmt(stats::total_variation(y1_counts, law), 6)}});
  }
  if (params.regime == Regime::wide) {
    // Variance of Y^1 grows like m/4 here, so sqrt(m)/2 is the scale that matches N(0,1).
    const double alt = std::sqrt(static_cast<double>(m)) / 2.0;
    std::vector<double> y1_alt;
    y1_alt.reserve(first_entries.size());
    for (long v : first_entries) y1_alt.push_back((static_cast<double>(v) - center) / alt);
    json j{{"divisor", fmt(alt)},
           {"ks", fmt(stats::ks_normal(y1_alt), 6)},
           {"ks_continuity_corrected", fmt(stats::ks_normal_smoothed(y1_alt, 0.5 / alt), 6)},
           {"variance", fmt(stats::variance(y1_alt), 6)}};
    if (!law.empty()) {
      j["ks_floor"] = fmt(lattice_law_ks(law, center, alt, 0.0), 6);
      j["ks_floor_continuity_corrected"] = fmt(lattice_law_ks(law, center, alt, 0.5 / alt), 6);
    }
    rep.note("wide_half_sqrt_m_divisor", j);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

// --- MGF asymptotics -------------------------------------------------------------

namespace {

struct GapSeries {
  std::vector<double> values;
  std::vector<double> gaps;
};

// Gaps never grow as n increases.
bool shrinking(const std::vector<double>& gaps) {
  for (std::size_t i = 1; i < gaps.size(); ++i)
    if (gaps[i] > gaps[i - 1]) return false;
  return true;
}

void add_series_checks(SuiteReport& rep, const std::string& name, const json& inputs, const GapSeries& s,
                       double target, long n_max) {
  json in = inputs;
  in["values"] = doubles_json(s.values, 10);
  in["gaps"] = doubles_json(s.gaps, 6);
  rep.add(make_check(name + "_gaps_shrinking", in, fmt(target, 10), fmt(s.values.back(), 10),
                     "gaps non-increasing in n", shrinking(s.gaps)));
  if (n_max >= 64)
    rep.add(make_check(name + "_final_gap", in, fmt(target, 10), fmt(s.values.back(), 10),
                       "gap <= " + fmt(kMgfFinalGap, 3), s.gaps.back() <= kMgfFinalGap));
}

}  // namespace

SuiteReport verify_mgf_convergence(double a, const std::vector<long>& n_grid, const std::vector<double>& y) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (n_grid.empty() || y.empty()) throw std::invalid_argument("need a non-empty n grid and y");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw std::invalid_argument("n grid entries must be positive");
    if (i && n_grid[i] <= n_grid[i - 1]) throw std::invalid_argument("n grid must be increasing");
  }
  for (double v : y)
    if (std::abs(v) > 2.0) throw std::invalid_argument("y must lie in [-2, 2]^k");
  const std::size_t k = y.size();
  for (long n : n_grid)
    if (static_cast<std::size_t>(n) < k) throw std::invalid_argument("every n must be at least k");

  PrecisionScope scope(std::max(256u, working_precision()));
  SuiteReport rep;
  rep.suite = "mgf_convergence";
  const double c2 = (a * a + 2.0 * a) / 16.0;
  double sum_y = 0.0, sum_y2 = 0.0;
  for (double v : y) {
    sum_y += v;
    sum_y2 += v * v;
  }
  const double target = c2 * sum_y2;
  const long n_max = n_grid.back();

  GapSeries main;
  std::vector<GapSeries> tau_m(k), tau_0(k), single(k);
  std::vector<long> ms;
  for (long n : n_grid) {
    const long m = std::lround(a * static_cast<double>(n));
    ms.push_back(m);
    const auto nn = static_cast<std::size_t>(n);
    const Real sqrt_n = sqrt(Real(n));
    std::vector<Real> xs;
    for (double v : y) xs.push_back(exp(Real(v) / sqrt_n));
    const double drift = static_cast<double>(m) / (2.0 * std::sqrt(static_cast<double>(n)));
    const double e = log(Phi_m_eval(m, EvalPoint<Real>{xs, nn - k}, nn)).to_double() - drift * sum_y;
    main.values.push_back(e);
    main.gaps.push_back(std::abs(e - target));
    for (std::size_t i = 0; i < k; ++i) {
      const double tm = log(normalized_symplectic(Signature::tau(m, nn), xs[i], nn)).to_double();
      const double t0v = log(normalized_symplectic(Signature::tau(0, nn), xs[i], nn)).to_double();
      tau_m[i].values.push_back(tm);
      tau_m[i].gaps.push_back(std::abs(tm - c2 * y[i] * y[i]));
      tau_0[i].values.push_back(t0v);
      tau_0[i].gaps.push_back(std::abs(t0v));
      if (k >= 2) {
        const double s = log(Phi_m_eval(m, EvalPoint<Real>{{xs[i]}, nn - 1}, nn)).to_double() - drift * y[i];
        single[i].values.push_back(s);
      }
    }
  }
  json inputs{{"a", fmt(a)}, {"y", doubles_json(y, 6)}, {"n_grid", n_grid}, {"m_grid", ms}};
  add_series_checks(rep, "drift_corrected_exponent", inputs, main, target, n_max);
  for (std::size_t i = 0; i < k; ++i) {
    json in{{"a", fmt(a)}, {"h", fmt(y[i], 6)}, {"n_grid", n_grid}, {"m_grid", ms}};
    add_series_checks(rep, "univariate_tau_m[" + std::to_string(i + 1) + "]", in, tau_m[i], c2 * y[i] * y[i], n_max);
    add_series_checks(rep, "univariate_tau_0[" + std::to_string(i + 1) + "]", in, tau_0[i], 0.0, n_max);
  }
  if (k >= 2) {
    double sum_single = 0.0;
    for (const auto& s : single) sum_single += s.values.back();
    const double gap = std::abs(main.values.back() - sum_single);
    rep.add(make_check("multiplicativity", json{{"a", fmt(a)}, {"y", doubles_json(y, 6)}, {"n", n_max}},
                       fmt(sum_single, 10), fmt(main.values.back(), 10), "gap <= " + fmt(kMgfFinalGap, 3),
                       gap <= kMgfFinalGap));
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

// --- exact identities --------------------------------------------------------------

namespace {

// Every mu of length k-1 interlacing lambda (length k).
void interlacing_children(const std::vector<long>& lambda, std::vector<long>& mu, std::size_t i,
                          const std::function<void(const std::vector<long>&)>& visit) {
  if (i + 1 == lambda.size()) {
    visit(mu);
    return;
  }
  for (long v = lambda[i + 1]; v <= lambda[i]; ++v) {
    mu[i] = v;
    interlacing_children(lambda, mu, i + 1, visit);
  }
}

// s_lambda(1^N) = det[h_{lambda_i - i + j}(1^N)], h_r(1^N) = C(N + r - 1, r).
BigInt jacobi_trudi_dim(const std::vector<long>& lambda, std::size_t N,
                        const std::function<BigInt(long, long)>& binom) {
  const std::size_t L = lambda.size();
  SquareMatrix<Rational> M(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const long r = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
      M(i, j) = r < 0 ? Rational(0) : Rational(binom(static_cast<long>(N) + r - 1, r));
    }
  const Rational d = determinant(M);
  return d.get_num();
}

std::vector<Rational> sample_points(std::size_t k, std::uint64_t salt) {
  // Perfect squares (half-integer weights stay rational), no two reciprocal.
  static const Rational pool[] = {Rational(4), Rational(1, 16), Rational(9, 4), Rational(25), Rational(4, 49),
                                  Rational(49, 16), Rational(9), Rational(16, 81), Rational(81, 25)};
  std::vector<Rational> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(pool[(salt * 7 + i * 4) % 9]);
  return out;
}

}  // namespace

SuiteReport verify_exact_suite(const ExactSuiteOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "exact";
  auto exact_check = [&](const std::string& name, json in, const std::string& expected, const std::string& observed) {
    rep.add(make_check(name, std::move(in), expected, observed, "exact", expected == observed));
  };

  // Counting against enumeration.
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 3; ++m) {
      std::uint64_t c = 0;
      enumerate_free(n, m, [&](const GTPattern&) { ++c; });
      exact_check("count_free n=" + std::to_string(n) + " m=" + std::to_string(m), json{{"n", n}, {"m", m}},
                  std::to_string(c), to_string(count_free(n, m)));
    }
  for (std::size_t n = 1; n <= 2; ++n)
    for (long m = 0; m <= 2; ++m) {
      std::uint64_t c = 0;
      enumerate_hex(n, m, [&](const GTPattern&) { ++c; });
      exact_check("count_hex n=" + std::to_string(n) + " m=" + std::to_string(m), json{{"n", n}, {"m", m}},
                  std::to_string(c), to_string(count_hex(n, m)));
    }

  // Boxed Schur sum: determinant ratio against term-by-term sum.
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 3; ++m)
      for (std::size_t k = 1; k <= n; ++k) {
        const EvalPoint<Rational> pt{sample_points(k, n * 5 + static_cast<std::size_t>(m) + k), n - k};
        exact_check("macdonald n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k),
                    json{{"n", n}, {"m", m}, {"k", k}}, to_string(phi_m_bruteforce(m, pt, n)),
                    to_string(phi_m_eval(m, pt, n)));
      }

  // Branching of dimensions.
  for (std::size_t N = 2; N <= 4; ++N)
    for (const auto& lambda : box_partitions(N, 2)) {
      BigInt sum = 0;
      std::vector<long> mu(N - 1);
      interlacing_children(lambda, mu, 0, [&](const std::vector<long>& c) {
        sum += schur_dim(Signature::from_parts(c), N - 1);
      });
      const Signature s = Signature::from_parts(lambda);
      exact_check("branching " + s.str() + " N=" + std::to_string(N), json{{"lambda", s.str()}, {"N", N}},
                  to_string(schur_dim(s, N)), to_string(sum));
    }

  // Normalized symplectic through the Schur relation of size 2N against the direct ratio.
  const std::vector<std::string> lambdas{"0", "1,0", "2,1", "3,1,0", "2,2,1", "1/2,1/2", "3/2,1/2,-1/2", "4,2,1,0"};
  const Rational xs_sym[] = {Rational(4), Rational(1, 9), Rational(25, 4)};
  for (const auto& text : lambdas) {
    const Signature lambda = Signature::parse(text);
    for (const auto& x : xs_sym) {
      const std::size_t N = lambda.length();
      exact_check("symplectic_schur_relation " + lambda.str() + " x=" + to_string(x),
                  json{{"lambda", lambda.str()}, {"x", to_string(x)}},
                  to_string(normalized_symplectic_direct(lambda, x, N)), to_string(normalized_symplectic(lambda, x, N)));
    }
  }

  // Denominator identity.
  for (std::size_t k = 1; k <= 4; ++k) {
    const std::vector<Rational> x = sample_points(k, 11 + k);
    exact_check("symplectic_denominator k=" + std::to_string(k), json{{"k", k}},
                to_string(symplectic_denominator_product(x)), to_string(symplectic_denominator_det(x)));
  }

  // Odd orthogonal from the symplectic ratio against its own Weyl determinant.
  for (const auto& parts : std::vector<std::vector<long>>{{0}, {1}, {2, 0}, {2, 1}, {3, 1, 0}}) {
    const Signature lambda = Signature::from_parts(parts);
    const std::vector<Rational> x = sample_points(parts.size(), 3 + parts.size());
    exact_check("orthogonal_symplectic " + lambda.str(), json{{"lambda", lambda.str()}},
                to_string(orthogonal_eval_weyl(lambda, x)),
                to_string(orthogonal_eval(lambda, EvalPoint<Rational>{x, 0}, parts.size())));
  }

  // Phi_m through characters at perfect squares: x^{m/2} X_{tau^m} / X_{tau^0}.
  for (std::size_t n = 1; n <= 3; ++n)
    for (long m = 0; m <= 3; ++m)
      for (const Rational& x : {Rational(4), Rational(1, 9)}) {
        const Rational rhs = *exact_pow_half(x, m) * normalized_symplectic(Signature::tau(m, n), x, n) /
                             normalized_symplectic(Signature::tau(0, n), x, n);
        exact_check("phi_characters n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + to_string(x),
                    json{{"n", n}, {"m", m}, {"x", to_string(x)}}, to_string(rhs),
                    to_string(Phi_m_eval(m, EvalPoint<Rational>{{x}, n - 1}, n)));
      }

  // X_{tau^0}(1; n) = 1.
  for (std::size_t n = 1; n <= 6; ++n)
    exact_check("tau0_at_one n=" + std::to_string(n), json{{"n", n}}, "1",
                to_string(normalized_symplectic(Signature::tau(0, n), Rational(1), n)));

  // Residue formula for the normalized Schur function against the determinant.
  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& lambda : box_partitions(N, 3)) {
      const Signature s = Signature::from_parts(lambda);
      const Rational x(3, 2);
      const Rational det = schur_eval(s, EvalPoint<Rational>{{x}, N - 1}, N) / Rational(schur_dim(s, N));
      exact_check("normalized_schur " + s.str(), json{{"lambda", s.str()}, {"x", "3/2"}}, to_string(det),
                  to_string(normalized_schur(s, x, N)));
    }

  // Jacobi-Trudi dimensions against the Weyl product formula.
  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& lambda : box_partitions(N, 3)) {
      const Signature s = Signature::from_parts(lambda);
      exact_check("jacobi_trudi " + s.str() + " N=" + std::to_string(N), json{{"lambda", s.str()}, {"N", N}},
                  to_string(schur_dim(s, N)), to_string(jacobi_trudi_dim(lambda, N, options.binomial)));
    }

  // Multiprecision paths, <= 1e-12.
  {
    PrecisionScope scope(std::max(256u, working_precision()));
    struct Beta {
      std::vector<long> parts;
      long beta;
      const char* x;
    };
    for (const Beta& b : {Beta{{1, 1, 1, 1}, 2, "4"}, Beta{{2, 1, 0}, 2, "9"}, Beta{{3, 1, 0}, 3, "1.7"}}) {
      const Signature lambda = Signature::from_parts(b.parts);
      const BetaShiftReport r = beta_shift_check(lambda, b.parts.size(), b.beta, Real::parse(b.x));
      const double rel = r.relative_difference.to_double();
      rep.add(make_check("beta_shift " + lambda.str() + " beta=" + std::to_string(b.beta),
                         json{{"lambda", lambda.str()}, {"beta", b.beta}, {"x", b.x}, {"shifted", r.shifted_signature}},
                         r.lhs.str(20), r.rhs.str(20), "relative difference <= 1e-12", rel <= 1e-12));
    }
    for (long n : {3L, 8L, 16L}) {
      const auto nn = static_cast<std::size_t>(n);
      const Real x = exp(Real(0.5) / sqrt(Real(n)));
      const Real a = Phi_m_eval(n, EvalPoint<Real>{{x}, nn - 1}, nn);
      const Real b = Phi_m_eval_characters(n, EvalPoint<Real>{{x}, nn - 1}, nn);
      const double rel = relative_difference(a, b).to_double();
      rep.add(make_check("phi_two_paths n=" + std::to_string(n), json{{"n", n}, {"m", n}}, a.str(20), b.str(20),
                         "relative difference <= 1e-12", rel <= 1e-12));
    }
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

// --- limit shape -------------------------------------------------------------------

namespace {

struct MomentSeries {
  std::vector<std::vector<double>> per_r;  // per_r[r][sample]
  explicit MomentSeries(int r_max) : per_r(static_cast<std::size_t>(r_max) + 1) {}
  void add(const std::vector<long>& row, int r_max) {
    const CountingMeasure cm(row);
    for (int r = 0; r <= r_max; ++r) per_r[static_cast<std::size_t>(r)].push_back(cm.moment(r));
  }
};

struct MomentSummary {
  std::vector<double> mean, se;
};

MomentSummary summarize_moments(const MomentSeries& s, bool correlated) {
  MomentSummary out;
  for (const auto& series : s.per_r) {
    out.mean.push_back(stats::mean(series));
    out.se.push_back(series.size() < 2 ? 0.0 : correlated ? stats::batch_means_se(series) : stats::standard_error(series));
  }
  return out;
}

}  // namespace

SuiteReport verify_limit_shape(double a, double x, std::size_t n, std::uint64_t samples, int r_max, RngStream& rng,
                               const LimitShapeOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("line fraction must lie in (0, 1)");
  if (r_max < 1 || r_max > 6) throw std::invalid_argument("r_max must lie in 1..6");
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  const long m = std::lround(a * static_cast<double>(n));
  const std::size_t line = line_index(x, n);

  SuiteReport rep;
  rep.suite = "limit_shape";
  rep.seed = rng.seed();
  std::vector<double> analytic;
  for (const Real& v : limit_moments(r_max, Real(x), Real(a))) analytic.push_back(v.to_double());

  auto draw = [&](Boundary boundary, RngStream& stream, MomentSeries& out) -> json {
    std::vector<long> row;
    if (options.method == SamplerMethod::mcmc) {
      McmcOptions mo = options.mcmc;
      const std::uint64_t thin = mo.thin == 0 ? n : mo.thin;
      mo.thin = thin;
      mo.sweeps = samples * thin;
      const SamplerReport sr = run_glauber(n, m, boundary, stream, mo, [&](const GlauberChain& chain, unsigned) {
        chain.row(line, row);
        out.add(row, r_max);
      });
      return sampler_json(sr);
    }
    if (boundary == Boundary::free_top) {
      const ExactFreeSampler sampler(n, m);
      for (std::uint64_t s = 0; s < samples; ++s) out.add(sampler.sample(stream).row_vector(line), r_max);
    } else {
      const ExactHexSampler sampler(n, m);
      for (std::uint64_t s = 0; s < samples; ++s) out.add(sampler.sample(stream).row_vector(line), r_max);
    }
    return json{{"method", "exact"}, {"samples", samples}};
  };

  const bool correlated = options.method == SamplerMethod::mcmc;
  MomentSeries free_series(r_max);
  RngStream free_rng = rng.split(1);
  rep.note("free_sampler", draw(Boundary::free_top, free_rng, free_series));
  const MomentSummary fs = summarize_moments(free_series, correlated);

  std::optional<MomentSummary> hs;
  if (options.hexagon) {
    MomentSeries hex_series(r_max);
    RngStream hex_rng = rng.split(2);
    rep.note("hexagon_sampler", draw(Boundary::hexagon, hex_rng, hex_series));
    hs = summarize_moments(hex_series, correlated);
  }

  const json base{{"a", fmt(a)}, {"x", fmt(x)}, {"n", n}, {"m", m}, {"line", line}, {"samples", samples}};
  json table = json::array();
  for (int r = 0; r <= r_max; ++r) {
    const auto ri = static_cast<std::size_t>(r);
    json row{{"r", r}, {"analytic", fmt(analytic[ri])}, {"free", fmt(fs.mean[ri])}, {"free_se", fmt(fs.se[ri])}};
    if (hs) {
      row["hexagon"] = fmt(hs->mean[ri]);
      row["hexagon_se"] = fmt(hs->se[ri]);
    }
    table.push_back(row);
    if (r == 0) continue;
    const double rel_band = options.relative_tolerance * std::abs(analytic[ri]);
    json in = base;
    in["r"] = r;
    in["standard_error"] = fmt(fs.se[ri], 6);
    const double tol = std::max(rel_band, options.se_multiplier * fs.se[ri]);
    rep.add(make_check("free_vs_analytic r=" + std::to_string(r), in, fmt(analytic[ri]), fmt(fs.mean[ri]),
                       "<= " + fmt(tol, 6), std::abs(fs.mean[ri] - analytic[ri]) <= tol));
    if (hs) {
      const double comb = std::hypot(fs.se[ri], hs->se[ri]);
      const double tol_fh = std::max(rel_band, options.se_multiplier * comb);
      json in2 = base;
      in2["r"] = r;
      in2["combined_standard_error"] = fmt(comb, 6);
      rep.add(make_check("free_vs_hexagon r=" + std::to_string(r), in2, fmt(fs.mean[ri]), fmt(hs->mean[ri]),
                         "<= " + fmt(tol_fh, 6), std::abs(fs.mean[ri] - hs->mean[ri]) <= tol_fh));
      const double tol_h = std::max(rel_band, options.se_multiplier * hs->se[ri]);
      json in3 = base;
      in3["r"] = r;
      in3["standard_error"] = fmt(hs->se[ri], 6);
      rep.add(make_check("hexagon_vs_analytic r=" + std::to_string(r), in3, fmt(analytic[ri]), fmt(hs->mean[ri]),
                         "<= " + fmt(tol_h, 6), std::abs(hs->mean[ri] - analytic[ri]) <= tol_h));
    }
  }
  rep.note("moments", table);
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace lozlab
