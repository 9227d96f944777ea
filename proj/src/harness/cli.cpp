#include "lozlab/harness/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/core/stats.hpp"
#include "lozlab/gue/corners.hpp"
#include "lozlab/harness/suites.hpp"
#include "lozlab/harness/svg.hpp"
#include "lozlab/limitshape/moments.hpp"
#include "lozlab/limitshape/psi.hpp"
#include "lozlab/sampler/exact.hpp"
#include "lozlab/sampler/rescale.hpp"

namespace lozlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Rational> rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  return out;
}

std::vector<double> doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& q : rationals(text)) out.push_back(q.get_d());
  return out;
}

std::vector<long> longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& s : split(text)) out.push_back(std::stol(s));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

struct Globals {
  std::uint64_t seed = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  bool no_timing = false;
};

struct SamplerFlags {
  std::string method = "exact";
  std::uint64_t sweeps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t thin = 0;
  unsigned chains = 2;
  std::string moves = "sites";

  void attach(CLI::App* app, const std::string& default_method) {
    method = default_method;
    app->add_option("--method", method, "exact or mcmc")->check(CLI::IsMember({"exact", "mcmc"}));
    app->add_option("--sweeps", sweeps, "post burn-in sweeps (default samples * thin)");
    app->add_option("--burn-in", burn_in, "burn-in sweeps (default 10 (n+m)^2)");
    app->add_option("--thin", thin, "sweeps between samples (default n)");
    app->add_option("--chains", chains, "independent chains");
    app->add_option("--moves", moves, "sites, sites+walks or walks")->check(CLI::IsMember({"sites", "sites+walks", "walks"}));
  }
  [[nodiscard]] McmcOptions mcmc() const {
    McmcOptions o;
    o.sweeps = sweeps;
    o.burn_in = burn_in;
    o.thin = thin;
    o.chains = chains;
    o.moves = parse_moves(moves);
    return o;
  }
};

// Draws `samples` patterns (or as many as the sweep budget gives) and hands each to `visit`.
SamplerReport draw_patterns(std::size_t n, long m, bool hex, std::uint64_t samples, const SamplerFlags& f,
                            RngStream& rng, const PatternVisitor& visit) {
  if (f.method == "exact") {
    SamplerReport rep;
    rep.method = "exact";
    if (hex) {
      const ExactHexSampler s(n, m);
      for (std::uint64_t i = 0; i < samples; ++i) visit(s.sample(rng));
    } else {
      const ExactFreeSampler s(n, m);
      for (std::uint64_t i = 0; i < samples; ++i) visit(s.sample(rng));
    }
    rep.samples = samples;
    return rep;
  }
  McmcOptions o = f.mcmc();
  const std::uint64_t thin = o.thin ? o.thin : n;
  o.thin = thin;
  if (o.sweeps == 0) o.sweeps = samples * thin;
  return hex ? mcmc_sample_hex(n, m, rng, o, visit) : mcmc_sample_free(n, m, rng, o, visit);
}

std::string rational_out(const Rational& q) { return to_string(q); }

int emit_report(const SuiteReport& rep, const Globals& g, const std::string& json_path, std::ostream& out) {
  const std::string text = rep.dump(!g.no_timing);
  if (json_path.empty())
    out << text << '\n';
  else {
    write_file(json_path, text + "\n");
    out << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
  }
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lozlab: lozenge tilings, symplectic characters and GUE corners"};
  app.require_subcommand(1);
  Globals g;
  g.seed = default_seed();
  app.add_option("--seed", g.seed, "random seed (default: LOZLAB_SEED or built-in)");
  app.add_option("--precision-bits", g.precision_bits, "working precision for multiprecision values")
      ->check(CLI::Range(32u, kMaxPrecisionBits));
  app.add_flag("--no-timing", g.no_timing, "write wall_ms as 0 so reports are byte-identical");

  int code = kExitOk;

  // count
  std::size_t n = 0;
  long m = 0;
  bool hex = false;
  auto* count = app.add_subcommand("count", "number of tilings");
  count->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  count->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--hex", hex, "hexagon (m,n,n,m,n,n) instead of the free boundary");
  count->callback([&] { out << to_string(hex ? count_hex(n, m) : count_free(n, m)) << '\n'; });

  // enumerate
  std::uint64_t cap = kEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "list every pattern, one JSON array per line");
  enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--hex", hex);
  enumerate->add_option("--cap", cap, "refuse beyond this many patterns");
  enumerate->callback([&] {
    auto visit = [&](const GTPattern& p) { out << p.to_json() << '\n'; };
    if (hex)
      enumerate_hex(n, m, visit, cap);
    else
      enumerate_free(n, m, visit, cap);
  });

  // sample
  std::uint64_t samples = 1;
  SamplerFlags sf;
  std::string format = "patterns";
  std::size_t k_out = 0;
  std::string regime_text;
  double a_flag = 1.0;
  std::string report_path;
  auto* sample = app.add_subcommand("sample", "draw uniformly random tilings");
  sample->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sample->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--samples", samples)->check(CLI::PositiveNumber);
  sample->add_flag("--hex", hex);
  sf.attach(sample, "exact");
  sample->add_option("--format", format, "patterns or positions")->check(CLI::IsMember({"patterns", "positions"}));
  sample->add_option("--k", k_out, "lines in the positions CSV (default n)");
  sample->add_option("--regime", regime_text, "rescale positions: standard, tall or wide");
  sample->add_option("--a", a_flag, "aspect ratio for the standard regime");
  sample->add_option("--report", report_path, "write the sampler report (JSON) here");
  sample->callback([&] {
    RngStream rng(g.seed, 0);
    std::optional<RegimeParams> params;
    if (!regime_text.empty()) {
      params = RegimeParams{parse_regime(regime_text), static_cast<long>(n), m, a_flag};
      params->validate();
    }
    const std::size_t K = k_out ? k_out : n;
    if (format == "positions") {
      if (K > n) throw UsageError("--k exceeds n");
      out << "line,k";
      for (std::size_t i = 1; i <= K; ++i) out << ",Y_" << i;
      out << '\n';
    }
    std::uint64_t index = 0;
    const SamplerReport rep = draw_patterns(n, m, hex, samples, sf, rng, [&](const GTPattern& p) {
      if (format == "patterns") {
        out << p.to_json() << '\n';
        return;
      }
      for (std::size_t k = 1; k <= K; ++k) {
        const std::vector<long> Y = positions(p, k);
        out << index << ',' << k;
        if (params) {
          for (double v : rescale_positions(Y, params->n, m, params->regime)) out << ',' << fmt(v, 10);
        } else {
          for (long v : Y) out << ',' << v;
        }
        for (std::size_t pad = k; pad < K; ++pad) out << ',';
        out << '\n';
      }
      ++index;
    });
    if (!report_path.empty()) {
      SamplerReport r = rep;
      if (g.no_timing) r.wall_ms = 0;
      auto j = sampler_json(r);
      j["wall_ms"] = std::round(r.wall_ms);
      write_file(report_path, j.dump(2) + "\n");
    }
  });

  // char eval
  std::string kind = "schur", lambda_text, mu_text, x_text, y_text;
  std::size_t N = 0;
  long beta = 2;
  bool force_real = false;
  int digits = 30;
  auto* chr = app.add_subcommand("char", "character evaluations");
  auto* chr_eval = chr->add_subcommand("eval", "evaluate one quantity");
  chr->require_subcommand(1);
  chr_eval->add_option("--kind", kind)
      ->check(CLI::IsMember({"schur", "schur-dim", "skew-dim", "normalized-schur", "symplectic",
                             "normalized-symplectic", "orthogonal", "phi", "Phi", "Phi-characters", "bessel",
                             "beta-shift", "first-line-law"}));
  chr_eval->add_option("--lambda", lambda_text, "signature, e.g. 2,1,0 or 1/2,-1/2");
  chr_eval->add_option("--mu", mu_text, "inner shape for skew-dim");
  chr_eval->add_option("--x", x_text, "comma separated arguments (rationals or decimals)");
  chr_eval->add_option("--y", y_text, "second tuple for bessel");
  chr_eval->add_option("--N", N, "number of variables (rest padded with ones)");
  chr_eval->add_option("--n", n);
  chr_eval->add_option("--m", m);
  chr_eval->add_option("--beta", beta);
  chr_eval->add_flag("--real", force_real, "multiprecision instead of exact");
  chr_eval->add_option("--digits", digits, "significant digits for multiprecision output");
  chr_eval->callback([&] {
    const std::vector<Rational> xq = rationals(x_text);
    auto need_N = [&](std::size_t at_least) {
      const std::size_t v = N ? N : at_least;
      if (v < at_least) throw UsageError("--N is smaller than the number of arguments");
      return v;
    };
    auto real_point = [&](std::size_t size) {
      EvalPoint<Real> p;
      for (const auto& q : xq) p.values.emplace_back(q);
      p.padding_ones = size - xq.size();
      return p;
    };
    auto exact_point = [&](std::size_t size) { return EvalPoint<Rational>{xq, size - xq.size()}; };
    auto exact_or_real = [&](const std::function<Rational()>& ex, const std::function<Real()>& re) {
      if (!force_real) {
        try {
          out << rational_out(ex()) << '\n';
          return;
        } catch (const std::domain_error&) {
          // irrational value: fall through to multiprecision
        }
      }
      out << re().str(digits) << '\n';
    };
    if (kind == "schur-dim") {
      const Signature l = Signature::parse(lambda_text);
      out << to_string(schur_dim(l, need_N(l.length()))) << '\n';
    } else if (kind == "skew-dim") {
      out << to_string(skew_schur_dim(Signature::parse(lambda_text), Signature::parse(mu_text), m)) << '\n';
    } else if (kind == "schur" || kind == "symplectic" || kind == "orthogonal") {
      const Signature l = Signature::parse(lambda_text);
      const std::size_t size = need_N(std::max(l.length(), xq.size()));
      if (kind == "schur")
        exact_or_real([&] { return schur_eval(l, exact_point(size), size); },
                      [&] { return schur_eval(l, real_point(size), size); });
      else if (kind == "symplectic")
        exact_or_real([&] { return symplectic_eval(l, exact_point(size), size); },
                      [&] { return symplectic_eval(l, real_point(size), size); });
      else
        exact_or_real([&] { return orthogonal_eval(l, exact_point(size), size); },
                      [&] { return orthogonal_eval(l, real_point(size), size); });
    } else if (kind == "normalized-schur" || kind == "normalized-symplectic") {
      const Signature l = Signature::parse(lambda_text);
      if (xq.size() != 1) throw UsageError("--x takes one value here");
      const std::size_t size = need_N(l.length());
      if (kind == "normalized-schur")
        exact_or_real([&] { return normalized_schur(l, xq[0], size); },
                      [&] { return normalized_schur(l, Real(xq[0]), size); });
      else
        exact_or_real([&] { return normalized_symplectic(l, xq[0], size); },
                      [&] { return normalized_symplectic(l, Real(xq[0]), size); });
    } else if (kind == "phi" || kind == "Phi" || kind == "Phi-characters") {
      const std::size_t size = n ? n : need_N(xq.size());
      if (xq.size() > size) throw UsageError("more arguments than n");
      if (kind == "phi")
        exact_or_real([&] { return phi_m_eval(m, exact_point(size), size); },
                      [&] { return phi_m_eval(m, real_point(size), size); });
      else if (kind == "Phi")
        exact_or_real([&] { return Phi_m_eval(m, exact_point(size), size); },
                      [&] { return Phi_m_eval(m, real_point(size), size); });
      else
        out << Phi_m_eval_characters(m, real_point(size), size).str(digits) << '\n';
    } else if (kind == "bessel") {
      std::vector<Real> xr, yr;
      for (const auto& q : xq) xr.emplace_back(q);
      for (const auto& q : rationals(y_text)) yr.emplace_back(q);
      if (xr.size() != yr.size() || xr.empty()) throw UsageError("--x and --y need the same positive length");
      out << bessel_B(xr, yr).str(digits) << '\n';
    } else if (kind == "beta-shift") {
      const Signature l = Signature::parse(lambda_text);
      if (xq.size() != 1) throw UsageError("--x takes one value here");
      const BetaShiftReport r = beta_shift_check(l, need_N(l.length()), beta, Real(xq[0]));
      out << "lhs," << r.lhs.str(digits) << "\nrhs," << r.rhs.str(digits) << "\nrelative_difference,"
          << r.relative_difference.str(6) << "\nshifted," << r.shifted_signature << '\n';
    } else if (kind == "first-line-law") {
      if (n == 0) throw UsageError("--n is required");
      out << "j,probability\n";
      const auto law = first_line_law(n, m);
      for (std::size_t j = 0; j < law.size(); ++j) out << j << ',' << rational_out(law[j]) << '\n';
    }
  });

  // gue
  std::size_t k = 1;
  auto* gue = app.add_subcommand("gue", "GUE corners process");
  gue->require_subcommand(1);
  auto* gue_sample = gue->add_subcommand("sample", "eigenvalues of the leading corners, CSV level,index,value");
  gue_sample->add_option("--k", k)->check(CLI::PositiveNumber);
  gue_sample->add_option("--samples", samples)->check(CLI::PositiveNumber);
  gue_sample->callback([&] {
    RngStream rng(g.seed, 0);
    out << "level,index,value\n";
    for (std::uint64_t s = 0; s < samples; ++s) {
      const CornersSample c = sample_gue_corners(k, rng);
      for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i) out << j << ',' << i + 1 << ',' << fmt(c.level(j)[i], 15) << '\n';
    }
  });
  auto* gue_mgf = gue->add_subcommand("mgf", "E B_k(x; GUE_k): analytic against Monte Carlo");
  std::uint64_t mc_samples = 100000;
  gue_mgf->add_option("--x", x_text)->required();
  gue_mgf->add_option("--samples", mc_samples)->check(CLI::PositiveNumber);
  gue_mgf->callback([&] {
    RngStream rng(g.seed, 0);
    const std::vector<double> x = doubles(x_text);
    const MonteCarloEstimate e = mgf_gue_mc(x, mc_samples, rng);
    out << "analytic,estimate,stderr\n" << fmt(mgf_gue(x), 12) << ',' << fmt(e.estimate, 12) << ','
        << fmt(e.standard_error, 6) << '\n';
  });
  auto* gue_density_cmd = gue->add_subcommand("density", "eigenvalue density at a point");
  gue_density_cmd->add_option("--eps", x_text)->required();
  gue_density_cmd->callback([&] {
    const std::vector<double> e = doubles(x_text);
    out << fmt(gue_density(e.size(), e), 15) << '\n';
  });

  // limitshape
  double a = 1.0, xline = 0.5;
  int rmax = 4;
  std::size_t order = kDefaultPsiOrder;
  auto* ls = app.add_subcommand("limitshape", "limit-shape moments");
  ls->require_subcommand(1);
  auto* ls_moments = ls->add_subcommand("moments", "CSV r,analytic,empirical,stderr");
  SamplerFlags lsf;
  ls_moments->add_option("--a", a)->check(CLI::PositiveNumber);
  ls_moments->add_option("--x", xline)->check(CLI::Range(0.0, 1.0));
  ls_moments->add_option("--rmax", rmax)->check(CLI::Range(0, 10));
  ls_moments->add_option("--n", n, "also sample tilings of this size");
  ls_moments->add_option("--samples", samples);
  ls_moments->add_flag("--hex", hex, "sample hexagon tilings");
  lsf.attach(ls_moments, "mcmc");
  ls_moments->callback([&] {
    const std::vector<Real> an = limit_moments(rmax, Real(xline), Real(a));
    std::optional<MomentVector> emp;
    if (n > 0) {
      RngStream rng(g.seed, 0);
      const long mm = std::lround(a * static_cast<double>(n));
      const std::size_t line = line_index(xline, n);
      MomentAccumulator acc(rmax, line);
      draw_patterns(n, mm, hex, samples, lsf, rng, [&](const GTPattern& p) { acc.add(p); });
      emp = acc.result(xline);
    }
    out << "r,analytic,empirical,stderr\n";
    for (int r = 0; r <= rmax; ++r) {
      out << r << ',' << an[static_cast<std::size_t>(r)].str(15);
      if (emp)
        out << ',' << fmt(emp->values[static_cast<std::size_t>(r)], 12) << ','
            << fmt(emp->standard_errors[static_cast<std::size_t>(r)], 6);
      else
        out << ",,";
      out << '\n';
    }
  });
  auto* ls_psi = ls->add_subcommand("psi", "Taylor coefficients of Psi_a at u = 1");
  ls_psi->add_option("--a", a)->check(CLI::PositiveNumber);
  ls_psi->add_option("--order", order)->check(CLI::Range(2, static_cast<int>(kMaxPsiOrder)));
  ls_psi->callback([&] {
    const Jet j = psi_jet(Real(a), order);
    out << "i,coefficient\n";
    for (std::size_t i = 0; i <= j.order(); ++i) out << i << ',' << j.coeff(i).str(25) << '\n';
  });

  // verify
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  verify->add_option("--json", json_path, "write the report here instead of stdout");

  auto* v_exact = verify->add_subcommand("exact", "exact identities");
  v_exact->callback([&] { code = emit_report(verify_exact_suite(), g, json_path, out); });

  bool with_factor = false;
  auto* v_ebk = verify->add_subcommand("ebk", "E B_k(Y^k) against Phi_m by enumeration");
  v_ebk->add_option("--n", n)->required();
  v_ebk->add_option("--m", m)->required();
  v_ebk->add_option("--k", k)->required();
  v_ebk->add_option("--x", x_text, "one point (default: the grid {-1,-1/2,1/2,1}^k)");
  v_ebk->add_flag("--with-vandermonde-factor", with_factor, "decide on the identity including the Vandermonde ratio");
  v_ebk->callback([&] {
    const auto pts = x_text.empty() ? ebk_grid(k) : std::vector<std::vector<double>>{doubles(x_text)};
    EbkOptions o;
    o.vandermonde_factor = with_factor;
    code = emit_report(verify_ebk_identity(n, m, k, pts, o), g, json_path, out);
  });

  SamplerFlags vgf;
  std::string regime = "standard";
  std::uint64_t gue_samples = 10000;
  std::uint64_t ref_samples = 0;
  double ks_tol = 0.0;
  auto* v_gue = verify->add_subcommand("gue", "rescaled positions against GUE corners");
  v_gue->add_option("--regime", regime)->check(CLI::IsMember({"standard", "tall", "wide"}));
  v_gue->add_option("--n", n)->required();
  v_gue->add_option("--m", m)->required();
  v_gue->add_option("--a", a);
  v_gue->add_option("--k", k);
  v_gue->add_option("--samples", gue_samples);
  v_gue->add_option("--reference-samples", ref_samples);
  v_gue->add_option("--ks-tol", ks_tol, "0 selects 0.05 (standard) or 0.06");
  v_gue->add_flag("--hex", hex);
  vgf.attach(v_gue, "mcmc");
  v_gue->callback([&] {
    RngStream rng(g.seed, 0);
    GueConvergenceOptions o;
    o.method = parse_method(vgf.method);
    o.mcmc = vgf.mcmc();
    o.boundary = hex ? Boundary::hexagon : Boundary::free_top;
    o.reference_samples = ref_samples;
    o.ks_tolerance = ks_tol;
    const RegimeParams params{parse_regime(regime), static_cast<long>(n), m, a};
    SuiteReport rep = verify_gue_convergence(params, k, gue_samples, rng, o);
    code = emit_report(rep, g, json_path, out);
  });

  std::string n_grid_text = "8,16,32,64";
  std::string y_list = "1";
  auto* v_mgf = verify->add_subcommand("mgf", "asymptotics of Phi_m");
  v_mgf->add_option("--a", a);
  v_mgf->add_option("--n-grid", n_grid_text);
  v_mgf->add_option("--y", y_list);
  v_mgf->callback(
      [&] { code = emit_report(verify_mgf_convergence(a, longs(n_grid_text), doubles(y_list)), g, json_path, out); });

  SamplerFlags vlf;
  bool no_hex = false;
  std::uint64_t ls_samples = 4000;
  auto* v_ls = verify->add_subcommand("limitshape", "moments of the counting measure");
  v_ls->add_option("--a", a);
  v_ls->add_option("--x", xline);
  v_ls->add_option("--n", n)->required();
  v_ls->add_option("--samples", ls_samples);
  v_ls->add_option("--rmax", rmax);
  v_ls->add_flag("--no-hex", no_hex);
  vlf.attach(v_ls, "mcmc");
  v_ls->callback([&] {
    RngStream rng(g.seed, 0);
    LimitShapeOptions o;
    o.method = parse_method(vlf.method);
    o.mcmc = vlf.mcmc();
    o.hexagon = !no_hex;
    code = emit_report(verify_limit_shape(a, xline, n, ls_samples, rmax, rng, o), g, json_path, out);
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "finite-size tables over a grid of n");
  sweep->require_subcommand(1);
  auto* sw_mgf = sweep->add_subcommand("mgf", "CSV n,m,exponent,target,gap");
  sw_mgf->add_option("--a", a);
  sw_mgf->add_option("--n-grid", n_grid_text);
  sw_mgf->add_option("--y", y_list);
  sw_mgf->callback([&] {
    PrecisionScope scope(std::max(256u, working_precision()));
    const std::vector<double> y = doubles(y_list);
    double s1 = 0, s2 = 0;
    for (double v : y) {
      s1 += v;
      s2 += v * v;
    }
    const double target = (a * a + 2 * a) / 16 * s2;
    out << "n,m,exponent,target,gap\n";
    for (long nn : longs(n_grid_text)) {
      const long mm = std::lround(a * static_cast<double>(nn));
      std::vector<Real> xs;
      for (double v : y) xs.push_back(exp(Real(v) / sqrt(Real(nn))));
      const auto un = static_cast<std::size_t>(nn);
      if (un < y.size()) throw UsageError("n smaller than the number of y values");
      const double e = log(Phi_m_eval(mm, EvalPoint<Real>{xs, un - y.size()}, un)).to_double() -
                       static_cast<double>(mm) / (2 * std::sqrt(static_cast<double>(nn))) * s1;
      out << nn << ',' << mm << ',' << fmt(e, 12) << ',' << fmt(target, 12) << ',' << fmt(std::abs(e - target), 6)
          << '\n';
    }
  });
  auto* sw_law = sweep->add_subcommand("law", "exact law of Y^1: CSV n,m,mean,variance,divisor,scaled_variance");
  std::string m_grid_text;
  sw_law->add_option("--regime", regime)->check(CLI::IsMember({"standard", "tall", "wide"}));
  sw_law->add_option("--n-grid", n_grid_text);
  sw_law->add_option("--a", a);
  sw_law->add_option("--m", m, "fixed m (otherwise m = round(a n))");
  sw_law->callback([&] {
    out << "n,m,mean,variance,divisor,scaled_variance\n";
    for (long nn : longs(n_grid_text)) {
      const long mm = m > 0 ? m : std::lround(a * static_cast<double>(nn));
      const auto law = first_line_law(static_cast<std::size_t>(nn), mm);
      double mean = 0, var = 0;
      for (std::size_t j = 0; j < law.size(); ++j) mean += static_cast<double>(j) * law[j].get_d();
      for (std::size_t j = 0; j < law.size(); ++j) var += std::pow(static_cast<double>(j) - mean, 2) * law[j].get_d();
      const double d = regime_divisor(nn, mm, parse_regime(regime));
      out << nn << ',' << mm << ',' << fmt(mean, 10) << ',' << fmt(var, 10) << ',' << fmt(d, 10) << ','
          << fmt(var / (d * d), 10) << '\n';
    }
  });

  // plot
  std::string out_path = "plot.svg";
  SamplerFlags pf_hist, pf_mom, pf_tiling;
  auto* plot = app.add_subcommand("plot", "SVG figures");
  plot->require_subcommand(1);
  plot->add_option("--out", out_path);
  auto* pl_hist = plot->add_subcommand("histogram", "rescaled Y^1 with the standard normal density");
  pl_hist->add_option("--regime", regime)->check(CLI::IsMember({"standard", "tall", "wide"}));
  pl_hist->add_option("--n", n)->required();
  pl_hist->add_option("--m", m)->required();
  pl_hist->add_option("--a", a);
  pl_hist->add_option("--samples", gue_samples);
  pf_hist.attach(pl_hist, "mcmc");
  pl_hist->callback([&] {
    const RegimeParams params{parse_regime(regime), static_cast<long>(n), m, a};
    params.validate();
    RngStream rng(g.seed, 0);
    std::vector<double> ys;
    draw_patterns(n, m, false, gue_samples, pf_hist, rng,
                  [&](const GTPattern& p) { ys.push_back(rescale_positions({p.at(1, 1)}, params.n, m, params.regime)[0]); });
    const double d = regime_divisor(params.n, m, params.regime);
    write_file(out_path, svg_histogram(ys, -4, 4, 1.0 / d >= 0.05 ? 1.0 / d : 0.2,
                                       "rescaled Y1, " + regime + " n=" + std::to_string(n) + " m=" + std::to_string(m)));
    out << out_path << '\n';
  });
  auto* pl_mom = plot->add_subcommand("moments", "analytic against empirical moments");
  pl_mom->add_option("--a", a);
  pl_mom->add_option("--x", xline);
  pl_mom->add_option("--n", n)->required();
  pl_mom->add_option("--samples", ls_samples);
  pl_mom->add_option("--rmax", rmax);
  pf_mom.attach(pl_mom, "mcmc");
  pl_mom->callback([&] {
    RngStream rng(g.seed, 0);
    const long mm = std::lround(a * static_cast<double>(n));
    MomentAccumulator acc(rmax, line_index(xline, n));
    draw_patterns(n, mm, false, ls_samples, pf_mom, rng, [&](const GTPattern& p) { acc.add(p); });
    const MomentVector mv = acc.result(xline);
    std::vector<double> an, em, se;
    const auto lm = limit_moments(rmax, Real(xline), Real(a));
    for (int r = 1; r <= rmax; ++r) {
      an.push_back(lm[static_cast<std::size_t>(r)].to_double());
      em.push_back(mv.values[static_cast<std::size_t>(r)]);
      se.push_back(mv.standard_errors[static_cast<std::size_t>(r)]);
    }
    write_file(out_path, svg_moments(an, em, se, "moments at x=" + fmt(xline, 4) + ", n=" + std::to_string(n)));
    out << out_path << '\n';
  });
  auto* pl_tiling = plot->add_subcommand("tiling", "lozenge picture of one sample");
  pl_tiling->add_option("--n", n)->required();
  pl_tiling->add_option("--m", m)->required();
  pl_tiling->add_flag("--hex", hex);
  pf_tiling.attach(pl_tiling, "exact");
  pl_tiling->callback([&] {
    RngStream rng(g.seed, 0);
    std::optional<GTPattern> last;
    draw_patterns(n, m, hex, 1, pf_tiling, rng, [&](const GTPattern& p) { last = p; });
    write_file(out_path, svg_tiling(*last, std::string(hex ? "hexagon" : "free boundary") + " n=" + std::to_string(n) +
                                               " m=" + std::to_string(m)));
    out << out_path << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return code;
}

}  // namespace lozlab
