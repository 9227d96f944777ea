#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lozlab/harness/cli.hpp"
#include "lozlab/harness/report.hpp"
#include "lozlab/harness/suites.hpp"
#include "lozlab/harness/svg.hpp"

using namespace lozlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lozlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report verdict is the conjunction of its checks") {
  SuiteReport r;
  r.suite = "demo";
  CHECK_FALSE(r.pass());  // a suite that checked nothing does not pass
  r.add({"a", {}, "1", "1", "exact", true});
  CHECK(r.pass());
  r.note("info", 3);
  CHECK(r.pass());
  r.add({"b", {}, "1", "2", "exact", false});
  CHECK_FALSE(r.pass());
  const auto j = r.to_json(false);
  CHECK(j["pass"] == false);
  CHECK(j["wall_ms"] == 0);
  CHECK(j["checks"].size() == 2);
  CHECK(r.dump(false) == r.dump(false));
}

TEST_CASE("regime preconditions") {
  CHECK_THROWS_AS((RegimeParams{Regime::standard, 48, 0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RegimeParams{Regime::standard, 48, 70, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RegimeParams{Regime::tall, 16, 200, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RegimeParams{Regime::wide, 50, 8, 1.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((RegimeParams{Regime::wide, 512, 8, 1.0}.validate()));
}

TEST_CASE("exact suite passes") {
  const SuiteReport r = verify_exact_suite();
  CHECK(r.pass());
  CHECK(r.checks.size() > 100);
}

TEST_CASE("exact suite catches a corrupted binomial") {
  ExactSuiteOptions o;
  o.binomial = [](long n, long k) {
    BigInt b = binomial(n, k);
    if (n == 4 && k == 2) b += 1;
    return b;
  };
  CHECK_FALSE(verify_exact_suite(o).pass());
}

TEST_CASE("EB_k identity: trivial point and k=1") {
  const SuiteReport zero = verify_ebk_identity(3, 2, 2, {{0.0, 0.0}});
  CHECK(zero.pass());
  const SuiteReport one = verify_ebk_identity(2, 2, 1, {{1.0}});
  CHECK(one.pass());
}

TEST_CASE("EB_k identity: n=3, m=2, k=2, x=(1,-1) as stated") {
  const SuiteReport r = verify_ebk_identity(3, 2, 2, {{1.0, -1.0}});
  CHECK(r.pass());
}

TEST_CASE("EB_k identity holds with the Vandermonde ratio") {
  EbkOptions o;
  o.vandermonde_factor = true;
  CHECK(verify_ebk_identity(3, 2, 2, {{1.0, -1.0}}, o).pass());
  CHECK(verify_ebk_identity(3, 3, 3, ebk_grid(3), o).pass());
}

TEST_CASE("MGF suite") {
  const SuiteReport zero = verify_mgf_convergence(1.0, {8, 16}, {0.0});
  CHECK(zero.pass());
  const SuiteReport r = verify_mgf_convergence(1.0, {8, 16, 32, 64}, {1.0});
  CHECK(r.pass());
  const SuiteReport two = verify_mgf_convergence(1.0, {8, 16, 32, 64}, {1.0, -0.5});
  bool has_mult = false;
  for (const auto& c : two.checks) has_mult |= c.name == "multiplicativity" && c.pass;
  CHECK(has_mult);
  CHECK_THROWS_AS(verify_mgf_convergence(1.0, {16, 8}, {1.0}), std::invalid_argument);
}

TEST_CASE("GUE suite refuses degenerate scales") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(verify_gue_convergence({Regime::standard, 48, 0, 1.0}, 3, 100, rng), std::invalid_argument);
}

TEST_CASE("GUE suite runs with the exact sampler on a small box") {
  RngStream rng(2, 0);
  GueConvergenceOptions o;
  o.method = SamplerMethod::exact;
  const SuiteReport r = verify_gue_convergence({Regime::standard, 6, 6, 1.0}, 2, 500, rng, o);
  bool saw_interlacing = false;
  for (const auto& c : r.checks)
    if (c.name == "interlacing_violations") {
      saw_interlacing = true;
      CHECK(c.pass);
    }
  CHECK(saw_interlacing);
}

TEST_CASE("CLI: counts") {
  auto r = cli({"count", "--n", "2", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  r = cli({"count", "--n", "1", "--m", "7"});
  CHECK(r.out == "8\n");
  r = cli({"count", "--n", "2", "--m", "1", "--hex"});
  CHECK(r.out == "6\n");
}

TEST_CASE("CLI: verify exact exits 0") {
  const auto r = cli({"--no-timing", "verify", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("CLI: usage errors exit 2") {
  CHECK(cli({"count", "--n", "2"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"sample", "--n", "2", "--m", "2", "--format", "positions", "--k", "5"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("CLI: output is reproducible for a fixed seed") {
  const std::vector<std::string> args{"--seed", "77", "sample", "--n", "4", "--m", "3", "--samples", "20",
                                      "--format", "positions"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("line,k,Y_1,Y_2,Y_3,Y_4\n", 0) == 0);
  const std::vector<std::string> mc{"--seed", "77", "--no-timing", "verify", "gue", "--n", "8", "--m", "8",
                                    "--k", "2", "--samples", "200"};
  CHECK(cli(mc).out == cli(mc).out);
  const std::vector<std::string> g{"--seed", "5", "gue", "sample", "--k", "3", "--samples", "4"};
  CHECK(cli(g).out == cli(g).out);
  CHECK(cli({"--seed", "5", "sample", "--n", "6", "--m", "6", "--samples", "5"}).out !=
        cli({"--seed", "6", "sample", "--n", "6", "--m", "6", "--samples", "5"}).out);
}

TEST_CASE("CLI: enumerate and char eval") {
  const auto e = cli({"enumerate", "--n", "2", "--m", "1"});
  CHECK(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 4);
  CHECK(cli({"char", "eval", "--kind", "schur-dim", "--lambda", "2,2,0"}).out == "6\n");
  CHECK(cli({"char", "eval", "--kind", "Phi", "--m", "2", "--n", "2", "--x", "2"}).out == "23/10\n");
  const auto irr = cli({"char", "eval", "--kind", "normalized-symplectic", "--lambda", "1/2,1/2", "--x", "2"});
  CHECK(irr.code == 0);
  CHECK(irr.out.find('e') != std::string::npos);
}

TEST_CASE("SVG output is well formed") {
  const std::string h = svg_histogram({-1.0, 0.0, 0.5, 2.0}, -4, 4, 0.5, "t<1>");
  CHECK(h.rfind("<svg", 0) == 0);
  CHECK(h.find("t&lt;1&gt;") != std::string::npos);
  const std::string m = svg_moments({1.0, 2.0}, {1.1, 1.9}, {0.1, 0.1}, "moments");
  CHECK(m.find("</svg>") != std::string::npos);
  const std::string t = svg_tiling(GTPattern::from_rows({{1}, {2, 0}}, 2), "tiling");
  CHECK(t.find("<polygon") != std::string::npos);
  CHECK_THROWS_AS(svg_moments({1.0}, {}, {}, "x"), std::invalid_argument);
}
