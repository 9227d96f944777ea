#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lozlab/charlib/characters.hpp"
#include "lozlab/gue/corners.hpp"
#include "lozlab/harness/suites.hpp"
#include "lozlab/limitshape/moments.hpp"
#include "lozlab/limitshape/psi.hpp"
#include "lozlab/sampler/exact.hpp"
#include "lozlab/sampler/rescale.hpp"

namespace py = pybind11;
using namespace lozlab;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(q));
}

py::object integer(const BigInt& z) { return py::int_(py::str(to_string(z))); }

Rational to_rational(const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return parse_rational(py::str(v).cast<std::string>());
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator") && !py::isinstance<py::float_>(v))
    return parse_rational(py::str(v.attr("numerator")).cast<std::string>() + "/" +
                          py::str(v.attr("denominator")).cast<std::string>());
  if (py::isinstance<py::float_>(v)) {
    Rational q(v.cast<double>());  // exact binary value
    return q;
  }
  return parse_rational(py::str(v).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::sequence& s) {
  std::vector<Rational> out;
  for (const auto& v : s) out.push_back(to_rational(v));
  return out;
}

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

McmcOptions mcmc_options(std::uint64_t burn_in, std::uint64_t thin, unsigned chains, const std::string& moves) {
  McmcOptions o;
  o.burn_in = burn_in;
  o.thin = thin;
  o.chains = chains;
  o.moves = parse_moves(moves);
  return o;
}

std::vector<std::vector<std::vector<long>>> draw(std::size_t n, long m, bool hex, std::size_t samples,
                                                 const std::string& method, std::uint64_t seed, std::uint64_t burn_in,
                                                 std::uint64_t thin, unsigned chains, const std::string& moves) {
  RngStream rng(seed, 0);
  std::vector<std::vector<std::vector<long>>> out;
  auto keep = [&](const GTPattern& p) { out.push_back(p.rows()); };
  if (method == "exact") {
    if (hex) {
      const ExactHexSampler s(n, m);
      for (std::size_t i = 0; i < samples; ++i) keep(s.sample(rng));
    } else {
      const ExactFreeSampler s(n, m);
      for (std::size_t i = 0; i < samples; ++i) keep(s.sample(rng));
    }
  } else if (method == "mcmc") {
    McmcOptions o = mcmc_options(burn_in, thin, chains, moves);
    const std::uint64_t t = o.thin ? o.thin : n;
    o.thin = t;
    o.sweeps = samples * t;
    if (hex)
      mcmc_sample_hex(n, m, rng, o, keep);
    else
      mcmc_sample_free(n, m, rng, o, keep);
  } else {
    throw std::invalid_argument("method must be 'exact' or 'mcmc'");
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Lozenge tilings with a free boundary, symplectic characters and GUE corners";

  py::register_exception<CapExceeded>(mod, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<PrecisionError>(mod, "PrecisionError", PyExc_ArithmeticError);

  mod.def("default_seed", [] { return default_seed(); });

  // tilings
  mod.def("count_free", [](std::size_t n, long m) { return integer(count_free(n, m)); }, py::arg("n"), py::arg("m"));
  mod.def("count_hex", [](std::size_t n, long m) { return integer(count_hex(n, m)); }, py::arg("n"), py::arg("m"));
  mod.def(
      "enumerate",
      [](std::size_t n, long m, bool hex, std::uint64_t cap) {
        std::vector<std::vector<std::vector<long>>> out;
        auto keep = [&](const GTPattern& p) { out.push_back(p.rows()); };
        if (hex)
          enumerate_hex(n, m, keep, cap);
        else
          enumerate_free(n, m, keep, cap);
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("hex") = false, py::arg("cap") = 1000000,
      "All patterns as lists of rows, bottom row first.");
  mod.def("sample", &draw, py::arg("n"), py::arg("m"), py::arg("hex") = false, py::arg("samples") = 1,
          py::arg("method") = "exact", py::arg("seed") = default_seed(), py::arg("burn_in") = 0, py::arg("thin") = 0,
          py::arg("chains") = 2, py::arg("moves") = "sites",
          "Uniform patterns. method='exact' or 'mcmc'; mcmc thin defaults to n sweeps.");
  mod.def(
      "positions",
      [](const std::vector<std::vector<long>>& rows, std::size_t k) {
        long ceiling = 0;
        for (const auto& r : rows)
          for (long v : r) ceiling = std::max(ceiling, v);
        return positions(GTPattern::from_rows(rows, ceiling), k);
      },
      py::arg("rows"), py::arg("k"), "Y^k_j = row_{k,j} + k - j.");
  mod.def(
      "first_line_law",
      [](std::size_t n, long m) {
        py::list out;
        for (const auto& q : first_line_law(n, m)) out.append(fraction(q));
        return out;
      },
      py::arg("n"), py::arg("m"));
  py::enum_<Regime>(mod, "Regime")
      .value("standard", Regime::standard)
      .value("tall", Regime::tall)
      .value("wide", Regime::wide);
  mod.def("rescale", &rescale_positions, py::arg("Y"), py::arg("n"), py::arg("m"), py::arg("regime") = Regime::standard);

  // characters
  mod.def("schur_dim", [](const std::string& l, std::size_t N) { return integer(schur_dim(Signature::parse(l), N)); },
          py::arg("lam"), py::arg("N"));
  mod.def(
      "schur",
      [](const std::string& l, const py::sequence& x, std::size_t N) {
        const auto xs = to_rationals(x);
        return fraction(schur_eval(Signature::parse(l), EvalPoint<Rational>{xs, N - xs.size()}, N));
      },
      py::arg("lam"), py::arg("x"), py::arg("N"), "s_lambda(x, 1^{N-len x}) exactly.");
  mod.def(
      "symplectic",
      [](const std::string& l, const py::sequence& x, std::size_t N) {
        const auto xs = to_rationals(x);
        return fraction(symplectic_eval(Signature::parse(l), EvalPoint<Rational>{xs, N - xs.size()}, N));
      },
      py::arg("lam"), py::arg("x"), py::arg("N"));
  mod.def(
      "normalized_schur",
      [](const std::string& l, const py::handle& x, std::size_t N) {
        return fraction(normalized_schur(Signature::parse(l), to_rational(x), N));
      },
      py::arg("lam"), py::arg("x"), py::arg("N"));
  mod.def(
      "normalized_symplectic",
      [](const std::string& l, const py::handle& x, std::size_t N) -> py::object {
        const Signature s = Signature::parse(l);
        const Rational q = to_rational(x);
        try {
          return fraction(normalized_symplectic(s, q, N));
        } catch (const std::domain_error&) {
          return py::float_(normalized_symplectic(s, Real(q), N).to_double());
        }
      },
      py::arg("lam"), py::arg("x"), py::arg("N"), "Exact when rational, otherwise a float.");
  mod.def(
      "phi",
      [](long m, const py::sequence& x, std::size_t n) {
        const auto xs = to_rationals(x);
        return fraction(phi_m_eval(m, EvalPoint<Rational>{xs, n - xs.size()}, n));
      },
      py::arg("m"), py::arg("x"), py::arg("n"));
  mod.def(
      "Phi",
      [](long m, const std::vector<double>& x, std::size_t n, unsigned bits) {
        PrecisionScope scope(bits);
        std::vector<Real> xs(x.begin(), x.end());
        return Phi_m_eval(m, EvalPoint<Real>{xs, n - xs.size()}, n).to_double();
      },
      py::arg("m"), py::arg("x"), py::arg("n"), py::arg("precision_bits") = 256,
      "Phi_m(x, 1^{n-k}) as a float, computed in multiprecision.");
  mod.def("bessel", py::overload_cast<const std::vector<double>&, const std::vector<double>&>(&bessel_B),
          py::arg("x"), py::arg("y"));

  // GUE
  mod.def(
      "gue_corners",
      [](std::size_t k, std::uint64_t seed) {
        RngStream rng(seed, 0);
        return sample_gue_corners(k, rng).levels;
      },
      py::arg("k"), py::arg("seed") = default_seed(), "levels[j-1]: eigenvalues of the j x j corner, decreasing.");
  mod.def("gue_density", &gue_density, py::arg("k"), py::arg("eps"));
  mod.def("mgf_gue", &mgf_gue, py::arg("x"));

  // limit shape
  mod.def(
      "limit_moments",
      [](int r_max, double x, double a) {
        std::vector<double> out;
        for (const auto& v : limit_moments(r_max, Real(x), Real(a))) out.push_back(v.to_double());
        return out;
      },
      py::arg("r_max"), py::arg("x"), py::arg("a"));
  mod.def(
      "psi_jet",
      [](double a, std::size_t order) {
        std::vector<double> out;
        const Jet j = psi_jet(Real(a), order);
        for (std::size_t i = 0; i <= j.order(); ++i) out.push_back(j.coeff(i).to_double());
        return out;
      },
      py::arg("a"), py::arg("order") = kDefaultPsiOrder, "Taylor coefficients of Psi_a at u = 1.");

  // suites, returned as parsed JSON reports
  mod.def("verify_exact", [] { return parse_json(verify_exact_suite().dump(false)); });
  mod.def(
      "verify_ebk",
      [](std::size_t n, long m, std::size_t k, bool with_factor) {
        EbkOptions o;
        o.vandermonde_factor = with_factor;
        return parse_json(verify_ebk_identity(n, m, k, ebk_grid(k), o).dump(false));
      },
      py::arg("n"), py::arg("m"), py::arg("k"), py::arg("with_vandermonde_factor") = false);
  mod.def(
      "verify_mgf",
      [](double a, const std::vector<long>& n_grid, const std::vector<double>& y) {
        return parse_json(verify_mgf_convergence(a, n_grid, y).dump(false));
      },
      py::arg("a") = 1.0, py::arg("n_grid") = std::vector<long>{8, 16, 32, 64}, py::arg("y") = std::vector<double>{1.0});
  mod.def(
      "verify_gue",
      [](const std::string& regime, long n, long m, double a, std::size_t k, std::uint64_t samples,
         const std::string& method, std::uint64_t seed) {
        RngStream rng(seed, 0);
        GueConvergenceOptions o;
        o.method = parse_method(method);
        return parse_json(verify_gue_convergence({parse_regime(regime), n, m, a}, k, samples, rng, o).dump(false));
      },
      py::arg("regime"), py::arg("n"), py::arg("m"), py::arg("a") = 1.0, py::arg("k") = 1, py::arg("samples") = 1000,
      py::arg("method") = "mcmc", py::arg("seed") = default_seed());
}
