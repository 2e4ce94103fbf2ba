// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. An optional argument names the built CLI, which criterion 10 then
// also runs as a subprocess.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jbtrotter/commands.hpp"
#include "jbtrotter/jbtrotter.hpp"
#include "../matrix_oracle.hpp"
#include "../test_support.hpp"

using namespace jbtrotter;
using testing_support::families;
using testing_support::random_elements;

namespace {

const std::string kData = JBTROTTER_DATA_DIR;
std::string g_cli;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<std::uint64_t> kDoubling{1, 2, 4, 8, 16, 32, 64, 128, 256};

// Instances with each norm drawn from (0, 1].
std::vector<Element> bounded_instance(const AlgebraDescriptor& d, std::size_t m,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, 0xB0));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Element> out;
  for (std::size_t j = 0; j < m; ++j) out.push_back(random_element(d, mix_seed(seed, j), 1.0 - u(rng)));
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// 1. Axiom suite.
Outcome axioms() {
  Outcome o;
  double worst = 0.0;
  for (const auto& d : families()) {
    const auto report = verify_axioms(d, 1000, 20240601, 1e-10);
    for (const auto& r : report.results) worst = std::max(worst, r.worst);
    if (!report.all_passed()) {
      o.pass = false;
      o.detail += to_string(d) + " failed; ";
    }
  }
  o.detail += "4 families x 1000 trials, worst scaled residual " + fmt(worst) + " (tol 1e-10)";
  return o;
}

// 2 and 3. Bound validity over families x m x instances x n.
Outcome bound_grid(Scheme scheme) {
  Outcome o;
  std::size_t checks = 0, violations = 0;
  double worst_ratio = 0.0;
  for (const auto& d : families()) {
    const bool special = d.is_special();
    for (std::size_t m : {2, 3, 5}) {
      for (std::uint64_t s = 0; s < 500; ++s) {
        const auto els = bounded_instance(d, m, mix_seed(s, 1000 * m + static_cast<int>(d.kind)));
        for (const auto& r : sweep(scheme, els, kDoubling)) {
          std::vector<double> bounds;
          if (scheme == Scheme::kG) {
            bounds = {*r.bound_thm31};
          } else {
            bounds = {*r.bound_thm33i, *r.bound_thm33ii};
            if (special) {
              if (!r.bound_special_i || !r.bound_special_ii) ++violations;
              else bounds.insert(bounds.end(), {*r.bound_special_i, *r.bound_special_ii});
            }
          }
          for (double b : bounds) {
            ++checks;
            if (!(r.error <= b + 1e-9)) ++violations;
            if (b > 0) worst_ratio = std::max(worst_ratio, r.error / b);
          }
        }
      }
    }
  }
  o.pass = violations == 0 && checks >= 54000;
  o.detail = std::to_string(checks) + " checks, " + std::to_string(violations) +
             " violations, max error/bound " + fmt(worst_ratio);
  return o;
}

// 4. Convergence order.
Outcome convergence() {
  Outcome o;
  const std::vector<std::uint64_t> tail{32, 64, 128, 256, 512};
  std::vector<std::uint64_t> full;
  for (std::uint64_t n = 1; n <= 1024; n *= 2) full.push_back(n);
  double g_lo = 9, g_hi = 0, f_lo = 9, f_hi = 0, h_lo = 9, h_ratio = 0;
  for (const auto& d : families()) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const auto els = random_elements(d, 3, mix_seed(s, 0xC4), 1.0);
      for (const auto scheme : {Scheme::kG, Scheme::kF}) {
        const auto p = empirical_order(sweep(scheme, els, tail));
        const double v = p ? *p : 0.0;
        if (!p || v < 1.7 || v > 2.3) o.pass = false;
        (scheme == Scheme::kG ? g_lo : f_lo) = std::min(scheme == Scheme::kG ? g_lo : f_lo, v);
        (scheme == Scheme::kG ? g_hi : f_hi) = std::max(scheme == Scheme::kG ? g_hi : f_hi, v);
      }
      const auto h = sweep(Scheme::kH, els, full);
      const auto p = empirical_order(std::span(h).subspan(5));
      const double ratio = h.back().error / h.front().error;
      if (!p || *p < 0.9 || !(ratio <= 1e-2)) o.pass = false;
      h_lo = std::min(h_lo, p ? *p : 0.0);
      h_ratio = std::max(h_ratio, ratio);
    }
  }
  o.detail = "g order in [" + fmt(g_lo) + ", " + fmt(g_hi) + "], f in [" + fmt(f_lo) + ", " +
             fmt(f_hi) + "], h >= " + fmt(h_lo) + ", max err(1024)/err(1) " + fmt(h_ratio);
  return o;
}

// 5. Associative-matrix oracle.
Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  std::size_t cases = 0;
  for (const auto kind : {AlgebraKind::kSym, AlgebraKind::kHerm}) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto d = AlgebraDescriptor::make(kind, 2 + s % 4);
      const auto els = random_elements(d, 3, mix_seed(s, 0x05), 0.3 + 0.01 * static_cast<double>(s));
      const std::uint64_t n = 1 + s % 17;
      const auto m = oracle::convert(els);
      auto rel = [&](const Element& e, const oracle::Mat& ref) {
        const double r = oracle::norm(oracle::to_eigen(e) - ref) / oracle::norm(ref);
        worst = std::max(worst, r);
        if (!(r <= 1e-10)) o.pass = false;
      };
      rel(approx_g(els, n), oracle::power(oracle::step_g(m, n), n));
      rel(approx_f(els, n), oracle::power(oracle::step_f(m, n), n));
      rel(approx_h(els, n), oracle::power(oracle::step_h(m, n), n));
      rel(exp_sum(els), oracle::exp_sum(m));
      rel(exp_spectral(els[0]), oracle::expm(m[0]));
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " cases (g, f, h, exp_sum, exp), worst relative " + fmt(worst);
  return o;
}

// 6. Jet claims.
Outcome jets() {
  Outcome o;
  double worst = 0.0;
  std::size_t runs = 0;
  for (const auto& d : families())
    for (std::size_t m : {2, 3, 4})
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto els = random_elements(d, m, mix_seed(s, 0x6E7 + m), 1.0);
        for (const auto& r : cli::jet_claims(els)) {
          worst = std::max(worst, r.low_residual / r.tol);
          if (!r.passed) o.pass = false;
        }
        ++runs;
      }
  const auto pauli = cli::pauli_instance();
  const double d3 = residual(build_D_jet(pauli.elements), jet_exp(element_sum(pauli.elements)), 3);
  if (!(d3 > 1e-6)) o.pass = false;
  o.detail = std::to_string(runs) + " instances, worst residual/tol " + fmt(worst) +
             ", Pauli degree-3 D residual " + fmt(d3);
  return o;
}

// 7. exp_spectral vs exp_series.
Outcome exp_cross_check() {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0, near_degenerate = 0;
  auto check = [&](const Element& a) {
    const Element x = exp_spectral(a), y = exp_series(a);
    const double r = jb_norm(x - y) / jb_norm(y);
    worst = std::max(worst, r);
    if (!(r <= 1e-11)) o.pass = false;
    ++count;
  };
  std::mt19937_64 rng(0xE7);
  std::uniform_real_distribution<double> norm(0.05, 4.0), gap_scale(0.5, 2.0);
  for (const auto& d : families()) {
    const bool albert = d.kind == AlgebraKind::kAlbert;
    for (std::uint64_t s = 0; s < 500; ++s) {
      if (albert && s % 5 == 0) {
        const double gap = 1e-6 * gap_scale(rng);
        const double base = norm(rng) / 4.0;
        check(testing_support::albert_with_spectrum(s, {base, base + gap, -2.0 * base}));
        ++near_degenerate;
      } else {
        check(random_element(d, mix_seed(s, 0x7E), norm(rng)));
      }
    }
  }
  o.detail = std::to_string(count) + " elements (" + std::to_string(near_degenerate) +
             " albert with gap in [5e-7, 2e-6]), worst relative " + fmt(worst);
  return o;
}

// 8. Planner minimality.
Outcome planner() {
  Outcome o;
  std::size_t combos = 0;
  for (const double s : {0.25, 1.0, 2.0, 3.5, 6.0})
    for (const double eps : {1e-2, 1e-6})
      for (const auto scheme : {Scheme::kG, Scheme::kF}) {
        const std::vector<double> norms{0.4 * s, 0.6 * s};
        const bool special = combos % 3 == 0;
        const auto r = plan_min_n_bound(scheme, norms, eps, special);
        if (!(tightest_bound(scheme, norms, r.n, special) <= eps)) o.pass = false;
        if (r.n > 1 && !(tightest_bound(scheme, norms, r.n - 1, special) > eps)) o.pass = false;
        ++combos;
      }
  const std::vector<double> unit{1.0};
  const auto spot = plan_min_n_bound(Scheme::kG, unit, 1e-4).n;
  if (spot != 96 || combos != 20) o.pass = false;
  o.detail = std::to_string(combos) + " combinations minimal; G, S=1, eps=1e-4 -> " +
             std::to_string(spot);
  return o;
}

// 9. Closed-form spot values against long-double evaluation.
Outcome spot_values() {
  Outcome o;
  const long double e = std::exp(1.0L);
  const std::vector<double> half{0.5, 0.5}, third{1.0 / 3, 1.0 / 3, 1.0 / 3};
  const std::vector<std::pair<double, long double>> cases{
      {bound_thm31(half, 10), e / 300.0L},
      {bound_thm33i(third, 10), e / 60.0L},
      {bound_thm33ii(half, 100), 0.18L * std::exp(1.02L)},
      {bound_special(half, 100, SpecialVariant::kII), 0.02L * std::exp(1.02L)}};
  double worst = 0.0;
  for (const auto& [got, want] : cases) {
    const double r = static_cast<double>(std::fabs((static_cast<long double>(got) - want) / want));
    worst = std::max(worst, r);
    if (!(r <= 1e-12)) o.pass = false;
  }
  o.detail = "e/300, e/60, 0.18 e^1.02, 0.02 e^1.02; worst relative " + fmt(worst);
  return o;
}

struct Proc {
  int code = -1;
  std::string err;
};

Proc run_cli(const std::string& args) {
  Proc p;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>&1 1>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  char buf[512];
  while (std::fgets(buf, sizeof buf, f)) p.err += buf;
  const int status = pclose(f);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

// 10. Determinism and malformed input.
Outcome determinism() {
  Outcome o;
  std::ostringstream d1, d2;
  cli::cmd_demo(d1);
  cli::cmd_demo(d2);
  if (d1.str() != d2.str()) o.pass = false;

  const auto inst = load_instance(kData + "/pauli_triple.json");
  cli::RunConfig cfg;
  cfg.schemes = {Scheme::kG, Scheme::kF, Scheme::kH};
  for (const auto format : {cli::OutputFormat::kCsv, cli::OutputFormat::kJson}) {
    cfg.format = format;
    std::ostringstream a, b, la, lb;
    cli::cmd_sweep(inst, cfg, a, la);
    cli::cmd_sweep(inst, cfg, b, lb);
    if (a.str() != b.str() || la.str() != lb.str()) o.pass = false;
  }

  int code = 0;
  std::string message;
  try {
    load_instance(kData + "/malformed.json");
  } catch (const Error& e) {
    code = cli::exit_code_for(e.kind());
    message = e.what();
  }
  if (code != 3 || message.find('\n') != std::string::npos) o.pass = false;
  o.detail = "demo and sweep (csv, json) byte-identical; malformed -> exit " + std::to_string(code);

  if (!g_cli.empty()) {
    const auto p = run_cli("sweep --input '" + kData + "/malformed.json'");
    const bool one_line = !p.err.empty() && p.err.find('\n') == p.err.size() - 1 &&
                          p.err.rfind("error: parse: ", 0) == 0;
    if (p.code != 3 || !one_line) o.pass = false;
    o.detail += "; binary exit " + std::to_string(p.code) + (one_line ? ", one-line reason" : ", bad reason");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite", axioms},
      {"g error within the S^3 e^S / 3n^2 bound", [] { return bound_grid(Scheme::kG); }},
      {"f error within both symmetrized bounds (+ sym/herm bounds)",
       [] { return bound_grid(Scheme::kF); }},
      {"convergence order", convergence},
      {"associative-matrix oracle equivalence", oracle_equivalence},
      {"jet claims", jets},
      {"exp_spectral vs exp_series", exp_cross_check},
      {"planner minimality", planner},
      {"closed-form spot values", spot_values},
      {"CLI determinism and malformed input", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << " -- " << o.detail << " (" << fmt(secs) << " s)\n"
              << std::flush;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
