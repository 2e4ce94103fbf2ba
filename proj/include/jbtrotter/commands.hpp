#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jbtrotter/axioms.hpp"
#include "jbtrotter/io.hpp"
#include "jbtrotter/jets.hpp"
#include "jbtrotter/planner.hpp"

namespace jbtrotter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInput = 3,
  kExitVerification = 4,
  kExitCapacity = 5,
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kUsage: return kExitUsage;
    case ErrorKind::kCapacity: return kExitCapacity;
    default: return kExitInput;
  }
}

enum class OutputFormat { kCsv, kJson, kPlotdata };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  if (s == "plotdata") return OutputFormat::kPlotdata;
  fail(ErrorKind::kUsage, "--out must be csv, json or plotdata");
}

struct RunConfig {
  std::vector<Scheme> schemes{Scheme::kG};
  std::vector<std::uint64_t> n_list{1, 2, 4, 8, 16, 32, 64, 128, 256};
  double eps = 1e-4;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  OutputFormat format = OutputFormat::kCsv;
  std::string output_path;  // plotdata file prefix
  PlanMode mode = PlanMode::kBound;
  std::size_t trials = 1000;
};

/// Slack added to each bound before declaring a violation.
inline constexpr double kBoundSlack = 1e-9;

/// Scaled tolerance for the degree <= 2 jet claims.
inline constexpr double kJetTol = 1e-12;

// ------------------------------------------------------------ verify-axioms

inline int cmd_verify_axioms(const AlgebraDescriptor& algebra, std::size_t trials,
                             std::uint64_t seed, double tol, OutputFormat format,
                             std::ostream& out) {
  const auto report = verify_axioms(algebra, trials, seed, tol);
  if (format == OutputFormat::kJson) {
    json j = {{"algebra", to_string(algebra)}, {"trials", trials}, {"seed", seed},
              {"tol", tol}, {"passed", report.all_passed()}, {"axioms", json::array()}};
    for (const auto& r : report.results)
      j["axioms"].push_back({{"name", r.name}, {"worst", r.worst}, {"passed", r.passed}});
    out << j.dump(2) << '\n';
  } else {
    out << "axiom,worst_scaled_residual,tol,result\n";
    for (const auto& r : report.results)
      out << r.name << ',' << format_double(r.worst) << ',' << format_double(tol) << ','
          << (r.passed ? "pass" : "FAIL") << '\n';
  }
  return report.all_passed() ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------------- sweep

/// Order fit over the tail of a sweep: records with n >= 32 when there are
/// at least four of them, otherwise all records.
inline std::optional<double> sweep_order(std::span<const SweepRecord> records) {
  std::size_t first = 0;
  while (first < records.size() && records[first].n < 32) ++first;
  if (records.size() - first < 4) first = 0;
  if (records.size() - first < 4) return std::nullopt;
  return empirical_order(records.subspan(first));
}

inline bool bounds_hold(const SweepRecord& r) {
  const auto b = r.tightest_bound();
  return !b || r.error <= *b + kBoundSlack;
}

inline int cmd_sweep(const ProblemInstance& inst, const RunConfig& cfg, std::ostream& out,
                     std::ostream& log) {
  std::vector<std::vector<SweepRecord>> per_scheme;
  for (const auto s : cfg.schemes) per_scheme.push_back(sweep(s, inst.elements, cfg.n_list));

  bool ok = true;
  for (const auto& recs : per_scheme)
    for (const auto& r : recs) ok = ok && bounds_hold(r);

  auto order_text = [](const std::optional<double>& o) {
    return o ? format_double(*o) : std::string("commuting");
  };

  switch (cfg.format) {
    case OutputFormat::kCsv: {
      std::vector<SweepRecord> all;
      for (const auto& recs : per_scheme) all.insert(all.end(), recs.begin(), recs.end());
      write_csv(out, all);
      for (std::size_t i = 0; i < per_scheme.size(); ++i)
        log << "order," << to_string(cfg.schemes[i]) << ','
            << order_text(sweep_order(per_scheme[i])) << '\n';
      break;
    }
    case OutputFormat::kJson: {
      json j = {{"label", inst.label}, {"algebra", to_string(inst.algebra)},
                {"records", json::array()}, {"orders", json::object()}};
      for (std::size_t i = 0; i < per_scheme.size(); ++i) {
        for (const auto& r : per_scheme[i]) j["records"].push_back(record_to_json(r));
        const auto o = sweep_order(per_scheme[i]);
        j["orders"][std::string(to_string(cfg.schemes[i]))] = o ? json(*o) : json(nullptr);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kPlotdata: {
      for (std::size_t i = 0; i < per_scheme.size(); ++i) {
        if (cfg.output_path.empty()) {
          if (i > 0) out << "\n\n";
          write_plotdata(out, per_scheme[i]);
        } else {
          const std::string path =
              cfg.output_path + "." + std::string(to_string(cfg.schemes[i])) + ".dat";
          std::ofstream f(path);
          if (!f) fail(ErrorKind::kInvalidInput, "cannot write '" + path + "'");
          write_plotdata(f, per_scheme[i]);
          out << path << '\n';
        }
      }
      break;
    }
  }
  if (!ok) log << "error: verification: measured error exceeds a bound\n";
  return ok ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------- bounds

/// Bound columns only; the error field is left empty.
inline int cmd_bounds(std::span<const double> norms, bool special, const RunConfig& cfg,
                      std::ostream& out) {
  std::vector<SweepRecord> rows;
  for (const auto s : cfg.schemes)
    for (const auto n : cfg.n_list) {
      SweepRecord r;
      r.scheme = s;
      r.n = n;
      fill_bounds(r, norms, special);
      rows.push_back(r);
    }
  if (cfg.format == OutputFormat::kJson) {
    json j = json::array();
    for (const auto& r : rows) {
      auto rj = record_to_json(r);
      rj.erase("error");
      j.push_back(rj);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << kCsvHeader << '\n';
  for (const auto& r : rows)
    out << to_string(r.scheme) << ',' << r.n << ",," << format_optional(r.bound_thm31) << ','
        << format_optional(r.bound_thm33i) << ',' << format_optional(r.bound_thm33ii) << ','
        << format_optional(r.bound_special_i) << ',' << format_optional(r.bound_special_ii)
        << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------- plan

struct PlanInput {
  std::optional<ProblemInstance> instance;
  std::vector<double> norms;  // used when instance is absent
  bool special = false;
};

inline int cmd_plan(const PlanInput& in, Scheme scheme, double eps, PlanMode mode,
                    std::ostream& out) {
  if (!(eps > 0.0)) fail(ErrorKind::kUsage, "--eps must be positive");
  PlanResult r;
  if (mode == PlanMode::kMeasured) {
    if (!in.instance) fail(ErrorKind::kUsage, "measured mode needs --input");
    r = plan_min_n_measured(scheme, in.instance->elements, eps);
  } else {
    const bool special = in.instance ? in.instance->algebra.is_special() : in.special;
    const auto norms = in.instance ? element_norms(in.instance->elements) : in.norms;
    if (norms.empty()) fail(ErrorKind::kUsage, "bound mode needs --input or --norms");
    r = plan_min_n_bound(scheme, norms, eps, special);
  }
  out << "scheme,mode,eps,n_min,value_at_n_min,value_at_n_min_minus_1\n"
      << to_string(scheme) << ',' << (mode == PlanMode::kBound ? "bound" : "measured") << ','
      << format_double(eps) << ',' << r.n << ',' << format_double(r.value) << ','
      << format_optional(r.value_before) << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------- jets

struct JetRow {
  std::string name;
  double low_residual = 0.0;  // through degree 2 (degree 1 for UG)
  double high_value = 0.0;    // degree-3 residual (degree-3 coefficient for UG)
  double tol = 0.0;
  bool passed = true;
};

/// Checks that the single-step D and H jets agree with I + tS + t^2 S^2/2
/// through degree 2 and that U(G) - 1 vanishes through degree 1.
inline std::vector<JetRow> jet_claims(std::span<const Element> elements,
                                      std::size_t degree = kDefaultJetDegree) {
  require(elements.size() >= 2, "jet claims need >= 2 elements");
  require(degree >= 3, "jet claims need degree >= 3");
  double s = 0.0;
  for (double v : element_norms(elements)) s += v;
  const double tol = kJetTol * (1.0 + s) * (1.0 + s);
  const Jet reference = second_order_reference(elements, degree);
  const Jet exact = jet_exp(element_sum(elements), degree);

  std::vector<JetRow> rows;
  for (const auto& [name, jet] : {std::pair{"D", build_D_jet(elements, degree)},
                                  std::pair{"H", build_H_jet(elements, degree)}}) {
    JetRow r{name, residual(jet, reference, 2), residual(jet, exact, 3), tol};
    r.passed = r.low_residual <= tol;
    rows.push_back(r);
  }
  const Jet ug = build_UG_jet(elements, degree);
  const Jet zero = Jet::constant(Element::zero(ug.descriptor()), degree);
  JetRow r{"UG", residual(ug, zero, 1), coefficient_norm(ug, 3), tol};
  r.passed = r.low_residual <= tol;
  rows.push_back(r);
  return rows;
}

inline int cmd_jets(const ProblemInstance& inst, std::size_t degree, std::ostream& out) {
  if (inst.elements.size() < 2) fail(ErrorKind::kInvalidInput, "jets needs >= 2 elements");
  const auto rows = jet_claims(inst.elements, degree);
  out << "jet,low_degree_residual,high_degree_value,tol,result\n";
  bool ok = true;
  for (const auto& r : rows) {
    out << r.name << ',' << format_double(r.low_residual) << ',' << format_double(r.high_value)
        << ',' << format_double(r.tol) << ',' << (r.passed ? "pass" : "FAIL") << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerification;
}

// --------------------------------------------------------------------- demo

inline Element pauli_x() { return Element::sym(RealMatrix(2, {0.0, 1.0, 1.0, 0.0})); }
inline Element pauli_z() { return Element::sym(RealMatrix(2, {1.0, 0.0, 0.0, -1.0})); }

inline ProblemInstance pauli_instance() {
  return {AlgebraDescriptor::make(AlgebraKind::kSym, 2), {pauli_x(), pauli_z()}, "pauli"};
}

inline ProblemInstance pauli_triple_instance() {
  return {AlgebraDescriptor::make(AlgebraKind::kSym, 2),
          {pauli_x(), pauli_z(), pauli_x() + pauli_z()},
          "pauli-triple"};
}

inline int cmd_demo(std::ostream& out) {
  int status = kExitOk;
  auto merge = [&](int code) {
    if (code != kExitOk) status = code;
  };
  const auto pair = pauli_instance();
  const auto triple = pauli_triple_instance();

  out << "# Pauli pair sigma_x, sigma_z in sym:2\n\n## axioms (sym:2, 200 trials, seed 2024)\n";
  merge(cmd_verify_axioms(pair.algebra, 200, 2024, 1e-10, OutputFormat::kCsv, out));

  RunConfig cfg;
  cfg.schemes = {Scheme::kG, Scheme::kF};
  out << "\n## sweep g,f over n = 1:256:x2\n";
  merge(cmd_sweep(pair, cfg, out, out));

  cfg.schemes = {Scheme::kH};
  cfg.n_list = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  out << "\n## sweep h on (sigma_x, sigma_z, sigma_x + sigma_z) over n = 1:1024:x2\n";
  merge(cmd_sweep(triple, cfg, out, out));

  out << "\n## jet claims\n";
  merge(cmd_jets(pair, kDefaultJetDegree, out));

  out << "\n## plan, eps = 1e-4\n";
  PlanInput in{pair, {}, true};
  merge(cmd_plan(in, Scheme::kG, 1e-4, PlanMode::kBound, out));
  merge(cmd_plan(in, Scheme::kG, 1e-4, PlanMode::kMeasured, out));
  merge(cmd_plan(in, Scheme::kF, 1e-4, PlanMode::kBound, out));
  merge(cmd_plan(in, Scheme::kF, 1e-4, PlanMode::kMeasured, out));
  return status;
}

}  // namespace jbtrotter::cli
