// jbtrotter: axiom checks, Trotter error sweeps, bounds, step planning and
// Taylor-jet checks for product formulas in concrete JB-algebras.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jbtrotter/commands.hpp"

namespace {

using namespace jbtrotter;
using namespace jbtrotter::cli;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

std::vector<Scheme> parse_schemes(const std::string& s) {
  std::vector<Scheme> out;
  for (const auto& tok : split_commas(s)) {
    try {
      out.push_back(parse_scheme(tok));
    } catch (const Error& e) {
      fail(ErrorKind::kUsage, e.what());
    }
  }
  if (out.empty()) fail(ErrorKind::kUsage, "--scheme must name at least one scheme");
  return out;
}

std::vector<double> parse_norms(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split_commas(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size() || out.back() < 0.0) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::kUsage, "bad norm '" + tok + "' in --norms");
    }
  }
  return out;
}

AlgebraDescriptor parse_algebra(const std::string& s) {
  try {
    return parse_descriptor(s);
  } catch (const Error& e) {
    fail(ErrorKind::kUsage, e.what());
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("JBTROTTER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::kUsage, "JBTROTTER_SEED must be an unsigned integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-formula error analysis in JB-algebras"};
  app.require_subcommand(1);

  std::string algebra, input, schemes = "g", n_range = "1:256:x2", out_format = "csv";
  std::string output_path, mode = "bound", norms;
  double eps = 1e-4, tol = 1e-10;
  std::size_t trials = 1000, degree = kDefaultJetDegree;
  std::optional<std::uint64_t> seed;
  bool special = false;

  auto* verify = app.add_subcommand("verify-axioms", "Check Jordan and JB-norm axioms");
  verify->add_option("--algebra", algebra, "kind:dim, e.g. sym:6, herm:4, spin:8, albert")
      ->required();
  verify->add_option("--trials", trials, "Number of random pairs")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed (default $JBTROTTER_SEED or 0)");
  verify->add_option("--tol", tol, "Scaled residual tolerance");
  verify->add_option("--out", out_format, "csv or json");

  auto* sweep_cmd = app.add_subcommand("sweep", "Measured error and bounds over n");
  sweep_cmd->add_option("--input", input, "Problem instance JSON")->required();
  sweep_cmd->add_option("--scheme", schemes, "Comma list of g, f, h");
  sweep_cmd->add_option("--n", n_range, "n list or start:stop:xFACTOR");
  sweep_cmd->add_option("--out", out_format, "csv, json or plotdata");
  sweep_cmd->add_option("--output", output_path, "File prefix for plotdata");
  sweep_cmd->add_option("--seed", seed, "Accepted for symmetry; sweeps are deterministic");

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form error bounds over n");
  bounds_cmd->add_option("--input", input, "Problem instance JSON (norms taken from it)");
  bounds_cmd->add_option("--norms", norms, "Comma list of element norms");
  bounds_cmd->add_flag("--special", special, "Include sym/herm bounds with --norms");
  bounds_cmd->add_option("--scheme", schemes, "Comma list of g, f, h");
  bounds_cmd->add_option("--n", n_range, "n list or start:stop:xFACTOR");
  bounds_cmd->add_option("--out", out_format, "csv or json");

  auto* plan_cmd = app.add_subcommand("plan", "Smallest n meeting a tolerance");
  plan_cmd->add_option("--input", input, "Problem instance JSON");
  plan_cmd->add_option("--norms", norms, "Comma list of element norms (bound mode)");
  plan_cmd->add_flag("--special", special, "Include sym/herm bounds with --norms");
  plan_cmd->add_option("--scheme", schemes, "g, f or h");
  plan_cmd->add_option("--eps", eps, "Target tolerance");
  plan_cmd->add_option("--mode", mode, "bound or measured");

  auto* jets_cmd = app.add_subcommand("jets", "Taylor-coefficient checks of one Trotter step");
  jets_cmd->add_option("--input", input, "Problem instance JSON")->required();
  jets_cmd->add_option("--degree", degree, "Truncation degree (>= 3)");

  auto* demo_cmd = app.add_subcommand("demo", "Pauli walkthrough");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: usage: " << msg << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.format = parse_format(out_format);
    cfg.output_path = output_path;
    cfg.seed = seed ? *seed : default_seed();
    cfg.trials = trials;
    cfg.eps = eps;

    if (verify->parsed()) {
      if (cfg.format == OutputFormat::kPlotdata)
        fail(ErrorKind::kUsage, "verify-axioms supports csv or json");
      return cmd_verify_axioms(parse_algebra(algebra), trials, cfg.seed, tol, cfg.format,
                               std::cout);
    }
    if (sweep_cmd->parsed()) {
      cfg.schemes = parse_schemes(schemes);
      cfg.n_list = parse_n_range(n_range);
      return cmd_sweep(load_instance(input), cfg, std::cout, std::cerr);
    }
    if (bounds_cmd->parsed()) {
      cfg.schemes = parse_schemes(schemes);
      cfg.n_list = parse_n_range(n_range);
      if (input.empty() == norms.empty())
        fail(ErrorKind::kUsage, "bounds needs exactly one of --input or --norms");
      if (!input.empty()) {
        const auto inst = load_instance(input);
        return cmd_bounds(element_norms(inst.elements), inst.algebra.is_special(), cfg,
                          std::cout);
      }
      return cmd_bounds(parse_norms(norms), special, cfg, std::cout);
    }
    if (plan_cmd->parsed()) {
      const auto list = parse_schemes(schemes);
      if (list.size() != 1) fail(ErrorKind::kUsage, "plan takes a single --scheme");
      if (mode != "bound" && mode != "measured")
        fail(ErrorKind::kUsage, "--mode must be bound or measured");
      if (input.empty() == norms.empty())
        fail(ErrorKind::kUsage, "plan needs exactly one of --input or --norms");
      PlanInput in;
      if (!input.empty()) in.instance = load_instance(input);
      else in.norms = parse_norms(norms);
      in.special = special;
      return cmd_plan(in, list.front(), eps,
                      mode == "bound" ? PlanMode::kBound : PlanMode::kMeasured, std::cout);
    }
    if (jets_cmd->parsed()) {
      if (degree < 3) fail(ErrorKind::kUsage, "--degree must be >= 3");
      return cmd_jets(load_instance(input), degree, std::cout);
    }
    if (demo_cmd->parsed()) return cmd_demo(std::cout);
  } catch (const Error& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << to_string(e.kind()) << ": " << msg << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
