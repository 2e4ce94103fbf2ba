#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jbtrotter/random.hpp"

namespace jbtrotter {

struct AxiomResult {
  std::string name;
  double worst = 0.0;  // largest scaled residual seen
  bool passed = true;
};

struct AxiomReport {
  AlgebraDescriptor algebra;
  std::size_t trials = 0;
  double tol = 0.0;
  std::vector<AxiomResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const AxiomResult& r) { return r.passed; });
  }
};

using JordanProduct = std::function<Element(const Element&, const Element&)>;

/// Jordan identity, commutativity and the three JB norm conditions on
/// `trials` seeded pairs. Each residual is divided by its natural magnitude,
/// e.g. (1+|A|)^3 (1+|B|) for the Jordan identity. `product` replaces the
/// Jordan product, which lets tests inject a faulty one.
inline AxiomReport verify_axioms(const AlgebraDescriptor& d, std::size_t trials,
                                 std::uint64_t seed, double tol = 1e-10,
                                 const JordanProduct& product = jordan_mul) {
  require(trials >= 1, "trials must be >= 1");
  AxiomReport report{d, trials, tol,
                     {{"jordan_identity"}, {"commutativity"}, {"norm_submultiplicative"},
                      {"norm_square"}, {"norm_order"}}};
  auto record = [&](std::size_t i, double v) {
    report.results[i].worst = std::max(report.results[i].worst, v);
  };

  std::mt19937_64 rng(mix_seed(seed, 0xA410));
  std::uniform_real_distribution<double> norm_dist(0.25, 2.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const double na_target = norm_dist(rng);
    const double nb_target = norm_dist(rng);
    const Element a = random_element(d, mix_seed(seed, 2 * t), na_target);
    const Element b = random_element(d, mix_seed(seed, 2 * t + 1), nb_target);
    const double na = jb_norm(a), nb = jb_norm(b);

    const Element a2 = product(a, a);
    const Element b2 = product(b, b);
    const Element ab = product(a, b);
    const Element lhs = product(product(a2, b), a);
    const Element rhs = product(a2, product(b, a));
    record(0, jb_norm(lhs - rhs) / ((1 + na) * (1 + na) * (1 + na) * (1 + nb)));
    record(1, jb_norm(ab - product(b, a)) / ((1 + na) * (1 + nb)));
    record(2, std::max(0.0, jb_norm(ab) - na * nb) / ((1 + na) * (1 + nb)));
    const double na2 = jb_norm(a2);
    record(3, std::abs(na2 - na * na) / ((1 + na) * (1 + na)));
    record(4, std::max(0.0, na2 - jb_norm(a2 + b2)) / (1 + na * na + nb * nb));
  }
  for (auto& r : report.results) r.passed = r.worst <= tol;
  return report;
}

}  // namespace jbtrotter
