#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "jbtrotter/planner.hpp"
#include "test_support.hpp"

using namespace jbtrotter;

namespace {

Element sx() { return Element::sym(RealMatrix(2, {0.0, 1.0, 1.0, 0.0})); }
Element sz() { return Element::sym(RealMatrix(2, {1.0, 0.0, 0.0, -1.0})); }

}  // namespace

TEST_CASE("spot value: G, S = 1, eps = 1e-4 gives 96", "[planner]") {
  const std::vector<double> one{1.0};
  const std::vector<double> halves{0.5, 0.5};
  CHECK(plan_min_n_bound(Scheme::kG, one, 1e-4).n == 96);
  const auto r = plan_min_n_bound(Scheme::kG, halves, 1e-4);
  CHECK(r.n == 96);
  CHECK(r.value == Catch::Approx(std::exp(1.0) / (3.0 * 96 * 96)).epsilon(1e-12));
  REQUIRE(r.value_before);
  CHECK(*r.value_before > 1e-4);
  // independent closed-form inversion
  CHECK(static_cast<double>(r.n) == std::ceil(std::sqrt(std::exp(1.0) / 3e-4)));
}

TEST_CASE("large eps gives one step", "[planner]") {
  const std::vector<double> norms{0.3, 0.2};
  const auto r = plan_min_n_bound(Scheme::kG, norms, 10.0);
  CHECK(r.n == 1);
  CHECK_FALSE(r.value_before);
  CHECK(plan_min_n_bound(Scheme::kF, norms, bound_thm33i(norms, 1)).n == 1);
}

TEST_CASE("bound mode is minimal", "[planner][property]") {
  for (const bool special : {false, true})
    for (const auto scheme : {Scheme::kG, Scheme::kF})
      for (double s : {0.1, 0.5, 1.0, 2.0, 4.0})
        for (double eps : {1e-1, 1e-3, 1e-6}) {
          const std::vector<double> norms{s / 3, s / 3, s / 3};
          const auto r = plan_min_n_bound(scheme, norms, eps, special);
          INFO("S=" << s << " eps=" << eps << " scheme=" << to_string(scheme));
          CHECK(tightest_bound(scheme, norms, r.n, special) <= eps);
          CHECK(r.value == tightest_bound(scheme, norms, r.n, special));
          if (r.n > 1) CHECK(tightest_bound(scheme, norms, r.n - 1, special) > eps);
        }
}

TEST_CASE("special f uses the sharper bounds", "[planner]") {
  const std::vector<double> norms{1.0, 1.0};
  CHECK(plan_min_n_bound(Scheme::kF, norms, 1e-4, true).n <
        plan_min_n_bound(Scheme::kF, norms, 1e-4, false).n);
}

TEST_CASE("unreachable eps is a capacity error", "[planner][errors]") {
  const std::vector<double> norms{1.0};
  try {
    plan_min_n_bound(Scheme::kG, norms, 1e-300);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapacity);
  }
  try {
    plan_min_n_bound(Scheme::kF, norms, 1e-300);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapacity);
  }
}

TEST_CASE("invalid plan requests", "[planner][errors]") {
  const std::vector<double> norms{1.0}, empty;
  CHECK_THROWS_AS(plan_min_n_bound(Scheme::kH, norms, 1e-3), Error);
  CHECK_THROWS_AS(plan_min_n_bound(Scheme::kG, norms, 0.0), Error);
  CHECK_THROWS_AS(plan_min_n_bound(Scheme::kG, empty, 1e-3), Error);
}

TEST_CASE("measured mode needs no more steps than bound mode", "[planner]") {
  const std::vector<Element> pair{sx(), sz()};
  const auto norms = element_norms(pair);
  for (const auto scheme : {Scheme::kG, Scheme::kF})
    for (double eps : {1e-2, 1e-4}) {
      const auto m = plan_min_n_measured(scheme, pair, eps);
      const auto b = plan_min_n_bound(scheme, norms, eps, true);
      CHECK(m.n <= b.n);
      CHECK(m.value <= eps);
      CHECK(m.value == measured_error(scheme, pair, m.n));
      if (m.n > 1) CHECK(*m.value_before > eps);
    }
  const std::vector<Element> triple{sx(), sz(), sx() + sz()};
  const auto h = plan_min_n_measured(Scheme::kH, triple, 1e-3);
  CHECK(h.value <= 1e-3);
}

TEST_CASE("pauli pair spot plan", "[planner]") {
  const std::vector<double> norms{1.0, 1.0};
  // S = 2: smallest n with 8 e^2 / (3 n^2) <= 1e-4
  CHECK(plan_min_n_bound(Scheme::kG, norms, 1e-4).n ==
        static_cast<std::uint64_t>(std::ceil(std::sqrt(8 * std::exp(2.0) / 3e-4))));
}
