#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "jbtrotter/trotter.hpp"

namespace jbtrotter {

/// Largest step count the planner will return.
inline constexpr std::uint64_t kMaxSteps = std::uint64_t{1} << 30;

enum class PlanMode { kBound, kMeasured };

struct PlanResult {
  std::uint64_t n = 1;
  double value = 0.0;                   // bound or error at n
  std::optional<double> value_before;  // same at n - 1, absent when n == 1
};

namespace detail {

/// Smallest n in [1, kMaxSteps] with f(n) <= eps for non-increasing f, or
/// nullopt if there is none.
inline std::optional<std::uint64_t> first_below(const std::function<double(std::uint64_t)>& f,
                                                double eps) {
  if (f(1) <= eps) return 1;
  std::uint64_t lo = 1, hi = 2;
  while (f(hi) > eps) {
    if (hi >= kMaxSteps) return std::nullopt;
    lo = hi;
    hi = std::min(hi * 2, kMaxSteps);
  }
  // f(lo) > eps >= f(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (f(mid) <= eps ? hi : lo) = mid;
  }
  return hi;
}

/// Smallest n with coeff / n^2 <= eps, by direct inversion.
inline std::optional<std::uint64_t> invert_inverse_square(double coeff, double eps) {
  const double guess = std::ceil(std::sqrt(coeff / eps));
  if (!(guess <= static_cast<double>(kMaxSteps))) return std::nullopt;
  auto n = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(guess));
  auto f = [&](std::uint64_t k) {
    const double kk = static_cast<double>(k);
    return coeff / (kk * kk);
  };
  while (f(n) > eps) ++n;
  while (n > 1 && f(n - 1) <= eps) --n;
  if (n > kMaxSteps) return std::nullopt;
  return n;
}

}  // namespace detail

/// The smallest applicable bound for `scheme` at n. Throws for h, which has
/// no closed-form bound.
inline double tightest_bound(Scheme scheme, std::span<const double> norms, std::uint64_t n,
                             bool special) {
  require(scheme != Scheme::kH, "scheme h has no error bound; use measured mode");
  SweepRecord r;
  r.scheme = scheme;
  r.n = n;
  fill_bounds(r, norms, special);
  return *r.tightest_bound();
}

/// Smallest n whose tightest applicable bound is <= eps.
inline PlanResult plan_min_n_bound(Scheme scheme, std::span<const double> norms, double eps,
                                   bool special = false) {
  require(eps > 0.0, "eps must be positive");
  require(!norms.empty(), "norm list must not be empty");
  require(scheme != Scheme::kH, "scheme h has no error bound; use measured mode");
  const double s = norm_total(norms);
  const double cubic = s * s * s * std::exp(s);
  const double m = static_cast<double>(norms.size());

  // Each bound is non-increasing in n, so the first n where the minimum
  // drops below eps is the smallest per-bound solution.
  std::optional<std::uint64_t> best;
  auto consider = [&](std::optional<std::uint64_t> c) {
    if (c && (!best || *c < *best)) best = c;
  };
  if (scheme == Scheme::kG) {
    consider(detail::invert_inverse_square(cubic / 3.0, eps));
  } else {
    consider(detail::invert_inverse_square((std::pow(3.0, m - 1.0) + 1.0) * cubic / 6.0, eps));
    consider(detail::first_below([&](std::uint64_t n) { return bound_thm33ii(norms, n); }, eps));
    if (special) {
      consider(detail::invert_inverse_square(cubic / 3.0, eps));
      consider(detail::first_below(
          [&](std::uint64_t n) { return bound_special(norms, n, SpecialVariant::kII); }, eps));
    }
  }
  if (!best)
    fail(ErrorKind::kCapacity, "no step count up to 2^30 meets the requested tolerance");
  PlanResult out{*best, tightest_bound(scheme, norms, *best, special), std::nullopt};
  if (*best > 1) out.value_before = tightest_bound(scheme, norms, *best - 1, special);
  return out;
}

/// Smallest n found by doubling then bisection on the measured error.
/// Assumes the error is eventually non-increasing in n.
inline PlanResult plan_min_n_measured(Scheme scheme, std::span<const Element> elements,
                                      double eps) {
  require(eps > 0.0, "eps must be positive");
  detail::check_scheme(scheme, elements);
  const Element exact = exp_sum(elements);
  auto err = [&](std::uint64_t n) {
    return jb_norm(exact - approximant(scheme, elements, n));
  };
  const auto n = detail::first_below(err, eps);
  if (!n) fail(ErrorKind::kCapacity, "no step count up to 2^30 meets the requested tolerance");
  PlanResult out{*n, err(*n), std::nullopt};
  if (*n > 1) out.value_before = err(*n - 1);
  return out;
}

}  // namespace jbtrotter
