#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jbtrotter/spectral.hpp"

namespace jbtrotter {

/// g: left-nested Jordan products of exp(A_j/n).
/// f: symmetric triple-product nest with half steps exp(A_j/2n).
/// h: asymmetric triple-product nest over an odd number of elements.
enum class Scheme { kG, kF, kH };

constexpr std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::kG: return "g";
    case Scheme::kF: return "f";
    case Scheme::kH: return "h";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view text) {
  if (text == "g" || text == "G") return Scheme::kG;
  if (text == "f" || text == "F") return Scheme::kF;
  if (text == "h" || text == "H") return Scheme::kH;
  fail(ErrorKind::kInvalidInput, "unknown scheme '" + std::string(text) + "'");
}

namespace detail {

inline void check_elements(std::span<const Element> elements) {
  require(!elements.empty(), "element list must not be empty");
  for (const auto& e : elements) Element::check_same(elements.front(), e);
}

inline void check_scheme(Scheme scheme, std::span<const Element> elements) {
  check_elements(elements);
  if (scheme == Scheme::kH)
    require(elements.size() >= 3 && elements.size() % 2 == 1,
            "scheme h needs an odd number (>= 3) of elements");
}

}  // namespace detail

/// One step of the scheme with step size 1/n, before raising to the n-th
/// Jordan power.
inline Element trotter_step(Scheme scheme, std::span<const Element> elements, std::uint64_t n) {
  detail::check_scheme(scheme, elements);
  require(n >= 1, "n must be >= 1");
  const double t = 1.0 / static_cast<double>(n);
  switch (scheme) {
    case Scheme::kG: {
      Element d = exp_spectral(t * elements[0]);
      for (std::size_t j = 1; j < elements.size(); ++j)
        d = jordan_mul(d, exp_spectral(t * elements[j]));
      return d;
    }
    case Scheme::kF: {
      Element h = exp_spectral(t * elements[0]);
      for (std::size_t j = 1; j < elements.size(); ++j) {
        const Element half = exp_spectral((0.5 * t) * elements[j]);
        h = triple_product(half, h, half);
      }
      return h;
    }
    case Scheme::kH: {
      Element h = triple_product(exp_spectral(t * elements[1]), exp_spectral(t * elements[0]),
                                 exp_spectral(t * elements[2]));
      for (std::size_t k = 3; k + 1 < elements.size(); k += 2)
        h = triple_product(exp_spectral(t * elements[k]), h, exp_spectral(t * elements[k + 1]));
      return h;
    }
  }
  return elements[0];
}

inline Element approximant(Scheme scheme, std::span<const Element> elements, std::uint64_t n) {
  return jordan_power(trotter_step(scheme, elements, n), n);
}

inline Element approx_g(std::span<const Element> elements, std::uint64_t n) {
  return approximant(Scheme::kG, elements, n);
}
inline Element approx_f(std::span<const Element> elements, std::uint64_t n) {
  return approximant(Scheme::kF, elements, n);
}
inline Element approx_h(std::span<const Element> elements, std::uint64_t n) {
  return approximant(Scheme::kH, elements, n);
}

inline Element element_sum(std::span<const Element> elements) {
  detail::check_elements(elements);
  Element s = elements[0];
  for (std::size_t j = 1; j < elements.size(); ++j) s += elements[j];
  return s;
}

/// exp(A_1 + ... + A_m).
inline Element exp_sum(std::span<const Element> elements) {
  return exp_spectral(element_sum(elements));
}

inline double measured_error(Scheme scheme, std::span<const Element> elements, std::uint64_t n) {
  return jb_norm(exp_sum(elements) - approximant(scheme, elements, n));
}

inline std::vector<double> element_norms(std::span<const Element> elements) {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(jb_norm(e));
  return out;
}

// ---- closed-form error bounds; S = sum of norms, m = number of norms ----

inline double norm_total(std::span<const double> norms) {
  double s = 0.0;
  for (double v : norms) {
    require(v >= 0.0, "norms must be non-negative");
    s += v;
  }
  return s;
}

/// S^3 e^S / (3 n^2).
inline double bound_thm31(std::span<const double> norms, std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const double s = norm_total(norms);
  const double nn = static_cast<double>(n);
  return s * s * s * std::exp(s) / (3.0 * nn * nn);
}

/// (3^(m-1) + 1) S^3 e^S / (6 n^2).
inline double bound_thm33i(std::span<const double> norms, std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const double s = norm_total(norms);
  const double nn = static_cast<double>(n);
  const double m = static_cast<double>(norms.size());
  return (std::pow(3.0, m - 1.0) + 1.0) * s * s * s * std::exp(s) / (6.0 * nn * nn);
}

/// 2 3^m S^2 e^((n+2) S / n) / n.
inline double bound_thm33ii(std::span<const double> norms, std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const double s = norm_total(norms);
  const double nn = static_cast<double>(n);
  const double m = static_cast<double>(norms.size());
  return 2.0 * std::pow(3.0, m) * s * s * std::exp((nn + 2.0) / nn * s) / nn;
}

enum class SpecialVariant { kI, kII };

/// Sharper f bounds valid in sym/herm: (i) S^3 e^S / (3n^2),
/// (ii) 2 S^2 e^((n+2) S / n) / n.
inline double bound_special(std::span<const double> norms, std::uint64_t n, SpecialVariant v) {
  require(n >= 1, "n must be >= 1");
  const double s = norm_total(norms);
  const double nn = static_cast<double>(n);
  if (v == SpecialVariant::kI) return s * s * s * std::exp(s) / (3.0 * nn * nn);
  return 2.0 * s * s * std::exp((nn + 2.0) / nn * s) / nn;
}

struct SweepRecord {
  Scheme scheme = Scheme::kG;
  std::uint64_t n = 1;
  double error = 0.0;
  std::optional<double> bound_thm31;
  std::optional<double> bound_thm33i;
  std::optional<double> bound_thm33ii;
  std::optional<double> bound_special_i;
  std::optional<double> bound_special_ii;

  /// Smallest bound present, if any.
  std::optional<double> tightest_bound() const {
    std::optional<double> best;
    for (const auto& b : {bound_thm31, bound_thm33i, bound_thm33ii, bound_special_i,
                          bound_special_ii})
      if (b && (!best || *b < *best)) best = b;
    return best;
  }
};

/// Fills the bounds that apply to `scheme` (none for h).
inline void fill_bounds(SweepRecord& r, std::span<const double> norms, bool special) {
  switch (r.scheme) {
    case Scheme::kG: r.bound_thm31 = bound_thm31(norms, r.n); break;
    case Scheme::kF:
      r.bound_thm33i = bound_thm33i(norms, r.n);
      r.bound_thm33ii = bound_thm33ii(norms, r.n);
      if (special) {
        r.bound_special_i = bound_special(norms, r.n, SpecialVariant::kI);
        r.bound_special_ii = bound_special(norms, r.n, SpecialVariant::kII);
      }
      break;
    case Scheme::kH: break;
  }
}

/// One record per n, in the order given.
inline std::vector<SweepRecord> sweep(Scheme scheme, std::span<const Element> elements,
                                      std::span<const std::uint64_t> n_list) {
  detail::check_scheme(scheme, elements);
  const Element exact = exp_sum(elements);
  const auto norms = element_norms(elements);
  const bool special = elements.front().descriptor().is_special();
  std::vector<SweepRecord> out;
  out.reserve(n_list.size());
  for (const auto n : n_list) {
    require(n >= 1, "n must be >= 1");
    SweepRecord r;
    r.scheme = scheme;
    r.n = n;
    r.error = jb_norm(exact - approximant(scheme, elements, n));
    fill_bounds(r, norms, special);
    out.push_back(r);
  }
  return out;
}

/// Errors at or below this are treated as exact (commuting input).
inline constexpr double kDegenerateError = 1e-13;

/// Negated least-squares slope of log(error) against log(n). Returns nullopt
/// when some error is at roundoff level, which happens for commuting input.
inline std::optional<double> empirical_order(std::span<const SweepRecord> records) {
  require(records.size() >= 4, "empirical_order needs >= 4 records");
  for (std::size_t i = 1; i < records.size(); ++i)
    require(records[i].n > records[i - 1].n, "records must have increasing n");
  for (const auto& r : records)
    if (!(r.error > kDegenerateError)) return std::nullopt;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(records.size());
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace jbtrotter
