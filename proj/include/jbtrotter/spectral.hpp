#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "jbtrotter/element.hpp"

namespace jbtrotter {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
};

/// A^n by binary exponentiation with Jordan squaring. A^0 is the identity.
inline Element jordan_power(const Element& a, std::uint64_t n) {
  Element result = Element::identity(a.descriptor());
  if (n == 0) return result;
  Element base = a;
  bool first = true;
  while (true) {
    if (n & 1u) {
      result = first ? base : jordan_mul(result, base);
      first = false;
    }
    n >>= 1;
    if (n == 0) break;
    base = jordan_square(base);
  }
  return result;
}

namespace detail {

/// Coefficients of the characteristic cubic lambda^3 - T lambda^2 + S lambda - N.
struct CubicInvariants {
  double trace = 0.0;
  double quadratic = 0.0;
  double determinant = 0.0;
};

/// N(A) = abc - a n(x) - b n(y) - c n(z) + 2 re((x y) z).
inline double freudenthal_determinant(const AlbertPayload& p) {
  const auto& [a, b, c] = p.diag;
  return a * b * c - a * norm_form(p.x) - b * norm_form(p.y) - c * norm_form(p.z) +
         2.0 * oct_real_part((p.x * p.y) * p.z);
}

inline CubicInvariants albert_invariants(const AlbertPayload& p) {
  const auto& [a, b, c] = p.diag;
  return {a + b + c,
          a * b + b * c + c * a - norm_form(p.x) - norm_form(p.y) - norm_form(p.z),
          freudenthal_determinant(p)};
}

/// Real roots of lambda^3 + p lambda + q (p <= 0 for Hermitian-type input),
/// ascending, by the trigonometric formula plus one guarded Newton step.
inline std::array<double, 3> depressed_cubic_roots(double p, double q, double scale) {
  std::array<double, 3> r{0.0, 0.0, 0.0};
  const double tiny = std::numeric_limits<double>::epsilon() * scale;
  if (!(-p > tiny * tiny)) return r;
  const double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = (3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p);
  arg = std::clamp(arg, -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k) r[k] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  for (auto& x : r) {
    const double f = (x * x + p) * x + q;
    const double df = 3.0 * x * x + p;
    if (df == 0.0) continue;
    const double y = x - f / df;
    if (std::abs((y * y + p) * y + q) < std::abs(f)) x = y;
  }
  std::sort(r.begin(), r.end());
  return r;
}

inline std::array<double, 3> albert_roots(const AlbertPayload& p) {
  const double shift = (p.diag[0] + p.diag[1] + p.diag[2]) / 3.0;
  AlbertPayload b = p;
  for (auto& d : b.diag) d -= shift;
  const auto inv = albert_invariants(b);
  double scale = 0.0;
  for (double d : b.diag) scale = std::max(scale, std::abs(d));
  for (const Octonion* o : {&b.x, &b.y, &b.z})
    scale = std::max(scale, std::sqrt(norm_form(*o)));
  auto r = depressed_cubic_roots(inv.quadratic, -inv.determinant, scale);
  for (auto& x : r) x += shift;
  return r;
}

}  // namespace detail

/// Characteristic-cubic coefficients (T, S, N) of an Albert element.
inline detail::CubicInvariants cubic_invariants(const Element& a) {
  return detail::albert_invariants(a.as<AlbertPayload>());
}

inline Spectrum spectrum(const Element& a) {
  switch (a.descriptor().kind) {
    case AlgebraKind::kSym: return {jacobi_eigen(a.as<RealMatrix>()).values};
    case AlgebraKind::kHerm: {
      const auto doubled = jacobi_eigen(real_embedding(a.as<ComplexMatrix>())).values;
      Spectrum s;
      for (std::size_t k = 0; k < doubled.size(); k += 2)
        s.eigenvalues.push_back(0.5 * (doubled[k] + doubled[k + 1]));
      return s;
    }
    case AlgebraKind::kSpin: {
      const auto& p = a.as<SpinPayload>();
      double r = 0.0;
      for (double v : p.v) r += v * v;
      r = std::sqrt(r);
      return {{p.s - r, p.s + r}};
    }
    case AlgebraKind::kAlbert: {
      const auto r = detail::albert_roots(a.as<AlbertPayload>());
      return {{r.begin(), r.end()}};
    }
  }
  return {};
}

/// Spectral norm max |lambda|; |s| + |v| for the spin factor.
inline double jb_norm(const Element& a) {
  if (a.descriptor().kind == AlgebraKind::kSpin) {
    const auto& p = a.as<SpinPayload>();
    double r = 0.0;
    for (double v : p.v) r += v * v;
    return std::abs(p.s) + std::sqrt(r);
  }
  const auto s = spectrum(a);
  double m = 0.0;
  for (double l : s.eigenvalues) m = std::max(m, std::abs(l));
  return m;
}

/// exp by scaling and squaring of a 20-term Taylor sum in Jordan powers.
inline Element exp_series(const Element& a) {
  const double nrm = jb_norm(a);
  int s = 0;
  if (nrm > 0.0) s = std::max(0, static_cast<int>(std::ceil(std::log2(nrm))) + 2);
  const Element b = std::ldexp(1.0, -s) * a;
  Element term = Element::identity(a.descriptor());
  Element sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = jordan_mul(term, b) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = jordan_square(sum);
  return sum;
}

/// Minimal gap between Albert roots below which exp_spectral falls back to
/// exp_series.
inline constexpr double kAlbertGapThreshold = 1e-6;

namespace detail {

// (e^h - 1)/h, with the h -> 0 limit.
inline double exp_divided(double h) { return h == 0.0 ? 1.0 : std::expm1(h) / h; }

/// exp(A) = p(A) where p interpolates exp at the three (distinct) roots.
/// Newton form with the closest pair first keeps the divided differences
/// free of cancellation against the small gap.
inline Element albert_exp_interpolated(const Element& a, std::array<double, 3> r) {
  if (r[2] - r[1] < r[1] - r[0]) std::swap(r[0], r[2]);
  const double f1 = std::exp(r[0]);
  const double f12 = f1 * exp_divided(r[1] - r[0]);
  const double f23 = std::exp(r[1]) * exp_divided(r[2] - r[1]);
  const double f123 = (f23 - f12) / (r[2] - r[0]);
  const auto& d = a.descriptor();
  const Element u = a - Element::scalar(d, r[0]);
  const Element v = a - Element::scalar(d, r[1]);
  return Element::scalar(d, f1) + f12 * u + f123 * jordan_mul(u, v);
}

}  // namespace detail

/// exp(A) through the spectral decomposition of each family.
inline Element exp_spectral(const Element& a) {
  switch (a.descriptor().kind) {
    case AlgebraKind::kSym: {
      const auto eig = jacobi_eigen(a.as<RealMatrix>());
      return Element::sym(apply_spectral(eig, [](double x) { return std::exp(x); }));
    }
    case AlgebraKind::kHerm: {
      const auto eig = jacobi_eigen(real_embedding(a.as<ComplexMatrix>()));
      auto h = from_real_embedding(apply_spectral(eig, [](double x) { return std::exp(x); }));
      make_self_adjoint(h);
      return Element::herm(std::move(h));
    }
    case AlgebraKind::kSpin: {
      const auto& p = a.as<SpinPayload>();
      double r = 0.0;
      for (double v : p.v) r += v * v;
      r = std::sqrt(r);
      const double es = std::exp(p.s);
      if (r == 0.0) return Element::scalar(a.descriptor(), es);
      std::vector<double> v = p.v;
      const double k = es * std::sinh(r) / r;
      for (auto& x : v) x *= k;
      return Element::spin(es * std::cosh(r), std::move(v));
    }
    case AlgebraKind::kAlbert: {
      const auto r = detail::albert_roots(a.as<AlbertPayload>());
      const double gap = std::min(r[1] - r[0], r[2] - r[1]);
      if (gap < kAlbertGapThreshold) return exp_series(a);
      return detail::albert_exp_interpolated(a, r);
    }
  }
  return a;
}

}  // namespace jbtrotter
