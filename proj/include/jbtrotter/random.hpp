#pragma once

#include <cstdint>
#include <random>

#include "jbtrotter/spectral.hpp"

namespace jbtrotter {

/// splitmix64 finalizer; derives independent per-sample seeds from one
/// user seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Element with standard-normal entries, rescaled to jb_norm == target_norm.
/// Deterministic per (descriptor, seed).
inline Element random_element(const AlgebraDescriptor& d, std::uint64_t seed,
                              double target_norm) {
  require(target_norm > 0.0, "target_norm must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] { return normal(rng); };

  Element e = Element::zero(d);
  switch (d.kind) {
    case AlgebraKind::kSym: {
      RealMatrix m(d.dim);
      for (auto& v : m.data()) v = draw();
      make_self_adjoint(m);
      e = Element::sym(std::move(m));
      break;
    }
    case AlgebraKind::kHerm: {
      ComplexMatrix m(d.dim);
      for (auto& v : m.data()) {
        const double re = draw();
        v = {re, draw()};
      }
      make_self_adjoint(m);
      e = Element::herm(std::move(m));
      break;
    }
    case AlgebraKind::kSpin: {
      const double s = draw();
      std::vector<double> v(d.dim);
      for (auto& x : v) x = draw();
      e = Element::spin(s, std::move(v));
      break;
    }
    case AlgebraKind::kAlbert: {
      AlbertPayload p;
      for (auto& x : p.diag) x = draw();
      for (Octonion* o : {&p.x, &p.y, &p.z})
        for (std::size_t i = 0; i < 8; ++i) (*o)[i] = draw();
      e = Element::albert(p);
      break;
    }
  }
  const double nrm = jb_norm(e);
  if (nrm == 0.0) return Element::scalar(d, target_norm);
  return e * (target_norm / nrm);
}

}  // namespace jbtrotter
