#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "jbtrotter/trotter.hpp"

namespace jbtrotter {

inline constexpr std::size_t kDefaultJetDegree = 3;

/// Truncated power series c_0 + c_1 t + ... + c_K t^K in a scalar step
/// parameter t. In the Trotter builders below t stands for 1/n.
class Jet {
 public:
  explicit Jet(std::vector<Element> coeffs) : c_(std::move(coeffs)) {
    require(c_.size() >= 2, "jet degree must be >= 1");
    for (const auto& e : c_) Element::check_same(c_.front(), e);
  }

  /// The constant jet x + 0 t + ... .
  static Jet constant(const Element& x, std::size_t degree) {
    std::vector<Element> c(degree + 1, Element::zero(x.descriptor()));
    c[0] = x;
    return Jet(std::move(c));
  }

  std::size_t degree() const { return c_.size() - 1; }
  const AlgebraDescriptor& descriptor() const { return c_.front().descriptor(); }
  const Element& operator[](std::size_t k) const { return c_[k]; }
  std::span<const Element> coeffs() const { return c_; }

  friend Jet operator+(const Jet& p, const Jet& q) {
    check_compatible(p, q);
    std::vector<Element> c;
    for (std::size_t k = 0; k <= p.degree(); ++k) c.push_back(p[k] + q[k]);
    return Jet(std::move(c));
  }
  friend Jet operator-(const Jet& p, const Jet& q) {
    check_compatible(p, q);
    std::vector<Element> c;
    for (std::size_t k = 0; k <= p.degree(); ++k) c.push_back(p[k] - q[k]);
    return Jet(std::move(c));
  }

  /// Sum of c_k t^k.
  Element evaluate(double t) const {
    Element acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * t + c_[k];
    return acc;
  }

  static void check_compatible(const Jet& p, const Jet& q) {
    require(p.degree() == q.degree(), "jet degree mismatch");
    Element::check_same(p[0], q[0]);
  }

 private:
  std::vector<Element> c_;
};

/// exp(tA) truncated: coefficients A^k / k!.
inline Jet jet_exp(const Element& a, std::size_t degree = kDefaultJetDegree) {
  require(degree >= 1, "jet degree must be >= 1");
  std::vector<Element> c{Element::identity(a.descriptor())};
  for (std::size_t k = 1; k <= degree; ++k)
    c.push_back(jordan_mul(c.back(), a) / static_cast<double>(k));
  return Jet(std::move(c));
}

/// Cauchy product with Jordan-multiplied coefficients, truncated.
inline Jet jet_jordan_mul(const Jet& p, const Jet& q) {
  Jet::check_compatible(p, q);
  const std::size_t K = p.degree();
  std::vector<Element> c;
  for (std::size_t k = 0; k <= K; ++k) {
    Element s = jordan_mul(p[0], q[k]);
    for (std::size_t i = 1; i <= k; ++i) s += jordan_mul(p[i], q[k - i]);
    c.push_back(std::move(s));
  }
  return Jet(std::move(c));
}

/// {pqr} = (p o q) o r + (q o r) o p - (p o r) o q on jets.
inline Jet jet_triple(const Jet& p, const Jet& q, const Jet& r) {
  return jet_jordan_mul(jet_jordan_mul(p, q), r) + jet_jordan_mul(jet_jordan_mul(q, r), p) -
         jet_jordan_mul(jet_jordan_mul(p, r), q);
}

/// Single g step as a jet: left-nested exp(t A_1) o ... o exp(t A_m).
inline Jet build_D_jet(std::span<const Element> elements, std::size_t degree = kDefaultJetDegree) {
  require(elements.size() >= 2, "D jet needs >= 2 elements");
  detail::check_elements(elements);
  Jet d = jet_exp(elements[0], degree);
  for (std::size_t j = 1; j < elements.size(); ++j)
    d = jet_jordan_mul(d, jet_exp(elements[j], degree));
  return d;
}

/// Single f step as a jet: innermost exp(t A_1), wrapped by
/// {exp(t A_j / 2) . exp(t A_j / 2)} for j = 2..m.
inline Jet build_H_jet(std::span<const Element> elements, std::size_t degree = kDefaultJetDegree) {
  require(elements.size() >= 2, "H jet needs >= 2 elements");
  detail::check_elements(elements);
  Jet h = jet_exp(elements[0], degree);
  for (std::size_t j = 1; j < elements.size(); ++j) {
    const Jet half = jet_exp(0.5 * elements[j], degree);
    h = jet_triple(half, h, half);
  }
  return h;
}

/// U(G) - 1 with G = exp(t sum A_j) and
/// U = U_{exp(-t A_1/2)} U_{exp(-t A_2/2)} ... U_{exp(-t A_m/2)};
/// the rightmost map acts first.
inline Jet build_UG_jet(std::span<const Element> elements, std::size_t degree = kDefaultJetDegree) {
  detail::check_elements(elements);
  Jet g = jet_exp(element_sum(elements), degree);
  for (std::size_t j = elements.size(); j-- > 0;) {
    const Jet u = jet_exp(-0.5 * elements[j], degree);
    g = jet_triple(u, g, u);
  }
  return g - Jet::constant(Element::identity(g.descriptor()), degree);
}

/// I + t S + t^2 S^2 / 2 padded with zeros, S = sum A_j.
inline Jet second_order_reference(std::span<const Element> elements,
                                  std::size_t degree = kDefaultJetDegree) {
  const Element s = element_sum(elements);
  std::vector<Element> c{Element::identity(s.descriptor()), s, 0.5 * jordan_square(s)};
  c.resize(degree + 1, Element::zero(s.descriptor()));
  return Jet(std::move(c));
}

/// max over k <= through_degree of |p_k - ref_k|.
inline double residual(const Jet& p, const Jet& reference, std::size_t through_degree) {
  Jet::check_compatible(p, reference);
  require(through_degree <= p.degree(), "through_degree exceeds jet degree");
  double worst = 0.0;
  for (std::size_t k = 0; k <= through_degree; ++k)
    worst = std::max(worst, jb_norm(p[k] - reference[k]));
  return worst;
}

/// Norm of the single coefficient at `degree`.
inline double coefficient_norm(const Jet& p, std::size_t degree) {
  require(degree <= p.degree(), "degree exceeds jet degree");
  return jb_norm(p[degree]);
}

}  // namespace jbtrotter
