#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jbtrotter/dense.hpp"
#include "jbtrotter/error.hpp"
#include "jbtrotter/octonion.hpp"

namespace jbtrotter {

enum class AlgebraKind { kSym, kHerm, kSpin, kAlbert };

constexpr std::string_view to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::kSym: return "sym";
    case AlgebraKind::kHerm: return "herm";
    case AlgebraKind::kSpin: return "spin";
    case AlgebraKind::kAlbert: return "albert";
  }
  return "?";
}

/// Which concrete JB-algebra an element lives in. `dim` is the matrix side
/// for sym/herm, the vector length k for the spin factor R + R^k, and always
/// 3 for the Albert algebra.
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::kSym;
  std::size_t dim = 1;

  static AlgebraDescriptor make(AlgebraKind kind, std::size_t dim) {
    require(dim >= 1, "algebra dimension must be >= 1");
    require(kind != AlgebraKind::kAlbert || dim == 3, "albert algebra has dim 3");
    return {kind, dim};
  }

  /// sym and herm embed in an associative algebra with A o B = (AB + BA)/2.
  bool is_special() const {
    return kind == AlgebraKind::kSym || kind == AlgebraKind::kHerm;
  }

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

inline std::string to_string(const AlgebraDescriptor& d) {
  return std::string(to_string(d.kind)) + ":" + std::to_string(d.dim);
}

/// Parses "kind:dim" ("albert" alone is accepted).
inline AlgebraDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  AlgebraKind kind;
  if (name == "sym") kind = AlgebraKind::kSym;
  else if (name == "herm") kind = AlgebraKind::kHerm;
  else if (name == "spin") kind = AlgebraKind::kSpin;
  else if (name == "albert") kind = AlgebraKind::kAlbert;
  else fail(ErrorKind::kInvalidInput, "unknown algebra kind '" + std::string(name) + "'");

  if (colon == std::string_view::npos) {
    require(kind == AlgebraKind::kAlbert, "algebra '" + std::string(text) + "' needs :dim");
    return AlgebraDescriptor::make(kind, 3);
  }
  const std::string_view num = text.substr(colon + 1);
  std::size_t dim = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), dim);
  require(ec == std::errc{} && ptr == num.data() + num.size(),
          "bad algebra dimension '" + std::string(num) + "'");
  return AlgebraDescriptor::make(kind, dim);
}

/// Spin factor element s*1 + v, with (s,v) o (t,w) = (st + <v,w>, sw + tv).
struct SpinPayload {
  double s = 0.0;
  std::vector<double> v;
  friend bool operator==(const SpinPayload&, const SpinPayload&) = default;
};

/// 3x3 octonionic Hermitian matrix [[a, z, y*], [z*, b, x], [y, x*, c]].
struct AlbertPayload {
  std::array<double, 3> diag{};
  Octonion x, y, z;
  friend bool operator==(const AlbertPayload&, const AlbertPayload&) = default;
};

using OctonionMatrix3 = std::array<std::array<Octonion, 3>, 3>;

inline OctonionMatrix3 to_matrix(const AlbertPayload& p) {
  OctonionMatrix3 m;
  m[0][0] = Octonion(p.diag[0]);
  m[1][1] = Octonion(p.diag[1]);
  m[2][2] = Octonion(p.diag[2]);
  m[0][1] = p.z;
  m[1][0] = oct_conj(p.z);
  m[1][2] = p.x;
  m[2][1] = oct_conj(p.x);
  m[2][0] = p.y;
  m[0][2] = oct_conj(p.y);
  return m;
}

inline OctonionMatrix3 matmul(const OctonionMatrix3& a, const OctonionMatrix3& b) {
  OctonionMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// Reads the Hermitian part of m back into payload layout.
inline AlbertPayload from_matrix(const OctonionMatrix3& m) {
  AlbertPayload p;
  for (int i = 0; i < 3; ++i) p.diag[i] = m[i][i][0];
  p.x = 0.5 * (m[1][2] + oct_conj(m[2][1]));
  p.y = 0.5 * (m[2][0] + oct_conj(m[0][2]));
  p.z = 0.5 * (m[0][1] + oct_conj(m[1][0]));
  return p;
}

/// A member of one of the four concrete JB-algebras. Immutable value type.
class Element {
 public:
  using Payload = std::variant<RealMatrix, ComplexMatrix, SpinPayload, AlbertPayload>;

  /// Symmetry tolerance applied at construction, relative to max |entry|.
  static constexpr double kSymmetryTol = 1e-12;

  static Element sym(RealMatrix m) {
    check_self_adjoint(m);
    make_self_adjoint(m);
    const auto d = AlgebraDescriptor::make(AlgebraKind::kSym, m.dim());
    return Element(d, std::move(m));
  }

  static Element herm(ComplexMatrix m) {
    check_self_adjoint(m);
    make_self_adjoint(m);
    const auto d = AlgebraDescriptor::make(AlgebraKind::kHerm, m.dim());
    return Element(d, std::move(m));
  }

  static Element spin(double s, std::vector<double> v) {
    const auto d = AlgebraDescriptor::make(AlgebraKind::kSpin, v.size());
    return Element(d, SpinPayload{s, std::move(v)});
  }

  static Element albert(AlbertPayload p) {
    return Element(AlgebraDescriptor::make(AlgebraKind::kAlbert, 3), std::move(p));
  }

  static Element scalar(const AlgebraDescriptor& d, double s) {
    switch (d.kind) {
      case AlgebraKind::kSym: return Element(d, RealMatrix::identity(d.dim) * s);
      case AlgebraKind::kHerm: return Element(d, ComplexMatrix::identity(d.dim) * s);
      case AlgebraKind::kSpin: return Element(d, SpinPayload{s, std::vector<double>(d.dim, 0.0)});
      case AlgebraKind::kAlbert: {
        AlbertPayload p;
        p.diag = {s, s, s};
        return Element(d, p);
      }
    }
    fail(ErrorKind::kInvalidInput, "bad algebra kind");
  }

  static Element identity(const AlgebraDescriptor& d) { return scalar(d, 1.0); }
  static Element zero(const AlgebraDescriptor& d) { return scalar(d, 0.0); }

  const AlgebraDescriptor& descriptor() const { return desc_; }
  const Payload& payload() const { return payload_; }

  template <class T>
  const T& as() const { return std::get<T>(payload_); }

  friend Element operator+(const Element& a, const Element& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return add(x, y, 1.0); });
  }
  friend Element operator-(const Element& a, const Element& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return add(x, y, -1.0); });
  }
  friend Element operator*(const Element& a, double s) {
    return Element(a.desc_, std::visit([s](const auto& x) -> Payload { return scale(x, s); },
                                       a.payload_));
  }
  friend Element operator*(double s, const Element& a) { return a * s; }
  friend Element operator/(const Element& a, double s) { return a * (1.0 / s); }
  friend Element operator-(const Element& a) { return a * -1.0; }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }

  friend bool operator==(const Element&, const Element&) = default;

  friend Element jordan_mul(const Element& a, const Element& b);

 private:
  Element(AlgebraDescriptor d, Payload p) : desc_(d), payload_(std::move(p)) {}

  template <class T>
  static void check_self_adjoint(const SquareMatrix<T>& m) {
    const double tol = kSymmetryTol * std::max(1.0, max_abs(m));
    if (self_adjoint_defect(m) > tol)
      fail(ErrorKind::kSymmetry, "matrix is not self-adjoint within tolerance");
  }

  template <class T>
  static SquareMatrix<T> add(const SquareMatrix<T>& x, const SquareMatrix<T>& y, double sign) {
    SquareMatrix<T> r = x;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += sign * y.data()[i];
    return r;
  }
  static SpinPayload add(const SpinPayload& x, const SpinPayload& y, double sign) {
    SpinPayload r{x.s + sign * y.s, x.v};
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += sign * y.v[i];
    return r;
  }
  static AlbertPayload add(const AlbertPayload& x, const AlbertPayload& y, double sign) {
    AlbertPayload r;
    for (int i = 0; i < 3; ++i) r.diag[i] = x.diag[i] + sign * y.diag[i];
    r.x = x.x + sign * y.x;
    r.y = x.y + sign * y.y;
    r.z = x.z + sign * y.z;
    return r;
  }

  template <class T>
  static SquareMatrix<T> scale(const SquareMatrix<T>& x, double s) { return x * s; }
  static SpinPayload scale(const SpinPayload& x, double s) {
    SpinPayload r{x.s * s, x.v};
    for (auto& v : r.v) v *= s;
    return r;
  }
  static AlbertPayload scale(const AlbertPayload& x, double s) {
    AlbertPayload r;
    for (int i = 0; i < 3; ++i) r.diag[i] = x.diag[i] * s;
    r.x = x.x * s;
    r.y = x.y * s;
    r.z = x.z * s;
    return r;
  }

  template <class Op>
  static Element combine(const Element& a, const Element& b, Op op) {
    check_same(a, b);
    return Element(a.desc_, std::visit(
                                [&](const auto& x) -> Payload {
                                  using T = std::decay_t<decltype(x)>;
                                  return op(x, std::get<T>(b.payload_));
                                },
                                a.payload_));
  }

 public:
  static void check_same(const Element& a, const Element& b) {
    if (a.desc_ != b.desc_)
      fail(ErrorKind::kInvalidInput, "descriptor mismatch: " + to_string(a.desc_) +
                                         " vs " + to_string(b.desc_));
  }

 private:
  AlgebraDescriptor desc_;
  Payload payload_;
};

/// A o B. For sym/herm this is (AB + BA)/2.
inline Element jordan_mul(const Element& a, const Element& b) {
  Element::check_same(a, b);
  const auto& d = a.desc_;
  switch (d.kind) {
    case AlgebraKind::kSym: {
      RealMatrix p = a.as<RealMatrix>() * b.as<RealMatrix>();
      make_self_adjoint(p);
      return Element(d, std::move(p));
    }
    case AlgebraKind::kHerm: {
      ComplexMatrix p = a.as<ComplexMatrix>() * b.as<ComplexMatrix>();
      make_self_adjoint(p);
      return Element(d, std::move(p));
    }
    case AlgebraKind::kSpin: {
      const auto& x = a.as<SpinPayload>();
      const auto& y = b.as<SpinPayload>();
      SpinPayload r{x.s * y.s + std::inner_product(x.v.begin(), x.v.end(), y.v.begin(), 0.0),
                    std::vector<double>(x.v.size())};
      for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.s * y.v[i] + y.s * x.v[i];
      return Element(d, std::move(r));
    }
    case AlgebraKind::kAlbert: {
      const auto ma = to_matrix(a.as<AlbertPayload>());
      const auto mb = to_matrix(b.as<AlbertPayload>());
      const auto ab = matmul(ma, mb);
      const auto ba = matmul(mb, ma);
      OctonionMatrix3 s;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i][j] = 0.5 * (ab[i][j] + ba[i][j]);
      return Element(d, from_matrix(s));
    }
  }
  fail(ErrorKind::kInvalidInput, "bad algebra kind");
}

inline Element jordan_square(const Element& a) { return jordan_mul(a, a); }

/// {ABC} = (A o B) o C + (B o C) o A - (A o C) o B.
inline Element triple_product(const Element& a, const Element& b, const Element& c) {
  return jordan_mul(jordan_mul(a, b), c) + jordan_mul(jordan_mul(b, c), a) -
         jordan_mul(jordan_mul(a, c), b);
}

/// U_A(B) = {ABA}; equals ABA in special algebras.
inline Element quad_map(const Element& a, const Element& b) { return triple_product(a, b, a); }

/// Sum of the eigenvalues (2s for the spin factor).
inline double trace(const Element& a) {
  switch (a.descriptor().kind) {
    case AlgebraKind::kSym: {
      const auto& m = a.as<RealMatrix>();
      double t = 0.0;
      for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
      return t;
    }
    case AlgebraKind::kHerm: {
      const auto& m = a.as<ComplexMatrix>();
      double t = 0.0;
      for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i).real();
      return t;
    }
    case AlgebraKind::kSpin: return 2.0 * a.as<SpinPayload>().s;
    case AlgebraKind::kAlbert: {
      const auto& d = a.as<AlbertPayload>().diag;
      return d[0] + d[1] + d[2];
    }
  }
  return 0.0;
}

}  // namespace jbtrotter
