#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "jbtrotter/error.hpp"

namespace jbtrotter {

/// Square row-major matrix over T (double or std::complex<double>).
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T{}) {}
  SquareMatrix(std::size_t n, std::vector<T> data) : n_(n), a_(std::move(data)) {
    require(a_.size() == n * n, "matrix data length must be n*n");
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const T> data() const { return a_; }
  std::span<T> data() { return a_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  SquareMatrix& operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, double s) { return a *= s; }
  friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= s; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    const std::size_t n = x.n_;
    SquareMatrix z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T xik = x(i, k);
        for (std::size_t j = 0; j < n; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

inline double conj_if(double x) { return x; }
inline std::complex<double> conj_if(std::complex<double> x) { return std::conj(x); }

/// Conjugate transpose (plain transpose for real matrices).
template <class T>
SquareMatrix<T> adjoint(const SquareMatrix<T>& m) {
  SquareMatrix<T> r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(j, i) = conj_if(m(i, j));
  return r;
}

/// Largest |m(i,j) - conj(m(j,i))|.
template <class T>
double self_adjoint_defect(const SquareMatrix<T>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - conj_if(m(j, i))));
  return worst;
}

template <class T>
double max_abs(const SquareMatrix<T>& m) {
  double worst = 0.0;
  for (const auto& v : m.data()) worst = std::max(worst, std::abs(v));
  return worst;
}

template <class T>
double frobenius(const SquareMatrix<T>& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

/// Replaces m by (m + m^*)/2.
template <class T>
void make_self_adjoint(SquareMatrix<T>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    m(i, i) = T{std::real(m(i, i))};
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const T v = 0.5 * (m(i, j) + conj_if(m(j, i)));
      m(i, j) = v;
      m(j, i) = conj_if(v);
    }
  }
}

/// Real [[X, -Y], [Y, X]] for H = X + iY. Symmetric iff H is Hermitian, and
/// carries each eigenvalue of H twice.
inline RealMatrix real_embedding(const ComplexMatrix& h) {
  const std::size_t d = h.dim();
  RealMatrix m(2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double x = h(i, j).real(), y = h(i, j).imag();
      m(i, j) = x;
      m(i, d + j) = -y;
      m(d + i, j) = y;
      m(d + i, d + j) = x;
    }
  return m;
}

/// Inverse of real_embedding, read from the left block column.
inline ComplexMatrix from_real_embedding(const RealMatrix& m) {
  const std::size_t d = m.dim() / 2;
  ComplexMatrix h(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h(i, j) = {m(i, j), m(d + i, j)};
  return h;
}

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k pairs with values[k]
};

/// Cyclic Jacobi on a real symmetric matrix. Sweeps until the off-diagonal
/// Frobenius norm drops to rel_tol * ||A||_F.
inline SymmetricEigen jacobi_eigen(RealMatrix a, double rel_tol = 1e-14,
                                   int max_sweeps = 100) {
  const std::size_t n = a.dim();
  RealMatrix v = RealMatrix::identity(n);
  const double scale = frobenius(a);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= rel_tol * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), RealMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// V diag(f(lambda)) V^T for a symmetric eigendecomposition.
template <class F>
RealMatrix apply_spectral(const SymmetricEigen& eig, F&& f) {
  const std::size_t n = eig.values.size();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(eig.values[k]);
  RealMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(i, k) * fv[k] * eig.vectors(j, k);
      r(i, j) = s;
      r(j, i) = s;
    }
  return r;
}

}  // namespace jbtrotter
