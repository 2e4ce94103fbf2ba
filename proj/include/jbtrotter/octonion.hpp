#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace jbtrotter {

namespace detail {

// Cayley-Dickson doubling on flat coefficient arrays:
//   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
// with R as the base case. N must be a power of two.
template <std::size_t N>
constexpr std::array<double, N> cd_conj(const std::array<double, N>& x) {
  std::array<double, N> r{};
  r[0] = x[0];
  for (std::size_t i = 1; i < N; ++i) r[i] = -x[i];
  return r;
}

template <std::size_t N>
constexpr std::array<double, N> cd_mul(const std::array<double, N>& x,
                                       const std::array<double, N>& y) {
  if constexpr (N == 1) {
    return {x[0] * y[0]};
  } else {
    constexpr std::size_t H = N / 2;
    std::array<double, H> a{}, b{}, c{}, d{};
    for (std::size_t i = 0; i < H; ++i) {
      a[i] = x[i];
      b[i] = x[H + i];
      c[i] = y[i];
      d[i] = y[H + i];
    }
    const auto ac = cd_mul<H>(a, c);
    const auto db = cd_mul<H>(cd_conj<H>(d), b);
    const auto da = cd_mul<H>(d, a);
    const auto bc = cd_mul<H>(b, cd_conj<H>(c));
    std::array<double, N> r{};
    for (std::size_t i = 0; i < H; ++i) {
      r[i] = ac[i] - db[i];
      r[H + i] = da[i] + bc[i];
    }
    return r;
  }
}

}  // namespace detail

/// Real octonion c0 + c1 e1 + ... + c7 e7, multiplied by Cayley-Dickson
/// doubling of the quaternions.
class Octonion {
 public:
  using Coeffs = std::array<double, 8>;

  constexpr Octonion() = default;
  constexpr explicit Octonion(const Coeffs& c) : c_(c) {}
  constexpr explicit Octonion(double re) { c_[0] = re; }

  /// Basis unit e_i (e_0 is the identity).
  static constexpr Octonion unit(std::size_t i) {
    Octonion o;
    o.c_[i] = 1.0;
    return o;
  }

  constexpr const Coeffs& coeffs() const { return c_; }
  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
  friend constexpr Octonion operator*(const Octonion& a, const Octonion& b) {
    return Octonion(detail::cd_mul<8>(a.c_, b.c_));
  }
  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Coeffs c_{};
};

constexpr Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

constexpr Octonion oct_conj(const Octonion& x) {
  return Octonion(detail::cd_conj<8>(x.coeffs()));
}

constexpr double oct_real_part(const Octonion& x) { return x[0]; }

/// Sum of squared coefficients; multiplicative under oct_mul.
constexpr double norm_form(const Octonion& x) {
  double s = 0.0;
  for (double v : x.coeffs()) s += v * v;
  return s;
}

/// Euclidean length of the difference, used by comparisons in tests.
inline double distance(const Octonion& x, const Octonion& y) {
  return std::sqrt(norm_form(x - y));
}

inline std::ostream& operator<<(std::ostream& os, const Octonion& x) {
  os << '(';
  for (std::size_t i = 0; i < 8; ++i) os << (i ? ", " : "") << x[i];
  return os << ')';
}

}  // namespace jbtrotter
