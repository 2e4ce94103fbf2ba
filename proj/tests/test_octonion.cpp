#include <catch_amalgamated.hpp>

#include <random>

#include "jbtrotter/octonion.hpp"

using namespace jbtrotter;
using Catch::Approx;

namespace {

Octonion random_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = n(rng);
  return o;
}

double max_diff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("octonion unit and basis squares", "[octonion]") {
  std::mt19937_64 rng(1);
  const Octonion x = random_octonion(rng);
  CHECK(oct_mul(Octonion::unit(0), x) == x);
  CHECK(oct_mul(x, Octonion::unit(0)) == x);
  for (std::size_t i = 1; i < 8; ++i) {
    const Octonion sq = oct_mul(Octonion::unit(i), Octonion::unit(i));
    CHECK(sq == Octonion(-1.0));
  }
}

TEST_CASE("octonion basis units anticommute and multiply to units", "[octonion]") {
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j) {
      if (i == j) continue;
      const Octonion ij = Octonion::unit(i) * Octonion::unit(j);
      const Octonion ji = Octonion::unit(j) * Octonion::unit(i);
      CHECK(ij == -ji);
      CHECK(norm_form(ij) == 1.0);
      CHECK(oct_real_part(ij) == 0.0);
    }
}

TEST_CASE("octonion conjugation", "[octonion]") {
  CHECK(oct_conj(Octonion(1.0)) == Octonion(1.0));
  CHECK(oct_conj(Octonion::unit(3)) == -Octonion::unit(3));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Octonion x = random_octonion(rng);
    CHECK(oct_conj(oct_conj(x)) == x);
    CHECK(max_diff(x * oct_conj(x), Octonion(norm_form(x))) <= 1e-13 * norm_form(x));
    CHECK(max_diff(oct_conj(x) * x, Octonion(norm_form(x))) <= 1e-13 * norm_form(x));
  }
}

TEST_CASE("octonion real part", "[octonion]") {
  CHECK(oct_real_part(Octonion(1.0)) == 1.0);
  CHECK(oct_real_part(Octonion::unit(5)) == 0.0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    CHECK(oct_real_part(x * y) == Approx(oct_real_part(y * x)).margin(1e-13));
  }
}

TEST_CASE("octonion norm form", "[octonion]") {
  CHECK(norm_form(Octonion()) == 0.0);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) CHECK(norm_form(random_octonion(rng)) > 0.0);
}

TEST_CASE("octonion composition property", "[octonion][property]") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    const double lhs = norm_form(x * y);
    const double rhs = norm_form(x) * norm_form(y);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("octonion alternativity and Moufang identity", "[octonion][property]") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    const double nx = std::sqrt(norm_form(x)), ny = std::sqrt(norm_form(y)),
                 nz = std::sqrt(norm_form(z));
    CHECK(max_diff(x * (x * y), (x * x) * y) <= 1e-12 * nx * nx * ny);
    CHECK(max_diff((y * x) * x, y * (x * x)) <= 1e-12 * nx * nx * ny);
    CHECK(max_diff((x * y) * (z * x), x * ((y * z) * x)) <= 1e-12 * nx * nx * ny * nz);
  }
}

TEST_CASE("octonions are not associative", "[octonion]") {
  bool found = false;
  for (std::size_t a = 1; a < 8 && !found; ++a)
    for (std::size_t b = 1; b < 8 && !found; ++b)
      for (std::size_t c = 1; c < 8 && !found; ++c) {
        const Octonion ea = Octonion::unit(a), eb = Octonion::unit(b), ec = Octonion::unit(c);
        found = !((ea * eb) * ec == ea * (eb * ec));
      }
  CHECK(found);
}
