#include <doctest.h>

#include <random>

#include "ellgen/errors.hpp"
#include "ellgen/surface_genus.hpp"
#include "ellgen/theta_psi.hpp"
#include "test_support.hpp"

using namespace ellgen;

namespace {

QYSeries poly(std::vector<Term> t, int q_max = QYSeries::kExact) {
  return QYSeries::from_terms(std::move(t), q_max);
}

// Independent construction through the Jacobi triple product:
//   psi * prod (1 - q^n)^3 = sum_k (-1)^(k+1) q^(k(k-1)/2) y^(1/2 - k)
// and prod (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2).
QYSeries triple_product_side(int q_max) {
  SeriesBuilder b(q_max);
  for (int k = -2 * q_max - 2; k <= 2 * q_max + 2; ++k) {
    const long e = static_cast<long>(k) * (k - 1) / 2;
    if (e <= q_max) b.add(static_cast<int>(e), 1 - 2 * k, (k % 2 == 0) ? -1 : 1);
  }
  return std::move(b).build();
}

QYSeries eta_cubed(int q_max) {
  SeriesBuilder b(q_max);
  for (int k = 0; k * (k + 1) / 2 <= q_max; ++k)
    b.add(k * (k + 1) / 2, 0, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("psi_series leading terms") {
  CHECK(psi_series(0) == poly({{0, -1, 1}, {0, 1, -1}}, 0));
  const QYSeries psi = psi_series(3);
  CHECK(psi.slice(1) == poly({{1, 3, 1}, {1, 1, -3}, {1, -1, 3}, {1, -3, -1}}));
  CHECK_THROWS_AS(psi_series(-1), InvalidArgument);
}

TEST_CASE("psi_series agrees with the triple product identity") {
  for (int q = 0; q <= 8; ++q) CHECK(psi_series(q) * eta_cubed(q) == triple_product_side(q));
}

TEST_CASE("psi_series equals the x^0 coefficient of the theta quotient") {
  for (int q = 0; q <= 6; ++q) CHECK(theta_quotient_jet(q)[0] == psi_series(q));
}

TEST_CASE("psi_squared") {
  const QYSeries u = psi_squared(5);
  CHECK(q0_slice(u) == poly({{0, 2, 1}, {0, 0, -2}, {0, -2, 1}}));
  for (const auto& t : u.terms()) {
    CHECK(t.l2 % 2 == 0);
    CHECK(u.coeff(t.m, -t.l2) == t.c);
  }
  CHECK(u.q_max() == 5);
}

TEST_CASE("hecke_v") {
  const QYSeries u = psi_squared(6);
  CHECK(hecke_v(u, -2, 1) == u);

  const QYSeries v2 = hecke_v(u, -2, 2);
  CHECK(v2.q_max() == 3);
  const QYSeries expect2 = poly({{0, 2, 1}, {0, 0, -2}, {0, -2, 1}}) +
                           poly({{0, 4, 1}, {0, 0, -2}, {0, -4, 1}}) * frac(1, 8);
  CHECK(q0_slice(v2) == expect2);

  const QYSeries v3 = hecke_v(u, -2, 3, 2);
  const QYSeries expect3 = poly({{0, 2, 1}, {0, 0, -2}, {0, -2, 1}}) +
                           poly({{0, 6, 1}, {0, 0, -2}, {0, -6, 1}}) * frac(1, 27);
  CHECK(q0_slice(v3) == expect3);

  CHECK_THROWS_AS(hecke_v(u, -2, 3, 3), InsufficientOrder);
  CHECK_THROWS_AS(hecke_v(u, -2, 0), InvalidArgument);
  CHECK(hecke_meta(kPsiSquaredMeta, 4) == JacobiMeta{-2, 8});
}

TEST_CASE("hecke_v on a single coefficient") {
  // phi = q^4 y^2 (l2 = 4), i = 2, weight 0:
  //   a = 1 reads c(2m, l) -> m = 2: q^2 y^2
  //   a = 2 reads c(m, l)  -> m = 4: (1/2) q^8 y^4, dropped above q^4.
  const QYSeries phi = poly({{4, 4, 1}}, 8);
  CHECK(hecke_v(phi, 0, 2) == poly({{2, 4, 1}}, 4));
  const QYSeries psi0 = poly({{1, 2, 1}}, 8);
  // a = 2: c(m, l) at m = 1 -> (1/2) q^2 y^2 ; a = 1 needs c(2m, .) -> none.
  CHECK(hecke_v(psi0, 0, 2) == poly({{2, 4, frac(1, 2)}}, 4));
}

TEST_CASE("hecke_v is linear") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const QYSeries a = ellgen::testing::random_series(rng, 6);
    const QYSeries b = ellgen::testing::random_series(rng, 6);
    const Rat s = frac(static_cast<long>(rng() % 7) - 3, 2);
    for (int i : {1, 2, 3})
      CHECK(hecke_v(a + b * s, -2, i) == hecke_v(a, -2, i) + hecke_v(b, -2, i) * s);
  }
}

TEST_CASE("jacobi_property_check") {
  for (int q = 0; q <= 5; ++q) CHECK(jacobi_property_check(psi_squared(q), kPsiSquaredMeta).passed());

  QYSeries bumped = psi_squared(4) + poly({{2, 0, 1}}, 4);
  const Report bad = jacobi_property_check(bumped, kPsiSquaredMeta);
  CHECK_FALSE(bad.passed());

  // Parity-only corruption: breaks c(m,-l) = c(m,l).
  const Report odd = jacobi_property_check(psi_squared(3) + poly({{1, 2, 1}}, 3), kPsiSquaredMeta);
  CHECK_FALSE(odd.passed());

  CHECK_FALSE(jacobi_property_check(psi_series(2), kPsiMeta).passed());  // half-integral index
  CHECK_FALSE(jacobi_property_check(poly({{-1, 0, 1}}, 2), {0, 2}).passed());
}

TEST_CASE("chi_from_genus") {
  CHECK(chi_from_genus(QYSeries::constant(1), 0) == QYSeries::constant(1));
  CHECK(chi_from_genus(ell_surface(surfaces::p2(), 2), 2) ==
        poly({{0, 0, 1}, {0, 2, 1}, {0, 4, 1}}));
  CHECK(chi_from_genus(ell_surface(surfaces::k3(), 1), 2) ==
        poly({{0, 0, 2}, {0, 2, 20}, {0, 4, 2}}));
  CHECK_THROWS_AS(chi_from_genus(poly({{-1, 0, 1}}), 2), NegativePowers);
}
