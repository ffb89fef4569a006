#include "ellgen/theta_psi.hpp"

#include <cmath>
#include <string>

#include "ellgen/errors.hpp"

namespace ellgen {
namespace {

// sum_{j>=0} q^(n j) up to q^q_max.
QYSeries geometric(int n, int q_max) {
  SeriesBuilder b(q_max);
  for (int e = 0; e <= q_max; e += n) b.add(e, 0, 1);
  return std::move(b).build();
}

std::string at(int m, int l2) {
  return "(m=" + std::to_string(m) + ", l2=" + std::to_string(l2) + ")";
}

// Exact square root of a nonnegative integer, if any.
std::optional<long> exact_sqrt(long v) {
  if (v < 0) return std::nullopt;
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) return std::nullopt;
  return s;
}

}  // namespace

QYSeries psi_series(int q_max) {
  if (q_max < 0) throw InvalidArgument("psi_series: q_max must be >= 0");
  QYSeries psi = QYSeries::from_terms({{0, -1, 1}, {0, 1, -1}}, q_max);
  for (int n = 1; n <= q_max; ++n) {
    const QYSeries num = QYSeries::from_terms({{0, 0, 1}, {n, 2, -1}}) *
                         QYSeries::from_terms({{0, 0, 1}, {n, -2, -1}});
    const QYSeries g = geometric(n, q_max);
    psi = psi * num * (g * g);
  }
  return psi;
}

QYSeries psi_squared(int q_max) {
  const QYSeries psi = psi_series(q_max);
  return psi * psi;
}

QYSeries hecke_v(const QYSeries& phi, int weight, int i, std::optional<int> out_q_max) {
  if (i < 1) throw InvalidArgument("hecke_v: i must be >= 1");
  if (!phi.is_zero() && phi.q_min() < 0)
    throw InvalidArgument("hecke_v: input has negative q-exponents");
  int bound = QYSeries::kExact;
  if (!phi.exact()) bound = phi.q_max() / i;
  if (out_q_max) {
    const long need = static_cast<long>(*out_q_max) * i;
    if (!phi.exact() && need > phi.q_max())
      throw InsufficientOrder(phi.q_max(), static_cast<int>(need));
    bound = *out_q_max;
  }

  SeriesBuilder out(bound);
  for (int a = 1; a <= i; ++a) {
    if (i % a != 0) continue;
    const Rat w = rat_pow(a, weight - 1);
    for (const auto& t : phi.terms()) {
      // t holds c(m i / a, l); recover m.
      const long ma = static_cast<long>(t.m) * a;
      if (ma % i != 0) continue;
      const long m = ma / i;
      if (a * m > bound) continue;
      out.add(static_cast<int>(a * m), a * t.l2, w * t.c);
    }
  }
  return std::move(out).build();
}

Report jacobi_property_check(const QYSeries& phi, JacobiMeta meta) {
  Report rep{"jacobi(k=" + std::to_string(meta.weight) + ", 2r=" + std::to_string(meta.index2) +
                 ")",
             {}};
  if (meta.index2 % 2 != 0) {
    rep.fail("half-integral index is not supported by the coefficient check");
    return rep;
  }
  if (!phi.is_zero() && phi.q_min() < 0) {
    rep.fail("negative q-exponent " + std::to_string(phi.q_min()) + " in a weak Jacobi form");
    return rep;
  }
  const long r = meta.index2 / 2;
  const int top = phi.exact() ? phi.top_order() : phi.q_max();
  const int sign = meta.weight % 2 == 0 ? 1 : -1;

  for (const auto& t : phi.terms()) {
    if (t.l2 % 2 != 0) {
      rep.fail("half-integral y-exponent at " + at(t.m, t.l2));
      continue;
    }
    // Parity.
    const Rat mirrored = phi.coeff(t.m, -t.l2);
    if (mirrored != sign * t.c)
      rep.fail("parity " + at(t.m, t.l2) + ": " + to_string(t.c) + " vs mirror " +
               to_string(mirrored));

    // Discriminant dependence, only for r >= 1 and only against partners
    // whose q-exponent lies in the computed window.
    if (r < 1) continue;
    const long l = t.l2 / 2;
    const long disc = 4 * r * t.m - l * l;
    const long period = 2 * r;
    for (int m2 = 0; m2 <= top; ++m2) {
      const auto s = exact_sqrt(4 * r * m2 - disc);
      if (!s) continue;
      for (long l2 : {*s, -*s}) {
        if (((l2 - l) % period + period) % period != 0) continue;
        const Rat other = phi.coeff(m2, static_cast<int>(2 * l2));
        if (other != t.c)
          rep.fail("discriminant " + std::to_string(disc) + ": " + at(t.m, t.l2) + " = " +
                   to_string(t.c) + " but " + at(m2, static_cast<int>(2 * l2)) + " = " +
                   to_string(other));
        if (*s == 0) break;
      }
    }
  }
  return rep;
}

QYSeries chi_from_genus(const QYSeries& genus, int dim) {
  return shift(q0_slice(genus), 0, dim);
}

}  // namespace ellgen
