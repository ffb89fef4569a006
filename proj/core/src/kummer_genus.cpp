#include "ellgen/kummer_genus.hpp"

#include <string>

#include "ellgen/errors.hpp"

namespace ellgen {
namespace {

JacobiMeta kummer_meta(int n) { return {0, 2 * (n - 1)}; }

void check_integral(const QYSeries& s, const std::string& what, Report& rep) {
  for (const auto& t : s.terms())
    if (!is_integer(t.c)) {
      rep.fail(what + ": non-integral coefficient " + to_string(t.c) + " at (m=" +
               std::to_string(t.m) + ", l2=" + std::to_string(t.l2) + ")");
      return;
    }
  if (!s.is_zero() && s.q_min() < 0) rep.fail(what + ": negative q-exponent survives");
}

}  // namespace

const char* to_string(KummerRoute r) noexcept {
  switch (r) {
    case KummerRoute::hecke:
      return "hecke";
    case KummerRoute::hilbert:
      return "hilbert";
    case KummerRoute::chi_closed:
      return "chi";
  }
  return "?";
}

KummerResult kummer_hecke(int n, int q_max, int hecke_weight) {
  if (n < 1) throw InvalidArgument("kummer_hecke: n must be >= 1");
  if (q_max < 0) throw InvalidArgument("kummer_hecke: q_max must be >= 0");
  const QYSeries u = psi_squared(n * q_max);
  const QYSeries image = hecke_v(u, hecke_weight, n, q_max) * rat_pow(n, 4);
  QYSeries genus = div_exact(image, psi_squared(q_max));
  return {n, std::move(genus), kummer_meta(n), KummerRoute::hecke};
}

std::vector<KummerResult> kummer_via_hilbert(const SurfaceOracle& oracle, int p_max, int q_max) {
  const SurfaceSpec& spec = oracle.spec();
  if (spec.c1sq == 0) throw ZeroC1Sq();
  if (p_max < 1) throw InvalidArgument("kummer_via_hilbert: p_max must be >= 1");

  auto log_at = [&](int t) { return hilbert_log_twisted(oracle, {p_max, q_max, t}); };
  // ln is quadratic in t, so the symmetric second difference is d^2/dt^2.
  const PSeries second = log_at(1) + log_at(-1) - log_at(0) * Rat(2);
  const PSeries scaled = p_pdp2(second) * frac(1, spec.c1sq);

  const QYSeries u = psi_squared(q_max);
  std::vector<KummerResult> out;
  for (int n = 1; n <= p_max; ++n) {
    QYSeries genus = div_exact(scaled[n], u);
    if (!genus.is_zero() && genus.q_min() < 0)
      throw NegativePowersRemain("kummer_via_hilbert: q^" + std::to_string(genus.q_min()) +
                                 " survives in n=" + std::to_string(n));
    out.push_back({n, std::move(genus), kummer_meta(n), KummerRoute::hilbert});
  }
  return out;
}

std::vector<KummerResult> kummer_via_hilbert(const SurfaceSpec& spec, int p_max, int q_max) {
  if (spec.c1sq == 0) throw ZeroC1Sq();
  const SurfaceOracle oracle(spec);
  return kummer_via_hilbert(oracle, p_max, q_max);
}

QYSeries kummer_chi_closed(int n) {
  if (n < 1) throw InvalidArgument("kummer_chi_closed: n must be >= 1");
  SeriesBuilder sum;
  const Rat n4 = rat_pow(n, 4);
  for (int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    // (y^a + y^-a - 2)/(y + y^-1 - 2) = (1 + y + ... + y^(a-1))^2 y^(1-a);
    // the square has coefficient min(j+1, 2a-1-j) at y^j.
    const Rat w = n4 * rat_pow(a, -3);
    for (int j = 0; j <= 2 * a - 2; ++j) {
      const int mult = std::min(j + 1, 2 * a - 1 - j);
      const int exponent = j + 1 - a + (n - 1);
      sum.add(0, 2 * exponent, w * mult);
    }
  }
  return std::move(sum).build();
}

long long euler_number(int n) {
  const Rat e = value_at_y1(kummer_chi_closed(n));
  if (!is_integer(e)) throw Error("euler_number: non-integral value " + to_string(e));
  return e.get_num().get_si();
}

Report routes_compare(int p_max, int q_max, std::span<const SurfaceSpec> surfaces,
                      RouteOptions options) {
  Report rep{"routes(N=" + std::to_string(p_max) + ", qmax=" + std::to_string(q_max) + ")", {}};

  std::vector<std::optional<KummerResult>> hecke(static_cast<std::size_t>(p_max + 1));
  for (int n = 1; n <= p_max; ++n) {
    try {
      auto r = kummer_hecke(n, q_max, options.hecke_weight);
      check_integral(r.genus, "hecke n=" + std::to_string(n), rep);
      hecke[static_cast<std::size_t>(n)] = std::move(r);
    } catch (const Error& e) {
      rep.fail("hecke n=" + std::to_string(n) + ": " + e.what());
    }
  }

  for (const auto& spec : surfaces) {
    std::vector<KummerResult> via;
    try {
      via = kummer_via_hilbert(spec, p_max, q_max);
    } catch (const Error& e) {
      rep.fail("hilbert " + spec.name + ": " + e.what());
      continue;
    }
    for (const auto& r : via) {
      const std::string tag = "hilbert " + spec.name + " n=" + std::to_string(r.n);
      check_integral(r.genus, tag, rep);
      const auto& h = hecke[static_cast<std::size_t>(r.n)];
      if (h && h->genus != r.genus) rep.fail(tag + ": differs from the Hecke route");
    }
  }

  for (int n = 1; n <= p_max; ++n) {
    const auto& h = hecke[static_cast<std::size_t>(n)];
    if (!h) continue;
    const std::string tag = "n=" + std::to_string(n);
    if (chi_from_genus(h->genus, 2 * (n - 1)) != kummer_chi_closed(n))
      rep.fail(tag + ": chi_y specialization differs from the closed form");
    if (n >= 2) rep.absorb(jacobi_property_check(h->genus, h->meta));
  }
  return rep;
}

}  // namespace ellgen
