#include "ellgen/surface_genus.hpp"

#include <algorithm>
#include <mutex>

#include "ellgen/errors.hpp"

namespace ellgen {
namespace {

// sum_{j>=0} q^(n j) e^(sign j x) up to q^q_max.
Jet geometric_jet(int n, int sign, int q_max, int degree) {
  std::vector<SeriesBuilder> b(static_cast<std::size_t>(degree + 1), SeriesBuilder(q_max));
  for (int j = 0; static_cast<long>(j) * n <= q_max; ++j) {
    Rat f = 1;
    for (int d = 0; d <= degree; ++d) {
      if (d > 0) f = f * (sign * j) / d;
      b[static_cast<std::size_t>(d)].add(j * n, 0, f);
    }
  }
  std::vector<QYSeries> coeffs;
  for (auto& x : b) coeffs.push_back(std::move(x).build());
  return Jet(std::move(coeffs));
}

}  // namespace

std::optional<SurfaceSpec> surface_preset(std::string_view name) {
  for (auto s : {surfaces::p2(), surfaces::p1xp1(), surfaces::k3(), surfaces::abelian()})
    if (s.name == name) return s;
  return std::nullopt;
}

Jet theta_quotient_jet(int q_max) {
  if (q_max < 0) throw InvalidArgument("theta_quotient_jet: q_max must be >= 0");
  constexpr int deg = Jet::kDefaultDegree;
  const QYSeries one = QYSeries::constant(1, q_max);
  const Rat half = frac(1, 2);

  // x / (e^(x/2) - e^(-x/2)) as the inverse of (e^(x/2) - e^(-x/2)) / x.
  const Jet sinh2 = Jet::exponential(half, one, deg) - Jet::exponential(-half, one, deg);
  const Jet denom = shift_down(sinh2);
  const Jet numer = Jet::exponential(half, QYSeries::monomial(0, -1, 1, q_max), deg) -
                    Jet::exponential(-half, QYSeries::monomial(0, 1, 1, q_max), deg);
  Jet h = div_unit(numer, denom);

  for (int n = 1; n <= q_max; ++n) {
    const Jet a = Jet::constant(one, deg) -
                  Jet::exponential(1, QYSeries::monomial(n, -2, 1, q_max), deg);
    const Jet b = Jet::constant(one, deg) -
                  Jet::exponential(-1, QYSeries::monomial(n, 2, 1, q_max), deg);
    const Jet factor = a * b * geometric_jet(n, 1, q_max, deg) * geometric_jet(n, -1, q_max, deg);
    h = h * factor;
  }
  return h;
}

QYSeries ell_surface(const SurfaceSpec& spec, int q_max) {
  const Jet h = theta_quotient_jet(q_max);
  return h[0] * h[2] * Rat(spec.c1sq - 2 * spec.c2) + h[1] * h[1] * Rat(spec.c2);
}

SurfaceOracle::SurfaceOracle(SurfaceSpec spec, int initial_order)
    : SurfaceOracle(std::move(spec), {}, initial_order) {}

SurfaceOracle::SurfaceOracle(SurfaceSpec spec, std::vector<Term> perturbations,
                             int initial_order)
    : spec_(std::move(spec)), perturbations_(std::move(perturbations)) {
  extend_to(std::max(initial_order, 0));
}

QYSeries SurfaceOracle::compute(int order) const {
  QYSeries g = ell_surface(spec_, order);
  if (!perturbations_.empty()) {
    std::vector<Term> p;
    for (const auto& t : perturbations_)
      if (t.m <= order) p.push_back(t);
    g += QYSeries::from_terms(std::move(p), order);
  }
  return g;
}

int SurfaceOracle::order() const {
  std::shared_lock lock(mu_);
  return order_;
}

void SurfaceOracle::extend_to(int order) const {
  {
    std::shared_lock lock(mu_);
    if (order <= order_) return;
  }
  QYSeries g = compute(order);
  std::unique_lock lock(mu_);
  if (order <= order_) return;
  genus_ = std::move(g);
  order_ = order;
}

Rat SurfaceOracle::coeff(int m, int l2) const {
  if (m < 0 || !in_support(m, l2)) return Rat(0);
  {
    std::shared_lock lock(mu_);
    if (m <= order_) return genus_.coeff(m, l2);
  }
  extend_to(std::max(m, order() + order() / 2));
  std::shared_lock lock(mu_);
  return genus_.coeff(m, l2);
}

QYSeries SurfaceOracle::genus() const {
  std::shared_lock lock(mu_);
  return genus_;
}

SurfaceOracle SurfaceOracle::perturbed(int m, int l2, const Rat& delta) const {
  if (m < 0 || !in_support(m, l2))
    throw InvalidArgument("perturbed: coefficient lies outside the support region");
  std::vector<Term> p = perturbations_;
  p.push_back({m, l2, delta});
  return SurfaceOracle(spec_, std::move(p), order());
}

std::optional<TwistIndex> twist_index(int t, long m, long l2) {
  const long lt2 = l2 * t;
  if (lt2 % 2 != 0) return std::nullopt;
  return TwistIndex{m - lt2 / 2 + static_cast<long>(t) * t, l2 - 4L * t};
}

Rat twist_coeff(const SurfaceOracle& oracle, int t, int m, int l2) {
  // Surfaces carry only integral y-exponents, so l * t must be integral.
  const auto idx = twist_index(t, m, l2);
  if (!idx || idx->m < 0) return Rat(0);
  return oracle.coeff(static_cast<int>(idx->m), static_cast<int>(idx->l2));
}

}  // namespace ellgen
