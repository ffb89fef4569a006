#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ellgen/jet.hpp"
#include "ellgen/qy_series.hpp"

namespace ellgen {

/// A smooth projective surface, reduced to the two Chern numbers that fix
/// its complex cobordism class.
struct SurfaceSpec {
  std::string name;
  long c1sq = 0;  // integral of c1^2
  long c2 = 0;    // integral of c2 (Euler number)

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

namespace surfaces {
inline SurfaceSpec p2() { return {"P2", 9, 3}; }
inline SurfaceSpec p1xp1() { return {"P1xP1", 8, 4}; }
inline SurfaceSpec k3() { return {"K3", 0, 24}; }
inline SurfaceSpec abelian() { return {"Abelian", 0, 0}; }
}  // namespace surfaces

/// Looks up "P2", "P1xP1", "K3" or "Abelian".
std::optional<SurfaceSpec> surface_preset(std::string_view name);

/// Degree-3 jet in x of
///
///   h(x) = x theta(x/2 pi i - z, tau) / theta(x/2 pi i, tau)
///        = x/(e^(x/2) - e^(-x/2)) * (e^(x/2) y^-1/2 - e^(-x/2) y^1/2)
///          * prod_n (1 - q^n e^x y^-1)(1 - q^n e^-x y) / ((1 - q^n e^x)(1 - q^n e^-x))
///
/// up to q^q_max. The x^0 coefficient is psi.
Jet theta_quotient_jet(int q_max);

/// Elliptic genus of a surface: the degree-2 part of h(x1) h(x2), i.e.
/// h0 h2 (c1^2 - 2 c2) + h1^2 c2.
QYSeries ell_surface(const SurfaceSpec& spec, int q_max);

/// Fourier coefficients c(m, l) of a surface's elliptic genus, computed to an
/// order that grows on demand.
///
/// Every coefficient satisfies 4m - l^2 >= -1 (each Chern-root factor carries
/// y-charge at most 1/2 + a at q-order >= a(a+1)/2), so anything outside that
/// region is answered as zero without computation. Extension recomputes the
/// expansion at the larger order and never changes a value already handed
/// out. Readers and extension are internally synchronized.
class SurfaceOracle {
 public:
  explicit SurfaceOracle(SurfaceSpec spec, int initial_order = 0);
  SurfaceOracle(const SurfaceOracle&) = delete;
  SurfaceOracle& operator=(const SurfaceOracle&) = delete;

  const SurfaceSpec& spec() const noexcept { return spec_; }
  int order() const;
  void extend_to(int order) const;

  /// c(m, l2/2); zero for m < 0 and outside the support region.
  Rat coeff(int m, int l2) const;

  /// Snapshot of the cached genus at the current order.
  QYSeries genus() const;

  /// Copy whose coefficient (m, l2) is shifted by `delta`; used for negative
  /// controls of the downstream checks. (m, l2) must lie in the support region.
  SurfaceOracle perturbed(int m, int l2, const Rat& delta) const;

  static bool in_support(long m, long l2) noexcept { return 16 * m - l2 * l2 >= -4; }

 private:
  SurfaceOracle(SurfaceSpec spec, std::vector<Term> perturbations, int initial_order);
  QYSeries compute(int order) const;

  SurfaceSpec spec_;
  std::vector<Term> perturbations_;
  mutable std::shared_mutex mu_;
  mutable QYSeries genus_;
  mutable int order_ = -1;
};

/// Index map of the t*psi twist on a surface: (m, l) -> (m - l t + t^2, l - 2t),
/// in doubled y-exponents. Empty when m - l t is not integral.
struct TwistIndex {
  long m;
  long l2;
  friend bool operator==(const TwistIndex&, const TwistIndex&) = default;
};
std::optional<TwistIndex> twist_index(int t, long m, long l2);

/// Coefficient of the genus twisted by t*psi: c_t(m, l) = c(m - l t + t^2, l - 2t).
Rat twist_coeff(const SurfaceOracle& oracle, int t, int m, int l2);

}  // namespace ellgen
