#pragma once

#include <span>
#include <vector>

#include "ellgen/hilbert_genus.hpp"
#include "ellgen/qy_series.hpp"
#include "ellgen/report.hpp"
#include "ellgen/surface_genus.hpp"
#include "ellgen/theta_psi.hpp"

namespace ellgen {

enum class KummerRoute { hecke, hilbert, chi_closed };

const char* to_string(KummerRoute r) noexcept;

/// Elliptic genus of the generalised Kummer variety A^[[n]] (dimension
/// 2(n-1)), a weak Jacobi form of weight 0 and index n-1.
struct KummerResult {
  int n = 1;
  QYSeries genus;
  JacobiMeta meta;
  KummerRoute route = KummerRoute::hecke;
};

/// Ell(A^[[n]]) = n^4 psi^-2 (psi^2 |_{weight} V(n)) up to q^q_max.
///
/// `hecke_weight` is -2 for the genuine formula; other values exist only to
/// drive negative controls. Throws NonExactDivision if the Hecke image is
/// not divisible by psi^2 at the computed order.
KummerResult kummer_hecke(int n, int q_max, int hecke_weight = -2);

/// Ell(A^[[n]]) for n = 1..p_max from the Hilbert schemes of a surface with
/// c1^2 != 0:
///
///   psi^-2 (1/c1^2) (p d/dp)^2 [L(1) + L(-1) - 2 L(0)],
///
/// where L(t) is the logarithm of the Hilbert series twisted by t*psi.
/// Throws ZeroC1Sq, NonExactDivision, or NegativePowersRemain.
std::vector<KummerResult> kummer_via_hilbert(const SurfaceOracle& oracle, int p_max, int q_max);
std::vector<KummerResult> kummer_via_hilbert(const SurfaceSpec& spec, int p_max, int q_max);

/// chi_{-y}(A^[[n]]) = y^(n-1) n^4 sum_{a|n} a^-3 (y^a + y^-a - 2)/(y + y^-1 - 2)
/// as an exact Laurent polynomial (q^0 only).
QYSeries kummer_chi_closed(int n);

/// Euler number of A^[[n]]: the closed chi_{-y} form at y = 1, n^3 sigma(n).
long long euler_number(int n);

struct RouteOptions {
  int hecke_weight = -2;
};

/// Cross-validates the Kummer routes on a frame: Hecke vs Hilbert for every
/// listed surface, chi_y specialization vs the closed form, the Jacobi
/// coefficient laws for n >= 2, and integrality / q-support of all outputs.
Report routes_compare(int p_max, int q_max, std::span<const SurfaceSpec> surfaces,
                      RouteOptions options = {});

}  // namespace ellgen
