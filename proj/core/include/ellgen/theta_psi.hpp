#pragma once

#include <optional>

#include "ellgen/qy_series.hpp"
#include "ellgen/report.hpp"

namespace ellgen {

/// Weight and doubled index of a (weak) Jacobi form. Bookkeeping only; it
/// never enters the arithmetic.
struct JacobiMeta {
  int weight = 0;
  int index2 = 0;

  friend bool operator==(const JacobiMeta&, const JacobiMeta&) = default;
};

inline constexpr JacobiMeta kPsiMeta{-1, 1};
inline constexpr JacobiMeta kPsiSquaredMeta{-2, 2};

/// psi = (y^-1/2 - y^1/2) prod_{n>=1} (1 - q^n y)(1 - q^n y^-1) / (1 - q^n)^2
/// expanded exactly up to q^q_max.
QYSeries psi_series(int q_max);

/// psi^2 up to q^q_max; its coefficients are the u(m, l) of the Kummer
/// formula.
QYSeries psi_squared(int q_max);

/// Hecke operator V(i) acting on weight-`weight` coefficients:
///
///   (phi|V(i)) = sum_{a|i} a^(weight-1) sum_{m,l} c(m i / a, l) q^(a m) y^(a l).
///
/// The result is valid to `out_q_max` (default: the largest order fully
/// determined by phi, floor(phi.q_max / i)). Throws InsufficientOrder when
/// phi is not known to order out_q_max * i.
QYSeries hecke_v(const QYSeries& phi, int weight, int i, std::optional<int> out_q_max = {});

/// Index bookkeeping of V(i): J_{k,r} -> J_{k,ir}.
constexpr JacobiMeta hecke_meta(JacobiMeta m, int i) { return {m.weight, m.index2 * i}; }

/// Coefficient-level weak Jacobi form laws inside the computed window:
/// c(m, l) depends only on (4rm - l^2, l mod 2r), and c(m, -l) = (-1)^k c(m, l).
Report jacobi_property_check(const QYSeries& phi, JacobiMeta meta);

/// chi_{-y} = y^(dim/2) * Ell|_{q=0} for a genus of complex dimension `dim`.
QYSeries chi_from_genus(const QYSeries& genus, int dim);

}  // namespace ellgen
