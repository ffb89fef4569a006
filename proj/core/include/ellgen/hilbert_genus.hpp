#pragma once

#include "ellgen/p_series.hpp"
#include "ellgen/report.hpp"
#include "ellgen/surface_genus.hpp"

namespace ellgen {

/// Truncation frame for the Hilbert-scheme generating series: p^0..p^p_max,
/// q up to q_max, twist parameter t (genus twisted by t*psi).
struct HilbertConfig {
  int p_max = 0;
  int q_max = 0;
  int twist = 0;
};

/// Lowest q-exponent retained in a twisted logarithm:
/// -N^2 t^2 - N |t| (q_max + 1).
int retained_q_floor(const HilbertConfig& cfg);

/// ln of the twisted Hilbert generating series,
///
///   sum_{i,k>=1} sum_{m,l} (1/k) c_{it}(m i, l) p^(i k) y^(l k) q^(m k),
///
/// with c_{it}(m i, l) = c(m i - l i t + i^2 t^2, l - 2 i t) read from the
/// surface oracle. The oracle is extended once, up front, to the largest
/// first argument the sum can touch.
PSeries hilbert_log_twisted(const SurfaceOracle& oracle, const HilbertConfig& cfg);

/// sum_n Ell(X^[n]) p^n = exp of the untwisted logarithm. cfg.twist must be 0.
PSeries hilbert_series(const SurfaceOracle& oracle, const HilbertConfig& cfg);

/// Checks that ln of the twisted series is quadratic in t by requiring the
/// third difference L(2) - 3L(1) + 3L(0) - L(-1) to vanish coefficientwise.
Report quadraticity_check(const SurfaceOracle& oracle, int p_max, int q_max);

}  // namespace ellgen
