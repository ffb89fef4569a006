#include "ellgen/hilbert_genus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "ellgen/errors.hpp"

namespace ellgen {
namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

long isqrt(long v) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

// Visits every (i, k, m, l2) whose term can be nonzero inside the frame.
//
// The twist map (m i, l) -> (m i - l i t + i^2 t^2, l - 2 i t) preserves
// 16 M - L2^2 (doubled-exponent discriminant), so the oracle's support
// region 16 M - L2^2 >= -4 bounds l2 by 16 m i - l2^2 >= -4.
template <typename Visit>
void for_each_cell(const HilbertConfig& cfg, Visit&& visit) {
  const int lo = retained_q_floor(cfg);
  for (int i = 1; i <= cfg.p_max; ++i) {
    for (int k = 1; i * k <= cfg.p_max; ++k) {
      for (long m = ceil_div(lo, k); m <= floor_div(cfg.q_max, k); ++m) {
        const long room = 16 * m * i + 4;
        if (room < 0) continue;
        const long lmax = isqrt(room);
        for (long l2 = -lmax; l2 <= lmax; ++l2) visit(i, k, m, l2);
      }
    }
  }
}

}  // namespace

int retained_q_floor(const HilbertConfig& cfg) {
  const long n = cfg.p_max, t = std::abs(cfg.twist);
  return static_cast<int>(-n * n * t * t - n * t * (cfg.q_max + 1L));
}

PSeries hilbert_log_twisted(const SurfaceOracle& oracle, const HilbertConfig& cfg) {
  if (cfg.p_max < 0 || cfg.q_max < 0)
    throw InvalidArgument("hilbert_log_twisted: p_max and q_max must be >= 0");
  const long t = cfg.twist;

  // Pass 1: the deepest coefficient the sum reads.
  long need = 0;
  for_each_cell(cfg, [&](int i, int, long m, long l2) {
    if (const auto idx = twist_index(static_cast<int>(i * t), m * i, l2))
      need = std::max(need, idx->m);
  });
  oracle.extend_to(static_cast<int>(need));

  // Pass 2: accumulate.
  std::vector<SeriesBuilder> acc(static_cast<std::size_t>(cfg.p_max + 1),
                                 SeriesBuilder(cfg.q_max));
  for_each_cell(cfg, [&](int i, int k, long m, long l2) {
    const Rat c = twist_coeff(oracle, i * cfg.twist, static_cast<int>(m * i), static_cast<int>(l2));
    if (c == 0) return;
    acc[static_cast<std::size_t>(i * k)].add(static_cast<int>(m * k), static_cast<int>(l2 * k),
                                             c / k);
  });

  std::vector<QYSeries> coeffs;
  for (auto& b : acc) coeffs.push_back(std::move(b).build());
  return PSeries(std::move(coeffs));
}

PSeries hilbert_series(const SurfaceOracle& oracle, const HilbertConfig& cfg) {
  if (cfg.twist != 0) throw InvalidArgument("hilbert_series: twist must be 0");
  return p_exp(hilbert_log_twisted(oracle, cfg));
}

Report quadraticity_check(const SurfaceOracle& oracle, int p_max, int q_max) {
  Report rep{"quadraticity(" + oracle.spec().name + ", N=" + std::to_string(p_max) +
                 ", qmax=" + std::to_string(q_max) + ")",
             {}};
  auto log_at = [&](int t) { return hilbert_log_twisted(oracle, {p_max, q_max, t}); };
  const PSeries third = log_at(2) - log_at(1) * Rat(3) + log_at(0) * Rat(3) - log_at(-1);
  for (int n = 0; n <= third.p_max(); ++n)
    for (const auto& term : third[n].terms())
      rep.fail("p^" + std::to_string(n) + " (m=" + std::to_string(term.m) +
               ", l2=" + std::to_string(term.l2) + "): third difference " + to_string(term.c));
  return rep;
}

}  // namespace ellgen
