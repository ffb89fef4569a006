#pragma once

#include <random>

#include "ellgen/p_series.hpp"
#include "ellgen/qy_series.hpp"

namespace ellgen::testing {

// Sparse random series with small rational coefficients, q in [0, q_max],
// doubled y-exponents in [-4, 4].
inline QYSeries random_series(std::mt19937& rng, int q_max, int n_terms = 6) {
  std::uniform_int_distribution<int> m(0, q_max), l2(-4, 4), num(-5, 5), den(1, 3);
  std::vector<Term> terms;
  for (int i = 0; i < n_terms; ++i) terms.push_back({m(rng), l2(rng), frac(num(rng), den(rng))});
  return QYSeries::from_terms(std::move(terms), q_max);
}

// Random series whose q^0 slice is the unit 1 (invertible divisor).
inline QYSeries random_unit(std::mt19937& rng, int q_max) {
  QYSeries r = random_series(rng, q_max);
  r -= r.slice(0);
  return r + QYSeries::constant(1);
}

inline bool no_zero_terms(const QYSeries& s) {
  for (const auto& t : s.terms())
    if (t.c == 0 || t.m > s.q_max()) return false;
  return true;
}

}  // namespace ellgen::testing
