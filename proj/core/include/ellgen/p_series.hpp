#pragma once

#include <vector>

#include "ellgen/qy_series.hpp"

namespace ellgen {

/// Polynomial in p of degree <= N with QYSeries coefficients; carries the
/// Hilbert-scheme and Kummer generating series truncated at p^N.
class PSeries {
 public:
  explicit PSeries(int p_max, int q_max = QYSeries::kExact);
  explicit PSeries(std::vector<QYSeries> coeffs);

  int p_max() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int q_max() const noexcept { return q_max_; }
  const QYSeries& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<QYSeries>& coeffs() const noexcept { return coeffs_; }

  PSeries& operator+=(const PSeries& rhs);
  PSeries& operator-=(const PSeries& rhs);
  PSeries& operator*=(const Rat& s);
  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(PSeries a, const Rat& s) { return a *= s; }
  friend PSeries operator*(const Rat& s, PSeries a) { return a *= s; }
  /// Truncated Cauchy product in p.
  friend PSeries operator*(const PSeries& a, const PSeries& b);

  friend bool operator==(const PSeries&, const PSeries&) = default;

 private:
  void normalize();

  std::vector<QYSeries> coeffs_;
  int q_max_ = QYSeries::kExact;
};

/// Formal logarithm. The p^0 coefficient must be exactly 1 (NotUnit).
PSeries p_log(const PSeries& f);

/// Formal exponential. The p^0 coefficient must vanish (NonzeroConstant).
PSeries p_exp(const PSeries& g);

/// (p d/dp)^2: multiplies the p^n coefficient by n^2.
PSeries p_pdp2(const PSeries& g);

}  // namespace ellgen
