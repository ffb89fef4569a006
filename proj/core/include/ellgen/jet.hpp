#pragma once

#include <vector>

#include "ellgen/qy_series.hpp"

namespace ellgen {

/// Polynomial of degree <= J in a formal variable x with QYSeries
/// coefficients, i.e. an element of QY[[x]] / (x^(J+1)).
///
/// All coefficients share one validity bound (the smallest one given).
class Jet {
 public:
  static constexpr int kDefaultDegree = 3;

  explicit Jet(int degree = kDefaultDegree);
  explicit Jet(std::vector<QYSeries> coeffs);

  static Jet constant(const QYSeries& c, int degree = kDefaultDegree);
  /// e^(s x) truncated at x^degree, scaled by `c`.
  static Jet exponential(const Rat& s, const QYSeries& c, int degree = kDefaultDegree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int q_max() const noexcept { return q_max_; }
  const QYSeries& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<QYSeries>& coeffs() const noexcept { return coeffs_; }

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  /// Truncated Cauchy product in x.
  friend Jet operator*(const Jet& a, const Jet& b);

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  void normalize();

  std::vector<QYSeries> coeffs_;
  int q_max_ = QYSeries::kExact;
};

/// a * b^-1. The x^0 coefficient of b must be a unit (see `inverse`).
Jet div_unit(const Jet& a, const Jet& b);

/// a / x. Requires a zero x^0 coefficient; the top coefficient becomes 0.
Jet shift_down(const Jet& a);

}  // namespace ellgen
