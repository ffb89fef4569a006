#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ellgen/rational.hpp"

namespace ellgen {

/// One Fourier coefficient c * q^m * y^(l2/2).
///
/// y-exponents are stored doubled so that the half-integral powers carried
/// by psi and the integral powers of everything built from psi^2 share one
/// integer key.
struct Term {
  int m = 0;
  int l2 = 0;
  Rat c;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Truncated series in q with Laurent-polynomial coefficients in y^(1/2).
///
/// The series is known exactly for q-exponents up to and including
/// `q_max()`; nothing beyond that is stored. `kExact` marks a series that is
/// known to all orders (a finite Laurent polynomial in q and y^(1/2)).
/// Terms are kept sorted by (m, l2) and no stored coefficient is zero.
/// Binary operations yield the smaller of the two validity bounds.
class QYSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  QYSeries() = default;
  explicit QYSeries(int q_max) : q_max_(q_max) {}

  /// Builds a series from arbitrary terms: sums duplicates, drops zeros and
  /// anything with m > q_max.
  static QYSeries from_terms(std::vector<Term> terms, int q_max = kExact);
  static QYSeries constant(const Rat& c, int q_max = kExact);
  static QYSeries monomial(int m, int l2, const Rat& c, int q_max = kExact);

  int q_max() const noexcept { return q_max_; }
  bool exact() const noexcept { return q_max_ == kExact; }

  /// Lowest stored q-exponent; q_max() for the zero series.
  int q_min() const noexcept { return terms_.empty() ? q_max_ : terms_.front().m; }
  /// Highest stored q-exponent; q_min() for the zero series.
  int top_order() const noexcept { return terms_.empty() ? q_min() : terms_.back().m; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  Rat coeff(int m, int l2) const;

  /// Terms with q-exponent m, returned as an exact series.
  QYSeries slice(int m) const;
  /// Drops every term above `q_max` and lowers the validity bound.
  QYSeries truncated(int q_max) const;

  QYSeries operator-() const;
  QYSeries& operator+=(const QYSeries& rhs);
  QYSeries& operator-=(const QYSeries& rhs);
  QYSeries& operator*=(const Rat& s);

  friend QYSeries operator+(QYSeries a, const QYSeries& b) { return a += b; }
  friend QYSeries operator-(QYSeries a, const QYSeries& b) { return a -= b; }
  friend QYSeries operator*(QYSeries a, const Rat& s) { return a *= s; }
  friend QYSeries operator*(const Rat& s, QYSeries a) { return a *= s; }
  friend QYSeries operator*(const QYSeries& a, const QYSeries& b);

  /// Same coefficients and the same validity bound.
  friend bool operator==(const QYSeries&, const QYSeries&) = default;

 private:
  friend class SeriesBuilder;

  std::vector<Term> terms_;
  int q_max_ = kExact;
};

std::ostream& operator<<(std::ostream& os, const QYSeries& s);

/// Exact quotient c with b * c = a up to the common validity bound.
///
/// Works order by order in q; every step is an exact division of a
/// y-Laurent polynomial by the lowest nonzero q-slice of b. Throws
/// NonExactDivision when a step leaves a remainder.
QYSeries div_exact(const QYSeries& a, const QYSeries& b);

/// Multiplicative inverse of a series whose lowest slice sits at q^0 and is a
/// single monomial c*y^(l2/2). Result is valid up to min(b.q_max(), q_max).
QYSeries inverse(const QYSeries& b, int q_max);

/// Substitutes q -> q^s, y -> y^s. The validity bound scales by s and is
/// then clamped to `window` when given.
QYSeries scale_exponents(const QYSeries& a, int s, std::optional<int> window = {});

/// The q^0 terms. Throws NegativePowers if a stores negative q-exponents.
QYSeries q0_slice(const QYSeries& a);

/// Multiplies by y^(dl2/2) * q^dm.
QYSeries shift(const QYSeries& a, int dm, int dl2);

/// Substitutes y -> 1/y.
QYSeries mirror_y(const QYSeries& a);

/// Sum of all coefficients of an exact y-Laurent polynomial (value at y = 1).
Rat value_at_y1(const QYSeries& a);

/// Accumulator used to assemble series from many unordered contributions.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(int q_max = QYSeries::kExact) : q_max_(q_max) {}
  void add(int m, int l2, const Rat& c);
  QYSeries build() &&;

 private:
  std::vector<Term> terms_;
  int q_max_;
};

}  // namespace ellgen
