#include "ellgen/jet.hpp"

#include <algorithm>

#include "ellgen/errors.hpp"

namespace ellgen {

Jet::Jet(int degree) : coeffs_(static_cast<std::size_t>(degree + 1)) {
  if (degree < 0) throw InvalidArgument("Jet: negative degree");
}

Jet::Jet(std::vector<QYSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("Jet: needs at least one coefficient");
  normalize();
}

void Jet::normalize() {
  q_max_ = QYSeries::kExact;
  for (const auto& c : coeffs_) q_max_ = std::min(q_max_, c.q_max());
  for (auto& c : coeffs_)
    if (c.q_max() != q_max_) c = c.truncated(q_max_);
}

Jet Jet::constant(const QYSeries& c, int degree) {
  Jet j(degree);
  j.coeffs_[0] = c;
  for (auto& x : j.coeffs_) x = x.truncated(c.q_max());
  j.normalize();
  return j;
}

Jet Jet::exponential(const Rat& s, const QYSeries& c, int degree) {
  std::vector<QYSeries> coeffs;
  Rat f = 1;
  for (int d = 0; d <= degree; ++d) {
    if (d > 0) f = f * s / d;
    coeffs.push_back(c * f);
  }
  return Jet(std::move(coeffs));
}

Jet& Jet::operator+=(const Jet& rhs) {
  if (rhs.degree() != degree()) throw InvalidArgument("Jet: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  if (rhs.degree() != degree()) throw InvalidArgument("Jet: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("Jet: degree mismatch");
  const int bound = std::min(a.q_max(), b.q_max());
  std::vector<QYSeries> out(a.coeffs_.size(), QYSeries(bound));
  const int deg = a.degree();
  for (int i = 0; i <= deg; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= deg; ++j) {
      if (b[j].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return Jet(std::move(out));
}

Jet div_unit(const Jet& a, const Jet& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("Jet: degree mismatch");
  const int bound = std::min(a.q_max(), b.q_max());
  const QYSeries b0_inv = inverse(b[0], bound);
  const int deg = b.degree();

  // b = b0 (1 + r) with r divisible by x, so (1 + r)^-1 = sum_{k<=deg} (-r)^k.
  std::vector<QYSeries> rc(static_cast<std::size_t>(deg + 1), QYSeries(b0_inv.q_max()));
  for (int i = 1; i <= deg; ++i) rc[static_cast<std::size_t>(i)] = -(b[i] * b0_inv);
  const Jet neg_r(std::move(rc));
  Jet sum = Jet::constant(QYSeries::constant(1, neg_r.q_max()), deg);
  Jet power = sum;
  for (int k = 1; k <= deg; ++k) {
    power = power * neg_r;
    sum += power;
  }
  return a * sum * Jet::constant(b0_inv, deg);
}

Jet shift_down(const Jet& a) {
  if (!a[0].is_zero())
    throw NonzeroConstantTerm("shift_down: x^0 coefficient is nonzero");
  std::vector<QYSeries> out;
  for (int i = 1; i <= a.degree(); ++i) out.push_back(a[i]);
  out.push_back(QYSeries(a.q_max()));
  return Jet(std::move(out));
}

}  // namespace ellgen
