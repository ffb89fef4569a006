#include "ellgen/p_series.hpp"

#include <algorithm>

#include "ellgen/errors.hpp"

namespace ellgen {

PSeries::PSeries(int p_max, int q_max)
    : coeffs_(static_cast<std::size_t>(p_max + 1), QYSeries(q_max)), q_max_(q_max) {
  if (p_max < 0) throw InvalidArgument("PSeries: negative p-degree");
}

PSeries::PSeries(std::vector<QYSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("PSeries: needs at least one coefficient");
  normalize();
}

void PSeries::normalize() {
  q_max_ = QYSeries::kExact;
  for (const auto& c : coeffs_) q_max_ = std::min(q_max_, c.q_max());
  for (auto& c : coeffs_)
    if (c.q_max() != q_max_) c = c.truncated(q_max_);
}

PSeries& PSeries::operator+=(const PSeries& rhs) {
  if (rhs.p_max() != p_max()) throw InvalidArgument("PSeries: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

PSeries& PSeries::operator-=(const PSeries& rhs) {
  if (rhs.p_max() != p_max()) throw InvalidArgument("PSeries: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

PSeries& PSeries::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PSeries operator*(const PSeries& a, const PSeries& b) {
  if (a.p_max() != b.p_max()) throw InvalidArgument("PSeries: degree mismatch");
  const int n = a.p_max();
  std::vector<QYSeries> out(static_cast<std::size_t>(n + 1),
                            QYSeries(std::min(a.q_max(), b.q_max())));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return PSeries(std::move(out));
}

PSeries p_log(const PSeries& f) {
  if (f[0] != QYSeries::constant(1, f[0].q_max()))
    throw NotUnit("p_log: p^0 coefficient is not 1");
  // L' = F'/F, i.e. n L_n = n F_n - sum_{k=1}^{n-1} k L_k F_{n-k}.
  const int n_max = f.p_max();
  std::vector<QYSeries> log(static_cast<std::size_t>(n_max + 1), QYSeries(f.q_max()));
  for (int n = 1; n <= n_max; ++n) {
    QYSeries acc = f[n] * Rat(n);
    for (int k = 1; k < n; ++k) {
      if (log[static_cast<std::size_t>(k)].is_zero() || f[n - k].is_zero()) continue;
      acc -= log[static_cast<std::size_t>(k)] * f[n - k] * Rat(k);
    }
    log[static_cast<std::size_t>(n)] = acc * frac(1, n);
  }
  return PSeries(std::move(log));
}

PSeries p_exp(const PSeries& g) {
  if (!g[0].is_zero()) throw NonzeroConstant("p_exp: p^0 coefficient is nonzero");
  // E' = G' E, i.e. n E_n = sum_{k=1}^{n} k G_k E_{n-k}.
  const int n_max = g.p_max();
  std::vector<QYSeries> ex(static_cast<std::size_t>(n_max + 1), QYSeries(g.q_max()));
  ex[0] = QYSeries::constant(1, g.q_max());
  for (int n = 1; n <= n_max; ++n) {
    QYSeries acc(g.q_max());
    for (int k = 1; k <= n; ++k) {
      if (g[k].is_zero() || ex[static_cast<std::size_t>(n - k)].is_zero()) continue;
      acc += g[k] * ex[static_cast<std::size_t>(n - k)] * Rat(k);
    }
    ex[static_cast<std::size_t>(n)] = acc * frac(1, n);
  }
  return PSeries(std::move(ex));
}

PSeries p_pdp2(const PSeries& g) {
  std::vector<QYSeries> out = g.coeffs();
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= Rat(static_cast<long>(n * n));
  return PSeries(std::move(out));
}

}  // namespace ellgen
