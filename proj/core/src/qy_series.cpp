#include "ellgen/qy_series.hpp"

#include <algorithm>

#include "ellgen/errors.hpp"

namespace ellgen {
namespace {

bool key_less(const Term& a, const Term& b) {
  return a.m != b.m ? a.m < b.m : a.l2 < b.l2;
}

// Half-open index ranges of the terms sharing one q-exponent.
struct Row {
  int m;
  std::size_t begin;
  std::size_t end;
};

std::vector<Row> rows_of(std::span<const Term> terms) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j].m == terms[i].m) ++j;
    rows.push_back({terms[i].m, i, j});
    i = j;
  }
  return rows;
}

int min_bound(int a, int b) { return std::min(a, b); }

int add_bound(int q_max, int d) {
  if (q_max == QYSeries::kExact) return q_max;
  return q_max + d;
}

// Exact division of y-Laurent polynomials given as l2-sorted terms (all at
// one q-order). Returns nullopt when b does not divide a.
std::optional<std::vector<Term>> laurent_div(std::vector<Term> a, std::span<const Term> b) {
  std::vector<Term> quot;
  if (a.empty()) return quot;
  const Term& lead_b = b.back();
  const int low_b = b.front().l2;
  const int low_q = a.front().l2 - low_b;
  while (!a.empty()) {
    const Term lead_a = a.back();
    const int e = lead_a.l2 - lead_b.l2;
    if (e < low_q) return std::nullopt;
    Rat qc = lead_a.c / lead_b.c;
    // a -= qc * y^(e/2) * b
    std::vector<Term> next;
    next.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].l2 < b[j].l2 + e)) {
        next.push_back(a[i++]);
      } else if (i == a.size() || a[i].l2 > b[j].l2 + e) {
        next.push_back({lead_a.m, b[j].l2 + e, -qc * b[j].c});
        ++j;
      } else {
        Rat c = a[i].c - qc * b[j].c;
        if (c != 0) next.push_back({a[i].m, a[i].l2, std::move(c)});
        ++i;
        ++j;
      }
    }
    a = std::move(next);
    quot.push_back({0, e, std::move(qc)});
  }
  std::reverse(quot.begin(), quot.end());
  return quot;
}

}  // namespace

QYSeries QYSeries::from_terms(std::vector<Term> terms, int q_max) {
  SeriesBuilder b(q_max);
  for (auto& t : terms) b.add(t.m, t.l2, t.c);
  return std::move(b).build();
}

QYSeries QYSeries::constant(const Rat& c, int q_max) { return monomial(0, 0, c, q_max); }

QYSeries QYSeries::monomial(int m, int l2, const Rat& c, int q_max) {
  QYSeries s(q_max);
  if (c != 0 && m <= q_max) s.terms_.push_back({m, l2, c});
  return s;
}

Rat QYSeries::coeff(int m, int l2) const {
  Term key{m, l2, Rat()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && it->m == m && it->l2 == l2) return it->c;
  return Rat(0);
}

QYSeries QYSeries::slice(int m) const {
  QYSeries s;
  for (const auto& t : terms_)
    if (t.m == m) s.terms_.push_back(t);
  return s;
}

QYSeries QYSeries::truncated(int q_max) const {
  QYSeries s(std::min(q_max, q_max_));
  for (const auto& t : terms_)
    if (t.m <= s.q_max_) s.terms_.push_back(t);
  return s;
}

QYSeries QYSeries::operator-() const {
  QYSeries s = *this;
  for (auto& t : s.terms_) t.c = -t.c;
  return s;
}

QYSeries& QYSeries::operator+=(const QYSeries& rhs) {
  const int bound = min_bound(q_max_, rhs.q_max_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = rhs.terms_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      if (a[i].m <= bound) out.push_back(std::move(terms_[i]));
      ++i;
    } else if (i == a.size() || key_less(b[j], a[i])) {
      if (b[j].m <= bound) out.push_back(b[j]);
      ++j;
    } else {
      if (a[i].m <= bound) {
        Rat c = a[i].c + b[j].c;
        if (c != 0) out.push_back({a[i].m, a[i].l2, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  q_max_ = bound;
  return *this;
}

QYSeries& QYSeries::operator-=(const QYSeries& rhs) { return *this += -rhs; }

QYSeries& QYSeries::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

QYSeries operator*(const QYSeries& a, const QYSeries& b) {
  const int bound = min_bound(a.q_max_, b.q_max_);
  QYSeries out(bound);
  if (a.terms_.empty() || b.terms_.empty()) return out;

  const auto rows_a = rows_of(a.terms_);
  const auto rows_b = rows_of(b.terms_);
  const int m_lo = rows_a.front().m + rows_b.front().m;
  const long m_hi_full = static_cast<long>(rows_a.back().m) + rows_b.back().m;
  const int m_hi = static_cast<int>(std::min<long>(m_hi_full, bound));
  if (m_hi < m_lo) return out;

  int la_lo = a.terms_.front().l2, la_hi = la_lo;
  for (const auto& t : a.terms_) la_lo = std::min(la_lo, t.l2), la_hi = std::max(la_hi, t.l2);
  int lb_lo = b.terms_.front().l2, lb_hi = lb_lo;
  for (const auto& t : b.terms_) lb_lo = std::min(lb_lo, t.l2), lb_hi = std::max(lb_hi, t.l2);
  const int l_lo = la_lo + lb_lo;
  const int width = la_hi + lb_hi - l_lo + 1;

  // Dense accumulator, one row per result q-order.
  std::vector<std::vector<Rat>> acc(static_cast<std::size_t>(m_hi - m_lo + 1));
  Rat scratch;
  for (const auto& ra : rows_a) {
    for (const auto& rb : rows_b) {
      const long m = static_cast<long>(ra.m) + rb.m;
      if (m > m_hi) break;
      auto& row = acc[static_cast<std::size_t>(m - m_lo)];
      if (row.empty()) row.resize(static_cast<std::size_t>(width));
      for (std::size_t i = ra.begin; i < ra.end; ++i) {
        const Term& ta = a.terms_[i];
        for (std::size_t j = rb.begin; j < rb.end; ++j) {
          const Term& tb = b.terms_[j];
          add_product(row[static_cast<std::size_t>(ta.l2 + tb.l2 - l_lo)], ta.c, tb.c, scratch);
        }
      }
    }
  }
  for (std::size_t r = 0; r < acc.size(); ++r) {
    for (std::size_t k = 0; k < acc[r].size(); ++k) {
      if (acc[r][k] != 0)
        out.terms_.push_back({m_lo + static_cast<int>(r), l_lo + static_cast<int>(k),
                              std::move(acc[r][k])});
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QYSeries& s) {
  os << '{';
  bool first = true;
  for (const auto& t : s.terms()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << t.m << ',' << t.l2 << "):" << to_string(t.c);
  }
  os << "} q_max=";
  if (s.exact())
    os << "exact";
  else
    os << s.q_max();
  return os;
}

QYSeries div_exact(const QYSeries& a, const QYSeries& b) {
  if (b.is_zero()) throw InvalidArgument("div_exact: division by the zero series");
  const int mb = b.q_min();
  const QYSeries lead_b = b.slice(mb);
  const auto lead_terms = lead_b.terms();

  int bound = std::min(a.q_max(), b.q_max());
  if (bound != QYSeries::kExact) bound -= mb;
  if (a.is_zero()) return QYSeries(bound);
  if (a.q_min() < mb)
    throw InvalidArgument("div_exact: dividend has lower q-order than divisor");

  // With both operands exact the quotient, if it exists, is a polynomial
  // in q of degree at most top_order(a) - mb.
  const int last = bound == QYSeries::kExact ? a.top_order() - mb : bound;

  SeriesBuilder quot(bound);
  QYSeries rem = a;
  while (!rem.is_zero()) {
    const int e = rem.q_min();
    const int qe = e - mb;
    if (qe > last) {
      if (bound == QYSeries::kExact) throw NonExactDivision(e);
      break;
    }
    const auto slice = rem.slice(e);
    auto q = laurent_div({slice.terms().begin(), slice.terms().end()}, lead_terms);
    if (!q) throw NonExactDivision(e);
    std::vector<Term> step;
    step.reserve(q->size());
    for (auto& t : *q) {
      quot.add(qe, t.l2, t.c);
      step.push_back({qe, t.l2, std::move(t.c)});
    }
    rem -= b * QYSeries::from_terms(std::move(step));
    // The leading slice cancels exactly; guard against a stalled loop.
    if (!rem.is_zero() && rem.q_min() <= e) throw NonExactDivision(e);
  }
  return std::move(quot).build();
}

QYSeries inverse(const QYSeries& b, int q_max) {
  if (b.is_zero() || b.q_min() != 0) throw NotUnit("inverse: lowest slice is not at q^0");
  const QYSeries lead = b.slice(0);
  if (lead.size() != 1) throw NotUnit("inverse: q^0 slice is not a monomial");
  const int bound = std::min(b.q_max(), q_max);
  const Term& u = lead.terms().front();
  const QYSeries lead_inv = QYSeries::monomial(0, -u.l2, 1 / u.c);
  if (b.size() == 1) return lead_inv.truncated(bound);
  if (bound == QYSeries::kExact)
    throw InvalidArgument("inverse: an infinite inverse needs a finite truncation");

  // b = u (1 + r) with r of positive q-order; 1/(1+r) = sum (-r)^k.
  QYSeries r = (b - lead) * lead_inv;
  r = r.truncated(bound);
  QYSeries sum = QYSeries::constant(1, bound);
  QYSeries power = QYSeries::constant(1, bound);
  const int step = r.q_min();
  for (int k = 1; static_cast<long>(k) * step <= bound; ++k) {
    power = power * (-r);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * lead_inv;
}

QYSeries scale_exponents(const QYSeries& a, int s, std::optional<int> window) {
  if (s < 1) throw InvalidArgument("scale_exponents: factor must be >= 1");
  int bound = a.q_max();
  if (bound != QYSeries::kExact) {
    const long scaled = static_cast<long>(bound) * s;
    bound = scaled >= QYSeries::kExact ? QYSeries::kExact - 1 : static_cast<int>(scaled);
  }
  if (window) bound = std::min(bound, *window);
  SeriesBuilder out(bound);
  for (const auto& t : a.terms()) out.add(t.m * s, t.l2 * s, t.c);
  return std::move(out).build();
}

QYSeries q0_slice(const QYSeries& a) {
  if (!a.is_zero() && a.q_min() < 0)
    throw NegativePowers("q0_slice: series has negative q-exponents, q -> 0 limit undefined");
  return a.slice(0);
}

QYSeries shift(const QYSeries& a, int dm, int dl2) {
  SeriesBuilder out(add_bound(a.q_max(), dm));
  for (const auto& t : a.terms()) out.add(t.m + dm, t.l2 + dl2, t.c);
  return std::move(out).build();
}

QYSeries mirror_y(const QYSeries& a) {
  SeriesBuilder out(a.q_max());
  for (const auto& t : a.terms()) out.add(t.m, -t.l2, t.c);
  return std::move(out).build();
}

Rat value_at_y1(const QYSeries& a) {
  Rat sum = 0;
  for (const auto& t : a.terms()) sum += t.c;
  return sum;
}

void SeriesBuilder::add(int m, int l2, const Rat& c) {
  if (m > q_max_ || c == 0) return;
  terms_.push_back({m, l2, c});
}

QYSeries SeriesBuilder::build() && {
  std::sort(terms_.begin(), terms_.end(), key_less);
  QYSeries s(q_max_);
  for (auto& t : terms_) {
    if (!s.terms_.empty() && s.terms_.back().m == t.m && s.terms_.back().l2 == t.l2) {
      s.terms_.back().c += t.c;
    } else {
      if (!s.terms_.empty() && s.terms_.back().c == 0) s.terms_.pop_back();
      s.terms_.push_back(std::move(t));
    }
  }
  if (!s.terms_.empty() && s.terms_.back().c == 0) s.terms_.pop_back();
  return s;
}

}  // namespace ellgen
