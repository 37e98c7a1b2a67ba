#include "hk/qseries.hpp"

#include "hk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

namespace {

// Shifts a precision bound, keeping the exact sentinel saturated.
int shift_prec(int prec, int by) {
  if (prec >= kExactPrecision)
    return kExactPrecision;
  return prec + by;
}

std::optional<int> min_window(std::optional<int> a, std::optional<int> b) {
  if (a && b)
    return std::min(*a, *b);
  return a ? a : b;
}

} // namespace

QYSeries QYSeries::constant(const Rational& c) { return monomial(0, 0, c); }

QYSeries QYSeries::monomial(int d, int r2, const Rational& c, int q_prec) {
  Rows rows;
  rows[d][r2] = c;
  return from_rows(d, q_prec, std::move(rows));
}

QYSeries QYSeries::from_rows(int q_min, int q_prec, Rows rows, std::optional<int> y_window2) {
  QYSeries s;
  s.q_min_ = q_min;
  s.q_prec_ = std::min(q_prec, kExactPrecision);
  s.y_window2_ = y_window2;
  s.rows_ = std::move(rows);
  s.normalize();
  return s;
}

void QYSeries::normalize() {
  for (auto it = rows_.begin(); it != rows_.end();) {
    const int d = it->first;
    if (d < q_min_ || d >= q_prec_) {
      it = rows_.erase(it);
      continue;
    }
    Row& row = it->second;
    for (auto jt = row.begin(); jt != row.end();) {
      const bool outside = y_window2_ && std::abs(jt->first) > *y_window2_;
      if (outside || sgn(jt->second) == 0)
        jt = row.erase(jt);
      else
        ++jt;
    }
    it = row.empty() ? rows_.erase(it) : std::next(it);
  }
  if (rows_.empty())
    q_min_ = 0;
}

bool QYSeries::y_free() const {
  for (const auto& [d, row] : rows_)
    for (const auto& [r2, c] : row)
      if (r2 != 0)
        return false;
  return true;
}

std::size_t QYSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& [d, row] : rows_)
    n += row.size();
  return n;
}

int QYSeries::max_abs_r2() const {
  int m = 0;
  for (const auto& [d, row] : rows_)
    if (!row.empty())
      m = std::max({m, std::abs(row.begin()->first), std::abs(row.rbegin()->first)});
  return m;
}

std::optional<int> QYSeries::valuation() const {
  if (rows_.empty())
    return std::nullopt;
  return rows_.begin()->first;
}

Rational QYSeries::coeff_at(int d, int r2) const {
  if (d >= q_prec_)
    throw PrecisionExceeded("coefficient at q^" + std::to_string(d) +
                            " requested but the series is exact only below q^" +
                            std::to_string(q_prec_));
  if (y_window2_ && std::abs(r2) > *y_window2_)
    throw WindowExceeded("coefficient at y^(" + std::to_string(r2) +
                         "/2) lies outside the y-window |r2| <= " + std::to_string(*y_window2_));
  const auto it = rows_.find(d);
  if (it == rows_.end())
    return 0;
  const auto jt = it->second.find(r2);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

QYSeries QYSeries::truncated(int new_prec) const {
  return from_rows(q_min_, std::min(q_prec_, new_prec), rows_, y_window2_);
}

bool operator==(const QYSeries& a, const QYSeries& b) {
  return a.q_prec_ == b.q_prec_ && a.y_window2_ == b.y_window2_ && a.rows_ == b.rows_;
}

QYSeries add(const QYSeries& a, const QYSeries& b) {
  QYSeries::Rows rows = a.rows();
  for (const auto& [d, row] : b.rows())
    for (const auto& [r2, c] : row)
      rows[d][r2] += c;
  return QYSeries::from_rows(std::min(a.q_min(), b.q_min()), std::min(a.q_prec(), b.q_prec()),
                             std::move(rows), min_window(a.y_window2(), b.y_window2()));
}

QYSeries negate(const QYSeries& a) { return scale(-1, a); }

QYSeries scale(const Rational& c, const QYSeries& a) {
  QYSeries::Rows rows = a.rows();
  for (auto& [d, row] : rows)
    for (auto& [r2, x] : row)
      x *= c;
  return QYSeries::from_rows(a.q_min(), a.q_prec(), std::move(rows), a.y_window2());
}

QYSeries mul(const QYSeries& a, const QYSeries& b, std::optional<int> y_window2_out) {
  std::optional<int> window;
  if (a.y_window2() && b.y_window2())
    throw WindowUnderflow("product of two y-windowed series cannot be made exact");
  if (a.y_window2() || b.y_window2()) {
    const QYSeries& windowed = a.y_window2() ? a : b;
    const QYSeries& plain = a.y_window2() ? b : a;
    const int allowed = *windowed.y_window2() - plain.max_abs_r2();
    if (allowed < 0)
      throw WindowUnderflow("y-window " + std::to_string(*windowed.y_window2()) +
                            " is narrower than the y-support " +
                            std::to_string(plain.max_abs_r2()) + " of the other factor");
    if (y_window2_out && *y_window2_out > allowed)
      throw WindowUnderflow("requested y-window " + std::to_string(*y_window2_out) +
                            " exceeds the guaranteed window " + std::to_string(allowed));
    window = y_window2_out.value_or(allowed);
  }

  const int q_min = a.q_min() + b.q_min();
  const int q_prec =
      std::min(shift_prec(a.q_prec(), b.q_min()), shift_prec(b.q_prec(), a.q_min()));

  QYSeries::Rows rows;
  Rational prod;
  for (const auto& [da, row_a] : a.rows()) {
    for (const auto& [db, row_b] : b.rows()) {
      const int d = da + db;
      if (d >= q_prec)
        break;
      QYSeries::Row& out = rows[d];
      for (const auto& [ra, ca] : row_a) {
        for (const auto& [rb, cb] : row_b) {
          const int r2 = ra + rb;
          if (window && std::abs(r2) > *window)
            continue;
          prod = ca * cb;
          out[r2] += prod;
        }
      }
    }
  }
  return QYSeries::from_rows(q_min, q_prec, std::move(rows), window);
}

QYSeries invert_q_unit(const QYSeries& a, std::optional<int> q_prec) {
  if (!a.y_free())
    throw NotInvertible("series depends on y; only y-free series are inverted");
  const auto v = a.valuation();
  if (!v)
    throw NotInvertible("series is zero within its precision");
  const Rational lead = a.coeff_at(*v, 0);

  if (a.exact() && a.term_count() == 1)
    return QYSeries::monomial(-*v, 0, 1 / lead);

  int target;
  if (a.exact()) {
    target = q_prec.value_or(kDefaultPrecision);
  } else {
    target = a.q_prec() - 2 * *v;
    if (q_prec)
      target = std::min(target, *q_prec);
  }

  // a = lead * q^v * u with u_0 = 1; w = 1/u satisfies w_k = -sum_{j=1..k} u_j w_{k-j}.
  const int n = target + *v;
  std::vector<Rational> u(std::max(n, 0));
  for (int k = 0; k < n; ++k)
    u[k] = a.coeff_at(*v + k, 0) / lead;
  std::vector<Rational> w(u.size());
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      w[0] = 1;
      continue;
    }
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      if (sgn(u[j]) != 0)
        acc -= u[j] * w[k - j];
    w[k] = acc;
  }

  QYSeries::Rows rows;
  for (int k = 0; k < n; ++k)
    rows[k - *v][0] = w[k] / lead;
  return QYSeries::from_rows(-*v, target, std::move(rows));
}

QYSeries dy(const QYSeries& a) {
  QYSeries::Rows rows = a.rows();
  for (auto& [d, row] : rows)
    for (auto& [r2, c] : row)
      c *= make_rational(r2, 2);
  return QYSeries::from_rows(a.q_min(), a.q_prec(), std::move(rows), a.y_window2());
}

QYSeries dq(const QYSeries& a) {
  QYSeries::Rows rows = a.rows();
  for (auto& [d, row] : rows)
    for (auto& [r2, c] : row)
      c *= d;
  return QYSeries::from_rows(a.q_min(), a.q_prec(), std::move(rows), a.y_window2());
}

QYSeries heat(int m, const QYSeries& a) {
  if (m < 1)
    throw std::invalid_argument("heat operator index must be positive");
  return scale(2, dq(a)) - scale(Rational(1, 2 * m), dy(dy(a)));
}

QYSeries pow(const QYSeries& a, unsigned k) {
  QYSeries result = QYSeries::constant(1);
  QYSeries base = a;
  while (k > 0) {
    if (k & 1u)
      result = mul(result, base);
    k >>= 1;
    if (k > 0)
      base = mul(base, base);
  }
  return result;
}

} // namespace hk
