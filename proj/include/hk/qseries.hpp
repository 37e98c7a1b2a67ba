#pragma once

#include "hk/rational.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>

namespace hk {

// Precision value meaning "every coefficient is known" (finite Laurent
// polynomials such as constants and monomials).
inline constexpr int kExactPrecision = std::numeric_limits<int>::max() / 4;

inline constexpr int kDefaultPrecision = 12;

/**
 * Truncated Laurent series in q and y with exact rational coefficients.
 *
 * Terms are indexed by (d, r2) for the monomial q^d y^(r2/2); y-exponents are
 * stored doubled so that the half-integral exponents of the theta function
 * stay integral keys.
 *
 * Every coefficient with q_min() <= d < q_prec() is exact. Below q_min() the
 * series vanishes identically. A series may additionally carry a y-window
 * (stored doubled, |r2| <= y_window2()), in which case only coefficients inside
 * the window are guaranteed; without a window the y-support of every stored
 * q-row is complete.
 *
 * Values are immutable after construction apart from assignment.
 */
class QYSeries {
public:
  using Row = std::map<int, Rational>; // r2 -> coefficient
  using Rows = std::map<int, Row>;     // d -> row

  // The zero series, exact to all orders.
  QYSeries() = default;

  static QYSeries constant(const Rational& c);
  static QYSeries monomial(int d, int r2, const Rational& c, int q_prec = kExactPrecision);

  // Builds a series from raw rows. Zero coefficients and terms outside
  // [q_min, q_prec) or the window are dropped.
  static QYSeries from_rows(int q_min, int q_prec, Rows rows,
                            std::optional<int> y_window2 = std::nullopt);

  int q_min() const { return q_min_; }
  int q_prec() const { return q_prec_; }
  bool exact() const { return q_prec_ >= kExactPrecision; }
  std::optional<int> y_window2() const { return y_window2_; }

  const Rows& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  bool y_free() const;
  std::size_t term_count() const;

  // Largest |r2| among stored terms (0 for the zero series).
  int max_abs_r2() const;

  // Lowest q-exponent carrying a nonzero coefficient.
  std::optional<int> valuation() const;

  // Stored coefficient, zero if absent. Terms below q_min are exactly zero.
  // Throws PrecisionExceeded for d >= q_prec and WindowExceeded for |r2|
  // outside the window of a windowed series.
  Rational coeff_at(int d, int r2) const;

  // Same series cut down to precision min(q_prec, new_prec).
  QYSeries truncated(int new_prec) const;

  template <class Fn>
  void for_each_term(Fn&& fn) const {
    for (const auto& [d, row] : rows_)
      for (const auto& [r2, c] : row)
        fn(d, r2, c);
  }

  // Exact equality of stored terms, precision and window.
  friend bool operator==(const QYSeries& a, const QYSeries& b);

  // Equality of stored terms only.
  bool same_terms(const QYSeries& other) const { return rows_ == other.rows_; }

private:
  void normalize();

  int q_min_ = 0;
  int q_prec_ = kExactPrecision;
  std::optional<int> y_window2_;
  Rows rows_;
};

QYSeries add(const QYSeries& a, const QYSeries& b);
QYSeries negate(const QYSeries& a);
QYSeries scale(const Rational& c, const QYSeries& a);

// Cauchy product. The result is exact for d < min(a.q_prec + b.q_min,
// b.q_prec + a.q_min). If exactly one factor is windowed, the result window is
// the requested one (doubled units), defaulting to the largest guaranteed
// window; products of two windowed series are rejected with WindowUnderflow.
QYSeries mul(const QYSeries& a, const QYSeries& b,
             std::optional<int> y_window2_out = std::nullopt);

// Inverse of a y-free series with nonzero leading coefficient. For an inexact
// input of valuation v and precision P the result has precision P - 2v; an
// exact input that is not a monomial is expanded to `q_prec` (default
// kDefaultPrecision).
QYSeries invert_q_unit(const QYSeries& a, std::optional<int> q_prec = std::nullopt);

// y d/dy: multiplies the (d, r2) coefficient by r2/2.
QYSeries dy(const QYSeries& a);

// q d/dq: multiplies the (d, r2) coefficient by d.
QYSeries dq(const QYSeries& a);

// Heat operator 2 q d/dq - (1/2m) (y d/dy)^2.
QYSeries heat(int m, const QYSeries& a);

QYSeries pow(const QYSeries& a, unsigned k);

inline Rational coeff_at(const QYSeries& a, int d, int r2) { return a.coeff_at(d, r2); }

inline QYSeries operator+(const QYSeries& a, const QYSeries& b) { return add(a, b); }
inline QYSeries operator-(const QYSeries& a) { return negate(a); }
inline QYSeries operator-(const QYSeries& a, const QYSeries& b) { return add(a, negate(b)); }
inline QYSeries operator*(const QYSeries& a, const QYSeries& b) { return mul(a, b); }
inline QYSeries operator*(const Rational& c, const QYSeries& a) { return scale(c, a); }

} // namespace hk
