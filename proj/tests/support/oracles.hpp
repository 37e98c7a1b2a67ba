#pragma once

// Independent reference computations used by the tests. Everything here is
// dense int64 arithmetic that shares no code with the library.

#include "hk/jacobi.hpp"
#include "hk/qseries.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

// Dense series sum_{d in [0, q_prec)} sum_{|r2| <= span} c[d][r2 + span] q^(d + shift) y^(r2/2).
struct Dense {
  int q_prec;
  int span;
  int shift = 0;
  std::vector<std::vector<std::int64_t>> c;

  Dense(int q, int s) : q_prec(q), span(s), c(q, std::vector<std::int64_t>(2 * s + 1, 0)) {}

  std::int64_t& at(int d, int r2) { return c[d][r2 + span]; }
  std::int64_t get(int d, int r2) const {
    if (d < 0 || d >= q_prec || r2 < -span || r2 > span)
      return 0;
    return c[d][r2 + span];
  }
};

inline Dense multiply(const Dense& a, const Dense& b) {
  Dense out(a.q_prec, a.span + b.span);
  out.shift = a.shift + b.shift;
  for (int d1 = 0; d1 < a.q_prec; ++d1)
    for (int r1 = -a.span; r1 <= a.span; ++r1) {
      const std::int64_t x = a.get(d1, r1);
      if (x == 0)
        continue;
      for (int d2 = 0; d1 + d2 < out.q_prec; ++d2)
        for (int r2 = -b.span; r2 <= b.span; ++r2)
          out.at(d1 + d2, r1 + r2) += x * b.get(d2, r2);
    }
  return out;
}

// prod_{m >= 1} (1 - q^m)^e for e >= 0, or partition-style expansion for e < 0.
inline Dense euler_power(int q_prec, int e) {
  Dense out(q_prec, 0);
  out.at(0, 0) = 1;
  for (int m = 1; m < q_prec; ++m) {
    for (int rep = 0; rep < (e >= 0 ? e : -e); ++rep) {
      if (e >= 0) {
        for (int d = q_prec - 1; d >= m; --d)
          out.at(d, 0) -= out.at(d - m, 0);
      } else {
        // multiply by 1/(1 - q^m): running sum with stride m
        for (int d = m; d < q_prec; ++d)
          out.at(d, 0) += out.at(d - m, 0);
      }
    }
  }
  return out;
}

// Theta from the triple product: sum_k q^(k(k+1)/2) y^(k+1/2) / prod (1 - q^m)^3.
inline Dense theta_triple_product(int q_prec) {
  int span = 1;
  while ((span + 1) * (span + 2) / 2 < q_prec)
    ++span;
  Dense numerator(q_prec, 2 * span + 1);
  for (int k = -span - 1; k <= span; ++k) {
    const int d = k * (k + 1) / 2;
    if (d < q_prec)
      numerator.at(d, 2 * k + 1) += 1;
  }
  return multiply(numerator, euler_power(q_prec, -3));
}

// Delta / q and q / Delta.
inline Dense delta_over_q(int q_prec) { return euler_power(q_prec, 24); }
inline Dense q_over_delta(int q_prec) { return euler_power(q_prec, -24); }

// Compares every coefficient of `s` at d < q_prec against the dense oracle,
// including zeros inside the oracle's span. Returns the number of mismatches.
inline int mismatches(const hk::QYSeries& s, const Dense& o, int q_prec) {
  int bad = 0;
  for (int d = 0; d < q_prec; ++d)
    for (int r2 = -o.span; r2 <= o.span; ++r2)
      if (s.coeff_at(d + o.shift, r2) != o.get(d, r2))
        ++bad;
  // Terms outside the oracle span must be absent.
  s.for_each_term([&](int d, int r2, const hk::Rational&) {
    if (d - o.shift < q_prec && (r2 < -o.span || r2 > o.span))
      ++bad;
  });
  return bad;
}

/**
 * Well-definedness of Jacobi coefficients: at index m every pair of monomials
 * q^d y^r with equal invariant 2d - r^2/2m and r = +-r' mod 2m carries the same
 * coefficient. Walks d < q_prec and |r| <= r_max, returns the first
 * disagreement as (d1, r1, d2, r2) or nothing.
 */
inline std::optional<std::tuple<int, int, int, int>>
first_ill_defined(const hk::JacobiElement& form, int m, int q_prec, int r_max) {
  std::map<std::pair<hk::Rational, int>, std::tuple<hk::Rational, int, int>> seen;
  const int q_min = std::min(form.series().q_min(), 0);
  for (int d = q_min; d < q_prec; ++d)
    for (int r = -r_max; r <= r_max; ++r) {
      const hk::Rational inv = hk::invariant(m, d, r);
      int cls = ((r % (2 * m)) + 2 * m) % (2 * m);
      cls = std::min(cls, (2 * m - cls) % (2 * m));
      const hk::Rational c = form.coeff_at(d, 2 * r);
      const auto key = std::make_pair(inv, cls);
      const auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, std::make_tuple(c, d, r));
      } else if (std::get<0>(it->second) != c) {
        return std::make_tuple(std::get<1>(it->second), std::get<2>(it->second), d, r);
      }
    }
  return std::nullopt;
}

} // namespace oracle
