#include "hk/jacobi.hpp"

#include "hk/errors.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hk {

JacobiElement operator*(const JacobiElement& a, const JacobiElement& b) {
  return JacobiElement::with_half_index(mul(a.series(), b.series()), a.weight() + b.weight(),
                                        a.index_halves() + b.index_halves());
}

JacobiElement operator+(const JacobiElement& a, const JacobiElement& b) {
  if (a.weight() != b.weight() || a.index_halves() != b.index_halves())
    throw std::invalid_argument("adding Jacobi elements of different weight or index");
  return JacobiElement::with_half_index(add(a.series(), b.series()), a.weight(),
                                        a.index_halves());
}

JacobiElement operator-(const JacobiElement& a, const JacobiElement& b) {
  return a + Rational(-1) * b;
}

JacobiElement operator*(const Rational& c, const JacobiElement& a) {
  return JacobiElement::with_half_index(scale(c, a.series()), a.weight(), a.index_halves());
}

JacobiElement pow(const JacobiElement& a, unsigned k) {
  return JacobiElement::with_half_index(pow(a.series(), k), static_cast<int>(k) * a.weight(),
                                        static_cast<int>(k) * a.index_halves());
}

JacobiElement invert(const JacobiElement& a, std::optional<int> q_prec) {
  if (a.index_halves() != 0)
    throw NotInvertible("only index-0 elements are inverted");
  return JacobiElement(invert_q_unit(a.series(), q_prec), -a.weight(), 0);
}

// ---------------------------------------------------------------------------

ResidueSet::ResidueSet(int representative, int modulus) : modulus_(modulus) {
  if (modulus < 0)
    throw std::invalid_argument("residue modulus must be nonnegative");
  if (modulus == 0) {
    values_ = {0};
    return;
  }
  const int plus = ((representative % modulus) + modulus) % modulus;
  const int minus = (modulus - plus) % modulus;
  values_ = plus == minus ? std::vector<int>{plus}
                          : std::vector<int>{std::min(plus, minus), std::max(plus, minus)};
}

bool ResidueSet::contains(long r) const {
  if (modulus_ == 0)
    return r == 0;
  const long red = ((r % modulus_) + modulus_) % modulus_;
  for (int v : values_)
    if (v == red)
      return true;
  return false;
}

int ResidueSet::min_representative() const {
  if (modulus_ == 0)
    return 0;
  return std::min(values_.front(), modulus_ - values_.front());
}

// ---------------------------------------------------------------------------

Rational bernoulli(int k) {
  if (k < 0)
    throw std::invalid_argument("Bernoulli index must be nonnegative");
  // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (int n = 1; n <= k; ++n) {
    Rational acc = 0;
    Integer binom = 1; // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = -acc / Rational(n + 1);
  }
  return b[k];
}

namespace {

Integer divisor_power_sum(int m, int power) {
  Integer s = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0)
      continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(power));
    s += t;
  }
  return s;
}

// prod_{m >= 1} (1 - q^m), exact below q^q_prec.
QYSeries euler_product(int q_prec) {
  QYSeries p = QYSeries::constant(1).truncated(q_prec);
  for (int m = 1; m < q_prec; ++m)
    p = mul(p, QYSeries::constant(1) - QYSeries::monomial(m, 0, 1));
  return p.truncated(q_prec);
}

} // namespace

JacobiElement theta(int q_prec) {
  if (q_prec < 1)
    throw std::invalid_argument("theta needs q_prec >= 1");
  QYSeries s = QYSeries::monomial(0, 1, 1) + QYSeries::monomial(0, -1, 1);
  s = s.truncated(q_prec);
  for (int m = 1; m < q_prec; ++m) {
    s = mul(s, QYSeries::constant(1) + QYSeries::monomial(m, 2, 1));
    s = mul(s, QYSeries::constant(1) + QYSeries::monomial(m, -2, 1));
  }
  const QYSeries eta_part = euler_product(q_prec);
  s = mul(s, invert_q_unit(mul(eta_part, eta_part), q_prec));
  return JacobiElement::with_half_index(s.truncated(q_prec), -1, 1);
}

JacobiElement eisenstein(int k, int q_prec) {
  if (k != 2 && k != 4 && k != 6)
    throw std::invalid_argument("Eisenstein series implemented for k = 2, 4, 6");
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  QYSeries::Rows rows;
  rows[0][0] = 1;
  for (int m = 1; m < q_prec; ++m)
    rows[m][0] = factor * Rational(divisor_power_sum(m, k - 1));
  return JacobiElement(QYSeries::from_rows(0, q_prec, std::move(rows)), k, 0);
}

JacobiElement delta(int q_prec) {
  if (q_prec < 2)
    throw std::invalid_argument("delta needs q_prec >= 2");
  const QYSeries p = pow(euler_product(q_prec - 1), 24);
  return JacobiElement(mul(QYSeries::monomial(1, 0, 1), p).truncated(q_prec), 12, 0);
}

JacobiElement wp_windowed(int q_prec, int window) {
  if (window < 1)
    throw std::invalid_argument("wp_windowed needs a window >= 1");
  QYSeries::Rows rows;
  rows[0][0] = Rational(1, 12);
  // -y/(1+y)^2 = sum_{d >= 1} (-1)^d d y^d in |y| < 1.
  for (int d = 1; d <= window; ++d)
    rows[0][2 * d] = (d % 2 == 0 ? 1 : -1) * d;
  for (int m = 1; m < q_prec; ++m) {
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0)
        continue;
      rows[m][0] += -2 * d;
      if (d <= window) {
        const int sign = d % 2 == 0 ? 1 : -1;
        rows[m][2 * d] += sign * d;
        rows[m][-2 * d] += sign * d;
      }
    }
  }
  return JacobiElement(QYSeries::from_rows(0, q_prec, std::move(rows), 2 * window), 2, 0);
}

JacobiElement phi(int q_prec) {
  const QYSeries t = theta(q_prec).series();
  const QYSeries t1 = dy(t);
  const QYSeries t2 = dy(t1);
  return JacobiElement(mul(t2, t) - mul(t1, t1), 0, 1);
}

JacobiElement phi_via_convolution(int q_prec) {
  const QYSeries t = theta(q_prec).series();
  QYSeries::Rows rows;
  t.for_each_term([&](int d1, int a2, const Rational& c1) {
    t.for_each_term([&](int d2, int b2, const Rational& c2) {
      if (d1 + d2 >= q_prec)
        return;
      // (k1 - k2)^2 with k = r2/2.
      const int diff2 = a2 - b2;
      rows[d1 + d2][a2 + b2] += c1 * c2 * make_rational(diff2 * diff2, 8);
    });
  });
  return JacobiElement(QYSeries::from_rows(0, q_prec, std::move(rows)), 0, 1);
}

std::optional<FormName> parse_form_name(const std::string& name) {
  if (name == "phi_m21")
    return FormName::PhiMinus2_1;
  if (name == "phi_01")
    return FormName::Phi0_1;
  if (name == "f")
    return FormName::F;
  if (name == "g")
    return FormName::G;
  if (name == "phi_pow_over_delta")
    return FormName::PhiPowOverDelta;
  return std::nullopt;
}

namespace {

JacobiElement theta_squared(int q_prec) {
  const JacobiElement t = theta(q_prec);
  return t * t;
}

JacobiElement inverse_delta(int q_prec) { return invert(delta(q_prec + 2)); }

JacobiElement truncated(const JacobiElement& e, int q_prec) {
  return JacobiElement::with_half_index(e.series().truncated(q_prec), e.weight(),
                                        e.index_halves());
}

JacobiElement compute_phi_pow_over_delta(int n, int q_prec) {
  const JacobiElement p = pow(phi(q_prec + 2), static_cast<unsigned>(n - 1));
  return truncated(p * inverse_delta(q_prec), q_prec);
}

} // namespace

JacobiElement phi_pow_over_delta(int n, int q_prec) {
  if (n < 1)
    throw std::invalid_argument("phi_pow_over_delta needs n >= 1");
  static std::mutex mutex;
  static std::map<int, JacobiElement> cache; // n -> widest precision computed so far

  {
    std::lock_guard lock(mutex);
    const auto it = cache.find(n);
    if (it != cache.end() && it->second.series().q_prec() >= q_prec)
      return truncated(it->second, q_prec);
  }
  JacobiElement e = compute_phi_pow_over_delta(n, q_prec);
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot.series().is_zero() || slot.series().q_prec() < q_prec)
    slot = e;
  return e;
}

JacobiElement named_form(FormName name, int q_prec, int n) {
  switch (name) {
  case FormName::PhiMinus2_1:
    return theta_squared(q_prec);
  case FormName::Phi0_1:
    // 12 wp Theta^2 = E2 Theta^2 - 12 phi.
    return eisenstein(2, q_prec) * theta_squared(q_prec) - Rational(12) * phi(q_prec);
  case FormName::F:
    return truncated(phi(q_prec + 2) * inverse_delta(q_prec), q_prec);
  case FormName::G: {
    // (-12/5 wp - E2) Theta^2 = (12 phi - 6 E2 Theta^2) / 5.
    const int p = q_prec + 2;
    const JacobiElement numerator =
        Rational(12) * phi(p) - Rational(6) * (eisenstein(2, p) * theta_squared(p));
    return truncated(Rational(1, 5) * (numerator * inverse_delta(q_prec)), q_prec);
  }
  case FormName::PhiPowOverDelta:
    return phi_pow_over_delta(n, q_prec);
  }
  throw std::invalid_argument("unknown form");
}

// ---------------------------------------------------------------------------

Rational invariant(int index, long d, long r) {
  if (index == 0)
    return Rational(2 * d);
  return Rational(2 * d) - make_rational(r * r, 2L * index);
}

long jcoeff_q_order(int index, const Rational& norm, const ResidueSet& rho) {
  if (rho.modulus() != 2 * index)
    throw std::invalid_argument("residue modulus " + std::to_string(rho.modulus()) +
                                " does not match index " + std::to_string(index));
  const long r = rho.min_representative();
  const Rational twice_d = index == 0 ? norm : norm + make_rational(r * r, 2L * index);
  if (!is_integer(twice_d) || twice_d.get_num() % 2 != 0)
    throw InadmissiblePair("no integral q-exponent for norm " + to_string(norm) +
                           " with residue " + std::to_string(r) + " mod " +
                           std::to_string(rho.modulus()));
  return to_long(twice_d / 2);
}

Rational jcoeff(const JacobiElement& form, const Rational& norm, const ResidueSet& rho) {
  const auto m = form.index();
  if (!m)
    throw std::invalid_argument("coefficient extraction needs an integral index");
  const long d = jcoeff_q_order(*m, norm, rho);
  return form.coeff_at(static_cast<int>(d), 2 * rho.min_representative());
}

} // namespace hk
