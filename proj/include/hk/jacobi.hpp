#pragma once

#include "hk/qseries.hpp"
#include "hk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

/**
 * A q,y-series tagged with weight and index.
 *
 * The index is tracked in halves so that the theta function (index 1/2) can
 * be represented; its square and everything built from it have integral
 * index. Weight is bookkeeping only.
 */
class JacobiElement {
public:
  JacobiElement() = default;
  JacobiElement(QYSeries series, int weight, int index)
      : series_(std::move(series)), weight_(weight), index_halves_(2 * index) {}

  static JacobiElement with_half_index(QYSeries series, int weight, int index_halves) {
    JacobiElement e(std::move(series), weight, 0);
    e.index_halves_ = index_halves;
    return e;
  }

  const QYSeries& series() const { return series_; }
  int weight() const { return weight_; }
  int index_halves() const { return index_halves_; }

  // Integral index, or nullopt for half-integral index.
  std::optional<int> index() const {
    if (index_halves_ % 2 != 0)
      return std::nullopt;
    return index_halves_ / 2;
  }

  Rational coeff_at(int d, int r2) const { return series_.coeff_at(d, r2); }

private:
  QYSeries series_;
  int weight_ = 0;
  int index_halves_ = 0;
};

// Weights and indices add.
JacobiElement operator*(const JacobiElement& a, const JacobiElement& b);
// Requires equal weight and index.
JacobiElement operator+(const JacobiElement& a, const JacobiElement& b);
JacobiElement operator-(const JacobiElement& a, const JacobiElement& b);
JacobiElement operator*(const Rational& c, const JacobiElement& a);
JacobiElement pow(const JacobiElement& a, unsigned k);
// Inverse of an index-0, y-free unit; weight is negated.
JacobiElement invert(const JacobiElement& a, std::optional<int> q_prec = std::nullopt);

/**
 * Residue set {+rho, -rho} in Z/(modulus)Z, closed under negation.
 * modulus 0 is the index-0 convention and always holds {0}.
 */
class ResidueSet {
public:
  // Accepts any representative; negative values and values >= modulus are
  // reduced. Throws std::invalid_argument for a negative modulus.
  ResidueSet(int representative, int modulus);

  int modulus() const { return modulus_; }
  const std::vector<int>& values() const { return values_; }
  bool contains(long r) const;

  // Representative of minimal absolute value, nonnegative on ties.
  int min_representative() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
  int modulus_;
  std::vector<int> values_;
};

// Bernoulli number B_k.
Rational bernoulli(int k);

// Theta function (y^1/2 + y^-1/2) prod (1 + y q^m)(1 + y^-1 q^m) / (1 - q^m)^2.
// Weight -1, index 1/2.
JacobiElement theta(int q_prec);

// Index-0 Eisenstein series E_k for k in {2, 4, 6}.
JacobiElement eisenstein(int k, int q_prec);

// Modular discriminant q prod (1 - q^m)^24.
JacobiElement delta(int q_prec);

// Weierstrass function expanded literally and cut to |r| <= window; carries a
// y-window and is only used for cross-checks.
JacobiElement wp_windowed(int q_prec, int window);

// phi = D_y^2(Theta) Theta - D_y(Theta)^2, weight 0, index 1.
JacobiElement phi(int q_prec);

// Same coefficients computed as 1/2 sum c(n1,k1) c(n2,k2) (k1 - k2)^2 from the
// theta coefficients.
JacobiElement phi_via_convolution(int q_prec);

enum class FormName { PhiMinus2_1, Phi0_1, F, G, PhiPowOverDelta };

// Parses "phi_m21", "phi_01", "f", "g", "phi_pow_over_delta".
std::optional<FormName> parse_form_name(const std::string& name);

// Named forms, all exact to q^(q_prec - 1):
//   PhiMinus2_1      Theta^2
//   Phi0_1           E2 Theta^2 - 12 phi           (= 12 Theta^2 wp)
//   F                phi / Delta
//   G                (12 phi - 6 E2 Theta^2) / (5 Delta)
//   PhiPowOverDelta  phi^(n-1) / Delta
// `n` is only read for PhiPowOverDelta. Results of PhiPowOverDelta are cached.
JacobiElement named_form(FormName name, int q_prec, int n = 2);

JacobiElement phi_pow_over_delta(int n, int q_prec);

/**
 * Coefficient phi[norm, rho]: for index m >= 1 picks the representative r of
 * rho with minimal |r| and returns [form]_{q^d y^r} with
 * d = (norm + r^2/2m) / 2; for index 0 returns [form]_{q^(norm/2)}.
 * Throws InadmissiblePair when d is not an integer and PrecisionExceeded
 * when the form is not known to order d.
 */
Rational jcoeff(const JacobiElement& form, const Rational& norm, const ResidueSet& rho);

// The q-exponent jcoeff reads, without touching a series.
long jcoeff_q_order(int index, const Rational& norm, const ResidueSet& rho);

// Invariant 2d - r^2/(2m) of the monomial q^d y^r at index m (r = r2/2).
Rational invariant(int index, long d, long r);

} // namespace hk
