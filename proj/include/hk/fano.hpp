#pragma once

#include "hk/chern.hpp"
#include "hk/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace hk {

/**
 * Reduction rule h^3 = a2 h^2 + a1 h + a0 on the projective bundle
 * P(Sym^2 U_F), with a2, a1, a0 pulled back from F.
 */
struct BundleRelation {
  FanoPoly h2;
  FanoPoly h1;
  FanoPoly h0;

  // h^3 = 3H h^2 - (2H^2 + 4c) h + (5/3) H^3.
  static BundleRelation displayed();
  // h^3 = -c1 h^2 - c2 h - c3 with c_i = c_i(Sym^2 U_F); the constant term is 4Hc.
  static BundleRelation from_chern();
};

/**
 * a0 + a1 h + a2 h^2 on P(Sym^2 U_F), always reduced below h^3.
 */
class PBClass {
public:
  PBClass() = default;
  PBClass(FanoPoly a0, FanoPoly a1, FanoPoly a2) : coeffs_{std::move(a0), std::move(a1), std::move(a2)} {}

  static PBClass pullback(const FanoPoly& p) { return PBClass(p, {}, {}); }
  static PBClass h() { return PBClass({}, FanoPoly(1), {}); }

  // Reduces sum_k coeffs[k] h^k for any number of powers.
  static PBClass reduce(std::vector<FanoPoly> coeffs, const BundleRelation& rel);

  const FanoPoly& coefficient(int k) const { return coeffs_.at(k); }

  PBClass& operator+=(const PBClass& other);
  friend PBClass operator+(PBClass a, const PBClass& b) { return a += b; }
  friend bool operator==(const PBClass&, const PBClass&) = default;

  PBClass multiply(const PBClass& other, const BundleRelation& rel) const;

  // pi_*: reads off the h^2 coefficient (pi_* h^2 = 1, pi_* h = pi_* 1 = 0).
  FanoPoly pushforward() const { return coeffs_[2]; }

  // Applies numerical_normal_form to each coefficient.
  PBClass normal_form() const;

  std::string to_string() const;

private:
  std::array<FanoPoly, 3> coeffs_;
};

// h^k reduced under `rel`.
PBClass h_power(int k, const BundleRelation& rel);

// c4(Q_F^* (x) O(h)) = sum c_i(Q_F^*) h^(4-i), reduced by the displayed relation.
PBClass sprime_class_raw();

// The same class with every coefficient in numerical normal form. Throws
// ReferenceMismatch unless it equals
//   5(H^2 - c) h^2 - (35/6) H^3 h + (10/3) H^4.
PBClass sprime_class();

PBClass sprime_reference();

struct Lemma31Numbers {
  Rational h_squared;  // integral of [S'] . H^2
  Rational h_times_h;  // integral of [S'] . H h
  Rational h2;         // integral of [S'] . h^2
};

Lemma31Numbers lemma31_numbers();

struct EigenvalueChain {
  Rational pushforward;  // coefficient of H_S in p_*(7H + 3 xi)^2
  Rational n70875;
  Rational n42525;
  Rational n945;
};

// Coefficient of H_S in p_*(a p^*H_S xi + b xi^2) along the P^1-bundle p over S,
// using p_* xi = 1 and p_* xi^2 = -c1(N) with c1(N) = normal_c1 H_S. Pullbacks
// from S push forward to zero.
Rational p1_bundle_pushforward(const Rational& h_xi_coeff, const Rational& xi2_coeff,
                               const Rational& normal_c1);

EigenvalueChain eigenvalue_chain();

struct WebCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass;
};

struct ConsistencyReport {
  std::vector<WebCheck> checks;
  bool all_pass() const;
};

ConsistencyReport consistency_web();

} // namespace hk
