#pragma once

#include "hk/rational.hpp"
#include "hk/schubert.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hk {

// Real dimension of the Fano variety of lines; classes above it vanish.
inline constexpr int kFanoTopDegree = 8;

/**
 * Polynomial in H = c1(U*) (degree 2) and c = c2(U*) (degree 4) with rational
 * coefficients, truncated above cohomological degree 8. Keyed by the
 * exponents (i, j) of H^i c^j.
 */
class FanoPoly {
public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  FanoPoly() = default;
  FanoPoly(const Rational& constant); // NOLINT: scalars embed as constants

  static FanoPoly H() { return monomial(1, 0); }
  static FanoPoly c() { return monomial(0, 1); }
  static FanoPoly monomial(int h_power, int c_power, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int h_power, int c_power) const;

  // Homogeneous component of the given cohomological degree.
  FanoPoly part(int degree) const;
  bool is_homogeneous(int degree) const;

  FanoPoly& operator+=(const FanoPoly& other);
  FanoPoly& operator-=(const FanoPoly& other);
  friend FanoPoly operator+(FanoPoly a, const FanoPoly& b) { return a += b; }
  friend FanoPoly operator-(FanoPoly a, const FanoPoly& b) { return a -= b; }
  friend FanoPoly operator-(const FanoPoly& a) { return FanoPoly{} - a; }
  friend FanoPoly operator*(const FanoPoly& a, const FanoPoly& b);
  friend bool operator==(const FanoPoly&, const FanoPoly&) = default;

  std::string to_string() const;

private:
  void add_term(int i, int j, const Rational& c);

  Terms terms_;
};

FanoPoly pow(const FanoPoly& p, unsigned k);

// Inverse of a total class with constant term 1, truncated at degree 8.
FanoPoly inverse_total(const FanoPoly& p);

// Substitutes H -> sigma_1 = c1(U*) and c -> sigma_{1,1} = c2(U*).
GrClass to_grassmannian(const FanoPoly& p);

// Integral over F: the Schubert-calculus integral over Gr(2,6) of
// p * c4(Sym^3 U*). Throws DegreeMismatch unless p is homogeneous of degree 8.
Rational fano_integrate(const FanoPoly& p);

// Replaces each degree-6 and degree-8 component by its numerically equivalent
// multiple of H^3 and H^4 (pairing with H, resp. integration). Degrees 0..4
// are already numerically independent and are left alone.
FanoPoly numerical_normal_form(const FanoPoly& p);

/**
 * Polynomial in formal Chern roots a, b of U* (a + b = H, ab = c), truncated
 * above root degree 4.
 */
class RootPoly {
public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  RootPoly() = default;
  RootPoly(const Rational& constant); // NOLINT
  // alpha a + beta b.
  static RootPoly linear(const Rational& alpha, const Rational& beta);

  const Terms& terms() const { return terms_; }
  RootPoly& operator+=(const RootPoly& other);
  friend RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
  friend RootPoly operator*(const RootPoly& x, const RootPoly& y);

  bool is_symmetric() const;

private:
  void add_term(int i, int j, const Rational& c);
  Terms terms_;
};

// Rewrites a symmetric root polynomial in the elementary classes H and c.
// Throws std::invalid_argument for a non-symmetric input.
FanoPoly to_elementary(const RootPoly& p);

// Total Chern class prod (1 + root) of a bundle given by linear roots in a, b.
FanoPoly total_chern_from_roots(const std::vector<std::pair<Rational, Rational>>& roots);

// Graded Chern class c_k of a total class (degree 2k component).
FanoPoly chern_component(const FanoPoly& total, int k);

// Total class of the dual bundle: c_k -> (-1)^k c_k.
FanoPoly dual_total(const FanoPoly& total);

// Newton's identities between Chern classes and power sums of roots.
std::vector<FanoPoly> power_sums_from_total(const FanoPoly& total, int rank, int up_to);
FanoPoly total_from_power_sums(const std::vector<FanoPoly>& power_sums);

// Total Chern class of E (x) F from the total classes and ranks of E and F.
FanoPoly tensor_total(const FanoPoly& e, int rank_e, const FanoPoly& f, int rank_f);

struct ChernTools {
  FanoPoly q;            // c(Q_F)
  FanoPoly q_dual;       // c(Q_F^*)
  FanoPoly sym3_u_dual;  // c(Sym^3 U_F^*)
  FanoPoly sym2_u;       // c(Sym^2 U_F)
  FanoPoly tangent_gr;   // c(T_Gr(2,6)|_F) = c(U* (x) Q)
  FanoPoly tangent_f;    // c(T_F)
};

ChernTools chern_tools();

} // namespace hk
