#pragma once

#include "hk/rational.hpp"

#include <map>
#include <utility>

namespace hk {

// Cohomology of Gr(2,6): Schubert classes sigma_{a,b} with 4 >= a >= b >= 0.
inline constexpr int kGrassmannianRows = 2;
inline constexpr int kGrassmannianCols = 4;

/**
 * Rational linear combination of Schubert classes on Gr(2,6), keyed by the
 * partition (a, b). sigma_{4,4} is the point class.
 */
class GrClass {
public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  GrClass() = default;

  // sigma_{a,b}; zero outside the 2x4 box. Throws if b > a or b < 0.
  static GrClass sigma(int a, int b = 0);
  static GrClass one() { return sigma(0, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a, int b) const;

  GrClass& operator+=(const GrClass& other);
  friend GrClass operator+(GrClass a, const GrClass& b) { return a += b; }
  friend GrClass operator-(GrClass a, const GrClass& b);
  friend GrClass operator*(const Rational& c, GrClass a);
  friend bool operator==(const GrClass&, const GrClass&) = default;

private:
  void add_term(int a, int b, const Rational& c);

  Terms terms_;
};

// Product by the special class sigma_k (Pieri rule), truncated to the box.
GrClass pieri_special(const GrClass& x, int k);

// Full product: sigma_{a,b} is expanded by Giambelli as
// sigma_a sigma_b - sigma_{a+1} sigma_{b-1} and each factor applied by Pieri.
GrClass pieri_mul(const GrClass& x, const GrClass& y);

// Coefficient of the point class sigma_{4,4}.
Rational gr_integrate(const GrClass& p);

inline GrClass operator*(const GrClass& a, const GrClass& b) { return pieri_mul(a, b); }

} // namespace hk
