#include "hk/schubert.hpp"

#include <stdexcept>

namespace hk {

GrClass GrClass::sigma(int a, int b) {
  if (b < 0 || b > a)
    throw std::invalid_argument("Schubert index needs a >= b >= 0");
  GrClass g;
  g.add_term(a, b, 1);
  return g;
}

void GrClass::add_term(int a, int b, const Rational& c) {
  if (a > kGrassmannianCols || b < 0 || b > a)
    return;
  auto& slot = terms_[{a, b}];
  slot += c;
  if (sgn(slot) == 0)
    terms_.erase({a, b});
}

Rational GrClass::coefficient(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

GrClass& GrClass::operator+=(const GrClass& other) {
  for (const auto& [key, c] : other.terms_)
    add_term(key.first, key.second, c);
  return *this;
}

GrClass operator-(GrClass a, const GrClass& b) {
  for (const auto& [key, c] : b.terms_)
    a.add_term(key.first, key.second, -c);
  return a;
}

GrClass operator*(const Rational& c, GrClass a) {
  if (sgn(c) == 0)
    return GrClass{};
  for (auto& [key, x] : a.terms_)
    x *= c;
  return a;
}

GrClass pieri_special(const GrClass& x, int k) {
  if (k < 0 || k > kGrassmannianCols)
    return GrClass{};
  GrClass out;
  for (const auto& [key, c] : x.terms()) {
    const auto [a, b] = key;
    // Add k boxes, no two in the same column: b <= e <= a <= f.
    for (int e = b; e <= a; ++e) {
      const int f = a + b + k - e;
      if (f >= a && f <= kGrassmannianCols)
        out += c * GrClass::sigma(f, e);
    }
  }
  return out;
}

GrClass pieri_mul(const GrClass& x, const GrClass& y) {
  GrClass out;
  for (const auto& [key, c] : y.terms()) {
    const auto [a, b] = key;
    GrClass term = pieri_special(pieri_special(x, a), b);
    if (b >= 1)
      term = term - pieri_special(pieri_special(x, a + 1), b - 1);
    out += c * term;
  }
  return out;
}

Rational gr_integrate(const GrClass& p) {
  return p.coefficient(kGrassmannianCols, kGrassmannianCols);
}

} // namespace hk
