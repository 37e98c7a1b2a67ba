#include "hk/schubert.hpp"

#include <doctest.h>

#include <random>

using namespace hk;

namespace {

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i)
    c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

GrClass power(const GrClass& x, int k) {
  GrClass out = GrClass::one();
  for (int i = 0; i < k; ++i)
    out = out * x;
  return out;
}

} // namespace

TEST_CASE("Pieri basics") {
  const GrClass s1 = GrClass::sigma(1);
  CHECK(s1 * s1 == GrClass::sigma(2) + GrClass::sigma(1, 1));
  CHECK((GrClass::sigma(4, 4) * s1).is_zero());
  CHECK(gr_integrate(GrClass::sigma(4, 4)) == 1);
  CHECK(gr_integrate(GrClass::sigma(2) * GrClass::sigma(2, 2)) == 0);
  CHECK(GrClass::sigma(5).is_zero());
  CHECK_THROWS_AS(GrClass::sigma(1, 2), std::invalid_argument);
}

TEST_CASE("sigma_1^8 on Gr(2,6)") { CHECK(gr_integrate(power(GrClass::sigma(1), 8)) == 14); }

TEST_CASE("c1^a c2^b integrals are Catalan numbers") {
  const GrClass c1 = GrClass::sigma(1);
  const GrClass c2 = GrClass::sigma(1, 1);
  for (int b = 0; b <= 4; ++b) {
    const int a = 8 - 2 * b;
    CAPTURE(b);
    CHECK(gr_integrate(power(c1, a) * power(c2, b)) == catalan(4 - b));
  }
}

TEST_CASE("Schubert duality") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= c; ++d) {
          if (a + b + c + d != 8)
            continue;
          const bool dual = c == 4 - b && d == 4 - a;
          CHECK(gr_integrate(GrClass::sigma(a, b) * GrClass::sigma(c, d)) == (dual ? 1 : 0));
        }
}

TEST_CASE("the product is commutative and associative") {
  std::vector<std::pair<int, int>> parts;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      parts.emplace_back(a, b);
  std::mt19937 gen(5);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_class = [&] {
    GrClass g;
    for (int k = 0; k < 3; ++k) {
      const auto [a, b] = parts[pick(gen)];
      g += Rational(coeff(gen)) * GrClass::sigma(a, b);
    }
    return g;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const GrClass x = random_class(), y = random_class(), z = random_class();
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
  }
}
