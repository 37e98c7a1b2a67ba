#include "hk/errors.hpp"
#include "hk/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace hk;

namespace {

QYSeries random_series(std::mt19937& gen, int q_min, int q_prec, int span) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  QYSeries::Rows rows;
  for (int d = q_min; d < q_prec; ++d)
    for (int r2 = -span; r2 <= span; r2 += 2)
      rows[d][r2] = coeff(gen);
  return QYSeries::from_rows(q_min, q_prec, rows);
}

} // namespace

TEST_CASE("monomials and constants are exact") {
  const QYSeries m = QYSeries::monomial(2, -3, 5);
  CHECK(m.exact());
  CHECK(m.coeff_at(2, -3) == 5);
  CHECK(m.coeff_at(100, 0) == 0);
  CHECK(m.q_min() == 2);
  CHECK(QYSeries().is_zero());
}

TEST_CASE("coefficients beyond precision throw") {
  const QYSeries s = QYSeries::from_rows(0, 3, {{0, {{0, 1}}}});
  CHECK_THROWS_AS(s.coeff_at(3, 0), PrecisionExceeded);
  CHECK(s.coeff_at(-1, 0) == 0);
}

TEST_CASE("product precision follows the valuations") {
  const QYSeries a = QYSeries::from_rows(-1, 4, {{-1, {{0, 1}}}});
  const QYSeries b = QYSeries::from_rows(0, 6, {{0, {{0, 1}}}, {1, {{2, 3}}}});
  const QYSeries p = a * b;
  CHECK(p.q_prec() == 4);
  CHECK(p.coeff_at(0, 2) == 3);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 gen(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    const QYSeries a = random_series(gen, 0, 5, 4);
    const QYSeries b = random_series(gen, -1, 5, 2);
    const QYSeries c = random_series(gen, 0, 6, 6);
    CHECK((a * b).same_terms(b * a));
    CHECK(((a * b) * c).same_terms(a * (b * c)));
    CHECK((a * (b + c)).same_terms(a * b + a * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("y d/dy and q d/dq are derivations") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    const QYSeries a = random_series(gen, 0, 5, 3);
    const QYSeries b = random_series(gen, 0, 5, 5);
    CHECK(dy(a * b).same_terms(dy(a) * b + a * dy(b)));
    CHECK(dq(a * b).same_terms(dq(a) * b + a * dq(b)));
  }
}

TEST_CASE("heat operator acts diagonally on monomials") {
  for (int m = 1; m <= 3; ++m)
    for (int d = -1; d <= 3; ++d)
      for (int r = -4; r <= 4; ++r) {
        const QYSeries mono = QYSeries::monomial(d, 2 * r, 1);
        const Rational eigen = Rational(2 * d) - make_rational(r * r, 2 * m);
        CHECK(heat(m, mono) == QYSeries::monomial(d, 2 * r, eigen));
      }
}

TEST_CASE("inversion of q-units") {
  std::mt19937 gen(11);
  const QYSeries one = QYSeries::constant(1);
  for (int trial = 0; trial < 10; ++trial) {
    QYSeries::Rows rows;
    std::uniform_int_distribution<int> coeff(-3, 3);
    rows[1][0] = 2;
    for (int d = 2; d < 8; ++d)
      rows[d][0] = coeff(gen);
    const QYSeries a = QYSeries::from_rows(1, 8, rows);
    const QYSeries inv = invert_q_unit(a);
    CHECK(inv.q_min() == -1);
    CHECK(inv.q_prec() == 6);
    CHECK((a * inv).same_terms(one.truncated((a * inv).q_prec())));
  }
  CHECK_THROWS_AS(invert_q_unit(QYSeries::monomial(0, 2, 1)), NotInvertible);
  CHECK_THROWS_AS(invert_q_unit(QYSeries()), NotInvertible);
  CHECK(invert_q_unit(QYSeries::monomial(3, 0, 2)) == QYSeries::monomial(-3, 0, make_rational(1, 2)));
}

TEST_CASE("windowed products") {
  const QYSeries w = QYSeries::from_rows(0, 4, {{0, {{0, 1}, {4, 1}, {-4, 1}}}}, 4);
  const QYSeries u = QYSeries::from_rows(0, 4, {{0, {{2, 1}, {-2, 1}}}});
  const QYSeries p = mul(w, u);
  REQUIRE(p.y_window2().has_value());
  CHECK(*p.y_window2() == 2);
  CHECK(p.coeff_at(0, 2) == 2);
  CHECK_THROWS_AS(p.coeff_at(0, 6), WindowExceeded);
  CHECK_THROWS_AS(mul(w, w), WindowUnderflow);
}
