#include "hk/errors.hpp"
#include "hk/jacobi.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace hk;

TEST_CASE("theta agrees with the triple product expansion") {
  const int q = 12;
  const JacobiElement t = theta(q);
  CHECK(t.weight() == -1);
  CHECK(t.index_halves() == 1);
  CHECK_FALSE(t.index().has_value());
  CHECK(oracle::mismatches(t.series(), oracle::theta_triple_product(q), q) == 0);
}

TEST_CASE("theta is supported on half-integral y-exponents") {
  theta(10).series().for_each_term([](int, int r2, const Rational&) { CHECK(r2 % 2 != 0); });
}

TEST_CASE("delta and its inverse against partition-style expansions") {
  const int q = 12;
  const JacobiElement d = delta(q);
  oracle::Dense dq = oracle::delta_over_q(q - 1);
  dq.shift = 1;
  CHECK(oracle::mismatches(d.series(), dq, q - 1) == 0);
  CHECK(d.coeff_at(1, 0) == 1);
  CHECK(d.coeff_at(2, 0) == -24);
  CHECK(d.coeff_at(3, 0) == 252);

  const JacobiElement inv = invert(delta(q + 2));
  oracle::Dense iq = oracle::q_over_delta(q);
  iq.shift = -1;
  CHECK(oracle::mismatches(inv.series(), iq, q) == 0);
  CHECK(inv.weight() == -12);
}

TEST_CASE("Bernoulli numbers and Eisenstein normalisation") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(6) == make_rational(1, 42));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK(eisenstein(2, 4).coeff_at(1, 0) == -24);
  CHECK(eisenstein(4, 4).coeff_at(1, 0) == 240);
  CHECK(eisenstein(6, 4).coeff_at(1, 0) == -504);
  CHECK(eisenstein(4, 4).coeff_at(2, 0) == 240 * 9);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
  const int q = 10;
  const QYSeries e4 = eisenstein(4, q).series();
  const QYSeries e6 = eisenstein(6, q).series();
  const QYSeries lhs = pow(e4, 3) - e6 * e6;
  CHECK(lhs.same_terms(scale(1728, delta(q).series())));
}

TEST_CASE("phi from derivatives equals the convolution formula") {
  const JacobiElement a = phi(10);
  const JacobiElement b = phi_via_convolution(10);
  CHECK(a.series() == b.series());
  CHECK(a.coeff_at(0, 0) == 1);
  CHECK(a.index() == 1);
}

TEST_CASE("phi_{0,1} without wp agrees with 12 wp Theta^2 inside the window") {
  const int q = 6;
  const int window = 8;
  const QYSeries free_form = named_form(FormName::Phi0_1, q).series();
  const QYSeries via_wp =
      scale(12, mul(wp_windowed(q, window).series(), named_form(FormName::PhiMinus2_1, q).series()));
  REQUIRE(via_wp.y_window2().has_value());
  const int w2 = *via_wp.y_window2();
  CHECK(w2 > 0);
  CHECK(via_wp.q_prec() == q);
  int compared = 0;
  for (int d = 0; d < q; ++d)
    for (int r2 = -w2; r2 <= w2; r2 += 2) {
      CHECK(free_form.coeff_at(d, r2) == via_wp.coeff_at(d, r2));
      ++compared;
    }
  CHECK(compared > 0);
  free_form.for_each_term([&](int, int r2, const Rational&) { CHECK(std::abs(r2) <= w2); });
}

TEST_CASE("named forms at q^0") {
  const QYSeries t2 = named_form(FormName::PhiMinus2_1, 4).series();
  CHECK(t2.coeff_at(0, 2) == 1);
  CHECK(t2.coeff_at(0, 0) == 2);
  CHECK(t2.coeff_at(0, -2) == 1);
  const QYSeries p01 = named_form(FormName::Phi0_1, 4).series();
  CHECK(p01.coeff_at(0, 0) == -10);
  CHECK(p01.coeff_at(0, 2) == 1);
  CHECK(named_form(FormName::F, 4).coeff_at(-1, 0) == 1);
  CHECK(named_form(FormName::G, 4).coeff_at(-1, 0) == 0);
  CHECK(named_form(FormName::G, 4).coeff_at(-1, 2) == make_rational(-6, 5));
}

TEST_CASE("parse_form_name") {
  CHECK(parse_form_name("f") == FormName::F);
  CHECK(parse_form_name("phi_m21") == FormName::PhiMinus2_1);
  CHECK_FALSE(parse_form_name("psi").has_value());
}

TEST_CASE("Jacobi coefficients depend only on invariant and residue") {
  const int q = 10;
  const JacobiElement p = phi(q);
  struct Case {
    const char* name;
    JacobiElement form;
    int index;
  };
  const Case cases[] = {
      {"theta^2", named_form(FormName::PhiMinus2_1, q), 1},
      {"phi", p, 1},
      {"phi^2", p * p, 2},
      {"f", named_form(FormName::F, q), 1},
      {"g", named_form(FormName::G, q), 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto bad = oracle::first_ill_defined(c.form, c.index, q, 12);
    CHECK_FALSE(bad.has_value());
  }
}

TEST_CASE("phi is positive exactly on nonnegative invariants") {
  const int q = 10;
  const JacobiElement p = phi(q);
  for (int d = 0; d < q; ++d)
    for (int r = -14; r <= 14; ++r) {
      const Rational inv = invariant(1, d, r);
      CAPTURE(d);
      CAPTURE(r);
      CHECK((sgn(p.coeff_at(d, 2 * r)) > 0) == (sgn(inv) >= 0));
    }
}

TEST_CASE("residue sets") {
  const ResidueSet a(5, 14);
  CHECK(a.values() == std::vector<int>{5, 9});
  CHECK(a.contains(-5));
  CHECK(a.contains(23));
  CHECK_FALSE(a.contains(4));
  CHECK(a.min_representative() == 5);
  CHECK(ResidueSet(-1, 2) == ResidueSet(1, 2));
  CHECK(ResidueSet(3, 0).values() == std::vector<int>{0});
  CHECK(ResidueSet(4, 6).min_representative() == 2);
  CHECK_THROWS_AS(ResidueSet(1, -2), std::invalid_argument);
}

TEST_CASE("coefficient extraction") {
  const JacobiElement m2 = phi_pow_over_delta(2, 12);
  CHECK(jcoeff(m2, make_rational(3, 2), ResidueSet(1, 2)) == 120);
  CHECK(jcoeff(m2, -2, ResidueSet(0, 2)) == 1);
  CHECK(jcoeff(named_form(FormName::G, 12), make_rational(-5, 2), ResidueSet(1, 2)) ==
        make_rational(-6, 5));
  CHECK(jcoeff(phi_pow_over_delta(1, 12), 4, ResidueSet(0, 0)) == 3200);
  CHECK(jcoeff_q_order(7, make_rational(3, 14), ResidueSet(5, 14)) == 1);
  CHECK_THROWS_AS(jcoeff_q_order(1, make_rational(1, 2), ResidueSet(0, 2)), InadmissiblePair);
  CHECK_THROWS_AS(jcoeff_q_order(2, 0, ResidueSet(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(jcoeff(m2, 100, ResidueSet(0, 2)), PrecisionExceeded);
}

TEST_CASE("cached powers agree with a direct computation") {
  const JacobiElement wide = phi_pow_over_delta(3, 12);
  const JacobiElement narrow = phi_pow_over_delta(3, 6);
  CHECK(narrow.series() == wide.series().truncated(6));
  const JacobiElement p = phi(14);
  const JacobiElement direct = p * p * invert(delta(14));
  CHECK(wide.series().same_terms(direct.series().truncated(12)));
  CHECK(wide.index() == 2);
}
