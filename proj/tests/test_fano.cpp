#include "hk/errors.hpp"
#include "hk/fano.hpp"

#include <doctest.h>

using namespace hk;

namespace {
const FanoPoly H = FanoPoly::H();
const FanoPoly C = FanoPoly::c();
} // namespace

TEST_CASE("bundle relations agree numerically") {
  const BundleRelation shown = BundleRelation::displayed();
  const BundleRelation chern = BundleRelation::from_chern();
  CHECK(shown.h2 == chern.h2);
  CHECK(shown.h1 == chern.h1);
  CHECK(chern.h0 == FanoPoly(4) * H * C);
  CHECK(shown.h0 != chern.h0);
  CHECK(numerical_normal_form(shown.h0) == numerical_normal_form(chern.h0));
}

TEST_CASE("pushforward of powers of h") {
  const BundleRelation rel = BundleRelation::displayed();
  CHECK(h_power(0, rel).pushforward().is_zero());
  CHECK(h_power(1, rel).pushforward().is_zero());
  CHECK(h_power(2, rel).pushforward() == FanoPoly(1));
  CHECK(h_power(3, rel).pushforward() == FanoPoly(3) * H);
  CHECK(h_power(4, rel).pushforward() == FanoPoly(7) * H * H - FanoPoly(4) * C);
}

TEST_CASE("pushforward is linear over F") {
  const BundleRelation rel = BundleRelation::displayed();
  const PBClass x(H, C, H * H);
  const PBClass y(C, FanoPoly(2), H);
  const PBClass s = x + y;
  CHECK(s.pushforward() == x.pushforward() + y.pushforward());
  const PBClass hx = PBClass::pullback(H).multiply(x, rel);
  CHECK(hx.pushforward() == H * x.pushforward());
}

TEST_CASE("products respect the relation") {
  const BundleRelation rel = BundleRelation::displayed();
  const PBClass h = PBClass::h();
  CHECK(h.multiply(h, rel).multiply(h, rel) == h_power(3, rel));
  CHECK(h_power(2, rel).multiply(h_power(2, rel), rel) == h_power(4, rel));
}

TEST_CASE("the class of S'") {
  const PBClass raw = sprime_class_raw();
  CHECK(raw.coefficient(2) == FanoPoly(5) * (H * H - C));
  CHECK(raw.coefficient(1) ==
        FanoPoly(make_rational(-10, 3)) * pow(H, 3) - FanoPoly(6) * H * C);
  CHECK(raw.coefficient(0) == FanoPoly(make_rational(13, 3)) * pow(H, 4) -
                                  FanoPoly(3) * H * H * C + C * C);
  CHECK(sprime_class() == sprime_reference());
  CHECK(sprime_class().coefficient(1) == FanoPoly(make_rational(-35, 6)) * pow(H, 3));
}

TEST_CASE("lemma numbers on S'") {
  const Lemma31Numbers l = lemma31_numbers();
  CHECK(l.h_squared == 315);
  CHECK(l.h_times_h == 315);
  CHECK(l.h2 == 315);
  CHECK(l.h_squared + l.h2 - 2 * l.h_times_h == 0);
}

TEST_CASE("eigenvalue chain") {
  CHECK(p1_bundle_pushforward(42, 9, 3) == 15);
  CHECK(p1_bundle_pushforward(0, 1, 0) == 0);
  const EigenvalueChain e = eigenvalue_chain();
  CHECK(e.pushforward == 15);
  CHECK(e.n70875 == 70875);
  CHECK(e.n42525 == 42525);
  CHECK(e.n945 == 945);
  CHECK(e.n70875 == e.pushforward * e.pushforward * 315);
  CHECK(e.n42525 * 45 == e.n70875 * 27);
  CHECK(e.n945 * 45 == e.n42525);
}

TEST_CASE("consistency web") {
  const ConsistencyReport r = consistency_web();
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 6);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.lhs == c.rhs);
  }
}
