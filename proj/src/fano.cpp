#include "hk/fano.hpp"

#include "hk/criterion.hpp"
#include "hk/errors.hpp"

#include <sstream>

namespace hk {

BundleRelation BundleRelation::displayed() {
  const FanoPoly h = FanoPoly::H();
  const FanoPoly c = FanoPoly::c();
  return {FanoPoly(3) * h, -(FanoPoly(2) * h * h + FanoPoly(4) * c),
          FanoPoly(make_rational(5, 3)) * pow(h, 3)};
}

BundleRelation BundleRelation::from_chern() {
  const FanoPoly sym2 = chern_tools().sym2_u;
  return {-chern_component(sym2, 1), -chern_component(sym2, 2), -chern_component(sym2, 3)};
}

PBClass PBClass::reduce(std::vector<FanoPoly> coeffs, const BundleRelation& rel) {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 3; --k) {
    const FanoPoly top = coeffs[k];
    coeffs[k] = FanoPoly{};
    coeffs[k - 1] += top * rel.h2;
    coeffs[k - 2] += top * rel.h1;
    coeffs[k - 3] += top * rel.h0;
  }
  coeffs.resize(3);
  return PBClass(coeffs[0], coeffs[1], coeffs[2]);
}

PBClass& PBClass::operator+=(const PBClass& other) {
  for (int k = 0; k < 3; ++k)
    coeffs_[k] += other.coeffs_[k];
  return *this;
}

PBClass PBClass::multiply(const PBClass& other, const BundleRelation& rel) const {
  std::vector<FanoPoly> out(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return reduce(std::move(out), rel);
}

PBClass PBClass::normal_form() const {
  return PBClass(numerical_normal_form(coeffs_[0]), numerical_normal_form(coeffs_[1]),
                 numerical_normal_form(coeffs_[2]));
}

std::string PBClass::to_string() const {
  std::ostringstream os;
  os << "(" << coeffs_[2].to_string() << ") h^2 + (" << coeffs_[1].to_string() << ") h + ("
     << coeffs_[0].to_string() << ")";
  return os.str();
}

PBClass h_power(int k, const BundleRelation& rel) {
  std::vector<FanoPoly> coeffs(std::max(3, k + 1));
  coeffs[k] = FanoPoly(1);
  return PBClass::reduce(std::move(coeffs), rel);
}

PBClass sprime_class_raw() {
  const FanoPoly q_dual = chern_tools().q_dual;
  std::vector<FanoPoly> coeffs(5);
  for (int i = 0; i <= 4; ++i)
    coeffs[4 - i] = chern_component(q_dual, i);
  return PBClass::reduce(std::move(coeffs), BundleRelation::displayed());
}

PBClass sprime_reference() {
  const FanoPoly h = FanoPoly::H();
  const FanoPoly c = FanoPoly::c();
  return PBClass(FanoPoly(make_rational(10, 3)) * pow(h, 4),
                 FanoPoly(make_rational(-35, 6)) * pow(h, 3), FanoPoly(5) * (h * h - c));
}

PBClass sprime_class() {
  const PBClass computed = sprime_class_raw().normal_form();
  const PBClass expected = sprime_reference();
  if (!(computed == expected))
    throw ReferenceMismatch("[S'] reduces to " + computed.to_string() + ", expected " +
                            expected.to_string());
  return computed;
}

Lemma31Numbers lemma31_numbers() {
  const BundleRelation rel = BundleRelation::displayed();
  const PBClass s = sprime_class_raw();
  const FanoPoly h = FanoPoly::H();
  auto integral = [&](const PBClass& x) {
    return fano_integrate(s.multiply(x, rel).pushforward());
  };
  return {integral(PBClass::pullback(h * h)),
          integral(PBClass::pullback(h).multiply(PBClass::h(), rel)),
          integral(h_power(2, rel))};
}

Rational p1_bundle_pushforward(const Rational& h_xi_coeff, const Rational& xi2_coeff,
                               const Rational& normal_c1) {
  return h_xi_coeff - xi2_coeff * normal_c1;
}

EigenvalueChain eigenvalue_chain() {
  // (7H + 3 xi)^2 = 49 H^2 + 42 H xi + 9 xi^2; the H^2 term pushes forward to 0.
  // c1(N_{S/F}) = 3 H_S.
  const Rational push = p1_bundle_pushforward(42, 9, 3);
  const Rational surface = lemma31_numbers().h_squared;
  const FanoPoly h = FanoPoly::H();
  const FanoPoly c = FanoPoly::c();
  const Rational c2 = fano_integrate(c * c);
  const Rational h2c = fano_integrate(h * h * c);
  EigenvalueChain chain;
  chain.pushforward = push;
  chain.n70875 = push * push * surface;
  chain.n42525 = chain.n70875 * c2 / h2c;
  chain.n945 = chain.n42525 / h2c;
  return chain;
}

bool ConsistencyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

ConsistencyReport consistency_web() {
  ConsistencyReport report;
  auto add = [&](std::string name, Rational lhs, Rational rhs) {
    const bool pass = lhs == rhs;
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
  };

  const Rational beta_norm = make_rational(3, 2);
  const BetaClass beta = BetaClass::make(2, beta_norm, 1);

  const Rational mult = multiplicity(beta);
  add("multiplicity(3/2)", mult, 120);
  add("divisor pushforward", mult * make_rational(1, 2), 60);

  const FanoPoly h = FanoPoly::H();
  const FanoPoly v = FanoPoly(make_rational(1, 4)) *
                     (FanoPoly(5) * h * h - chern_component(chern_tools().tangent_f, 2));
  add("v coefficient of H^2", v.coefficient(2, 0), 0);
  add("v coefficient of c", v.coefficient(0, 1), 2);
  add("integral of v^2", fano_integrate(v * v), 48 * beta_norm * beta_norm);

  add("lambda2(3/2)", eigenvalues(beta).lambda2, eigenvalue_chain().n945);
  return report;
}

} // namespace hk
