#include "hk/chern.hpp"

#include "hk/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hk {

namespace {

int fano_degree(int i, int j) { return 2 * i + 4 * j; }

} // namespace

FanoPoly::FanoPoly(const Rational& constant) { add_term(0, 0, constant); }

FanoPoly FanoPoly::monomial(int h_power, int c_power, const Rational& coeff) {
  if (h_power < 0 || c_power < 0)
    throw std::invalid_argument("negative exponent in FanoPoly monomial");
  FanoPoly p;
  p.add_term(h_power, c_power, coeff);
  return p;
}

void FanoPoly::add_term(int i, int j, const Rational& c) {
  if (fano_degree(i, j) > kFanoTopDegree || sgn(c) == 0)
    return;
  auto& slot = terms_[{i, j}];
  slot += c;
  if (sgn(slot) == 0)
    terms_.erase({i, j});
}

Rational FanoPoly::coefficient(int h_power, int c_power) const {
  const auto it = terms_.find({h_power, c_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

FanoPoly FanoPoly::part(int degree) const {
  FanoPoly out;
  for (const auto& [key, c] : terms_)
    if (fano_degree(key.first, key.second) == degree)
      out.add_term(key.first, key.second, c);
  return out;
}

bool FanoPoly::is_homogeneous(int degree) const {
  for (const auto& [key, c] : terms_)
    if (fano_degree(key.first, key.second) != degree)
      return false;
  return true;
}

FanoPoly& FanoPoly::operator+=(const FanoPoly& other) {
  for (const auto& [key, c] : other.terms_)
    add_term(key.first, key.second, c);
  return *this;
}

FanoPoly& FanoPoly::operator-=(const FanoPoly& other) {
  for (const auto& [key, c] : other.terms_)
    add_term(key.first, key.second, -c);
  return *this;
}

FanoPoly operator*(const FanoPoly& a, const FanoPoly& b) {
  FanoPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

std::string FanoPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool bare = key.first == 0 && key.second == 0;
    Rational shown = c;
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    shown = abs(c);
    if (bare || shown != 1)
      os << hk::to_string(shown);
    if (key.first > 0)
      os << (bare || shown != 1 ? "*" : "") << "H" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0)
      os << (key.first > 0 || shown != 1 ? "*" : "") << "c"
         << (key.second > 1 ? "^" + std::to_string(key.second) : "");
    first = false;
  }
  return os.str();
}

FanoPoly pow(const FanoPoly& p, unsigned k) {
  FanoPoly out(1);
  for (unsigned i = 0; i < k; ++i)
    out = out * p;
  return out;
}

FanoPoly inverse_total(const FanoPoly& p) {
  if (p.coefficient(0, 0) != 1)
    throw std::invalid_argument("total class must have constant term 1");
  // 1/(1 + x) = sum (-x)^k; x is nilpotent beyond degree 8.
  const FanoPoly x = p - FanoPoly(1);
  FanoPoly out(1);
  FanoPoly term(1);
  for (int k = 1; k <= kFanoTopDegree / 2; ++k) {
    term = term * (-x);
    out += term;
  }
  return out;
}

GrClass to_grassmannian(const FanoPoly& p) {
  const GrClass c1 = GrClass::sigma(1, 0);
  const GrClass c2 = GrClass::sigma(1, 1);
  GrClass out;
  for (const auto& [key, coeff] : p.terms()) {
    GrClass m = GrClass::one();
    for (int i = 0; i < key.first; ++i)
      m = pieri_mul(m, c1);
    for (int j = 0; j < key.second; ++j)
      m = pieri_mul(m, c2);
    out += coeff * m;
  }
  return out;
}

namespace {

const GrClass& fano_fundamental_class() {
  // [F] = c4(Sym^3 U*) on Gr(2,6).
  static const GrClass cls = [] {
    const FanoPoly sym3 = total_chern_from_roots({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    return to_grassmannian(chern_component(sym3, 4));
  }();
  return cls;
}

} // namespace

Rational fano_integrate(const FanoPoly& p) {
  if (!p.is_homogeneous(kFanoTopDegree))
    throw DegreeMismatch("integration over F needs a class of degree 8, got " + p.to_string());
  return gr_integrate(pieri_mul(to_grassmannian(p), fano_fundamental_class()));
}

FanoPoly numerical_normal_form(const FanoPoly& p) {
  const FanoPoly h = FanoPoly::H();
  const Rational h4 = fano_integrate(pow(h, 4));
  FanoPoly out;
  for (int degree = 0; degree < 6; degree += 2)
    out += p.part(degree);
  const FanoPoly d6 = p.part(6);
  out += FanoPoly::monomial(3, 0, fano_integrate(d6 * h) / h4);
  out += FanoPoly::monomial(4, 0, fano_integrate(p.part(8)) / h4);
  return out;
}

// ---------------------------------------------------------------------------

RootPoly::RootPoly(const Rational& constant) { add_term(0, 0, constant); }

RootPoly RootPoly::linear(const Rational& alpha, const Rational& beta) {
  RootPoly p;
  p.add_term(1, 0, alpha);
  p.add_term(0, 1, beta);
  return p;
}

void RootPoly::add_term(int i, int j, const Rational& c) {
  if (2 * (i + j) > kFanoTopDegree || sgn(c) == 0)
    return;
  auto& slot = terms_[{i, j}];
  slot += c;
  if (sgn(slot) == 0)
    terms_.erase({i, j});
}

RootPoly& RootPoly::operator+=(const RootPoly& other) {
  for (const auto& [key, c] : other.terms_)
    add_term(key.first, key.second, c);
  return *this;
}

RootPoly operator*(const RootPoly& x, const RootPoly& y) {
  RootPoly out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

bool RootPoly::is_symmetric() const {
  for (const auto& [key, c] : terms_) {
    const auto it = terms_.find({key.second, key.first});
    if (it == terms_.end() || it->second != c)
      return false;
  }
  return true;
}

FanoPoly to_elementary(const RootPoly& p) {
  if (!p.is_symmetric())
    throw std::invalid_argument("root polynomial is not symmetric in a, b");
  const RootPoly e1 = RootPoly::linear(1, 1);
  RootPoly e2;
  e2 += RootPoly::linear(1, 0) * RootPoly::linear(0, 1);

  RootPoly rest = p;
  FanoPoly out;
  while (!rest.terms().empty()) {
    // Lex-leading monomial a^i b^j has i >= j for symmetric input.
    const auto [key, c] = *rest.terms().rbegin();
    const int i = key.first, j = key.second;
    RootPoly m(1);
    for (int k = 0; k < i - j; ++k)
      m = m * e1;
    for (int k = 0; k < j; ++k)
      m = m * e2;
    rest += RootPoly(-c) * m;
    out += FanoPoly::monomial(i - j, j, c);
  }
  return out;
}

FanoPoly total_chern_from_roots(const std::vector<std::pair<Rational, Rational>>& roots) {
  RootPoly total(1);
  for (const auto& [alpha, beta] : roots)
    total = total * (RootPoly(1) + RootPoly::linear(alpha, beta));
  return to_elementary(total);
}

FanoPoly chern_component(const FanoPoly& total, int k) { return total.part(2 * k); }

FanoPoly dual_total(const FanoPoly& total) {
  FanoPoly out;
  for (int k = 0; k <= kFanoTopDegree / 2; ++k) {
    const FanoPoly ck = chern_component(total, k);
    out += k % 2 == 0 ? ck : -ck;
  }
  return out;
}

std::vector<FanoPoly> power_sums_from_total(const FanoPoly& total, int rank, int up_to) {
  std::vector<FanoPoly> e(up_to + 1), p(up_to + 1);
  for (int k = 0; k <= up_to; ++k)
    e[k] = chern_component(total, k);
  p[0] = FanoPoly(rank);
  for (int k = 1; k <= up_to; ++k) {
    // p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1+i) e_{k-i} p_i
    FanoPoly acc = FanoPoly((k % 2 == 1) ? k : -k) * e[k];
    for (int i = 1; i < k; ++i) {
      const FanoPoly t = e[k - i] * p[i];
      acc += ((k - 1 + i) % 2 == 0) ? t : -t;
    }
    p[k] = acc;
  }
  return p;
}

FanoPoly total_from_power_sums(const std::vector<FanoPoly>& power_sums) {
  const int up_to = static_cast<int>(power_sums.size()) - 1;
  std::vector<FanoPoly> e(up_to + 1);
  e[0] = FanoPoly(1);
  FanoPoly total(1);
  for (int k = 1; k <= up_to; ++k) {
    // k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i
    FanoPoly acc;
    for (int i = 1; i <= k; ++i) {
      const FanoPoly t = e[k - i] * power_sums[i];
      acc += (i % 2 == 1) ? t : -t;
    }
    e[k] = FanoPoly(Rational(1, k)) * acc;
    total += e[k];
  }
  return total;
}

FanoPoly tensor_total(const FanoPoly& e, int rank_e, const FanoPoly& f, int rank_f) {
  const int up_to = kFanoTopDegree / 2;
  const auto pe = power_sums_from_total(e, rank_e, up_to);
  const auto pf = power_sums_from_total(f, rank_f, up_to);
  std::vector<FanoPoly> p(up_to + 1);
  for (int k = 0; k <= up_to; ++k) {
    Integer binom = 1;
    for (int l = 0; l <= k; ++l) {
      p[k] += FanoPoly(Rational(binom)) * pe[l] * pf[k - l];
      binom = binom * (k - l) / (l + 1);
    }
  }
  return total_from_power_sums(p);
}

ChernTools chern_tools() {
  ChernTools t;
  const FanoPoly h = FanoPoly::H();
  const FanoPoly c = FanoPoly::c();
  // 0 -> U -> C^6 -> Q -> 0 and c(U) = 1 - H + c.
  t.q = inverse_total(FanoPoly(1) - h + c);
  t.q_dual = dual_total(t.q);
  t.sym3_u_dual = total_chern_from_roots({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  t.sym2_u = total_chern_from_roots({{-2, 0}, {-1, -1}, {0, -2}});
  t.tangent_gr = tensor_total(FanoPoly(1) + h + c, 2, t.q, 4);
  // 0 -> T_F -> T_Gr|_F -> Sym^3 U_F^* -> 0.
  t.tangent_f = t.tangent_gr * inverse_total(t.sym3_u_dual);
  return t;
}

} // namespace hk
