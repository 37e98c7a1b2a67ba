#include "hk/criterion.hpp"

#include "hk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hk {

BetaClass BetaClass::make(int n, const Rational& norm, int residue) {
  if (n < 1)
    throw std::invalid_argument("n must be at least 1");
  if (n == 1) {
    if (!is_integer(norm) || norm.get_num() % 2 != 0)
      throw InadmissiblePair("for n = 1 the norm must be an even integer, got " + to_string(norm));
    return BetaClass(1, norm, ResidueSet(0, 0));
  }
  const int modulus = 2 * n - 2;
  if (Integer(modulus) % norm.get_den() != 0)
    throw InadmissiblePair("denominator of norm " + to_string(norm) + " does not divide " +
                           std::to_string(modulus));
  ResidueSet rho(residue, modulus);
  jcoeff_q_order(n - 1, norm, rho); // throws when inadmissible
  return BetaClass(n, norm, std::move(rho));
}

Rational multiplicity(const BetaClass& beta) {
  const long d = jcoeff_q_order(beta.index(), beta.norm(), beta.residue());
  const int q_prec = static_cast<int>(std::max<long>(kDefaultPrecision, d + 2));
  return jcoeff(phi_pow_over_delta(beta.n(), q_prec), beta.norm(), beta.residue());
}

UniruledDecision decide_uniruled(const BetaClass& beta) {
  Rational m = multiplicity(beta);
  // Every coefficient of phi^(n-1)/Delta is nonnegative, so positivity is
  // the same as nonvanishing.
  return {sgn(m) > 0, std::move(m)};
}

namespace {

void enumerate_nondecreasing(int length, int lo, int hi, std::vector<int>& current,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(current);
    return;
  }
  const int start = current.empty() ? lo : current.back();
  for (int v = start; v <= hi; ++v) {
    current.push_back(v);
    enumerate_nondecreasing(length, lo, hi, current, out);
    current.pop_back();
  }
}

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

} // namespace

std::optional<Witness> search_witness(const BetaClass& beta, int r_bound, int d_bound) {
  if (r_bound < 0 || d_bound < 0)
    throw std::invalid_argument("search bounds must be nonnegative");
  const int k = beta.n() - 1;
  if (k == 0) {
    if (beta.norm() == -2)
      return Witness{};
    return std::nullopt;
  }

  std::vector<std::vector<int>> vectors;
  std::vector<int> current;
  enumerate_nondecreasing(k, -r_bound, r_bound, current, vectors);
  auto key = [](const std::vector<int>& v) {
    long abs_sum = 0, sum = 0;
    for (int x : v) {
      abs_sum += std::abs(x);
      sum += x;
    }
    return std::make_tuple(abs_sum, -sum);
  };
  std::stable_sort(vectors.begin(), vectors.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });

  const long modulus = 2L * k;
  for (const auto& rs : vectors) {
    const long sum = std::accumulate(rs.begin(), rs.end(), 0L);
    if (!beta.residue().contains(sum))
      continue;
    const Rational total = beta.norm() + 2 + make_rational(sum * sum, modulus);
    if (!is_integer(total) || total.get_num() % 2 != 0)
      continue;
    const long t = to_long(total);

    std::vector<long> ds(rs.size());
    long minimum = 0;
    bool fits = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      ds[i] = ceil_div(static_cast<long>(rs[i]) * rs[i], 4);
      minimum += 2 * ds[i];
      fits = fits && ds[i] <= d_bound;
    }
    if (!fits || t < minimum)
      continue;

    long excess = (t - minimum) / 2;
    for (auto& d : ds) {
      const long take = std::min<long>(excess, d_bound - d);
      d += take;
      excess -= take;
    }
    if (excess > 0)
      continue;

    Witness w;
    for (std::size_t i = 0; i < rs.size(); ++i)
      w.pairs.push_back({ds[i], rs[i]});
    return w;
  }
  return std::nullopt;
}

Rational witness_norm(int n, const Witness& w) {
  Rational norm = -2;
  long sum = 0;
  for (const auto& p : w.pairs) {
    norm += 2 * p.d;
    sum += p.r;
  }
  if (n >= 2)
    norm -= make_rational(sum * sum, 2L * n - 2);
  return norm;
}

Eigenvalues eigenvalues(const BetaClass& beta) {
  if (beta.n() != 2)
    throw std::invalid_argument("eigenvalues are defined for n = 2 only");
  if (sgn(beta.norm()) == 0)
    throw ZeroNormUnsupported("eigenvalues need a nonzero norm");
  const long d = jcoeff_q_order(1, beta.norm(), beta.residue());
  const int q_prec = static_cast<int>(std::max<long>(kDefaultPrecision, d + 2));
  const Rational f = jcoeff(named_form(FormName::F, q_prec), beta.norm(), beta.residue());
  const Rational g = jcoeff(named_form(FormName::G, q_prec), beta.norm(), beta.residue());
  return {beta.norm() * f, beta.norm() * g};
}

PsiIdentitySides psi_identity_sides(int q_prec) {
  if (q_prec < 3)
    throw std::invalid_argument("psi identity check needs q_prec >= 3");
  const QYSeries g = named_form(FormName::G, q_prec).series();
  const QYSeries f = named_form(FormName::F, q_prec).series();
  const QYSeries theta2_over_delta =
      mul(named_form(FormName::PhiMinus2_1, q_prec + 2).series(),
          invert(delta(q_prec + 2)).series())
          .truncated(q_prec);
  return {scale(25, g), scale(48, f) + scale(12, heat(1, theta2_over_delta))};
}

bool verify_psi_identity(int q_prec) {
  const auto sides = psi_identity_sides(q_prec);
  return sides.lhs.same_terms(sides.rhs) && sides.lhs.q_prec() == sides.rhs.q_prec();
}

SweepReport n_leq_7_sweep(int max_d) {
  if (max_d < 2)
    throw std::invalid_argument("sweep needs max_d >= 2");
  SweepReport report;
  report.max_d = max_d;
  report.norm_cutoff = -2;
  report.note = "invariant cutoff -2 stands in for the unstated effectivity range of "
                "primitive classes; each zero is listed with the outcome of a bounded "
                "witness search (|r_i| <= 6, d_i <= 12)";
  const int q_prec = std::max(kDefaultPrecision, max_d + 2);

  for (int n = 2; n <= 7; ++n) {
    report.ns.push_back(n);
    const int m = n - 1;
    const JacobiElement form = phi_pow_over_delta(n, q_prec);
    for (long d = -1; d <= max_d; ++d) {
      for (long r = -m; r <= m; ++r) {
        const Rational inv = invariant(m, d, r);
        if (inv < report.norm_cutoff)
          continue;
        ++report.coefficients_checked;
        Rational c = form.coeff_at(static_cast<int>(d), static_cast<int>(2 * r));
        if (sgn(c) == 0) {
          const BetaClass beta = BetaClass::make(n, inv, static_cast<int>(r));
          const bool found = search_witness(beta, 6, 12).has_value();
          report.zeros.push_back({n, d, r, inv, c, found});
        }
      }
    }
  }

  const JacobiElement form8 = phi_pow_over_delta(8, q_prec);
  const Rational inv8 = invariant(7, 1, 5);
  report.n8_case = {8, 1, 5, inv8, form8.coeff_at(1, 10),
                    search_witness(BetaClass::make(8, inv8, 5), 6, 12).has_value()};
  return report;
}

} // namespace hk
