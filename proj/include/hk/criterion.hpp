#pragma once

#include "hk/jacobi.hpp"
#include "hk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

/**
 * Primitive curve class on a K3^[n]-type variety, described by its
 * Beauville-Bogomolov norm and residue set modulo 2n - 2 (modulus 0 for n = 1).
 */
class BetaClass {
public:
  // Validates n >= 1, that the denominator of `norm` divides 2n - 2 (n >= 2)
  // or that norm is an even integer (n = 1), and admissibility of the pair.
  // Throws InadmissiblePair or std::invalid_argument.
  static BetaClass make(int n, const Rational& norm, int residue);

  int n() const { return n_; }
  const Rational& norm() const { return norm_; }
  const ResidueSet& residue() const { return residue_; }
  int index() const { return n_ - 1; }

private:
  BetaClass(int n, Rational norm, ResidueSet residue)
      : n_(n), norm_(std::move(norm)), residue_(std::move(residue)) {}

  int n_;
  Rational norm_;
  ResidueSet residue_;
};

// One (d_i, r_i) summand of a decomposition with 2 d_i - r_i^2 / 2 >= 0.
struct WitnessPair {
  long d;
  long r;
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct Witness {
  std::vector<WitnessPair> pairs;
};

struct UniruledDecision {
  bool exists;
  Rational multiplicity;
};

struct Eigenvalues {
  Rational lambda1;
  Rational lambda2;
};

// Coefficient (phi^(n-1)/Delta)_beta; precision is raised as needed.
Rational multiplicity(const BetaClass& beta);

UniruledDecision decide_uniruled(const BetaClass& beta);

/**
 * Bounded search for a decomposition
 *   norm = -2 + sum 2 d_i - (sum r_i)^2 / (2n - 2),  +-[beta] = +-[sum r_i]
 * with n - 1 pairs satisfying 2 d_i - r_i^2 / 2 >= 0, |r_i| <= r_bound and
 * d_i <= d_bound. r-vectors are nondecreasing and tried in order of
 * (sum |r_i|, then larger sum r_i first). Absence is not a proof of
 * nonexistence. For n = 1 there are no summands and only norm -2 decomposes.
 */
std::optional<Witness> search_witness(const BetaClass& beta, int r_bound, int d_bound);

// Substitutes a witness into the decomposition formula; returns the norm.
Rational witness_norm(int n, const Witness& w);

// Eigenvalues (norm f_beta, norm g_beta) of the Gromov-Witten correspondence
// for n = 2. Throws ZeroNormUnsupported when norm is zero.
Eigenvalues eigenvalues(const BetaClass& beta);

// Checks 25 g = 48 f + 12 H_1(Theta^2 / Delta) coefficientwise below q^q_prec.
bool verify_psi_identity(int q_prec);

struct PsiIdentitySides {
  QYSeries lhs; // 25 g
  QYSeries rhs; // 48 f + 12 H_1(Theta^2 / Delta)
};
PsiIdentitySides psi_identity_sides(int q_prec);

struct SweepEntry {
  int n;
  long d;
  long r;
  Rational norm;
  Rational coefficient;
  bool witness_found = false; // search_witness with bounds (6, 12)
};

struct SweepReport {
  int max_d;
  Rational norm_cutoff;             // only invariants >= cutoff are inspected
  std::vector<int> ns;              // indices swept
  long coefficients_checked = 0;
  std::vector<SweepEntry> zeros;    // vanishing coefficients found for n <= 7
  SweepEntry n8_case;               // the n = 8 coefficient at (d, r) = (1, 5)
  std::string note;
};

// For n = 2..7 inspects phi^(n-1)/Delta at -1 <= d <= max_d, |r| <= n - 1,
// reporting zeros with invariant >= -2, and evaluates the n = 8 class of
// norm 3/14 and residue 5. Each zero is paired with a bounded witness search.
SweepReport n_leq_7_sweep(int max_d);

} // namespace hk
