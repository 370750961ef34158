#pragma once

// Executable checks of the standalone inequalities and finite-n premises
// behind the exact results. Everything with rational inputs is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inducib/counting.hpp"
#include "inducib/exactmath.hpp"
#include "inducib/partition.hpp"
#include "inducib/pattern.hpp"

namespace inducib {

// ---- ratio chain ----------------------------------------------------------
//
// mu_d = (x+y)^d - x^d - y^d          omega_d = x^d + y^d - 2((x+y)/2)^d
// psi  = x^s y^t + x^t y^s            phi     = 2((x+y)/2)^(s+t) - psi

struct RatioWitness {
  ExactRat x, y;
  int a = 0, s = 0, t = 0, b = 0;
  ExactRat mu_a, mu_t, omega_a, omega_t, psi_st, phi_st;

  /// Throws std::invalid_argument unless x, y > 0, x != y and
  /// b >= t >= s >= a >= 2 with a > C(b - a, 2). (a = 1 gives mu_1 = 0.)
  static RatioWitness make(const ExactRat& x, const ExactRat& y, int a, int s, int t, int b);
  std::string to_string() const;
};

bool valid_ratio_tuple(int a, int s, int t, int b);

struct RatioCheck {
  bool first = false;        // omega_t/mu_t <= omega_a/mu_a
  bool first_equal = false;  // ... with equality
  bool second = false;       // omega_a/mu_a < phi_st/psi_st
};

RatioCheck check_ratio_chain(const RatioWitness& w);

struct RatioGrid {
  int num_lo = 1;
  int num_hi = 30;
  int denom = 10;
  int b_max = 7;
};

struct RatioSweepReport {
  RatioGrid grid;
  long long points = 0;  // ordered (x, y) with x != y
  long long tuples = 0;  // valid (a, s, t, b)
  long long checks = 0;
  long long violations = 0;
  std::vector<RatioWitness> witnesses;             // first few violations
  std::vector<std::pair<int, int>> equality_at;    // (a, t) with a < t where equality occurred
  long long equality_hits = 0;
  // 2^(a-2) mu_a >= (2^a - 2) xy (x+y)^(a-2); equality expected exactly for a in {2, 3}
  long long aux_a_checks = 0;
  long long aux_a_violations = 0;
  std::vector<int> aux_a_equal;  // a with equality at every grid point
  bool aux_a_equality_exact = false;
  // 2((x+y)/2)^(s+t-2) > x^(s-1) y^(t-1) + x^(t-1) y^(s-1)
  long long aux_st_checks = 0;
  long long aux_st_violations = 0;
  // g(z) = z^(t-1)(1-z)^(s-1) + z^(s-1)(1-z)^(t-1) has its unique maximum at 1/2
  bool g_half_unique_max = false;
  bool pass = false;
};

RatioSweepReport sweep_ratio_chain(const RatioGrid& grid = {});

// ---- apex profiles --------------------------------------------------------

struct ProfileCheck {
  int r = 0;
  int ell = 0;
  int m = 0;
  std::vector<ExactInt> values;  // index q = 0..m
  int argmax = -1;
  bool unique = false;
  bool pass = false;
};

/// h(q) = (q)_{r-1} (2r - ell + 2(m - q)(ell - r)) for r + 1 <= ell <= 2r - 1.
ProfileCheck check_h_small(int r, int ell);
/// H(q) = (m - q)(q)_{r-1} for ell >= 2r.
ProfileCheck check_H_large(int r, int ell);

// ---- part-size conditions -------------------------------------------------

struct EdgeBudget {
  ExactInt lhs;  // C(ell, 2)
  ExactInt rhs;  // m * sum C(a_k, 2)
  int m = 0;
};

EdgeBudget edge_budget(const PatternSpec& f);
/// C(ell, 2) > m sum C(a_k, 2).
bool check_prepare_exact(const PatternSpec& f);
/// C(ell, 2) >= m sum C(a_k, 2); necessary for the balanced m-point to be optimal.
bool check_necessary(const PatternSpec& f);

// ---- finite-n stability premises ------------------------------------------

struct PairDelta {
  FlipPair pair;
  int size_i = 0;
  int size_j = 0;
  ExactInt delta;  // I(F, G) - I(F, G + xy)
};

struct ApexCount {
  int q = 0;
  std::vector<int> parts;  // representative A
  ExactInt count;          // I(F, G_A) - I(F, G)
};

struct StabilityReport {
  PatternSpec f;
  int n = 0;
  int m = 0;
  MultipartitePartition host;
  ExactInt base;
  std::vector<PairDelta> pair_deltas;
  std::vector<ApexCount> apex_counts;
  ExactRat eps_pairs;  // min delta / n^(ell-2)
  ExactRat eps_apex;   // (min at q = m-1 minus max elsewhere) / n^(ell-1)
  bool pairs_positive = false;
  bool apex_unique = false;
  bool pass = false;
};

/// G = T_m(n). One representative pair per class and one apex set per
/// (q, number of larger parts in A).
StabilityReport stability_premises(const PatternSpec& f, int n);

struct GrowthReport {
  StabilityReport lower;
  StabilityReport upper;
  std::vector<double> ratios;  // per pair class, delta(upper) / delta(lower)
  double expected = 0;         // (n_upper / n_lower)^(ell - 2)
  double worst_relative = 0;
  bool pass = false;
};

/// Pair deltas should scale like n^(ell-2); passes within `tol` relative error.
GrowthReport stability_growth(const PatternSpec& f, int n_lower, int n_upper, double tol = 0.10);

// ---- discrete shifts ------------------------------------------------------

/// I(F, shifted) - I(F, p) where one vertex moves from the largest to the
/// smallest part. Requires p.k() >= 2 and n_1 >= n_k + 2.
ExactInt shift_comparison(const PatternSpec& f, const MultipartitePartition& p);

/// `count` random m-part partitions of n with spread in [2, max(2, n / (2m))],
/// drawn by random single-vertex moves away from T_m(n). Deterministic in seed.
std::vector<MultipartitePartition> near_balanced_partitions(int m, int n, int count, std::uint64_t seed);

struct ShiftSweep {
  PatternSpec f;
  int n = 0;
  std::vector<std::pair<MultipartitePartition, ExactInt>> cases;
  bool pass = false;  // every difference > 0
};

ShiftSweep shift_sweep(const PatternSpec& f, int n, int count, std::uint64_t seed);

struct AdjustmentCheck {
  ExactInt current;
  ExactInt shifted;  // a_1 - 1, ..., a_k + 1
  ExactInt merged;   // a_1 + a_k, a_2, ..., a_{k-1}
  bool pass = false;
};

/// For F = K_r(t): I(F, p) < max(I(shifted), I(merged)). Requires k >= r parts,
/// a_1 >= a_k + 2 and every part >= t.
AdjustmentCheck adjustment_check(const PatternSpec& f, const MultipartitePartition& p);

// ---- mean value asymptotics -----------------------------------------------
//
// With x = N, y = N + 1 + gap:
//   single: C(x+1,s) + C(y-1,s) - C(x,s) - C(y,s)                  ~ -s(s-1)/s! gap N^(s-2)
//   pair:   C(x+1,t)C(y-1,s) + C(x+1,s)C(y-1,t) - C(x,t)C(y,s) - C(x,s)C(y,t)
//                                                                  ~ (t+s-(t-s)^2)/(s!t!) gap N^(t+s-2)

struct MeanValueRow {
  long long n = 0;
  ExactRat single_ratio;
  ExactRat pair_ratio;
};

struct MeanValueReport {
  int s = 0;
  int t = 0;
  ExactRat gap;
  ExactRat single_limit;
  ExactRat pair_limit;
  std::vector<MeanValueRow> rows;
  double single_error = 0;  // at the largest N, relative to max(|limit|, gap/(s! t!))
  double pair_error = 0;
  bool pass = false;
};

MeanValueReport mean_value_convergence(int s, int t, const ExactRat& gap, const std::vector<long long>& n_list,
                                       double tol = 0.01);

struct MeanValueSuite {
  std::vector<MeanValueReport> cases;
  bool pass = false;
};

/// 1 <= s <= t <= 5, gap in {1/2, 1, 3}, N in {10^2, 10^3, n_max}.
MeanValueSuite mean_value_suite(long long n_max = 10000);

// ---- the quintic and K_{12,7,7} -------------------------------------------

struct QuinticReport {
  BigFloat alpha;     // largest real root of 130x^5 + 25x^4 - 90x^3 + 80x^2 - 40x + 7
  BigFloat residual;  // polynomial value at alpha
  BigFloat s_alpha;   // S_{12,7,7}(alpha, (1-alpha)/2, (1-alpha)/2)
  BigFloat s_balanced;
  BigFloat ratio;
  int precision_digits = 0;
  bool k488_almost_balanced = true;
  EdgeBudget k1277_budget;
  bool k1277_necessary_strict = false;
  bool pass = false;
};

BigFloat quintic(const BigFloat& x);
/// Largest real root by sign-change bisection to width `tol`.
BigFloat quintic_largest_root(const BigFloat& tol);
QuinticReport quintic_and_k1277();

}  // namespace inducib
