#pragma once

// The partite limit space: descending positive weights x_1 >= ... >= x_s plus
// a residual x0 = 1 - sum x_i, the polynomials S_a and p_F on it, and a
// merge/balance ascent used to corroborate that the balanced point is optimal.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inducib/exactmath.hpp"
#include "inducib/pattern.hpp"

namespace inducib {

template <typename T>
class BasicLimitPoint {
 public:
  /// Empty support, all mass in x0.
  BasicLimitPoint() : x0_(1) {}

  /// Drops zero weights and sorts descending. With explicit x0 the float
  /// variant rescales so that sum + x0 = 1; the rational variant requires the
  /// sum to be exactly 1. Without x0 the residual is 1 - sum.
  static BasicLimitPoint from_weights(std::vector<T> weights);
  static BasicLimitPoint from_weights(std::vector<T> weights, T x0);

  /// (1/k, ..., 1/k).
  static BasicLimitPoint balanced(int k);

  const std::vector<T>& weights() const { return weights_; }
  const T& x0() const { return x0_; }
  int support_size() const { return static_cast<int>(weights_.size()); }
  const T& operator[](int i) const { return weights_.at(static_cast<std::size_t>(i)); }

  /// Sup-norm distance to the balanced k-point (x0 included).
  T distance_to_balanced(int k) const;
  bool is_balanced(const T& tol) const;

  std::string to_string(int digits = 12) const;

 private:
  std::vector<T> weights_;
  T x0_;
};

using LimitPoint = BasicLimitPoint<BigFloat>;
using RationalPoint = BasicLimitPoint<ExactRat>;

inline constexpr int kMaxSupport = 64;

/// S_d(x): sum over ordered tuples of distinct support indices of
/// prod_j x_{i_j}^{d_j}. S of the empty sequence is 1.
template <typename T>
T s_poly(std::span<const int> degrees, const BasicLimitPoint<T>& p);

/// p_F(x) = kappa_F * sum_i C(sc, i) x0^i S_{a_1..a_{r-i}}(x).
template <typename T>
T p_f(const PatternSpec& f, const BasicLimitPoint<T>& p);

/// Replace (x_i, x_j) by (x_i + x_j, 0). Indices are 0-based support indices.
template <typename T>
BasicLimitPoint<T> merge_move(const BasicLimitPoint<T>& p, int i, int j);

/// Replace (x_i, x_j) by two equal halves.
template <typename T>
BasicLimitPoint<T> balance_move(const BasicLimitPoint<T>& p, int i, int j);

/// Add x0 to the largest weight (or create a single weight if the support is empty).
template <typename T>
BasicLimitPoint<T> absorb_residual(const BasicLimitPoint<T>& p);

/// Turn x0 into a new part of weight x0.
template <typename T>
BasicLimitPoint<T> residual_to_part(const BasicLimitPoint<T>& p);

/// Replace every support weight by the support mean.
template <typename T>
BasicLimitPoint<T> balance_all(const BasicLimitPoint<T>& p);

enum class MoveKind { Merge, Balance, BalanceAll, AbsorbResidual, ResidualToPart, ForcedMerge, ForcedAbsorb };
std::string to_string(MoveKind kind);

struct AscentStep {
  MoveKind kind;
  int i = -1;
  int j = -1;
  BigFloat value;  // p_F after the move
};

struct AscentResult {
  LimitPoint point;
  BigFloat value;
  std::vector<AscentStep> trace;
  bool converged = false;  // stopped because no move changed p_F by tol
  bool plateau = false;    // converged at an unbalanced point
  int neutral_moves = 0;   // zero-gain merges taken to leave a plateau
};

inline constexpr long kMaxAscentMoves = 1'000'000;

/// Best-improvement ascent over merge, balance, balance-all, residual
/// absorption and residual-to-part. When nothing improves by tol, a zero-gain merge is taken if
/// one exists. A start outside the k_cap simplex is first brought inside by
/// forced best merges (and absorption of x0), which are recorded in the trace.
AscentResult symmetrize_ascend(const PatternSpec& f, std::optional<int> k_cap, const LimitPoint& start,
                               const BigFloat& tol);

struct CertifyOptions {
  std::optional<int> k_cap;
  int trials = 200;
  std::uint64_t seed = 1;
  BigFloat step_tol{"1e-12"};
  BigFloat point_tol{"1e-8"};
  BigFloat value_tol{"1e-10"};
  int threads = 1;
};

struct TrialRecord {
  int index = 0;
  int start_support = 0;
  bool start_residual = false;
  int final_support = 0;
  BigFloat distance;
  BigFloat value;
  BigFloat value_error;
  long moves = 0;
  bool converged = false;
  bool plateau = false;
  int neutral_moves = 0;
  bool pass = false;
  std::string final_point;
};

struct CertifyReport {
  PatternSpec f;
  std::optional<int> k_cap;
  int m = 0;
  int target_k = 0;
  ExactRat target_value;
  std::vector<TrialRecord> trials;
  int plateau_count = 0;    // runs that converged at an unbalanced point
  int plateau_escapes = 0;  // runs that needed at least one zero-gain merge
  int failures = 0;
  bool pass = false;
};

/// Runs the ascent from `trials` seeded random starts and checks that every
/// run ends at the balanced target point with value kappa_F f(target).
CertifyReport certify_opt(const PatternSpec& f, const CertifyOptions& opts);

/// Random start used by certify_opt for trial `index` (deterministic in seed).
LimitPoint random_start(std::uint64_t seed, int index, int min_support, int max_support, bool residual);

}  // namespace inducib
