#pragma once

// Ground-truth searches: the best complete multipartite host on n vertices
// (all integer partitions, pruned by an exact upper bound) and the best
// graph on n <= 8 vertices (all edge sets).

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "inducib/counting.hpp"
#include "inducib/exactmath.hpp"
#include "inducib/partition.hpp"
#include "inducib/pattern.hpp"

namespace inducib {

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  std::optional<int> max_parts;
  int threads = 1;
  long long node_budget = 4'000'000'000LL;
  bool prune = true;  // false: plain enumeration of every partition
};

struct PartitionSearch {
  ExactInt max;
  std::vector<MultipartitePartition> argmax;  // descending lexicographic order
  long long nodes = 0;
};

/// Maximum of I(F, K_{n_1..n_k}) over partitions of n (into at most
/// max_parts parts) and every partition attaining it. The branch-and-bound
/// never discards a subtree whose bound ties the incumbent, so the argmax set
/// is complete. Throws SearchBudgetExceeded if the node budget runs out.
PartitionSearch best_partition(const PatternSpec& f, int n, const SearchOptions& opts);
PartitionSearch best_partition(const PatternSpec& f, int n, std::optional<int> max_parts = std::nullopt);

inline constexpr int kMaxExhaustiveVertices = 8;

struct GraphSearch {
  PatternSpec f;
  ExactInt max;
  AdjacencyGraph witness{0};
  long long graphs_counted = 0;
};

/// Maximum of I(F, G) over all graphs on n <= 8 vertices. Only labelings
/// with a non-increasing degree sequence are counted (every graph has one).
GraphSearch best_graph_exhaustive(const PatternSpec& f, int n);

/// Same search for several patterns in one pass over the edge sets.
std::vector<GraphSearch> best_graph_exhaustive(std::span<const PatternSpec> fs, int n);

/// True iff the argmax of best_partition is exactly {T_{expect_m}(n)}.
bool extremal_is_turan(const PatternSpec& f, int n, int expect_m, std::optional<int> max_parts = std::nullopt);

struct TuranFamilyRow {
  int n = 0;
  ExactInt max;
  std::vector<MultipartitePartition> argmax;
  bool all_turan = false;
};

struct TuranFamilyReport {
  int r = 0;
  int t = 0;
  std::vector<TuranFamilyRow> rows;
  bool pass = false;
};

/// For F = K_r(t): every argmax partition at each n in [n_lo, n_hi] must be
/// some Turan shape T_k(n).
TuranFamilyReport turan_family_check(int r, int t, int n_lo, int n_hi);

struct OnsetReport {
  PatternSpec f;
  int m = 0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<int> non_turan;  // n whose argmax is not exactly {T_m(n)}
  std::optional<int> onset;    // smallest N with every n in [N, n_hi] Turan-extremal
};

/// Empirical onset of Turan-extremality of T_m(n) over [n_lo, n_hi].
OnsetReport extremal_onset(const PatternSpec& f, int n_lo, int n_hi, std::optional<int> max_parts = std::nullopt);

}  // namespace inducib
