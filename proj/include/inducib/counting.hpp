#pragma once

// Exact induced-copy counts of complete multipartite patterns.
//
// Hosts are complete multipartite graphs given by part sizes, optionally
// modified by one flipped pair or one extra apex vertex. The subset
// enumeration counter over explicit small graphs is the independent ground
// truth for all the closed forms below.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "inducib/exactmath.hpp"
#include "inducib/partition.hpp"
#include "inducib/pattern.hpp"

namespace inducib {

/// Small simple graph (n <= 16) stored as adjacency bit rows.
class AdjacencyGraph {
 public:
  static constexpr int kMaxVertices = 16;

  explicit AdjacencyGraph(int n);

  int n() const { return n_; }
  bool has_edge(int u, int v) const;
  void set_edge(int u, int v, bool present);
  void toggle_edge(int u, int v);
  std::uint32_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int edge_count() const;

  AdjacencyGraph complement() const;

  /// Complete multipartite graph on n vertices; part i occupies the vertex
  /// range [first_vertex(host, i), first_vertex(host, i) + host[i]).
  static AdjacencyGraph realize(const MultipartitePartition& host);

  /// Realization plus one apex vertex (index n) adjacent exactly to the parts
  /// listed in `apex_parts`.
  static AdjacencyGraph realize_with_apex(const MultipartitePartition& host, const std::vector<int>& apex_parts);

  /// Graph whose edges are the set bits of `mask` in the lexicographic pair
  /// order (0,1), (0,2), ..., (n-2,n-1).
  static AdjacencyGraph from_edge_mask(int n, std::uint64_t mask);

  friend bool operator==(const AdjacencyGraph&, const AdjacencyGraph&) = default;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> rows_{};
};

int first_vertex(const MultipartitePartition& host, int part);

/// Part sizes (descending) if G[subset] is complete multipartite, i.e. if
/// "equal or non-adjacent" is an equivalence relation on the subset.
std::optional<std::vector<int>> co_component_sizes(const AdjacencyGraph& g, std::uint32_t subset);

/// Clique sizes (descending) if G[subset] is a vertex-disjoint union of cliques.
std::optional<std::vector<int>> clique_union_sizes(const AdjacencyGraph& g, std::uint32_t subset);

/// Sum over ordered tuples of pairwise distinct host-part indices of
/// prod_j binom(host[i_j], sizes[j]). Host parts of equal size are collapsed
/// into classes, so the cost depends on the number of distinct host sizes.
ExactInt ordered_injection_sum(std::span<const int> sizes, std::span<const int> host_parts);

/// I(F, G): number of vertex subsets of G inducing F. Uniform formula: every
/// host part (singletons included) is treated alike.
ExactInt induced_count(const PatternSpec& f, const MultipartitePartition& g);

/// I(F, G) through the grouped-singleton form: singleton host parts are
/// matched only against singleton pattern parts as a separate sum.
ExactInt induced_count_grouped(const PatternSpec& f, const MultipartitePartition& g);

/// I(F, G) for an explicit graph by enumerating all ell-subsets.
ExactInt induced_count_general(const PatternSpec& f, const AdjacencyGraph& g);

/// Number of vertex subsets inducing a disjoint union of cliques with the
/// given sizes (the complement pattern of K_{sizes}).
ExactInt count_clique_unions(std::span<const int> sizes, const AdjacencyGraph& g);

/// Copies of F containing two fixed vertices of host part `part`.
ExactInt count_through_nonedge(const PatternSpec& f, const MultipartitePartition& g, int part);

/// Copies of F containing one fixed vertex of part_i and one of part_j.
ExactInt count_through_edge(const PatternSpec& f, const MultipartitePartition& g, int part_i, int part_j);

enum class PairKind { SamePartAdded, CrossPartRemoved };

struct FlipPair {
  PairKind kind = PairKind::SamePartAdded;
  int part_i = 0;
  int part_j = 0;  // ignored for SamePartAdded

  static FlipPair same_part(int part) { return {PairKind::SamePartAdded, part, part}; }
  static FlipPair cross_part(int i, int j) { return {PairKind::CrossPartRemoved, i, j}; }
};

/// Copies of F in G (+) xy that contain both endpoints of the flipped pair.
ExactInt count_flip_pair(const PatternSpec& f, const MultipartitePartition& g, const FlipPair& pair);

/// I(F, G (+) xy).
ExactInt flipped_total(const PatternSpec& f, const MultipartitePartition& g, const FlipPair& pair);

/// Explicit realization of G (+) xy using the first vertices of the parts.
AdjacencyGraph realize_flipped(const MultipartitePartition& g, const FlipPair& pair);

/// Copies of F through the apex of G_A (apex adjacent exactly to the parts in A).
ExactInt count_with_apex(const PatternSpec& f, const MultipartitePartition& g, const std::vector<int>& apex_parts);

/// (m)_r / (prod a_i! * sym): I(F, T_m(m n)) ~ leading_term * n^ell.
ExactRat leading_term(const PatternSpec& f, int m);

}  // namespace inducib
