#include "inducib/counting.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "inducib/class_poly.hpp"

namespace inducib {

// ---------------------------------------------------------------------------
// AdjacencyGraph

AdjacencyGraph::AdjacencyGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("AdjacencyGraph supports at most " + std::to_string(kMaxVertices) + " vertices");
}

bool AdjacencyGraph::has_edge(int u, int v) const { return (rows_.at(static_cast<std::size_t>(u)) >> v) & 1U; }

void AdjacencyGraph::set_edge(int u, int v, bool present) {
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  const std::uint32_t bu = 1U << u;
  const std::uint32_t bv = 1U << v;
  auto& ru = rows_[static_cast<std::size_t>(u)];
  auto& rv = rows_[static_cast<std::size_t>(v)];
  if (present) {
    ru |= bv;
    rv |= bu;
  } else {
    ru &= ~bv;
    rv &= ~bu;
  }
}

void AdjacencyGraph::toggle_edge(int u, int v) { set_edge(u, v, !has_edge(u, v)); }

int AdjacencyGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[static_cast<std::size_t>(v)]);
  return twice / 2;
}

AdjacencyGraph AdjacencyGraph::complement() const {
  AdjacencyGraph out(n_);
  const std::uint32_t all = (1U << n_) - 1U;
  for (int v = 0; v < n_; ++v)
    out.rows_[static_cast<std::size_t>(v)] = all & ~rows_[static_cast<std::size_t>(v)] & ~(1U << v);
  return out;
}

int first_vertex(const MultipartitePartition& host, int part) {
  int v = 0;
  for (int i = 0; i < part; ++i) v += host[i];
  return v;
}

AdjacencyGraph AdjacencyGraph::realize(const MultipartitePartition& host) {
  if (host.n() > kMaxVertices) throw std::invalid_argument("host too large to realize explicitly");
  AdjacencyGraph g(host.n());
  std::vector<int> part_of;
  for (int i = 0; i < host.k(); ++i)
    for (int j = 0; j < host[i]; ++j) part_of.push_back(i);
  for (int u = 0; u < host.n(); ++u)
    for (int v = u + 1; v < host.n(); ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.set_edge(u, v, true);
  return g;
}

AdjacencyGraph AdjacencyGraph::realize_with_apex(const MultipartitePartition& host,
                                                 const std::vector<int>& apex_parts) {
  if (host.n() + 1 > kMaxVertices) throw std::invalid_argument("host too large to realize with an apex");
  AdjacencyGraph base = realize(host);
  AdjacencyGraph g(host.n() + 1);
  g.rows_ = base.rows_;
  const int apex = host.n();
  for (int i : apex_parts) {
    const int start = first_vertex(host, i);
    for (int v = start; v < start + host[i]; ++v) g.set_edge(apex, v, true);
  }
  return g;
}

AdjacencyGraph AdjacencyGraph::from_edge_mask(int n, std::uint64_t mask) {
  AdjacencyGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.set_edge(u, v, true);
  return g;
}

// ---------------------------------------------------------------------------
// Structure recognizers

std::optional<std::vector<int>> co_component_sizes(const AdjacencyGraph& g, std::uint32_t subset) {
  std::vector<int> sizes;
  std::uint32_t remaining = subset;
  while (remaining) {
    const int v = std::countr_zero(remaining);
    const std::uint32_t cls = subset & ~g.row(v);  // v together with its non-neighbours
    for (std::uint32_t rest = cls; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((subset & ~g.row(w)) != cls) return std::nullopt;
    }
    sizes.push_back(std::popcount(cls));
    remaining &= ~cls;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::optional<std::vector<int>> clique_union_sizes(const AdjacencyGraph& g, std::uint32_t subset) {
  std::vector<int> sizes;
  std::uint32_t remaining = subset;
  while (remaining) {
    const int v = std::countr_zero(remaining);
    const std::uint32_t cls = (subset & g.row(v)) | (1U << v);
    for (std::uint32_t rest = cls; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (((subset & g.row(w)) | (1U << w)) != cls) return std::nullopt;
    }
    sizes.push_back(std::popcount(cls));
    remaining &= ~cls;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

namespace {

template <typename Recognizer>
ExactInt count_subsets(int ell, const std::vector<int>& target, const AdjacencyGraph& g, Recognizer recognize) {
  const int n = g.n();
  if (n > AdjacencyGraph::kMaxVertices)
    throw std::invalid_argument("subset enumeration is limited to " + std::to_string(AdjacencyGraph::kMaxVertices) +
                                " vertices");
  if (ell == 0) return 1;
  if (ell > n) return 0;
  ExactInt count = 0;
  const std::uint32_t limit = 1U << n;
  // Gosper's hack over all ell-subsets.
  for (std::uint32_t s = (1U << ell) - 1U; s < limit;) {
    auto sizes = recognize(g, s);
    if (sizes && *sizes == target) ++count;
    const std::uint32_t c = s & -s;
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return count;
}

struct HostClasses {
  std::vector<int> sizes;
  std::vector<int> counts;
};

HostClasses collapse(std::span<const int> host_parts) {
  std::map<int, int, std::greater<>> mult;
  for (int p : host_parts) ++mult[p];
  HostClasses out;
  for (const auto& [size, count] : mult) {
    out.sizes.push_back(size);
    out.counts.push_back(count);
  }
  return out;
}

// Ordered injection sum by recursion over pattern positions; the state is the
// number of used host parts per host size class, memoised sparsely.
class InjectionSum {
 public:
  InjectionSum(std::span<const int> sizes, std::span<const int> host_parts)
      : sizes_(sizes.begin(), sizes.end()), hosts_(collapse(host_parts)) {
    binom_.resize(hosts_.sizes.size());
    for (std::size_t h = 0; h < hosts_.sizes.size(); ++h)
      for (int a : sizes_) binom_[h].push_back(binomial(ExactInt(hosts_.sizes[h]), a));
  }

  ExactInt run() {
    std::vector<int> used(hosts_.sizes.size(), 0);
    return rec(0, used);
  }

 private:
  ExactInt rec(std::size_t pos, std::vector<int>& used) {
    if (pos == sizes_.size()) return 1;
    auto it = memo_.find(used);
    if (it != memo_.end()) return it->second;
    ExactInt total = 0;
    for (std::size_t h = 0; h < hosts_.sizes.size(); ++h) {
      const int free_parts = hosts_.counts[h] - used[h];
      if (free_parts == 0 || binom_[h][pos] == 0) continue;
      ++used[h];
      total += free_parts * binom_[h][pos] * rec(pos + 1, used);
      --used[h];
    }
    memo_.emplace(used, total);
    return total;
  }

  std::vector<int> sizes_;
  HostClasses hosts_;
  std::vector<std::vector<ExactInt>> binom_;
  std::map<std::vector<int>, ExactInt> memo_;
};

// Coefficient of y^(full) in the class generating polynomial: I(F, G).
ExactInt class_polynomial_count(const PatternSpec& f, std::span<const int> host_parts) {
  ClassIndexer ix(f);
  std::vector<ExactInt> poly(ix.state_count(), ExactInt(0));
  poly[0] = 1;
  std::vector<ExactInt> factor(ix.class_count());
  for (int n : host_parts) {
    for (std::size_t c = 0; c < ix.class_count(); ++c) factor[c] = binomial(ExactInt(n), ix.class_size(c));
    multiply_part(ix, poly, factor);
  }
  return poly[ix.full_state()];
}

ExactInt exact_divide(const ExactInt& num, const ExactInt& den) {
  ExactInt q = num / den;
  if (q * den != num) throw std::logic_error("non-integral induced count");
  return q;
}

constexpr std::size_t kMaxCollapsedClasses = 24;

std::vector<int> erase_positions(const std::vector<int>& v, std::initializer_list<std::size_t> positions) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) out.push_back(v[i]);
  return out;
}

void check_part(const MultipartitePartition& g, int part) {
  if (part < 0 || part >= g.k()) throw std::out_of_range("host part index " + std::to_string(part) + " out of range");
}

}  // namespace

ExactInt ordered_injection_sum(std::span<const int> sizes, std::span<const int> host_parts) {
  if (sizes.empty()) return 1;
  if (sizes.size() > host_parts.size()) return 0;
  if (collapse(host_parts).sizes.size() > kMaxCollapsedClasses) {
    // Many distinct host sizes: go through the class polynomial instead.
    PatternSpec f(std::vector<int>(sizes.begin(), sizes.end()));
    return class_polynomial_count(f, host_parts) * f.sym();
  }
  return InjectionSum(sizes, host_parts).run();
}

ExactInt induced_count(const PatternSpec& f, const MultipartitePartition& g) {
  if (f.empty()) return 1;
  return exact_divide(ordered_injection_sum(f.sizes(), g.parts()), f.sym());
}

ExactInt induced_count_grouped(const PatternSpec& f, const MultipartitePartition& g) {
  if (f.empty()) return 1;
  std::vector<int> big;
  for (int p : g.parts())
    if (p >= 2) big.push_back(p);
  const int sc_f = f.singleton_count();
  const int sc_g = g.singleton_count();
  ExactInt total = 0;
  for (int i = 0; i <= sc_f; ++i) {
    // i pattern singletons matched to host singletons; the remaining r - i
    // pattern parts (the largest ones) go to non-singleton host parts.
    std::vector<int> head(f.sizes().begin(), f.sizes().end() - i);
    const ExactInt inner = ordered_injection_sum(head, big);
    if (inner == 0) continue;
    total += factorial(i) * binomial(ExactInt(sc_f), i) * binomial(ExactInt(sc_g), i) * inner;
  }
  return exact_divide(total, f.sym());
}

ExactInt induced_count_general(const PatternSpec& f, const AdjacencyGraph& g) {
  return count_subsets(f.ell(), f.sizes(), g, co_component_sizes);
}

ExactInt count_clique_unions(std::span<const int> sizes, const AdjacencyGraph& g) {
  std::vector<int> target(sizes.begin(), sizes.end());
  std::sort(target.begin(), target.end(), std::greater<>());
  int ell = 0;
  for (int s : target) ell += s;
  return count_subsets(ell, target, g, clique_union_sizes);
}

ExactInt count_through_nonedge(const PatternSpec& f, const MultipartitePartition& g, int part) {
  check_part(g, part);
  const int n = g[part];
  if (n < 2) throw std::invalid_argument("count_through_nonedge needs a host part of size >= 2");
  const auto rest_hosts = g.without({part});
  ExactInt total = 0;
  const auto& a = f.sizes();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const ExactInt forced = binomial(ExactInt(n - 2), a[j] - 2);
    if (forced == 0) continue;
    total += forced * ordered_injection_sum(erase_positions(a, {j}), rest_hosts.parts());
  }
  return exact_divide(total, f.sym());
}

ExactInt count_through_edge(const PatternSpec& f, const MultipartitePartition& g, int part_i, int part_j) {
  check_part(g, part_i);
  check_part(g, part_j);
  if (part_i == part_j) throw std::invalid_argument("count_through_edge needs two distinct host parts");
  const auto rest_hosts = g.without({part_i, part_j});
  const auto& a = f.sizes();
  ExactInt total = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const ExactInt fp = binomial(ExactInt(g[part_i] - 1), a[p] - 1);
    if (fp == 0) continue;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == p) continue;
      const ExactInt fq = binomial(ExactInt(g[part_j] - 1), a[q] - 1);
      if (fq == 0) continue;
      total += fp * fq * ordered_injection_sum(erase_positions(a, {p, q}), rest_hosts.parts());
    }
  }
  return exact_divide(total, f.sym());
}

ExactInt count_flip_pair(const PatternSpec& f, const MultipartitePartition& g, const FlipPair& pair) {
  switch (pair.kind) {
    case PairKind::SamePartAdded: {
      check_part(g, pair.part_i);
      if (g[pair.part_i] < 2) throw std::invalid_argument("same-part pair needs a host part of size >= 2");
      // Both endpoints are adjacent to everything else in the copy, so they
      // are singleton parts of F and the rest avoids their host part.
      if (f.singleton_count() < 2) return 0;
      return induced_count(f.without_parts(1, 2), g.without({pair.part_i}));
    }
    case PairKind::CrossPartRemoved: {
      check_part(g, pair.part_i);
      check_part(g, pair.part_j);
      if (pair.part_i == pair.part_j) throw std::invalid_argument("cross-part pair needs two distinct host parts");
      // The endpoints form a part of size exactly two; the rest avoids both
      // host parts.
      if (!f.has_part(2)) return 0;
      return induced_count(f.without_part(2), g.without({pair.part_i, pair.part_j}));
    }
  }
  throw std::logic_error("unknown pair kind");
}

ExactInt flipped_total(const PatternSpec& f, const MultipartitePartition& g, const FlipPair& pair) {
  const ExactInt base = induced_count(f, g);
  const ExactInt through = pair.kind == PairKind::SamePartAdded ? count_through_nonedge(f, g, pair.part_i)
                                                                : count_through_edge(f, g, pair.part_i, pair.part_j);
  return base - through + count_flip_pair(f, g, pair);
}

AdjacencyGraph realize_flipped(const MultipartitePartition& g, const FlipPair& pair) {
  AdjacencyGraph out = AdjacencyGraph::realize(g);
  if (pair.kind == PairKind::SamePartAdded) {
    if (g[pair.part_i] < 2) throw std::invalid_argument("same-part pair needs a host part of size >= 2");
    const int v = first_vertex(g, pair.part_i);
    out.toggle_edge(v, v + 1);
  } else {
    out.toggle_edge(first_vertex(g, pair.part_i), first_vertex(g, pair.part_j));
  }
  return out;
}

ExactInt count_with_apex(const PatternSpec& f, const MultipartitePartition& g, const std::vector<int>& apex_parts) {
  std::vector<int> inside;
  std::vector<bool> in_a(static_cast<std::size_t>(g.k()), false);
  for (int i : apex_parts) {
    check_part(g, i);
    if (in_a[static_cast<std::size_t>(i)]) throw std::invalid_argument("duplicate apex part index");
    in_a[static_cast<std::size_t>(i)] = true;
    inside.push_back(i);
  }
  const auto neighbourhood = g.restricted_to(inside);
  ExactInt total = 0;
  if (f.singleton_count() >= 1) total += induced_count(f.without_part(1), neighbourhood);
  for (const auto& c : f.classes()) {
    if (c.size < 2) continue;
    // The apex shares an F-part of size b with b-1 vertices of one host part
    // outside A; the remaining F-parts live inside the neighbourhood.
    ExactInt partners = 0;
    for (int j = 0; j < g.k(); ++j)
      if (!in_a[static_cast<std::size_t>(j)]) partners += binomial(ExactInt(g[j]), c.size - 1);
    if (partners == 0) continue;
    total += partners * induced_count(f.without_part(c.size), neighbourhood);
  }
  return total;
}

ExactRat leading_term(const PatternSpec& f, int m) {
  if (m < 1) throw std::invalid_argument("leading_term needs m >= 1");
  ExactInt denom = f.sym();
  for (int a : f.sizes()) denom *= factorial(a);
  return ExactRat(falling_factorial(ExactInt(m), f.r()), denom);
}

}  // namespace inducib
