#include "inducib/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "inducib/class_poly.hpp"
#include "inducib/landscape.hpp"
#include "inducib/parallel.hpp"

namespace inducib {

namespace {

using Int128 = __int128;

double to_double_value(const Int128& v) { return static_cast<double>(v); }
double to_double_value(const ExactInt& v) { return v.convert_to<double>(); }

ExactInt to_exact(const ExactInt& v) { return v; }
ExactInt to_exact(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  ExactInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? ExactInt(-out) : out;
}

template <typename V>
V binomial_as(int z, int k) {
  if (k < 0 || z < k) return V(0);
  V out = 1;
  for (int i = 1; i <= k; ++i) out = out * V(z - k + i) / V(i);
  return out;
}

// Rounding slack for comparing floating bounds against exact incumbents.
constexpr double kBoundSlack = 1e-9;
constexpr int kSmallRest = 40;
constexpr double kTableBudget = 8e6;

// best[u][R][c][k]: max of I(F_u, H) over complete multipartite H on R <= r0
// vertices with every part <= c and at most k parts. Any R0-subset of a host
// obeys the same caps, so for R > r0 the density at r0 still bounds it.
class DensityTable {
 public:
  DensityTable(const ClassIndexer& ix) : states_(ix.state_count()) {
    r0_ = kSmallRest;
    while (r0_ > 4 && static_cast<double>(states_) * std::pow(r0_ + 1, 3) > kTableBudget) --r0_;
    side_ = static_cast<std::size_t>(r0_ + 1);
    data_.assign(states_ * side_ * side_ * side_, 0.0);
    std::vector<Int128> root(states_, 0);
    root[0] = 1;
    enumerate(ix, root, 0, r0_, 0, 0);
    for (std::size_t u = 0; u < states_; ++u)
      for (std::size_t r = 0; r < side_; ++r)
        for (std::size_t c = 0; c < side_; ++c)
          for (std::size_t k = 0; k < side_; ++k) {
            double& v = data_[index(u, r, c, k)];
            if (c > 0) v = std::max(v, data_[index(u, r, c - 1, k)]);
            if (k > 0) v = std::max(v, data_[index(u, r, c, k - 1)]);
          }
  }

  int r0() const { return r0_; }
  double at(std::size_t u, int r, int c, int k) const {
    return data_[index(u, static_cast<std::size_t>(r), static_cast<std::size_t>(c), static_cast<std::size_t>(k))];
  }

 private:
  std::size_t index(std::size_t u, std::size_t r, std::size_t c, std::size_t k) const {
    return ((u * side_ + r) * side_ + c) * side_ + k;
  }

  // every prefix is a partition of its own sum
  void enumerate(const ClassIndexer& ix, const std::vector<Int128>& poly, int sum, int cap, int largest, int len) {
    for (std::size_t u = 0; u < states_; ++u) {
      double& slot = data_[index(u, static_cast<std::size_t>(sum), static_cast<std::size_t>(largest),
                                 static_cast<std::size_t>(len))];
      slot = std::max(slot, static_cast<double>(poly[u]));
    }
    std::vector<Int128> factor(ix.class_count());
    for (int p = std::min(cap, r0_ - sum); p >= 1; --p) {
      std::vector<Int128> child = poly;
      for (std::size_t c = 0; c < ix.class_count(); ++c) factor[c] = binomial_as<Int128>(p, ix.class_size(c));
      multiply_part(ix, child, factor);
      enumerate(ix, child, sum + p, p, len == 0 ? p : largest, len + 1);
    }
  }

  std::size_t states_;
  int r0_ = 0;
  std::size_t side_ = 0;
  std::vector<double> data_;
};

const DensityTable& small_density_table(const PatternSpec& f, const ClassIndexer& ix) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<DensityTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[f.sizes()];
  if (!slot) slot = std::make_unique<DensityTable>(ix);
  return *slot;
}

template <typename V>
class PartitionSearcher {
 public:
  PartitionSearcher(const PatternSpec& f, int n, const SearchOptions& opts)
      : f_(f), n_(n), ix_(f), opts_(opts) {
    kmax_ = opts.max_parts ? std::min(*opts.max_parts, n) : n;
    full_ = ix_.full_state();
    const std::size_t s = ix_.state_count();
    part_factor_.assign(static_cast<std::size_t>(n + 1), std::vector<V>(ix_.class_count()));
    part_factor_d_.assign(static_cast<std::size_t>(n + 1), std::vector<double>(ix_.class_count()));
    for (int p = 0; p <= n; ++p)
      for (std::size_t c = 0; c < ix_.class_count(); ++c) {
        part_factor_[p][c] = binomial_as<V>(p, ix_.class_size(c));
        part_factor_d_[p][c] = binomial_as<double>(p, ix_.class_size(c));
      }
    choose_d_.assign(static_cast<std::size_t>(n + 1), std::vector<double>(static_cast<std::size_t>(f.ell() + 1)));
    for (int z = 0; z <= n; ++z)
      for (int k = 0; k <= f.ell(); ++k) choose_d_[z][k] = binomial_as<double>(z, k);
    u_vertices_.resize(s);
    u_parts_.resize(s);
    u_fact_.resize(s);
    for (std::size_t u = 0; u < s; ++u) {
      u_vertices_[u] = ix_.vertices_of(u);
      int parts = 0;
      double fact = 1;
      for (std::size_t c = 0; c < ix_.class_count(); ++c) {
        const int d = ix_.digit(u, c);
        parts += d;
        for (int i = 2; i <= d; ++i) fact *= i;
      }
      u_parts_[u] = parts;
      u_fact_[u] = fact;
    }
    if (opts.prune) build_small_table();
  }

  PartitionSearch run() {
    // Incumbent: the best Turan shape. Its partitions are found again below.
    V best = 0;
    for (int k = 1; k <= kmax_; ++k) best = std::max(best, evaluate(turan_sizes(k, n_).parts()));
    best_ = best;
    best_d_.store(to_double_value(best));

    std::vector<V> root(ix_.state_count(), V(0));
    root[0] = 1;
    const int lo = (n_ + kmax_ - 1) / kmax_;
    std::vector<int> firsts;
    for (int p = n_; p >= lo; --p) firsts.push_back(p);
    parallel_for(firsts.size(), opts_.threads, [&](std::size_t i) {
      const int p = firsts[i];
      std::vector<int> parts{p};
      std::vector<V> poly = root;
      multiply_part(ix_, poly, part_factor_[static_cast<std::size_t>(p)]);
      dfs(parts, poly, n_ - p, p);
    });
    if (aborted_.load())
      throw SearchBudgetExceeded("partition search for " + f_.label() + " at n=" + std::to_string(n_) +
                                 " exceeded its node budget of " + std::to_string(opts_.node_budget));

    PartitionSearch out;
    out.max = to_exact(best_);
    for (auto& parts : argmax_) out.argmax.emplace_back(std::move(parts));
    std::sort(out.argmax.begin(), out.argmax.end(), [](const auto& a, const auto& b) { return a.parts() > b.parts(); });
    out.nodes = nodes_.load();
    return out;
  }

 private:
  V evaluate(const std::vector<int>& parts) const {
    std::vector<V> poly(ix_.state_count(), V(0));
    poly[0] = 1;
    for (int p : parts) multiply_part(ix_, poly, part_factor_[static_cast<std::size_t>(p)]);
    return poly[full_];
  }

  void build_small_table() {
    best_small_ = &small_density_table(f_, ix_);
    small_limit_ = std::min(n_, best_small_->r0());
  }

  // Upper bound on I(F_u, H) over complete multipartite H on `rest` vertices
  // with parts of size <= cap.
  double rest_bound(std::size_t u, int rest, int cap, int parts_left) const {
    if (u == 0) return 1.0;
    if (u_vertices_[u] > rest || u_parts_[u] > parts_left) return 0.0;
    // Sum over ordered tuples of distinct parts <= product of unrestricted sums.
    const int q = rest / cap;
    const int rem = rest % cap;
    double mac = 1.0 / u_fact_[u];
    for (std::size_t c = 0; c < ix_.class_count(); ++c) {
      const int d = ix_.digit(u, c);
      if (d == 0) continue;
      const double g = q * part_factor_d_[static_cast<std::size_t>(cap)][c] + part_factor_d_[static_cast<std::size_t>(rem)][c];
      for (int i = 0; i < d; ++i) mac *= g;
    }
    if (!best_small_) return mac;
    // Maximum density under the same caps is non-increasing in the number of vertices.
    const int r = std::min(rest, small_limit_);
    const std::size_t lu = static_cast<std::size_t>(u_vertices_[u]);
    const double at_r = best_small_->at(u, r, std::min(cap, r), std::min(parts_left, r));
    if (rest == r) return std::min(mac, at_r);
    const double base = choose_d_[static_cast<std::size_t>(r)][lu];
    if (base == 0) return mac;
    const double dens = choose_d_[static_cast<std::size_t>(rest)][lu] * (at_r / base);
    return std::min(mac, dens);
  }

  void dfs(std::vector<int>& parts, const std::vector<V>& poly, int rest, int cap) {
    const long long count = nodes_.fetch_add(1) + 1;
    if (count > opts_.node_budget) aborted_.store(true);
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (rest == 0) {
      leaf(parts, poly[full_]);
      return;
    }
    const int parts_left = kmax_ - static_cast<int>(parts.size());
    if (parts_left <= 0 || static_cast<long long>(cap) * parts_left < rest) return;
    if (opts_.prune) {
      double bound = 0;
      for (std::size_t u = 0; u < poly.size(); ++u) {
        const V& coeff = poly[full_ - u];
        if (coeff == 0) continue;
        bound += to_double_value(coeff) * rest_bound(u, rest, cap, parts_left);
      }
      if (bound * (1 + kBoundSlack) < best_d_.load(std::memory_order_relaxed)) return;
    }
    const int lo = (rest + parts_left - 1) / parts_left;
    std::vector<V> child(poly.size());
    for (int p = std::min(cap, rest); p >= lo; --p) {
      child = poly;
      multiply_part(ix_, child, part_factor_[static_cast<std::size_t>(p)]);
      parts.push_back(p);
      dfs(parts, child, rest - p, p);
      parts.pop_back();
    }
  }

  void leaf(const std::vector<int>& parts, const V& value) {
    if (to_double_value(value) * (1 + kBoundSlack) < best_d_.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(mutex_);
    if (value > best_) {
      best_ = value;
      best_d_.store(to_double_value(value));
      argmax_.clear();
    }
    if (value == best_) argmax_.push_back(parts);
  }

  const PatternSpec& f_;
  int n_;
  ClassIndexer ix_;
  SearchOptions opts_;
  int kmax_ = 0;
  std::size_t full_ = 0;
  std::vector<std::vector<V>> part_factor_;
  std::vector<std::vector<double>> part_factor_d_;
  std::vector<std::vector<double>> choose_d_;
  std::vector<int> u_vertices_;
  std::vector<int> u_parts_;
  std::vector<double> u_fact_;
  int small_limit_ = 0;
  const DensityTable* best_small_ = nullptr;

  std::mutex mutex_;
  V best_ = 0;
  std::atomic<double> best_d_{0.0};
  std::vector<std::vector<int>> argmax_;
  std::atomic<long long> nodes_{0};
  std::atomic<bool> aborted_{false};
};

bool fits_int128(const PatternSpec& f, int n) {
  // every coefficient is a count bounded by n^ell; keep well clear of 2^127
  return f.ell() * std::log2(static_cast<double>(std::max(n, 2))) + f.r() < 118.0;
}

}  // namespace

PartitionSearch best_partition(const PatternSpec& f, int n, const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("best_partition needs n >= 1");
  if (f.empty()) throw std::invalid_argument("best_partition needs a non-empty pattern");
  if (opts.max_parts && *opts.max_parts < 1) throw std::invalid_argument("max_parts must be positive");
  if (fits_int128(f, n)) return PartitionSearcher<Int128>(f, n, opts).run();
  return PartitionSearcher<ExactInt>(f, n, opts).run();
}

PartitionSearch best_partition(const PatternSpec& f, int n, std::optional<int> max_parts) {
  SearchOptions opts;
  opts.max_parts = max_parts;
  opts.threads = default_thread_count();
  return best_partition(f, n, opts);
}

namespace {

// Sorted part sizes of G[subset] packed 4 bits each, or 0 if G[subset] is not
// complete multipartite. Sizes are at most 8, so 0 is never a valid key.
std::uint64_t shape_key(const std::array<std::uint32_t, 8>& rows, std::uint32_t subset) {
  int sizes[8];
  int k = 0;
  std::uint32_t rem = subset;
  while (rem) {
    const int v = std::countr_zero(rem);
    const std::uint32_t cls = ~rows[static_cast<std::size_t>(v)] & subset;
    for (std::uint32_t it = cls; it; it &= it - 1) {
      const int u = std::countr_zero(it);
      if ((~rows[static_cast<std::size_t>(u)] & subset) != cls) return 0;
    }
    sizes[k++] = std::popcount(cls);
    rem &= ~cls;
  }
  std::sort(sizes, sizes + k, std::greater<>());
  std::uint64_t key = 0;
  for (int i = 0; i < k; ++i) key = key << 4 | static_cast<std::uint64_t>(sizes[i]);
  return key;
}

std::uint64_t pattern_key(const PatternSpec& f) {
  std::uint64_t key = 0;
  for (int s : f.sizes()) key = key << 4 | static_cast<std::uint64_t>(s);
  return key;
}

}  // namespace

std::vector<GraphSearch> best_graph_exhaustive(std::span<const PatternSpec> fs, int n) {
  if (n < 1 || n > kMaxExhaustiveVertices)
    throw std::invalid_argument("exhaustive graph search needs 1 <= n <= 8 (got " + std::to_string(n) + ")");
  std::vector<GraphSearch> out(fs.size());
  std::vector<std::uint64_t> keys(fs.size());
  std::vector<long long> best(fs.size(), -1);
  std::vector<std::vector<std::uint32_t>> subsets_by_size(static_cast<std::size_t>(n + 1));
  for (std::uint32_t s = 1; s < (1u << n); ++s) subsets_by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  std::vector<int> sizes_needed;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].empty() || fs[i].ell() > 15) throw std::invalid_argument("pattern not supported by the exhaustive search");
    out[i].f = fs[i];
    keys[i] = pattern_key(fs[i]);
    if (fs[i].ell() <= n && std::find(sizes_needed.begin(), sizes_needed.end(), fs[i].ell()) == sizes_needed.end())
      sizes_needed.push_back(fs[i].ell());
  }

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();

  std::array<std::uint32_t, 8> rows{};
  std::array<int, 8> deg{};
  std::vector<long long> counts(fs.size());
  long long counted = 0;
  // Gray code order: step k toggles pair ctz(k).
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) {
      const auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(k))];
      const bool had = rows[static_cast<std::size_t>(u)] >> v & 1u;
      rows[static_cast<std::size_t>(u)] ^= 1u << v;
      rows[static_cast<std::size_t>(v)] ^= 1u << u;
      deg[static_cast<std::size_t>(u)] += had ? -1 : 1;
      deg[static_cast<std::size_t>(v)] += had ? -1 : 1;
    }
    bool sorted = true;
    for (int i = 1; i < n && sorted; ++i) sorted = deg[static_cast<std::size_t>(i - 1)] >= deg[static_cast<std::size_t>(i)];
    if (!sorted) continue;
    ++counted;
    std::fill(counts.begin(), counts.end(), 0);
    for (int ell : sizes_needed)
      for (std::uint32_t s : subsets_by_size[static_cast<std::size_t>(ell)]) {
        const std::uint64_t key = shape_key(rows, s);
        if (key == 0) continue;
        for (std::size_t i = 0; i < fs.size(); ++i)
          if (keys[i] == key) ++counts[i];
      }
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (counts[i] > best[i]) {
        best[i] = counts[i];
        AdjacencyGraph g(n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (rows[static_cast<std::size_t>(u)] >> v & 1u) g.set_edge(u, v, true);
        out[i].witness = g;
      }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out[i].max = best[i];
    out[i].graphs_counted = counted;
  }
  return out;
}

GraphSearch best_graph_exhaustive(const PatternSpec& f, int n) {
  const PatternSpec one[] = {f};
  return best_graph_exhaustive(std::span<const PatternSpec>(one), n).front();
}

bool extremal_is_turan(const PatternSpec& f, int n, int expect_m, std::optional<int> max_parts) {
  if (expect_m < 1 || expect_m > n) return false;
  const auto res = best_partition(f, n, max_parts);
  return res.argmax.size() == 1 && res.argmax.front() == turan_sizes(expect_m, n);
}

TuranFamilyReport turan_family_check(int r, int t, int n_lo, int n_hi) {
  if (r < 2 || t < 2) throw std::invalid_argument("K_r(t) check needs r, t >= 2");
  TuranFamilyReport rep;
  rep.r = r;
  rep.t = t;
  const PatternSpec f(std::vector<int>(static_cast<std::size_t>(r), t));
  rep.pass = true;
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
    auto res = best_partition(f, n, std::nullopt);
    TuranFamilyRow row;
    row.n = n;
    row.max = res.max;
    row.argmax = std::move(res.argmax);
    row.all_turan = std::all_of(row.argmax.begin(), row.argmax.end(),
                                [&](const MultipartitePartition& p) { return p.k() >= r && is_turan_shape(p); });
    rep.pass = rep.pass && row.all_turan && !row.argmax.empty();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

OnsetReport extremal_onset(const PatternSpec& f, int n_lo, int n_hi, std::optional<int> max_parts) {
  OnsetReport rep;
  rep.f = f;
  rep.m = m_star(f.r(), f.ell());
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (int n = n_lo; n <= n_hi; ++n)
    if (!extremal_is_turan(f, n, rep.m, max_parts)) rep.non_turan.push_back(n);
  if (n_lo <= n_hi) {
    const int last_bad = rep.non_turan.empty() ? n_lo - 1 : rep.non_turan.back();
    if (last_bad < n_hi) rep.onset = last_bad + 1;
  }
  return rep;
}

}  // namespace inducib
