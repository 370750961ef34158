#include "inducib/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "inducib/landscape.hpp"
#include "inducib/simplex.hpp"

namespace inducib {

namespace {

ExactRat rabs(const ExactRat& q) { return q < 0 ? ExactRat(-q) : q; }

// Powers 0..top of x, y, x+y and (x+y)/2.
struct PowerTable {
  std::vector<ExactRat> x, y, sum, half;

  PowerTable(const ExactRat& xv, const ExactRat& yv, int top) {
    const ExactRat s = xv + yv;
    const ExactRat h = s / 2;
    x.push_back(1);
    y.push_back(1);
    sum.push_back(1);
    half.push_back(1);
    for (int d = 1; d <= top; ++d) {
      x.push_back(x.back() * xv);
      y.push_back(y.back() * yv);
      sum.push_back(sum.back() * s);
      half.push_back(half.back() * h);
    }
  }

  ExactRat mu(int d) const { return sum[d] - x[d] - y[d]; }
  ExactRat omega(int d) const { return x[d] + y[d] - 2 * half[d]; }
  ExactRat psi(int d1, int d2) const { return x[d1] * y[d2] + x[d2] * y[d1]; }
  ExactRat phi(int d1, int d2) const { return 2 * half[d1 + d2] - psi(d1, d2); }
};

struct Tuple {
  int a, s, t, b;
};

std::vector<Tuple> valid_tuples(int b_max) {
  std::vector<Tuple> out;
  for (int b = 2; b <= b_max; ++b)
    for (int t = 2; t <= b; ++t)
      for (int s = 2; s <= t; ++s)
        for (int a = 2; a <= s; ++a)
          if (valid_ratio_tuple(a, s, t, b)) out.push_back({a, s, t, b});
  return out;
}

RatioCheck compare(const ExactRat& mu_a, const ExactRat& mu_t, const ExactRat& om_a, const ExactRat& om_t,
                   const ExactRat& psi, const ExactRat& phi) {
  const ExactRat left = om_t / mu_t;
  const ExactRat mid = om_a / mu_a;
  const ExactRat right = phi / psi;
  return {left <= mid, left == mid, mid < right};
}

}  // namespace

bool valid_ratio_tuple(int a, int s, int t, int b) {
  return a >= 2 && b >= t && t >= s && s >= a && ExactInt(a) > binomial(b - a, 2);
}

RatioWitness RatioWitness::make(const ExactRat& x, const ExactRat& y, int a, int s, int t, int b) {
  if (x <= 0 || y <= 0) throw std::invalid_argument("ratio witness needs x, y > 0");
  if (x == y) throw std::invalid_argument("ratio witness needs x != y");
  if (!valid_ratio_tuple(a, s, t, b))
    throw std::invalid_argument("ratio witness needs b >= t >= s >= a >= 2 and a > C(b-a,2); got (a,s,t,b)=(" +
                                std::to_string(a) + "," + std::to_string(s) + "," + std::to_string(t) + "," +
                                std::to_string(b) + ")");
  const PowerTable pw(x, y, s + t);
  RatioWitness w;
  w.x = x;
  w.y = y;
  w.a = a;
  w.s = s;
  w.t = t;
  w.b = b;
  w.mu_a = pw.mu(a);
  w.mu_t = pw.mu(t);
  w.omega_a = pw.omega(a);
  w.omega_t = pw.omega(t);
  w.psi_st = pw.psi(s, t);
  w.phi_st = pw.phi(s, t);
  return w;
}

std::string RatioWitness::to_string() const {
  std::ostringstream os;
  os << "x=" << inducib::to_string(x) << " y=" << inducib::to_string(y) << " (a,s,t,b)=(" << a << "," << s << ","
     << t << "," << b << ")";
  return os.str();
}

RatioCheck check_ratio_chain(const RatioWitness& w) {
  return compare(w.mu_a, w.mu_t, w.omega_a, w.omega_t, w.psi_st, w.phi_st);
}

RatioSweepReport sweep_ratio_chain(const RatioGrid& grid) {
  if (grid.num_lo < 1 || grid.num_hi < grid.num_lo || grid.denom < 1 || grid.b_max < 2)
    throw std::invalid_argument("bad ratio grid");
  RatioSweepReport rep;
  rep.grid = grid;
  const auto tuples = valid_tuples(grid.b_max);
  rep.tuples = static_cast<long long>(tuples.size());
  std::set<std::pair<int, int>> st_pairs;
  for (const auto& tp : tuples) st_pairs.emplace(tp.s, tp.t);

  std::set<std::pair<int, int>> equality_at;
  std::vector<bool> aux_equal(static_cast<std::size_t>(grid.b_max + 1), true);
  for (int xn = grid.num_lo; xn <= grid.num_hi; ++xn)
    for (int yn = grid.num_lo; yn <= grid.num_hi; ++yn) {
      if (xn == yn) continue;
      ++rep.points;
      const ExactRat x(xn, grid.denom);
      const ExactRat y(yn, grid.denom);
      const PowerTable pw(x, y, 2 * grid.b_max);
      for (const auto& tp : tuples) {
        const auto res = compare(pw.mu(tp.a), pw.mu(tp.t), pw.omega(tp.a), pw.omega(tp.t), pw.psi(tp.s, tp.t),
                                 pw.phi(tp.s, tp.t));
        ++rep.checks;
        if (!res.first || !res.second) {
          ++rep.violations;
          if (rep.witnesses.size() < 8) rep.witnesses.push_back(RatioWitness::make(x, y, tp.a, tp.s, tp.t, tp.b));
        }
        if (res.first_equal && tp.a < tp.t) {
          ++rep.equality_hits;
          equality_at.emplace(tp.a, tp.t);
        }
      }
      for (int a = 2; a <= grid.b_max; ++a) {
        const ExactRat lhs = ExactRat(ExactInt(1) << (a - 2)) * pw.mu(a);
        const ExactRat rhs = ExactRat((ExactInt(1) << a) - 2) * x * y * pw.sum[static_cast<std::size_t>(a - 2)];
        ++rep.aux_a_checks;
        if (lhs < rhs) ++rep.aux_a_violations;
        if (lhs != rhs) aux_equal[static_cast<std::size_t>(a)] = false;
      }
      for (const auto& [s, t] : st_pairs) {
        ++rep.aux_st_checks;
        if (!(2 * pw.half[static_cast<std::size_t>(s + t - 2)] > pw.psi(s - 1, t - 1))) ++rep.aux_st_violations;
      }
    }
  rep.equality_at.assign(equality_at.begin(), equality_at.end());
  for (int a = 2; a <= grid.b_max; ++a)
    if (aux_equal[static_cast<std::size_t>(a)]) rep.aux_a_equal.push_back(a);
  std::vector<int> expect_equal;
  for (int a : {2, 3})
    if (a <= grid.b_max) expect_equal.push_back(a);
  rep.aux_a_equality_exact = rep.aux_a_equal == expect_equal;

  rep.g_half_unique_max = true;
  for (const auto& [s, t] : st_pairs) {
    auto g = [s = s, t = t](const ExactRat& z) {
      const ExactRat w = 1 - z;
      return ipow(z, t - 1) * ipow(w, s - 1) + ipow(z, s - 1) * ipow(w, t - 1);
    };
    const ExactRat peak = g(ExactRat(1, 2));
    for (int k = 1; k < 100; ++k)
      if (k != 50 && !(g(ExactRat(k, 100)) < peak)) rep.g_half_unique_max = false;
  }
  rep.pass = rep.violations == 0 && rep.aux_a_violations == 0 && rep.aux_a_equality_exact &&
             rep.aux_st_violations == 0 && rep.g_half_unique_max;
  return rep;
}

namespace {

ProfileCheck finish_profile(ProfileCheck pc) {
  ExactInt best = -1;
  for (std::size_t q = 0; q < pc.values.size(); ++q)
    if (pc.values[q] > best) {
      best = pc.values[q];
      pc.argmax = static_cast<int>(q);
    }
  pc.unique = std::count(pc.values.begin(), pc.values.end(), best) == 1;
  pc.pass = pc.unique && pc.argmax == pc.m - 1;
  return pc;
}

}  // namespace

ProfileCheck check_h_small(int r, int ell) {
  if (r < 2 || ell < r + 1 || ell > 2 * r - 1)
    throw std::invalid_argument("h profile needs r + 1 <= ell <= 2r - 1 (got r=" + std::to_string(r) +
                                ", ell=" + std::to_string(ell) + ")");
  ProfileCheck pc;
  pc.r = r;
  pc.ell = ell;
  pc.m = m_star(r, ell);
  for (int q = 0; q <= pc.m; ++q)
    pc.values.push_back(falling_factorial(ExactInt(q), r - 1) * (2 * r - ell + 2 * (pc.m - q) * (ell - r)));
  return finish_profile(std::move(pc));
}

ProfileCheck check_H_large(int r, int ell) {
  if (r < 2 || ell < 2 * r)
    throw std::invalid_argument("H profile needs ell >= 2r (got r=" + std::to_string(r) + ", ell=" +
                                std::to_string(ell) + ")");
  ProfileCheck pc;
  pc.r = r;
  pc.ell = ell;
  pc.m = m_star(r, ell);
  for (int q = 0; q <= pc.m; ++q) pc.values.push_back((pc.m - q) * falling_factorial(ExactInt(q), r - 1));
  return finish_profile(std::move(pc));
}

EdgeBudget edge_budget(const PatternSpec& f) {
  if (f.r() < 2) throw std::invalid_argument("edge budget needs at least two parts");
  EdgeBudget eb;
  eb.m = m_star(f.r(), f.ell());
  eb.lhs = binomial(f.ell(), 2);
  ExactInt inside = 0;
  for (int a : f.sizes()) inside += binomial(a, 2);
  eb.rhs = eb.m * inside;
  return eb;
}

bool check_prepare_exact(const PatternSpec& f) {
  const auto eb = edge_budget(f);
  return eb.lhs > eb.rhs;
}

bool check_necessary(const PatternSpec& f) {
  const auto eb = edge_budget(f);
  return eb.lhs >= eb.rhs;
}

StabilityReport stability_premises(const PatternSpec& f, int n) {
  if (!is_almost_balanced(f)) throw std::invalid_argument(f.label() + " is not almost balanced");
  StabilityReport rep;
  rep.f = f;
  rep.n = n;
  rep.m = m_star(f.r(), f.ell());
  if (n < rep.m * f.ell())
    throw std::invalid_argument("stability premises need n >= m * ell = " + std::to_string(rep.m * f.ell()));
  rep.host = turan_sizes(rep.m, n);
  rep.base = induced_count(f, rep.host);
  const auto& parts = rep.host.parts();
  const int m = rep.m;
  int big = 0;
  while (big < m && parts[static_cast<std::size_t>(big)] == parts[0]) ++big;
  const int small = m - big;

  std::vector<FlipPair> pairs;
  if (parts[0] >= 2) pairs.push_back(FlipPair::same_part(0));
  if (small > 0 && parts[static_cast<std::size_t>(big)] >= 2) pairs.push_back(FlipPair::same_part(big));
  if (big >= 2) pairs.push_back(FlipPair::cross_part(0, 1));
  if (small > 0) pairs.push_back(FlipPair::cross_part(0, big));
  if (small >= 2) pairs.push_back(FlipPair::cross_part(big, big + 1));
  for (const auto& pair : pairs) {
    PairDelta pd;
    pd.pair = pair;
    pd.size_i = parts[static_cast<std::size_t>(pair.part_i)];
    pd.size_j = parts[static_cast<std::size_t>(pair.part_j)];
    pd.delta = rep.base - flipped_total(f, rep.host, pair);
    rep.pair_deltas.push_back(std::move(pd));
  }

  for (int i = 0; i <= big; ++i)
    for (int j = 0; j <= small; ++j) {
      ApexCount ac;
      ac.q = i + j;
      for (int v = 0; v < i; ++v) ac.parts.push_back(v);
      for (int v = 0; v < j; ++v) ac.parts.push_back(big + v);
      ac.count = count_with_apex(f, rep.host, ac.parts);
      rep.apex_counts.push_back(std::move(ac));
    }

  const ExactInt pair_scale = pow(ExactInt(n), static_cast<unsigned>(f.ell() - 2));
  const ExactInt apex_scale = pow(ExactInt(n), static_cast<unsigned>(f.ell() - 1));
  rep.pairs_positive = !rep.pair_deltas.empty();
  ExactInt min_delta = -1;
  for (const auto& pd : rep.pair_deltas) {
    if (pd.delta <= 0) rep.pairs_positive = false;
    if (min_delta < 0 || pd.delta < min_delta) min_delta = pd.delta;
  }
  rep.eps_pairs = rep.pair_deltas.empty() ? ExactRat(0) : ExactRat(min_delta, pair_scale);

  std::optional<ExactInt> best_target;
  std::optional<ExactInt> best_other;
  for (const auto& ac : rep.apex_counts) {
    auto& slot = ac.q == m - 1 ? best_target : best_other;
    if (ac.q == m - 1)
      slot = slot ? std::min(*slot, ac.count) : ac.count;
    else
      slot = slot ? std::max(*slot, ac.count) : ac.count;
  }
  rep.apex_unique = best_target && (!best_other || *best_target > *best_other);
  if (best_target) rep.eps_apex = ExactRat(*best_target - best_other.value_or(0), apex_scale);
  rep.pass = rep.pairs_positive && rep.apex_unique;
  return rep;
}

GrowthReport stability_growth(const PatternSpec& f, int n_lower, int n_upper, double tol) {
  GrowthReport g;
  g.lower = stability_premises(f, n_lower);
  g.upper = stability_premises(f, n_upper);
  g.expected = std::pow(static_cast<double>(n_upper) / n_lower, f.ell() - 2);
  bool matched = g.lower.pair_deltas.size() == g.upper.pair_deltas.size() && !g.lower.pair_deltas.empty();
  if (matched)
    for (std::size_t i = 0; i < g.lower.pair_deltas.size(); ++i) {
      const auto& lo = g.lower.pair_deltas[i];
      const auto& hi = g.upper.pair_deltas[i];
      if (lo.pair.kind != hi.pair.kind || lo.delta <= 0) {
        matched = false;
        break;
      }
      const double ratio = to_double(ExactRat(hi.delta, lo.delta));
      g.ratios.push_back(ratio);
      g.worst_relative = std::max(g.worst_relative, std::abs(ratio - g.expected) / g.expected);
    }
  g.pass = matched && g.lower.pass && g.upper.pass && g.worst_relative <= tol;
  return g;
}

ExactInt shift_comparison(const PatternSpec& f, const MultipartitePartition& p) {
  if (p.k() < 2 || p[0] < p[p.k() - 1] + 2)
    throw std::invalid_argument("shift comparison needs two parts with n_1 >= n_k + 2 (got " + p.literal() + ")");
  std::vector<int> moved = p.parts();
  moved.front() -= 1;
  moved.back() += 1;
  return induced_count(f, MultipartitePartition(std::move(moved))) - induced_count(f, p);
}

std::vector<MultipartitePartition> near_balanced_partitions(int m, int n, int count, std::uint64_t seed) {
  if (m < 2 || n < m + 2) throw std::invalid_argument("near-balanced partitions need m >= 2 and n >= m + 2");
  const int max_spread = std::max(2, n / (2 * m));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::uniform_int_distribution<int> steps(1, 3 * m);
  std::vector<MultipartitePartition> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> parts = turan_sizes(m, n).parts();
    const int moves = steps(rng);
    for (int i = 0; i < moves; ++i) {
      const int from = pick(rng);
      const int to = pick(rng);
      if (from == to || parts[static_cast<std::size_t>(from)] <= 1) continue;
      --parts[static_cast<std::size_t>(from)];
      ++parts[static_cast<std::size_t>(to)];
    }
    const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
    const int spread = *hi - *lo;
    if (spread >= 2 && spread <= max_spread) out.emplace_back(std::move(parts));
  }
  return out;
}

ShiftSweep shift_sweep(const PatternSpec& f, int n, int count, std::uint64_t seed) {
  ShiftSweep sw;
  sw.f = f;
  sw.n = n;
  sw.pass = true;
  for (auto& p : near_balanced_partitions(m_star(f.r(), f.ell()), n, count, seed)) {
    ExactInt diff = shift_comparison(f, p);
    sw.pass = sw.pass && diff > 0;
    sw.cases.emplace_back(std::move(p), std::move(diff));
  }
  return sw;
}

AdjustmentCheck adjustment_check(const PatternSpec& f, const MultipartitePartition& p) {
  const int t = f.sizes().front();
  if (f.sizes().back() != t) throw std::invalid_argument("adjustment check needs a balanced pattern K_r(t)");
  if (p.k() < std::max(f.r(), 2) || p[0] < p[p.k() - 1] + 2 || p[p.k() - 1] < t)
    throw std::invalid_argument("adjustment check needs k >= r parts, a_1 >= a_k + 2 and every part >= t (got " +
                                p.literal() + ")");
  AdjustmentCheck out;
  out.current = induced_count(f, p);
  std::vector<int> shifted = p.parts();
  shifted.front() -= 1;
  shifted.back() += 1;
  out.shifted = induced_count(f, MultipartitePartition(std::move(shifted)));
  std::vector<int> merged(p.parts().begin() + 1, p.parts().end() - 1);
  merged.push_back(p[0] + p[p.k() - 1]);
  out.merged = induced_count(f, MultipartitePartition(std::move(merged)));
  out.pass = out.current < std::max(out.shifted, out.merged);
  return out;
}

namespace {

ExactRat scale_by_power(const ExactRat& v, long long n, int exp) {
  if (exp >= 0) return v / ipow(ExactRat(ExactInt(n)), static_cast<unsigned>(exp));
  return v * ipow(ExactRat(ExactInt(n)), static_cast<unsigned>(-exp));
}

}  // namespace

MeanValueReport mean_value_convergence(int s, int t, const ExactRat& gap, const std::vector<long long>& n_list,
                                       double tol) {
  if (s < 1 || t < s) throw std::invalid_argument("mean value check needs t >= s >= 1");
  if (gap <= 0) throw std::invalid_argument("mean value check needs gap > 0");
  if (n_list.empty()) throw std::invalid_argument("mean value check needs at least one N");
  MeanValueReport rep;
  rep.s = s;
  rep.t = t;
  rep.gap = gap;
  const ExactInt sf = factorial(s);
  const ExactInt tf = factorial(t);
  rep.single_limit = ExactRat(-s * (s - 1)) * gap / ExactRat(sf);
  rep.pair_limit = ExactRat(t + s - (t - s) * (t - s)) * gap / ExactRat(sf * tf);
  for (long long n : n_list) {
    const ExactRat x{ExactInt(n)};
    const ExactRat y = x + 1 + gap;
    const auto c = [](const ExactRat& z, int k) { return binomial(z, k); };
    const ExactRat single = c(x + 1, s) + c(y - 1, s) - c(x, s) - c(y, s);
    const ExactRat pair =
        c(x + 1, t) * c(y - 1, s) + c(x + 1, s) * c(y - 1, t) - c(x, t) * c(y, s) - c(x, s) * c(y, t);
    rep.rows.push_back({n, scale_by_power(single, n, s - 2), scale_by_power(pair, n, t + s - 2)});
  }
  const auto& last = rep.rows.back();
  const ExactRat single_scale = std::max(rabs(rep.single_limit), gap / ExactRat(sf));
  const ExactRat pair_scale = std::max(rabs(rep.pair_limit), gap / ExactRat(sf * tf));
  rep.single_error = to_double(rabs(last.single_ratio - rep.single_limit) / single_scale);
  rep.pair_error = to_double(rabs(last.pair_ratio - rep.pair_limit) / pair_scale);
  rep.pass = rep.single_error < tol && rep.pair_error < tol;
  return rep;
}

MeanValueSuite mean_value_suite(long long n_max) {
  MeanValueSuite suite;
  suite.pass = true;
  for (int s = 1; s <= 5; ++s)
    for (int t = s; t <= 5; ++t)
      for (const ExactRat& gap : {ExactRat(1, 2), ExactRat(1), ExactRat(3)}) {
        auto rep = mean_value_convergence(s, t, gap, {100, 1000, n_max});
        suite.pass = suite.pass && rep.pass;
        suite.cases.push_back(std::move(rep));
      }
  return suite;
}

BigFloat quintic(const BigFloat& x) {
  return (((BigFloat(130) * x + 25) * x - 90) * x + 80) * x * x - 40 * x + 7;
}

BigFloat quintic_largest_root(const BigFloat& tol) {
  // All roots lie in |x| < 1 + 90/130 < 2; scan down from 2 for the last sign change.
  const BigFloat step("0.001");
  BigFloat hi = 2;
  BigFloat lo = hi - step;
  while (lo > -2 && (quintic(lo) > 0) == (quintic(hi) > 0)) {
    hi = lo;
    lo -= step;
  }
  if (lo <= -2) throw std::runtime_error("quintic: no sign change found");
  const bool lo_positive = quintic(lo) > 0;
  while (hi - lo > tol) {
    const BigFloat mid = (lo + hi) / 2;
    if ((quintic(mid) > 0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

QuinticReport quintic_and_k1277() {
  QuinticReport rep;
  rep.precision_digits = static_cast<int>(float_precision());
  rep.alpha = quintic_largest_root(BigFloat("1e-12"));
  rep.residual = quintic(rep.alpha);
  const std::vector<int> degrees{12, 7, 7};
  const BigFloat rest = (1 - rep.alpha) / 2;
  rep.s_alpha = s_poly(std::span<const int>(degrees), LimitPoint::from_weights({rep.alpha, rest, rest}));
  rep.s_balanced = s_poly(std::span<const int>(degrees), LimitPoint::balanced(3));
  rep.ratio = rep.s_alpha / rep.s_balanced;
  rep.k488_almost_balanced = is_almost_balanced(PatternSpec({4, 8, 8}));
  const PatternSpec k1277({12, 7, 7});
  rep.k1277_budget = edge_budget(k1277);
  rep.k1277_necessary_strict = rep.k1277_budget.lhs > rep.k1277_budget.rhs;
  rep.pass = abs(rep.alpha - BigFloat("0.396884")) <= BigFloat("1e-6") && abs(rep.residual) < BigFloat("1e-10") &&
             rep.ratio > BigFloat("1.001") && !rep.k488_almost_balanced && rep.k1277_necessary_strict;
  return rep;
}

}  // namespace inducib
