// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
// A criterion also fails when it overruns its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "inducib/exactmath.hpp"
#include "inducib/landscape.hpp"
#include "inducib/oracle.hpp"
#include "inducib/partition.hpp"
#include "inducib/pattern.hpp"
#include "inducib/simplex.hpp"
#include "inducib/verify.hpp"

using namespace inducib;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

ExactRat q(long long p, long long d) { return ExactRat(ExactInt(p), ExactInt(d)); }

PatternSpec pat(const char* s) { return PatternSpec::parse(s); }

// Host density of the best partition found at n, compared to the exact value.
void cross_check(Outcome& o, const PatternSpec& f, const ExactRat& value, int n, std::optional<int> cap) {
  const auto res = best_partition(f, n, cap);
  const double density = to_double(ExactRat(res.max) / ExactRat(binomial(n, f.ell())));
  const double rel = std::abs(density - to_double(value)) / to_double(value);
  o.require(rel <= 0.05, f.label() + " oracle density " + std::to_string(density));
}

void ac1(Outcome& o) {
  const std::vector<std::pair<const char*, ExactRat>> closed{
      {"2,1", q(3, 4)}, {"2,2", q(3, 8)}, {"2,1,1", q(72, 125)}, {"2,1,1,1", q(525, 1024)}};
  for (const auto& [lit, want] : closed) {
    const auto f = pat(lit);
    const ExactRat got = inducibility(f);
    o.require(got == want, f.label() + " = " + to_string(got));
    // K_{2,1,1,1} has m = 8; hosts with more than 10 parts are left out to stay in budget.
    cross_check(o, f, got, 200, f.ell() == 5 ? std::optional<int>(10) : std::nullopt);
  }
  const auto k211 = pat("2,1,1");
  const std::vector<ExactRat> capped{q(4, 9), q(9, 16), q(72, 125), q(72, 125)};
  for (int k = 3; k <= 6; ++k) {
    const ExactRat got = inducibility_clique_free(k211, k);
    o.require(got == capped[static_cast<std::size_t>(k - 3)], "i_" + std::to_string(k + 1) + " = " + to_string(got));
    cross_check(o, k211, got, 200, k);
  }
  o.notes << " 8 values exact, oracle at n=200 within 5%";
}

void ac2(Outcome& o) {
  const std::vector<std::tuple<int, int, int>> table{{2, 3, 2}, {2, 4, 2}, {3, 4, 5}, {3, 5, 3}, {4, 5, 8}, {3, 26, 3}};
  for (const auto& [r, ell, m] : table) {
    const int got = m_star(r, ell);
    const auto b = m_bounds(r, ell);
    const std::string tag = "m(" + std::to_string(r) + "," + std::to_string(ell) + ")";
    o.require(got == m, tag + " = " + std::to_string(got));
    o.require(b.lower < got && BigFloat(got) < b.upper, tag + " outside bounds");
  }
  o.notes << " 6 maximisers";
}

void partitions(std::vector<int>& cur, int rest, int cap, std::vector<PatternSpec>& out) {
  if (rest == 0) {
    if (cur.size() >= 2) out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions(cur, rest - p, p, out);
    cur.pop_back();
  }
}

void ac3(Outcome& o) {
  std::vector<PatternSpec> all;
  std::vector<int> cur;
  for (int ell = 2; ell <= 5; ++ell) partitions(cur, ell, ell, all);
  std::vector<PatternSpec> fs;
  for (const auto& f : all)
    if (is_almost_balanced(f)) fs.push_back(f);
  o.require(fs.size() == 6, "expected 6 patterns, got " + std::to_string(fs.size()));
  long long compared = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto res = best_graph_exhaustive(std::span<const PatternSpec>(fs), n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto part = best_partition(fs[i], n);
      o.require(res[i].max == part.max, fs[i].label() + " n=" + std::to_string(n));
      ++compared;
    }
  }
  o.notes << ' ' << fs.size() << " patterns, " << compared << " (F, n) pairs";
}

void ac4(Outcome& o) {
  int checked = 0;
  for (int n = 3; n <= 200; ++n, ++checked) o.require(extremal_is_turan(pat("2,1"), n, 2), "K_{2,1} n=" + std::to_string(n));
  for (int n = 4; n <= 200; ++n, ++checked) o.require(extremal_is_turan(pat("2,2"), n, 2), "K_{2,2} n=" + std::to_string(n));
  o.notes << ' ' << checked << " searches";
}

void ac5(Outcome& o) {
  for (const auto& [r, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto rep = turan_family_check(r, t, r * t, 30);
    o.require(rep.pass, "K_" + std::to_string(r) + "(" + std::to_string(t) + ")");
    for (const auto& row : rep.rows)
      for (const auto& p : row.argmax) o.require(is_turan_shape(p), "non-Turan argmax " + p.literal());
  }
  o.notes << " 3 families";
}

void ac6(Outcome& o) {
  RatioGrid grid;
  grid.num_lo = 1;
  grid.num_hi = 30;
  grid.denom = 10;
  grid.b_max = 7;
  const auto rep = sweep_ratio_chain(grid);
  o.require(rep.violations == 0, std::to_string(rep.violations) + " violations");
  o.require(rep.aux_a_violations == 0 && rep.aux_st_violations == 0, "auxiliary bound violated");
  o.require(!rep.equality_at.empty(), "no equality case seen");
  o.require(rep.aux_a_equal == std::vector<int>{2, 3} && rep.aux_a_equality_exact, "auxiliary equality set");
  o.require(rep.pass, "sweep");
  o.notes << ' ' << rep.checks << " checks, equality at";
  for (const auto& [a, t] : rep.equality_at) o.notes << " (a=" << a << ",t=" << t << ")";
}

void ac7(Outcome& o) {
  int n = 0;
  for (int r = 2; r <= 8; ++r) {
    for (int ell = r + 1; ell <= 2 * r - 1; ++ell, ++n) {
      const auto pc = check_h_small(r, ell);
      o.require(pc.pass && pc.unique && pc.argmax == pc.m - 1, "h r=" + std::to_string(r) + " l=" + std::to_string(ell));
    }
    for (int ell = 2 * r; ell <= 3 * r; ++ell, ++n) {
      const auto pc = check_H_large(r, ell);
      o.require(pc.pass && pc.unique && pc.argmax == pc.m - 1, "H r=" + std::to_string(r) + " l=" + std::to_string(ell));
    }
  }
  o.notes << ' ' << n << " profiles";
}

void ac8(Outcome& o) {
  for (const char* lit : {"2,1", "2,2", "2,1,1"}) {
    const auto f = pat(lit);
    const int m = m_star(f.r(), f.ell());
    const auto rep = stability_growth(f, 30 * m, 60 * m, 0.10);
    o.require(rep.lower.pairs_positive && rep.upper.pairs_positive, f.label() + " pair deltas");
    o.require(rep.lower.apex_unique && rep.upper.apex_unique, f.label() + " apex maximum");
    o.require(rep.pass, f.label() + " growth " + std::to_string(rep.worst_relative));
    o.notes << ' ' << f.label() << " worst growth error " << std::setprecision(3) << rep.worst_relative;
  }
}

void ac9(Outcome& o) {
  for (const char* lit : {"2,2", "2,1,1"}) {
    const auto f = pat(lit);
    const int m = m_star(f.r(), f.ell());
    const auto sw = shift_sweep(f, 120, 50, 20240611);
    o.require(sw.cases.size() == 50, f.label() + " case count");
    for (const auto& [p, diff] : sw.cases) {
      o.require(p.k() == m && p.n() == 120 && p[0] - p[p.k() - 1] >= 2, "bad case " + p.literal());
      o.require(diff > 0, f.label() + " at " + p.literal());
    }
    o.require(sw.pass, f.label());
  }
  o.notes << " 100 cases";
}

void ac10(Outcome& o) {
  const auto rep = quintic_and_k1277();
  const BigFloat err = abs(rep.alpha - BigFloat("0.396884"));
  o.require(err <= BigFloat("1e-6"), "alpha = " + to_decimal(rep.alpha, 12));
  o.require(rep.ratio > BigFloat("1.001"), "ratio = " + to_decimal(rep.ratio, 12));
  o.require(!is_almost_balanced(pat("4,8,8")), "K_{4,8,8} almost balanced");
  o.require(rep.k1277_necessary_strict && check_prepare_exact(pat("12,7,7")), "K_{12,7,7} edge budget");
  o.require(rep.pass, "report");
  o.notes << " alpha " << to_decimal(rep.alpha, 10) << ", ratio " << to_decimal(rep.ratio, 8);
}

void ac11(Outcome& o) {
  for (const char* lit : {"2,1", "2,2", "2,1,1"}) {
    CertifyOptions opts;
    opts.trials = 200;
    opts.seed = 7;
    const auto rep = certify_opt(pat(lit), opts);
    o.require(rep.pass && rep.failures == 0 && rep.trials.size() == 200, rep.f.label());
    o.notes << ' ' << rep.f.label() << " 0/200 failures";
  }
  const auto mv = mean_value_suite(10000);
  double worst = 0;
  for (const auto& c : mv.cases) worst = std::max({worst, c.single_error, c.pair_error});
  o.require(mv.pass && worst < 0.01, "mean-value error " + std::to_string(worst));
  o.notes << ", mean-value worst error " << std::setprecision(3) << worst;
}

}  // namespace

int main() {
  set_float_precision(kDefaultPrecisionDigits);
  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{{1, 10, ac1},  {2, 1, ac2},  {3, 600, ac3}, {4, 60, ac4},
                                        {5, 60, ac5},  {6, 60, ac6}, {7, 1, ac7},   {8, 60, ac8},
                                        {9, 60, ac9},  {10, 1, ac10}, {11, 300, ac11}};
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.limit_s, "time limit " + std::to_string(c.limit_s) + " s");
    if (!o.pass) ++failed;
    std::cout << "AC" << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << o.notes.str() << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::defaultfloat << std::endl;
  }
  std::cout << (failed ? "FAIL" : "PASS") << ": " << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria\n";
  return failed ? 1 : 0;
}
