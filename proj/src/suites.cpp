#include "inducib/suites.hpp"

#include <stdexcept>

#include "inducib/landscape.hpp"
#include "inducib/parallel.hpp"

namespace inducib {

namespace {

void almost_balanced_patterns(std::vector<int>& cur, int rest, int cap, std::vector<PatternSpec>& out) {
  if (rest == 0) {
    if (cur.size() >= 2 && is_almost_balanced(PatternSpec(cur))) out.emplace_back(cur);
    return;
  }
  for (int p = std::min(cap, rest); p >= 1; --p) {
    cur.push_back(p);
    almost_balanced_patterns(cur, rest - p, p, out);
    cur.pop_back();
  }
}

std::vector<CheckRecord> ratio_suite() { return {record(sweep_ratio_chain())}; }

std::vector<CheckRecord> h_suite() {
  std::vector<CheckRecord> out;
  for (int r = 2; r <= 8; ++r)
    for (int ell = r + 1; ell <= 2 * r - 1; ++ell) out.push_back(record(check_h_small(r, ell), true));
  return out;
}

std::vector<CheckRecord> big_h_suite() {
  std::vector<CheckRecord> out;
  for (int r = 2; r <= 8; ++r)
    for (int ell = 2 * r; ell <= 3 * r; ++ell) out.push_back(record(check_H_large(r, ell), false));
  return out;
}

std::vector<CheckRecord> prepare_suite() {
  std::vector<CheckRecord> out;
  std::vector<PatternSpec> fs;
  for (int ell = 3; ell <= 14; ++ell) {
    std::vector<int> cur;
    almost_balanced_patterns(cur, ell, ell, fs);
  }
  for (const auto& f : fs) out.push_back(record(f, edge_budget(f), true));
  const PatternSpec k1277({12, 7, 7});
  out.push_back(record(k1277, edge_budget(k1277), false));
  return out;
}

std::vector<CheckRecord> stability_suite(int threads) {
  const std::vector<PatternSpec> fs{PatternSpec({2, 1}), PatternSpec({2, 2}), PatternSpec({2, 1, 1})};
  std::vector<GrowthReport> growth(fs.size());
  parallel_for(fs.size(), threads, [&](std::size_t i) {
    const int m = m_star(fs[i].r(), fs[i].ell());
    growth[i] = stability_growth(fs[i], 30 * m, 60 * m);
  });
  std::vector<CheckRecord> out;
  for (const auto& g : growth) {
    out.push_back(record(g.lower));
    out.push_back(record(g.upper));
    out.push_back(record(g));
  }
  return out;
}

std::vector<CheckRecord> shift_suite(std::uint64_t seed) {
  return {record(shift_sweep(PatternSpec({2, 2}), 120, 50, seed)),
          record(shift_sweep(PatternSpec({2, 1, 1}), 120, 50, seed))};
}

std::vector<CheckRecord> adjustment_suite() {
  std::vector<CheckRecord> out;
  for (const auto& f : {PatternSpec({2, 2}), PatternSpec({3, 3}), PatternSpec({2, 2, 2})}) {
    const int t = f.sizes().front();
    for (int a1 = t + 2; a1 <= 12; ++a1)
      for (int ak = t; ak + 2 <= a1; ++ak)
        for (int k = f.r(); k <= f.r() + 2; ++k) {
          std::vector<int> parts(static_cast<std::size_t>(k), (a1 + ak) / 2);
          parts.front() = a1;
          parts.back() = ak;
          const MultipartitePartition p(parts);
          out.push_back(record(f, p, adjustment_check(f, p)));
        }
  }
  return out;
}

std::vector<CheckRecord> meanvalue_suite() {
  std::vector<CheckRecord> out;
  for (const auto& rep : mean_value_suite(10000).cases) out.push_back(record(rep));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ratio", "h",          "H",         "prepare", "stability",
                                              "shift", "adjustment", "meanvalue", "section6"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<CheckRecord> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, opts);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  if (name == "ratio") return ratio_suite();
  if (name == "h") return h_suite();
  if (name == "H") return big_h_suite();
  if (name == "prepare") return prepare_suite();
  if (name == "stability") return stability_suite(opts.threads);
  if (name == "shift") return shift_suite(opts.seed);
  if (name == "adjustment") return adjustment_suite();
  if (name == "meanvalue") return meanvalue_suite();
  if (name == "section6") return {record(quintic_and_k1277())};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace inducib
