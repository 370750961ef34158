#include <vector>

#include "doctest.h"
#include "inducib/counting.hpp"
#include "inducib/landscape.hpp"
#include "inducib/oracle.hpp"

using namespace inducib;

namespace {

std::vector<std::vector<int>> partitions_of(int n, int max_part, int max_len) {
  if (n == 0) return {{}};
  if (max_len == 0) return {};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions_of(n - first, first, max_len - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Plain enumeration with the counting module as the evaluator.
PartitionSearch naive_best(const PatternSpec& f, int n, int max_len) {
  PartitionSearch out;
  out.max = -1;
  for (const auto& parts : partitions_of(n, n, max_len)) {
    const MultipartitePartition p(parts);
    const ExactInt v = induced_count(f, p);
    if (v > out.max) {
      out.max = v;
      out.argmax.clear();
    }
    if (v == out.max) out.argmax.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("partition search examples") {
  const auto k21 = PatternSpec::parse("2,1");
  auto res = best_partition(k21, 5);
  CHECK(res.max == 9);
  CHECK(res.argmax == std::vector<MultipartitePartition>{MultipartitePartition({3, 2})});
  res = best_partition(k21, 7);
  CHECK(res.max == 30);
  CHECK(res.argmax == std::vector<MultipartitePartition>{MultipartitePartition({4, 3})});
  res = best_partition(PatternSpec::parse("2,2"), 8);
  CHECK(res.max == 36);
  CHECK(res.argmax == std::vector<MultipartitePartition>{MultipartitePartition({4, 4})});
}

TEST_CASE("pruned search matches plain enumeration") {
  for (const char* lit : {"2,1", "2,2", "2,1,1", "3,2", "3,1", "2,2,1", "2,1,1,1", "3,3,1", "4,2,1,1", "2,2,2,2"}) {
    const auto f = PatternSpec::parse(lit);
    for (int n = 1; n <= 26; n += (n < 14 ? 1 : 4))
      for (std::optional<int> cap : {std::optional<int>{}, std::optional<int>{3}}) {
        const auto want = naive_best(f, n, cap.value_or(n));
        SearchOptions opts;
        opts.max_parts = cap;
        const auto got = best_partition(f, n, opts);
        opts.prune = false;
        const auto plain = best_partition(f, n, opts);
        INFO(lit, " n=", n);
        CHECK(got.max == want.max);
        CHECK(got.argmax == want.argmax);
        CHECK(plain.max == want.max);
        CHECK(plain.argmax == want.argmax);
        CHECK(got.nodes <= plain.nodes);
      }
  }
}

TEST_CASE("threaded search is deterministic") {
  const auto f = PatternSpec::parse("2,1,1");
  SearchOptions opts;
  const auto one = best_partition(f, 60, opts);
  opts.threads = 3;
  const auto three = best_partition(f, 60, opts);
  CHECK(one.max == three.max);
  CHECK(one.argmax == three.argmax);
}

TEST_CASE("node budget is enforced") {
  SearchOptions opts;
  opts.node_budget = 10;
  opts.prune = false;
  CHECK_THROWS_AS(best_partition(PatternSpec::parse("2,1"), 40, opts), SearchBudgetExceeded);
}

TEST_CASE("exhaustive graph search examples") {
  CHECK(best_graph_exhaustive(PatternSpec::parse("2,2"), 4).max == 1);
  CHECK(best_graph_exhaustive(PatternSpec::parse("2,1"), 4).max == 4);
  const auto k21 = best_graph_exhaustive(PatternSpec::parse("2,1"), 5);
  CHECK(k21.max == 9);
  CHECK(induced_count_general(PatternSpec::parse("2,1"), k21.witness) == 9);
  CHECK_THROWS(best_graph_exhaustive(PatternSpec::parse("2,1"), 9));
}

TEST_CASE("exhaustive search agrees with the partition search for small n") {
  const std::vector<PatternSpec> fs{PatternSpec::parse("2,1"), PatternSpec::parse("2,2"), PatternSpec::parse("2,1,1"),
                                    PatternSpec::parse("3,1")};
  for (int n = 2; n <= 6; ++n) {
    const auto res = best_graph_exhaustive(std::span<const PatternSpec>(fs), n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      INFO(fs[i].label(), " n=", n);
      CHECK(res[i].max == best_partition(fs[i], n).max);
      CHECK(induced_count_general(fs[i], res[i].witness) == res[i].max);
    }
  }
}

TEST_CASE("Turan extremality checks") {
  CHECK(extremal_is_turan(PatternSpec::parse("2,1"), 7, 2));
  CHECK_FALSE(extremal_is_turan(PatternSpec::parse("2,1"), 7, 3));
  const auto fam = turan_family_check(2, 2, 4, 30);
  CHECK(fam.pass);
  CHECK(fam.rows.size() == 27);
  CHECK_THROWS(turan_family_check(1, 2, 4, 10));
  const auto onset = extremal_onset(PatternSpec::parse("2,1"), 3, 40);
  CHECK(onset.m == 2);
  REQUIRE(onset.onset.has_value());
  CHECK(*onset.onset == 3);
}

TEST_CASE("pruning stays exact beyond the small-rest table") {
  for (const char* lit : {"2,1", "2,1,1", "2,2,1"}) {
    const auto f = PatternSpec::parse(lit);
    for (const std::optional<int> cap : {std::optional<int>{}, std::optional<int>{4}}) {
      SearchOptions plain;
      plain.max_parts = cap;
      plain.prune = false;
      SearchOptions pruned;
      pruned.max_parts = cap;
      const int n = cap ? 70 : 48;
      INFO(lit, " n=", n);
      const auto a = best_partition(f, n, plain);
      const auto b = best_partition(f, n, pruned);
      CHECK(a.max == b.max);
      CHECK(a.argmax == b.argmax);
      CHECK(b.nodes < a.nodes);
    }
  }
}

TEST_CASE("maximum is non-decreasing in the part cap") {
  const auto f = PatternSpec::parse("2,1,1");
  ExactInt prev = 0;
  for (int cap = 1; cap <= 8; ++cap) {
    const auto res = best_partition(f, 30, cap);
    CHECK(res.max >= prev);
    prev = res.max;
  }
  CHECK(prev == best_partition(f, 30).max);
  CHECK(extremal_is_turan(PatternSpec::parse("2,2"), 9, 2));
}
