#include "doctest.h"
#include "inducib/partition.hpp"
#include "inducib/pattern.hpp"

using namespace inducib;

TEST_CASE("pattern parsing sorts and derives attributes") {
  const auto f = PatternSpec::parse("1,2,1");
  CHECK(f.sizes() == std::vector<int>{2, 1, 1});
  CHECK(f.r() == 3);
  CHECK(f.ell() == 4);
  CHECK(f.singleton_count() == 2);
  CHECK(f.classes() == std::vector<SizeClass>{{2, 1}, {1, 2}});
  CHECK(f.sym() == 2);
  CHECK(f.label() == "K_{2,1,1}");
  CHECK_THROWS(PatternSpec::parse(""));
  CHECK_THROWS(PatternSpec::parse("2,0"));
  CHECK_THROWS(PatternSpec::parse("2,x"));
  CHECK(PatternSpec::parse(" 3 , 1 ").sizes() == std::vector<int>{3, 1});
}

TEST_CASE("removing parts") {
  const auto f = PatternSpec::parse("2,1,1");
  CHECK(f.without_part(1) == PatternSpec::parse("2,1"));
  CHECK(f.without_parts(1, 2) == PatternSpec::parse("2"));
  CHECK(f.without_part(2) == PatternSpec::parse("1,1"));
  CHECK(f.without_parts(1, 2).without_part(2).empty());
  CHECK_THROWS(f.without_part(3));
}

TEST_CASE("almost balanced") {
  CHECK(is_almost_balanced(PatternSpec::parse("2,1")));
  CHECK_FALSE(is_almost_balanced(PatternSpec::parse("8,8,4")));
  CHECK_FALSE(is_almost_balanced(PatternSpec::parse("1,1,1")));
  CHECK_FALSE(is_almost_balanced(PatternSpec::parse("3,1")));
  CHECK(is_almost_balanced(PatternSpec::parse("12,7,7")) == false);  // binom(5,2) = 10 > 7
  CHECK(is_almost_balanced(PatternSpec::parse("4,3,3")));
}

TEST_CASE("every Turan shape with ell >= r + 1 is almost balanced") {
  for (int r = 2; r <= 30; ++r)
    for (int ell = r + 1; ell <= 30; ++ell) {
      const auto shape = turan_sizes(r, ell);
      CHECK(is_almost_balanced(PatternSpec(shape.parts())));
    }
}

TEST_CASE("kappa") {
  CHECK(kappa(PatternSpec::parse("2,1")) == 3);
  CHECK(kappa(PatternSpec::parse("2,2")) == 3);
  CHECK(kappa(PatternSpec::parse("2,1,1,1")) == 10);
  CHECK(kappa(PatternSpec::parse("2,1,1")) == 6);
}

TEST_CASE("turan sizes") {
  CHECK(turan_sizes(2, 5).parts() == std::vector<int>{3, 2});
  CHECK(turan_sizes(5, 60).parts() == std::vector<int>{12, 12, 12, 12, 12});
  CHECK(turan_sizes(3, 7).parts() == std::vector<int>{3, 2, 2});
  CHECK_THROWS(turan_sizes(4, 3));
  CHECK(is_turan_shape(turan_sizes(4, 11)));
  CHECK_FALSE(is_turan_shape(MultipartitePartition({5, 3})));
}

TEST_CASE("almost balanced shape check") {
  CHECK(almost_balanced_shape_check(PatternSpec::parse("2,1,1")) == ShapeKind::TwoOneShape);
  CHECK(almost_balanced_shape_check(PatternSpec::parse("2,2")) == ShapeKind::AllAtLeastTwo);
  CHECK(almost_balanced_shape_check(PatternSpec::parse("3,1")) == ShapeKind::NotApplicable);
  CHECK(almost_balanced_shape_check(PatternSpec::parse("1,1")) == ShapeKind::NotApplicable);

  // The forced shapes hold for every almost balanced pattern up to ell = 12.
  for (int a1 = 1; a1 <= 6; ++a1)
    for (int a2 = 1; a2 <= a1; ++a2)
      for (int a3 = 0; a3 <= a2; ++a3)
        for (int a4 = 0; a4 <= (a3 ? a3 : 0); ++a4) {
          std::vector<int> sizes{a1, a2};
          if (a3) sizes.push_back(a3);
          if (a4) sizes.push_back(a4);
          const PatternSpec f(sizes);
          if (!is_almost_balanced(f)) continue;
          CHECK_NOTHROW(almost_balanced_shape_check(f));
        }
}

TEST_CASE("partition parsing") {
  const auto p = MultipartitePartition::parse("3,4,1");
  CHECK(p.parts() == std::vector<int>{4, 3, 1});
  CHECK(p.n() == 8);
  CHECK(p.singleton_count() == 1);
  CHECK(p.without({0}).parts() == std::vector<int>{3, 1});
  CHECK(p.restricted_to({0, 2}).parts() == std::vector<int>{4, 1});
  CHECK_THROWS(MultipartitePartition::parse("3,-1"));
}
