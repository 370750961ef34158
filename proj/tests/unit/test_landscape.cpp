#include "doctest.h"
#include "inducib/landscape.hpp"
#include "inducib/partition.hpp"

using namespace inducib;

namespace {

// Oracle: brute-force argmax of f over k in [r, 4 ell^2] with exact arithmetic
// written independently of f_value.
int brute_argmax(int r, int ell) {
  int best = r;
  ExactRat best_val = -1;
  for (int k = r; k <= 4 * ell * ell; ++k) {
    ExactInt num = 1;
    for (int i = 1; i <= r - 1; ++i) num *= (k - i);
    ExactInt den = 1;
    for (int i = 0; i < ell - 1; ++i) den *= k;
    const ExactRat v(num, den);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("f values") {
  CHECK(f_value(2, 3, 2) == ExactRat(1, 4));
  CHECK(f_value(3, 4, 5) == ExactRat(12, 125));
  CHECK(f_value(4, 5, 8) == ExactRat(210, 4096));
  CHECK_THROWS(f_value(3, 4, 2));
}

TEST_CASE("maximiser table") {
  CHECK(m_star(2, 3) == 2);
  CHECK(m_star(2, 4) == 2);
  CHECK(m_star(3, 4) == 5);
  CHECK(m_star(3, 5) == 3);
  CHECK(m_star(4, 5) == 8);
  CHECK(m_star(3, 26) == 3);
  CHECK_THROWS(m_star(3, 3));
  CHECK_THROWS(m_star(1, 3));
}

TEST_CASE("maximiser agrees with brute force and lies inside the bounds") {
  for (int r = 2; r <= 12; ++r)
    for (int ell = r + 1; ell <= 26; ++ell) {
      const int m = m_star(r, ell);
      CHECK(m == brute_argmax(r, ell));
      const MBounds b = m_bounds(r, ell);
      CHECK(b.lower < m);
      CHECK(BigFloat(m) < b.upper);
      CHECK(b.upper <= to_bigfloat(b.upper_rational));
      CHECK(b.upper_alpha <= to_bigfloat(b.upper_simple));
      CHECK(is_strictly_unimodal(r, ell, 3 * ell * ell));
    }
}

TEST_CASE("alpha is the root of its defining equation") {
  const MBounds b = m_bounds(4, 5);
  const BigFloat t = BigFloat(5) / 4;
  CHECK(abs(alpha_function(t, b.alpha)) < BigFloat("1e-28"));
  CHECK(b.alpha > 1 - BigFloat(16) / 25);
  CHECK(b.alpha < 1);
}

TEST_CASE("landscape cache") {
  const auto land = build_landscape(4, 5);
  CHECK(land.m == 8);
  CHECK(land.f_cache.begin()->first == 4);
  for (const auto& [k, v] : land.f_cache)
    if (k != land.m) CHECK(v < land.f_cache.at(land.m));
}

TEST_CASE("inducibility values") {
  CHECK(inducibility(PatternSpec::parse("2,1")) == ExactRat(3, 4));
  CHECK(inducibility(PatternSpec::parse("2,1,1")) == ExactRat(72, 125));
  CHECK(inducibility(PatternSpec::parse("2,1,1,1")) == ExactRat(525, 1024));
  CHECK(inducibility(PatternSpec::parse("2,2")) == ExactRat(3, 8));
  CHECK_THROWS(inducibility(PatternSpec::parse("3,1")));
  CHECK_THROWS(inducibility(PatternSpec::parse("1,1,1")));
  CHECK_THROWS(inducibility(PatternSpec::parse("4")));
}

TEST_CASE("clique-free inducibility") {
  const auto f = PatternSpec::parse("2,1,1,1");
  CHECK(inducibility_clique_free(f, 4) == kappa(f) * f_value(4, 5, 4));
  CHECK(inducibility_clique_free(f, 8) == inducibility(f));
  CHECK(inducibility_clique_free(f, 20) == inducibility(f));
  CHECK_THROWS(inducibility_clique_free(f, 3));
  ExactRat prev = 0;
  for (int k = 4; k <= 12; ++k) {
    const ExactRat v = inducibility_clique_free(f, k);
    CHECK(v >= prev);
    prev = v;
  }
}
