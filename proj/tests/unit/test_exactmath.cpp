#include <random>
#include <vector>

#include "doctest.h"
#include "inducib/exactmath.hpp"

using namespace inducib;

namespace {

// Independent oracle: Pascal's triangle in plain integers.
ExactInt pascal(int n, int k) {
  std::vector<std::vector<ExactInt>> rows(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(static_cast<std::size_t>(i + 1), ExactInt(1));
    for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows[n][k];
}

}  // namespace

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(ExactInt(5), 3) == 60);
  CHECK(falling_factorial(ExactInt(2), 4) == 0);
  CHECK(falling_factorial(ExactRat(7, 2), 2) == ExactRat(35, 4));
  // zero exactly when z <= k - 1, rational z included
  CHECK(falling_factorial(ExactRat(1, 2), 2) == 0);
  CHECK(falling_factorial(ExactRat(3, 2), 2) == ExactRat(3, 4));
  CHECK(falling_factorial(ExactRat(1), 2) == 0);
  CHECK(falling_factorial(ExactInt(-3), 1) == 0);
  CHECK(falling_factorial(ExactInt(9), 0) == 1);
}

TEST_CASE("binomial") {
  CHECK(binomial(12, 2) == 66);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(26, 12) == pascal(26, 12));
  CHECK(binomial(26, 12) == 9657700);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(ExactRat(7, 2), 2) == ExactRat(35, 8));

  for (int z = 0; z <= 30; ++z)
    for (int k = 0; k <= z; ++k) {
      CHECK(binomial(z, k) == binomial(z, z - k));
      CHECK(binomial(z, k) == pascal(z, k));
    }
}

TEST_CASE("falling factorial vanishes exactly below k") {
  for (int num = -20; num <= 40; ++num)
    for (int k = 1; k <= 6; ++k) {
      const ExactRat z(num, 3);
      const bool zero = falling_factorial(z, k) == 0;
      CHECK(zero == (z <= k - 1));
    }
}

TEST_CASE("multinomial") {
  const std::vector<int> a{2, 1};
  const std::vector<int> b{2, 1, 1};
  const std::vector<int> c{2, 2};
  CHECK(multinomial(3, a) == 3);
  CHECK(multinomial(4, b) == 12);
  CHECK(multinomial(4, c) == 6);
  const std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(multinomial(4, bad), std::invalid_argument);
  const std::vector<int> zero{3, 0};
  CHECK_THROWS_AS(multinomial(3, zero), std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> parts;
    int total = 0;
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      parts.push_back(1 + static_cast<int>(rng() % 4));
      total += parts.back();
    }
    const ExactInt before = multinomial(total, parts);
    std::shuffle(parts.begin(), parts.end(), rng);
    CHECK(multinomial(total, parts) == before);
  }
}

TEST_CASE("sym multiplicity") {
  CHECK(sym_multiplicity(std::vector<int>{2, 1}) == 1);
  CHECK(sym_multiplicity(std::vector<int>{2, 2}) == 2);
  CHECK(sym_multiplicity(std::vector<int>{2, 1, 1, 1}) == 6);
  CHECK(sym_multiplicity(std::vector<int>{1, 2, 1, 2, 1}) == 12);
}

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(ExactRat(72, 125)) == "72/125");
  CHECK(to_string(ExactRat(6, 3)) == "2");
  CHECK(parse_rational("3/9") == ExactRat(1, 3));
  CHECK(parse_rational("0.25") == ExactRat(1, 4));
  CHECK(parse_rational("-1.5") == ExactRat(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("-0.05") == ExactRat(-1, 20));
  CHECK_THROWS(parse_rational("1.2.3"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_decimal(ExactRat(1, 4), 5) == "0.25");
  CHECK(ipow(ExactRat(2, 3), 3) == ExactRat(8, 27));
}

TEST_CASE("float precision configuration") {
  const unsigned saved = float_precision();
  CHECK(saved >= kMinPrecisionDigits);
  set_float_precision(10);
  CHECK(float_precision() == kMinPrecisionDigits);
  set_float_precision(80);
  CHECK(float_precision() == 80);
  const BigFloat third = BigFloat(1) / 3;
  CHECK(abs(third * 3 - 1) < BigFloat("1e-75"));
  set_float_precision(saved);
}
