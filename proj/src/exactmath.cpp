#include "inducib/exactmath.hpp"

#include <string_view>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace inducib {

void set_float_precision(unsigned digits10) {
  BigFloat::default_precision(std::max(digits10, kMinPrecisionDigits));
}

unsigned float_precision() { return BigFloat::default_precision(); }

namespace {
struct PrecisionInit {
  PrecisionInit() { BigFloat::default_precision(kDefaultPrecisionDigits); }
};
const PrecisionInit precision_init;
}  // namespace

ExactInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  ExactInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

ExactInt falling_factorial(const ExactInt& z, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  if (k == 0) return 1;
  if (z <= k - 1) return 0;
  ExactInt out = 1;
  for (int i = 0; i < k; ++i) out *= z - i;
  return out;
}

ExactRat falling_factorial(const ExactRat& z, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  if (k == 0) return 1;
  if (z <= k - 1) return 0;
  ExactRat out = 1;
  for (int i = 0; i < k; ++i) out *= z - i;
  return out;
}

ExactInt binomial(const ExactInt& z, int k) {
  if (k < 0) return 0;
  return falling_factorial(z, k) / factorial(k);
}

ExactRat binomial(const ExactRat& z, int k) {
  if (k < 0) return 0;
  return falling_factorial(z, k) / ExactRat(factorial(k));
}

ExactInt multinomial(int total, std::span<const int> parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("multinomial: parts must be positive");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
  ExactInt out = factorial(total);
  for (int p : parts) out /= factorial(p);
  return out;
}

ExactInt sym_multiplicity(std::span<const int> sizes) {
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  ExactInt out = 1;
  for (const auto& [value, count] : mult) out *= factorial(count);
  return out;
}

std::string to_string(const ExactRat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const ExactInt& z) { return z.str(); }

BigFloat to_bigfloat(const ExactRat& q) { return BigFloat(q); }

std::string to_decimal(const BigFloat& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

std::string to_decimal(const ExactRat& q, int digits) {
  if (q == 0) return "0";
  return to_decimal(to_bigfloat(q), digits);
}

namespace {

// GMP reads a leading 0 as an octal prefix, so digits are normalised first.
ExactInt parse_decimal_int(std::string_view text, const std::string& whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("bad rational literal '" + whole + "'");
  while (text.size() > 1 && text.front() == '0') text.remove_prefix(1);
  ExactInt out{std::string(text)};
  if (negative) out = -out;
  return out;
}

}  // namespace

ExactRat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::string_view view(text);
  auto slash = view.find('/');
  if (slash != std::string_view::npos) {
    ExactInt num = parse_decimal_int(view.substr(0, slash), text);
    ExactInt den = parse_decimal_int(view.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return ExactRat(num, den);
  }
  auto dot = view.find('.');
  if (dot == std::string_view::npos) return ExactRat(parse_decimal_int(view, text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  ExactInt scale = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
  return ExactRat(parse_decimal_int(digits, text), scale);
}

ExactRat ipow(const ExactRat& base, unsigned exp) {
  ExactRat out = 1;
  ExactRat b = base;
  while (exp > 0) {
    if (exp & 1U) out *= b;
    b *= b;
    exp >>= 1U;
  }
  return out;
}

}  // namespace inducib
