#include "inducib/landscape.hpp"

#include <stdexcept>
#include <string>

namespace inducib {

namespace {

void require_profile(int r, int ell) {
  if (r < 2 || ell <= r)
    throw std::invalid_argument("need ell > r >= 2 (got r=" + std::to_string(r) + ", ell=" + std::to_string(ell) + ")");
}

void require_inducibility_pattern(const PatternSpec& f) {
  if (f.r() < 2) throw std::invalid_argument(f.label() + " has fewer than two parts (trivial case)");
  if (!is_almost_balanced(f))
    throw std::invalid_argument(f.label() + " is not almost balanced; no closed form is known");
}

}  // namespace

ExactRat f_value(int r, int ell, int k) {
  if (k < r) throw std::invalid_argument("f_value needs k >= r");
  ExactInt num = falling_factorial(ExactInt(k - 1), r - 1);
  ExactInt den = boost::multiprecision::pow(ExactInt(k), static_cast<unsigned>(ell - 1));
  return ExactRat(num, den);
}

BigFloat alpha_function(const BigFloat& t, const BigFloat& x) { return exp(t * x) * (1 - x) - 1; }

MBounds m_bounds(int r, int ell) {
  require_profile(r, ell);
  MBounds b;
  b.lower = ExactRat(ell * (r - 1), 2 * (ell - r));
  if (b.lower < r - 1) b.lower = r - 1;
  b.upper_rational = ExactRat(ell * (ell - 1), 2 * (ell - r));
  b.upper_simple = ExactRat(ExactInt(r) * ell * ell, ExactInt(ell) * ell - ExactInt(r) * r);

  const BigFloat t = BigFloat(ell) / r;
  BigFloat lo = 1 - BigFloat(r * r) / BigFloat(ell * ell);
  BigFloat hi = 1;
  if (alpha_function(t, lo) <= 0) throw std::logic_error("alpha bracket has no sign change at its left end");
  const BigFloat width("1e-30");
  while (hi - lo > width) {
    BigFloat mid = (lo + hi) / 2;
    if (alpha_function(t, mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  b.alpha = (lo + hi) / 2;
  b.upper_alpha = BigFloat(r) / b.alpha;
  const BigFloat ur = to_bigfloat(b.upper_rational);
  b.upper = ur < b.upper_alpha ? ur : b.upper_alpha;
  return b;
}

int m_star(int r, int ell) {
  require_profile(r, ell);
  int k = r;
  ExactRat current = f_value(r, ell, k);
  while (true) {
    ExactRat next = f_value(r, ell, k + 1);
    if (next == current)
      throw std::logic_error("tie f(" + std::to_string(k) + ") = f(" + std::to_string(k + 1) + ") for r=" +
                             std::to_string(r) + ", ell=" + std::to_string(ell));
    if (next < current) break;
    current = std::move(next);
    ++k;
  }
  const MBounds b = m_bounds(r, ell);
  if (!(b.lower < k) || !(BigFloat(k) < b.upper))
    throw std::logic_error("maximiser " + std::to_string(k) + " lies outside its analytic bounds");
  return k;
}

ProfileLandscape build_landscape(int r, int ell) {
  ProfileLandscape out;
  out.r = r;
  out.ell = ell;
  out.m = m_star(r, ell);
  out.bounds = m_bounds(r, ell);
  const int k_max = static_cast<int>(ceil(out.bounds.upper).convert_to<long long>()) + 2;
  for (int k = r; k <= k_max; ++k) out.f_cache.emplace(k, f_value(r, ell, k));
  for (const auto& [k, value] : out.f_cache) {
    if (k != out.m && !(value < out.f_cache.at(out.m)))
      throw std::logic_error("f(" + std::to_string(k) + ") is not below f(m)");
  }
  return out;
}

bool is_strictly_unimodal(int r, int ell, int k_max) {
  require_profile(r, ell);
  bool descending = false;
  ExactRat prev = f_value(r, ell, r);
  for (int k = r + 1; k <= k_max; ++k) {
    ExactRat cur = f_value(r, ell, k);
    if (cur == prev) return false;
    if (cur < prev)
      descending = true;
    else if (descending)
      return false;
    prev = std::move(cur);
  }
  return true;
}

ExactRat inducibility(const PatternSpec& f) {
  require_inducibility_pattern(f);
  const int m = m_star(f.r(), f.ell());
  return kappa(f) * f_value(f.r(), f.ell(), m);
}

ExactRat inducibility_clique_free(const PatternSpec& f, int k) {
  require_inducibility_pattern(f);
  if (k < f.r()) throw std::invalid_argument("clique bound k must be at least r");
  const int m = m_star(f.r(), f.ell());
  return kappa(f) * f_value(f.r(), f.ell(), k < m ? k : m);
}

}  // namespace inducib
