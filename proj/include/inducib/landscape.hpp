#pragma once

#include <map>

#include "inducib/exactmath.hpp"
#include "inducib/pattern.hpp"

namespace inducib {

/// f(k) = (k-1)_{r-1} / k^{ell-1}, the value of the balanced k-point up to
/// the factor kappa_F. Throws std::invalid_argument for k < r.
ExactRat f_value(int r, int ell, int k);

struct MBounds {
  ExactRat lower;           // max{ell(r-1)/(2(ell-r)), r-1}
  ExactRat upper_rational;  // ell(ell-1)/(2(ell-r))
  ExactRat upper_simple;    // r ell^2 / (ell^2 - r^2), implied by the alpha bound
  BigFloat alpha;           // positive root of e^{(ell/r)x}(1-x) = 1
  BigFloat upper_alpha;     // r / alpha
  BigFloat upper;           // min(upper_rational, upper_alpha)
};

/// Bounds on the maximiser; alpha is found by bisection on
/// (1 - r^2/ell^2, 1) to an absolute width of 1e-30.
MBounds m_bounds(int r, int ell);

/// h_t(x) = e^{tx}(1-x) - 1.
BigFloat alpha_function(const BigFloat& t, const BigFloat& x);

/// The unique maximiser m_{r,ell} of f over k >= r. Exact comparisons only;
/// throws std::logic_error on a tie or if the bounds are violated.
int m_star(int r, int ell);

struct ProfileLandscape {
  int r = 0;
  int ell = 0;
  int m = 0;
  std::map<int, ExactRat> f_cache;  // k in [r, ceil(upper) + 2]
  MBounds bounds;
};

ProfileLandscape build_landscape(int r, int ell);

/// True iff f(r) < ... < f(m) > f(m+1) > ... > f(k_max) with no equal
/// neighbours.
bool is_strictly_unimodal(int r, int ell, int k_max);

/// i(F) = kappa_F * f(m). Requires F almost balanced with r >= 2.
ExactRat inducibility(const PatternSpec& f);

/// i_{k+1}(F): kappa_F f(k) for r <= k < m, kappa_F f(m) for k >= m.
ExactRat inducibility_clique_free(const PatternSpec& f, int k);

}  // namespace inducib
