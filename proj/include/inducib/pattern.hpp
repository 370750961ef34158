#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "inducib/exactmath.hpp"

namespace inducib {

struct SizeClass {
  int size = 0;
  int multiplicity = 0;
  friend bool operator==(const SizeClass&, const SizeClass&) = default;
};

/// A complete multipartite pattern K_{a_1,...,a_r}, parts kept in descending
/// order. The empty pattern (r = 0) is allowed as the result of removing
/// parts; it has exactly one induced copy in every host.
class PatternSpec {
 public:
  PatternSpec() = default;
  explicit PatternSpec(std::vector<int> sizes);

  /// "2,1,1" -> K_{2,1,1}. Whitespace around entries is ignored.
  static PatternSpec parse(std::string_view text);

  const std::vector<int>& sizes() const { return sizes_; }
  int r() const { return static_cast<int>(sizes_.size()); }
  int ell() const { return ell_; }
  int singleton_count() const { return singletons_; }
  const std::vector<SizeClass>& classes() const { return classes_; }
  bool empty() const { return sizes_.empty(); }
  bool is_complete() const { return ell_ == r(); }
  bool has_part(int size) const;

  /// Product of factorials of the size multiplicities.
  const ExactInt& sym() const { return sym_; }

  /// Pattern with one part of the given size removed.
  PatternSpec without_part(int size) const;
  PatternSpec without_parts(int size, int count) const;

  std::string label() const;    // "K_{2,1,1}"
  std::string literal() const;  // "2,1,1"

  friend bool operator==(const PatternSpec& a, const PatternSpec& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<int> sizes_;
  int ell_ = 0;
  int singletons_ = 0;
  std::vector<SizeClass> classes_;
  ExactInt sym_ = 1;
};

/// Not complete and binom(a_1 - a_r, 2) < a_r.
bool is_almost_balanced(const PatternSpec& f);

/// ell! / (prod a_i! * sym).
ExactRat kappa(const PatternSpec& f);

enum class ShapeKind { TwoOneShape, AllAtLeastTwo, NotApplicable };

/// Classifies an almost balanced pattern with ell >= r + 1 by the part-size
/// structure it is forced to have. Throws std::logic_error if the forced
/// structure is absent.
ShapeKind almost_balanced_shape_check(const PatternSpec& f);

std::string to_string(ShapeKind kind);

}  // namespace inducib
