#include "inducib/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "inducib/partition.hpp"

namespace inducib {

PatternSpec::PatternSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int a : sizes_)
    if (a < 1) throw std::invalid_argument("pattern part sizes must be positive");
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  ell_ = 0;
  for (int a : sizes_) ell_ += a;
  singletons_ = static_cast<int>(std::count(sizes_.begin(), sizes_.end(), 1));
  for (int a : sizes_) {
    if (!classes_.empty() && classes_.back().size == a)
      ++classes_.back().multiplicity;
    else
      classes_.push_back({a, 1});
  }
  sym_ = 1;
  for (const auto& c : classes_) sym_ *= factorial(c.multiplicity);
}

PatternSpec PatternSpec::parse(std::string_view text) {
  auto sizes = parse_int_list(text);
  if (sizes.empty()) throw std::invalid_argument("empty pattern");
  return PatternSpec(std::move(sizes));
}

bool PatternSpec::has_part(int size) const {
  return std::find(sizes_.begin(), sizes_.end(), size) != sizes_.end();
}

PatternSpec PatternSpec::without_part(int size) const { return without_parts(size, 1); }

PatternSpec PatternSpec::without_parts(int size, int count) const {
  std::vector<int> rest = sizes_;
  for (int i = 0; i < count; ++i) {
    auto it = std::find(rest.begin(), rest.end(), size);
    if (it == rest.end())
      throw std::invalid_argument("pattern has fewer than " + std::to_string(count) + " parts of size " +
                                  std::to_string(size));
    rest.erase(it);
  }
  return PatternSpec(std::move(rest));
}

std::string PatternSpec::literal() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

std::string PatternSpec::label() const { return "K_{" + literal() + "}"; }

bool is_almost_balanced(const PatternSpec& f) {
  if (f.empty() || f.is_complete()) return false;
  const int a1 = f.sizes().front();
  const int ar = f.sizes().back();
  return binomial(a1 - ar, 2) < ar;
}

ExactRat kappa(const PatternSpec& f) {
  ExactInt denom = f.sym();
  for (int a : f.sizes()) denom *= factorial(a);
  return ExactRat(factorial(f.ell()), denom);
}

ShapeKind almost_balanced_shape_check(const PatternSpec& f) {
  if (!is_almost_balanced(f) || f.ell() < f.r() + 1) return ShapeKind::NotApplicable;
  const int r = f.r();
  const int ell = f.ell();
  if (ell <= 2 * r - 1) {
    for (int i = 0; i < r; ++i) {
      const int expected = i < ell - r ? 2 : 1;
      if (f.sizes()[static_cast<std::size_t>(i)] != expected)
        throw std::logic_error("almost balanced pattern " + f.label() + " lacks the forced 2/1 shape");
    }
    return ShapeKind::TwoOneShape;
  }
  if (f.sizes().back() < 2)
    throw std::logic_error("almost balanced pattern " + f.label() + " with ell >= 2r has a singleton part");
  return ShapeKind::AllAtLeastTwo;
}

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::TwoOneShape: return "two-one";
    case ShapeKind::AllAtLeastTwo: return "all-at-least-two";
    case ShapeKind::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

}  // namespace inducib
