#pragma once

// Class-count generating polynomial of a complete multipartite host.
//
// For a pattern with size classes (b_c, r_c), the product over host parts of
// (1 + sum_c y_c * binom(n_i, b_c)), truncated at degree r_c in y_c, has as
// coefficient of y^u exactly I(F_u, G), where F_u is the sub-pattern with u_c
// parts of size b_c. States are indexed in mixed radix (r_c + 1).

#include <cstddef>
#include <vector>

#include "inducib/pattern.hpp"

namespace inducib {

class ClassIndexer {
 public:
  explicit ClassIndexer(const PatternSpec& f) {
    for (const auto& c : f.classes()) {
      sizes_.push_back(c.size);
      limits_.push_back(c.multiplicity);
    }
    strides_.resize(limits_.size());
    std::size_t stride = 1;
    for (std::size_t c = 0; c < limits_.size(); ++c) {
      strides_[c] = stride;
      stride *= static_cast<std::size_t>(limits_[c] + 1);
    }
    state_count_ = stride;
  }

  std::size_t state_count() const { return state_count_; }
  std::size_t class_count() const { return sizes_.size(); }
  int class_size(std::size_t c) const { return sizes_[c]; }
  int class_limit(std::size_t c) const { return limits_[c]; }
  std::size_t stride(std::size_t c) const { return strides_[c]; }
  std::size_t full_state() const { return state_count_ - 1; }

  int digit(std::size_t state, std::size_t c) const {
    return static_cast<int>((state / strides_[c]) % static_cast<std::size_t>(limits_[c] + 1));
  }

  /// Sub-pattern described by a state.
  PatternSpec pattern_of(std::size_t state) const {
    std::vector<int> sizes;
    for (std::size_t c = 0; c < sizes_.size(); ++c)
      for (int i = 0; i < digit(state, c); ++i) sizes.push_back(sizes_[c]);
    return PatternSpec(std::move(sizes));
  }

  /// Total vertex count of the sub-pattern described by a state.
  int vertices_of(std::size_t state) const {
    int v = 0;
    for (std::size_t c = 0; c < sizes_.size(); ++c) v += digit(state, c) * sizes_[c];
    return v;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> limits_;
  std::vector<std::size_t> strides_;
  std::size_t state_count_ = 1;
};

/// Multiplies `poly` in place by one host part whose per-class binomials are
/// `factor[c] = binom(n_i, b_c)`.
template <typename T>
void multiply_part(const ClassIndexer& ix, std::vector<T>& poly, const std::vector<T>& factor) {
  for (std::size_t s = ix.state_count(); s-- > 1;) {
    T add = 0;
    for (std::size_t c = 0; c < ix.class_count(); ++c) {
      if (ix.digit(s, c) == 0 || factor[c] == 0) continue;
      add += poly[s - ix.stride(c)] * factor[c];
    }
    poly[s] += add;
  }
}

}  // namespace inducib
