#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace inducib {

/// A complete multipartite host given by its part sizes n_1 >= ... >= n_k.
/// The empty host (k = 0) is allowed.
class MultipartitePartition {
 public:
  MultipartitePartition() = default;
  explicit MultipartitePartition(std::vector<int> parts);

  /// "4,3" -> K_{4,3}.
  static MultipartitePartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int singleton_count() const { return singletons_; }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  /// Host with the given part indices removed (indices refer to this host).
  MultipartitePartition without(std::initializer_list<int> indices) const;
  MultipartitePartition restricted_to(const std::vector<int>& indices) const;

  std::string literal() const;  // "4,3"

  friend bool operator==(const MultipartitePartition&, const MultipartitePartition&) = default;
  friend auto operator<=>(const MultipartitePartition& a, const MultipartitePartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
  int singletons_ = 0;
};

/// The Turan shape T_k(n): k parts whose sizes differ by at most one.
MultipartitePartition turan_sizes(int k, int n);

bool is_turan_shape(const MultipartitePartition& p);

/// Parses a comma-separated list of positive integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace inducib
