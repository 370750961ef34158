#include "inducib/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace inducib {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

MultipartitePartition::MultipartitePartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("host part sizes must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  singletons_ = static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

MultipartitePartition MultipartitePartition::parse(std::string_view text) {
  return MultipartitePartition(parse_int_list(text));
}

MultipartitePartition MultipartitePartition::without(std::initializer_list<int> indices) const {
  std::vector<int> rest;
  for (int i = 0; i < k(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) == indices.end()) rest.push_back(parts_[i]);
  }
  for (int i : indices)
    if (i < 0 || i >= k()) throw std::out_of_range("host part index out of range");
  return MultipartitePartition(std::move(rest));
}

MultipartitePartition MultipartitePartition::restricted_to(const std::vector<int>& indices) const {
  std::vector<int> kept;
  for (int i : indices) kept.push_back(parts_.at(static_cast<std::size_t>(i)));
  return MultipartitePartition(std::move(kept));
}

std::string MultipartitePartition::literal() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

MultipartitePartition turan_sizes(int k, int n) {
  if (k < 1) throw std::invalid_argument("turan_sizes: k must be positive");
  if (n < k) throw std::invalid_argument("turan_sizes: need n >= k");
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++parts[static_cast<std::size_t>(i)];
  return MultipartitePartition(std::move(parts));
}

bool is_turan_shape(const MultipartitePartition& p) {
  if (p.k() == 0) return false;
  return p.parts().front() - p.parts().back() <= 1;
}

}  // namespace inducib
