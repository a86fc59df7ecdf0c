#include "akb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace akb {

namespace {

void validate(const std::vector<Int>& parts) {
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (parts[a] < 0)
      throw std::invalid_argument("partition: negative part");
    if (a + 1 < parts.size() && parts[a] < parts[a + 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

void gen_partitions(Int n, Int max_part, std::vector<Int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (Int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<Int> parts)
    : Partition(std::vector<Int>(parts)) {}

Int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Int Partition::length() const { return static_cast<Int>(parts_.size()); }

Int Partition::part(Int a) const {
  if (a < 1) throw std::invalid_argument("partition: row index is 1-based");
  return a <= length() ? parts_[static_cast<std::size_t>(a - 1)] : 0;
}

bool enumeration_precedes(const Partition& a, const Partition& b) {
  Int m = std::max(a.length(), b.length());
  for (Int i = 1; i <= m; ++i) {
    Int pa = a.part(i), pb = b.part(i);
    if (pa != pb) return pa > pb;
  }
  return false;
}

std::vector<Partition> partitions_of(Int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<Int> acc;
  gen_partitions(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(Int n) {
  std::vector<Partition> out;
  for (Int k = 0; k <= n; ++k) {
    auto p = partitions_of(k);
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end(), enumeration_precedes);
  return out;
}

}  // namespace akb
