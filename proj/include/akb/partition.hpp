#pragma once

#include <cstdint>
#include <vector>

namespace akb {

using Int = std::int64_t;

// Floor division and modulo (quotient rounded toward -infinity); m > 0.
constexpr Int div_floor(Int a, Int m) {
  Int q = a / m;
  Int r = a % m;
  return (r != 0 && r < 0) ? q - 1 : q;
}

constexpr Int mod_floor(Int a, Int m) { return a - m * div_floor(a, m); }

// Weakly decreasing positive parts; trailing zeros are dropped on
// construction, interior zeros or increases are rejected.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts);

  Int size() const;    // sum of parts
  Int length() const;  // number of parts
  Int part(Int a) const;  // 1-based row length; 0 beyond the last row
  bool empty() const { return parts_.empty(); }
  const std::vector<Int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<Int> parts_;
};

// Order used wherever lists of (multi)partitions are produced: at the first
// row where two partitions differ the larger row comes first, so partitions
// of n run (n), (n-1,1), ..., (1^n) and the empty partition sorts last.
bool enumeration_precedes(const Partition& a, const Partition& b);

// All partitions of exactly n, in enumeration order.
std::vector<Partition> partitions_of(Int n);

// All partitions of size <= n, in enumeration order.
std::vector<Partition> partitions_up_to(Int n);

}  // namespace akb
