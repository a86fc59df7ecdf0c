#include "akb/uglov.hpp"

#include <algorithm>
#include <stdexcept>

namespace akb {

namespace {

void require_el(Int e, Int l) {
  if (e < 2) throw std::invalid_argument("uglov: e must be >= 2");
  if (l < 1) throw std::invalid_argument("uglov: level must be >= 1");
}

}  // namespace

Int upsilon(Int j, Int x, Int e, Int l) {
  require_el(e, l);
  if (j < 1 || j > l)
    throw std::invalid_argument("upsilon: component index out of range");
  Int a = div_floor(x, e);
  Int b = mod_floor(x, e);
  return a * e * l + (l - j) * e + b;
}

BetaSet uglov_map(std::span<const BetaSet> bs, Int e) {
  Int l = static_cast<Int>(bs.size());
  require_el(e, l);
  // rows below m are full in every input, so the stacked abacus is full
  // below row m*l, i.e. below position m*e*l
  Int m = div_floor(bs[0].filled_below(), e);
  for (const BetaSet& b : bs) m = std::min(m, div_floor(b.filled_below(), e));
  std::vector<Int> beads;
  for (Int j = 1; j <= l; ++j)
    for (Int x : members_above(bs[static_cast<std::size_t>(j - 1)], m * e))
      beads.push_back(upsilon(j, x, e, l));
  return beta_set_from_beads(std::move(beads), m * e * l);
}

std::vector<BetaSet> uglov_inverse(const BetaSet& b, Int e, Int l) {
  require_el(e, l);
  Int m = div_floor(b.filled_below(), e * l);
  std::vector<std::vector<Int>> beads(static_cast<std::size_t>(l));
  for (Int x : members_above(b, m * e * l)) {
    Int row = div_floor(x, e);
    Int col = mod_floor(x, e);
    Int j = l - mod_floor(row, l);  // upsilon_j(Z) = rows congruent to l - j
    Int src_row = (row - (l - j)) / l;
    beads[static_cast<std::size_t>(j - 1)].push_back(src_row * e + col);
  }
  std::vector<BetaSet> out;
  out.reserve(static_cast<std::size_t>(l));
  for (Int j = 0; j < l; ++j)
    out.push_back(
        beta_set_from_beads(std::move(beads[static_cast<std::size_t>(j)]), m * e));
  return out;
}

UglovImage uglov_partition(const ChargedMultipartition& lam, Int e) {
  BetaSet img = uglov_map(beta_sets(lam), e);
  return UglovImage{img.shape, img.charge};
}

Partition pair_core(const ChargedMultipartition& lam, Int e) {
  return e_core(uglov_map(beta_sets(lam), e), e).shape;
}

Int pair_weight(const ChargedMultipartition& lam, Int e) {
  return e_weight(uglov_map(beta_sets(lam), e), e);
}

}  // namespace akb
