#include "akb/beta_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace akb {

namespace {

void require_e(Int e) {
  if (e < 2) throw std::invalid_argument("beta-set operation: e must be >= 2");
}

}  // namespace

Int BetaSet::element(Int a) const {
  if (a < 1) throw std::invalid_argument("beta-set: element index is 1-based");
  return shape.part(a) + charge - a;
}

bool BetaSet::contains(Int x) const {
  if (x < filled_below()) return true;
  // elements are strictly decreasing in a
  Int lo = 1, hi = shape.length();
  while (lo <= hi) {
    Int mid = lo + (hi - lo) / 2;
    Int v = element(mid);
    if (v == x) return true;
    if (v > x)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return false;
}

BetaSet beta_set(const Partition& lambda, Int t) { return BetaSet{t, lambda}; }

std::vector<Int> members_above(const BetaSet& b, Int cutoff) {
  std::vector<Int> out;
  for (Int a = 1;; ++a) {
    Int x = b.element(a);
    if (x < cutoff) break;
    out.push_back(x);
  }
  return out;
}

BetaSet beta_set_from_beads(std::vector<Int> beads, Int cutoff) {
  std::sort(beads.begin(), beads.end(), std::greater<Int>());
  Int k = static_cast<Int>(beads.size());
  for (Int a = 0; a < k; ++a) {
    if (beads[static_cast<std::size_t>(a)] < cutoff)
      throw std::invalid_argument("beta_set_from_beads: bead below cutoff");
    if (a + 1 < k && beads[static_cast<std::size_t>(a)] ==
                         beads[static_cast<std::size_t>(a + 1)])
      throw std::invalid_argument("beta_set_from_beads: duplicate bead");
  }
  Int charge = cutoff + k;
  std::vector<Int> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (Int a = 1; a <= k; ++a)
    parts.push_back(beads[static_cast<std::size_t>(a - 1)] + a - charge);
  return BetaSet{charge, Partition(std::move(parts))};
}

BetaSet shift(const BetaSet& b, Int k) { return BetaSet{b.charge + k, b.shape}; }

EQuotient e_quotient(const BetaSet& b, Int e) {
  require_e(e);
  Int m = div_floor(b.filled_below(), e);  // every row < m is full
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(e));
  for (Int x : members_above(b, m * e)) {
    Int i = mod_floor(x, e);
    rows[static_cast<std::size_t>(i)].push_back(div_floor(x, e));
  }
  EQuotient q;
  q.e = e;
  q.components.reserve(static_cast<std::size_t>(e));
  for (Int i = 0; i < e; ++i)
    q.components.push_back(
        beta_set_from_beads(std::move(rows[static_cast<std::size_t>(i)]), m));
  return q;
}

BetaSet e_quotient_inverse(const EQuotient& q) {
  require_e(q.e);
  if (static_cast<Int>(q.components.size()) != q.e)
    throw std::invalid_argument("e_quotient_inverse: component count != e");
  Int m = q.components[0].filled_below();
  for (const BetaSet& c : q.components) m = std::min(m, c.filled_below());
  std::vector<Int> beads;
  for (Int i = 0; i < q.e; ++i)
    for (Int row : members_above(q.components[static_cast<std::size_t>(i)], m))
      beads.push_back(row * q.e + i);
  return beta_set_from_beads(std::move(beads), m * q.e);
}

BetaSet e_core(const BetaSet& b, Int e) {
  EQuotient q = e_quotient(b, e);
  for (BetaSet& c : q.components) c.shape = Partition{};
  return e_quotient_inverse(q);
}

Int e_weight(const BetaSet& b, Int e) {
  EQuotient q = e_quotient(b, e);
  Int w = 0;
  for (const BetaSet& c : q.components) w += c.shape.size();
  return w;
}

Int delta(const BetaSet& b, Int e, Int i) {
  require_e(e);
  if (i < 0 || i >= e)
    throw std::invalid_argument("delta: residue out of range");
  Int prev = mod_floor(i - 1, e);
  Int up = 0, down = 0;
  // any witness of either count lies at or above filled_below() - 1
  for (Int x : members_above(b, b.filled_below() - 1)) {
    Int r = mod_floor(x, e);
    if (r == i && !b.contains(x - 1)) ++up;
    if (r == prev && !b.contains(x + 1)) ++down;
  }
  return up - down;
}

HubVector hub(const BetaSet& b, Int e) {
  require_e(e);
  HubVector h;
  h.e = e;
  h.deltas.reserve(static_cast<std::size_t>(e));
  for (Int i = 0; i < e; ++i) h.deltas.push_back(delta(b, e, i));
  return h;
}

}  // namespace akb
