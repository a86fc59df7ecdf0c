#pragma once

#include <vector>

#include "akb/partition.hpp"

namespace akb {

// Canonical (charge, shape) form of a beta-set: the set named is
// {shape_a + charge - a : a >= 1}, whose a-th largest element is
// shape_a + charge - a.  Every position below charge - length(shape) is a
// member, so the set is cofinite downward and equality is structural.
struct BetaSet {
  Int charge = 0;
  Partition shape;

  Int element(Int a) const;  // a-th largest member, a >= 1
  Int filled_below() const { return charge - shape.length(); }
  bool contains(Int x) const;

  bool operator==(const BetaSet&) const = default;
};

// The beta-set of lambda with charge t.
BetaSet beta_set(const Partition& lambda, Int t);

// All members >= cutoff, in descending order.
std::vector<Int> members_above(const BetaSet& b, Int cutoff);

// The set (everything below cutoff) together with the given beads; beads
// must be distinct and >= cutoff.
BetaSet beta_set_from_beads(std::vector<Int> beads, Int cutoff);

// Elementwise translation by k.
BetaSet shift(const BetaSet& b, Int k);

// The e beta-sets read off the runners of the e-abacus; component i names
// {(x - i)/e : x in B, x = i mod e} and the component charges sum to the
// charge of the source set.
struct EQuotient {
  Int e = 2;
  std::vector<BetaSet> components;

  bool operator==(const EQuotient&) const = default;
};

EQuotient e_quotient(const BetaSet& b, Int e);
BetaSet e_quotient_inverse(const EQuotient& q);

// Beads pushed fully up their runners; charge is preserved.
BetaSet e_core(const BetaSet& b, Int e);

// Number of one-step upward bead moves to reach the core; computed as the
// total size of the quotient shapes.
Int e_weight(const BetaSet& b, Int e);

// delta_i: beads on runner i with a vacant predecessor, minus beads on
// runner i-1 with a vacant successor.
Int delta(const BetaSet& b, Int e, Int i);

struct HubVector {
  Int e = 2;
  std::vector<Int> deltas;

  bool operator==(const HubVector&) const = default;
};

// (delta_0, ..., delta_{e-1}); entries sum to -1 for a single beta-set.
HubVector hub(const BetaSet& b, Int e);

}  // namespace akb
