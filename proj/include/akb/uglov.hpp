#pragma once

#include <span>
#include <vector>

#include "akb/beta_set.hpp"
#include "akb/multipartition.hpp"

namespace akb {

// upsilon_j(x) = a*e*l + (l-j)*e + b  where x = a*e + b, 0 <= b < e.
// The images of upsilon_1, ..., upsilon_l partition the integers and each
// upsilon_j preserves residues mod e.
Int upsilon(Int j, Int x, Int e, Int l);

// Interleaves l beta-sets into one by stacking abacus rows; bijective, and
// the image charge is the sum of the input charges.
BetaSet uglov_map(std::span<const BetaSet> bs, Int e);

// The unique preimage tuple of b under uglov_map with the given level.
std::vector<BetaSet> uglov_inverse(const BetaSet& b, Int e, Int l);

// The image of a charged multipartition: a single partition together with
// the image charge (the sum of the multicharge entries).
struct UglovImage {
  Partition partition;
  Int charge = 0;

  bool operator==(const UglovImage&) const = default;
};

UglovImage uglov_partition(const ChargedMultipartition& lam, Int e);

// e-core / e-weight of the image; the core is invariant on the orbit of the
// extended affine Weyl group acting on (lambda; t).
Partition pair_core(const ChargedMultipartition& lam, Int e);
Int pair_weight(const ChargedMultipartition& lam, Int e);

}  // namespace akb
