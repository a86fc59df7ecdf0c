#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "akb/multipartition.hpp"
#include "akb/uglov.hpp"
#include "akb/weyl.hpp"

namespace akb {

// Combinatorial label of a block of an Ariki-Koike algebra with quantum
// parameter e and the given (unreduced) multicharge: the core and minimal
// weight of the orbit, the hub and residue content shared by every member,
// and the member size n.
struct BlockDescriptor {
  Int e = 2;
  Int l = 1;
  Multicharge multicharge;
  Partition core;
  Int weight = 0;
  HubVector hub;
  ResidueContent content;
  Int n = 0;

  bool operator==(const BlockDescriptor&) const = default;
};

// Size cap for exhaustive member enumeration.
struct EnumerationGuard {
  Int max_n_level1 = 12;
  Int max_n_level2 = 8;
  Int max_n_level3 = 6;  // applies to every level >= 3
  std::optional<Int> override_max;

  Int limit(Int level) const;
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All l-tuples of partitions with total size n, in the documented order:
// tuples compare lexicographically, components by enumeration_precedes.
std::vector<std::vector<Partition>> multipartitions_of(Int n, Int l);

BlockDescriptor block_of(const ChargedMultipartition& lam, Int e);

// Lyle-Mathas criterion: equal residue contents.  Requires equal multicharges.
bool same_block(const ChargedMultipartition& a, const ChargedMultipartition& b,
                Int e);

// Every member of the block, i.e. every l-partition of n whose core and
// minimal weight match the descriptor.
std::vector<std::vector<Partition>> enumerate_block(
    const BlockDescriptor& desc, const EnumerationGuard& guard = {});
std::vector<std::vector<Partition>> enumerate_block(
    Int e, const Multicharge& multicharge, Int n, const Partition& core,
    Int weight, const EnumerationGuard& guard = {});

// The block s_i . B: weight is unchanged, the core transforms by the dot
// action at k = l on its beta-set at the total charge, and n drops by the
// hub entry.  Fixed point exactly when that entry vanishes.
BlockDescriptor si_dot_block(const BlockDescriptor& desc, Int i);

struct WkPair {
  Int w = 0;
  Int k = 0;

  bool operator==(const WkPair&) const = default;
};

// (weight, |delta_i|) when B != s_i . B, nothing otherwise.
std::optional<WkPair> wk_pair(const BlockDescriptor& desc, Int i);

struct ScopesStatus {
  bool theorem_sufficient = false;   // delta_i != 0 and |delta_i| >= weight
  std::optional<bool> direct;        // exhaustive member check, if within guard
};

ScopesStatus scopes_status(const BlockDescriptor& desc, Int i,
                           const EnumerationGuard& guard = {});

}  // namespace akb
