#pragma once

#include <compare>
#include <vector>

#include "akb/beta_set.hpp"
#include "akb/partition.hpp"

namespace akb {

// An l-tuple of integer charges, l >= 1; entries are unrestricted.
struct Multicharge {
  std::vector<Int> entries;

  Int length() const { return static_cast<Int>(entries.size()); }
  Int entry(Int j) const;  // 1-based
  Int sum() const;

  bool operator==(const Multicharge&) const = default;
};

// A cell of a multi-Young-diagram: row a, column b, component j, all 1-based.
struct Node {
  Int row = 1;
  Int col = 1;
  Int component = 1;

  bool operator==(const Node&) const = default;
  auto operator<=>(const Node&) const = default;
};

// l partitions paired with an l-charge.
struct ChargedMultipartition {
  std::vector<Partition> components;
  Multicharge charge;

  Int level() const { return static_cast<Int>(components.size()); }
  Int size() const;  // total number of nodes
  const Partition& component(Int j) const;  // 1-based
  bool contains(const Node& node) const;

  bool operator==(const ChargedMultipartition&) const = default;
};

ChargedMultipartition charged(std::vector<Partition> components,
                              std::vector<Int> charge);

// Per-component beta-sets at the component charges.
std::vector<BetaSet> beta_sets(const ChargedMultipartition& lam);

// (b - a + t_j) mod e, reduced to {0..e-1}.
Int residue(const Node& node, const Multicharge& t, Int e);
// As above, but rejects nodes outside the diagram.
Int residue(const Node& node, const ChargedMultipartition& lam, Int e);

// counts[i] = number of nodes of residue i; entries sum to the size.
struct ResidueContent {
  Int e = 2;
  std::vector<Int> counts;

  bool operator==(const ResidueContent&) const = default;
};

ResidueContent residue_content(const ChargedMultipartition& lam, Int e);

// Removable/addable i-nodes, each sorted by (component, row).
struct BoundaryNodes {
  std::vector<Node> removable;
  std::vector<Node> addable;
};

BoundaryNodes boundary_nodes(const ChargedMultipartition& lam, Int e, Int i);

// Componentwise sum of the single-abacus hubs; entries sum to -level.
HubVector multi_hub(const ChargedMultipartition& lam, Int e);

}  // namespace akb
