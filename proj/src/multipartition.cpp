#include "akb/multipartition.hpp"

#include <numeric>
#include <stdexcept>

namespace akb {

namespace {

void require_e(Int e) {
  if (e < 2) throw std::invalid_argument("multipartition operation: e must be >= 2");
}

void require_residue(Int e, Int i) {
  if (i < 0 || i >= e)
    throw std::invalid_argument("multipartition operation: residue out of range");
}

}  // namespace

Int Multicharge::entry(Int j) const {
  if (j < 1 || j > length())
    throw std::invalid_argument("multicharge: component index out of range");
  return entries[static_cast<std::size_t>(j - 1)];
}

Int Multicharge::sum() const {
  return std::accumulate(entries.begin(), entries.end(), Int{0});
}

Int ChargedMultipartition::size() const {
  Int n = 0;
  for (const Partition& p : components) n += p.size();
  return n;
}

const Partition& ChargedMultipartition::component(Int j) const {
  if (j < 1 || j > level())
    throw std::invalid_argument("multipartition: component index out of range");
  return components[static_cast<std::size_t>(j - 1)];
}

bool ChargedMultipartition::contains(const Node& node) const {
  if (node.component < 1 || node.component > level()) return false;
  if (node.row < 1 || node.col < 1) return false;
  return node.col <= component(node.component).part(node.row);
}

ChargedMultipartition charged(std::vector<Partition> components,
                              std::vector<Int> charge) {
  if (components.empty() || components.size() != charge.size())
    throw std::invalid_argument(
        "charged multipartition: component and charge counts must match and be >= 1");
  return ChargedMultipartition{std::move(components),
                               Multicharge{std::move(charge)}};
}

std::vector<BetaSet> beta_sets(const ChargedMultipartition& lam) {
  if (lam.level() != lam.charge.length())
    throw std::invalid_argument("multipartition: level and charge length differ");
  std::vector<BetaSet> out;
  out.reserve(static_cast<std::size_t>(lam.level()));
  for (Int j = 1; j <= lam.level(); ++j)
    out.push_back(beta_set(lam.component(j), lam.charge.entry(j)));
  return out;
}

Int residue(const Node& node, const Multicharge& t, Int e) {
  require_e(e);
  if (node.row < 1 || node.col < 1)
    throw std::invalid_argument("residue: node coordinates are 1-based");
  return mod_floor(node.col - node.row + t.entry(node.component), e);
}

Int residue(const Node& node, const ChargedMultipartition& lam, Int e) {
  if (!lam.contains(node))
    throw std::invalid_argument("residue: node outside the diagram");
  return residue(node, lam.charge, e);
}

ResidueContent residue_content(const ChargedMultipartition& lam, Int e) {
  require_e(e);
  ResidueContent rc;
  rc.e = e;
  rc.counts.assign(static_cast<std::size_t>(e), 0);
  for (Int j = 1; j <= lam.level(); ++j) {
    const Partition& p = lam.component(j);
    Int t = lam.charge.entry(j);
    for (Int a = 1; a <= p.length(); ++a)
      for (Int b = 1; b <= p.part(a); ++b)
        ++rc.counts[static_cast<std::size_t>(mod_floor(b - a + t, e))];
  }
  return rc;
}

BoundaryNodes boundary_nodes(const ChargedMultipartition& lam, Int e, Int i) {
  require_e(e);
  require_residue(e, i);
  BoundaryNodes out;
  for (Int j = 1; j <= lam.level(); ++j) {
    const Partition& p = lam.component(j);
    Int t = lam.charge.entry(j);
    for (Int a = 1; a <= p.length() + 1; ++a) {
      Int row_len = p.part(a);
      // a cell at the end of row a can be removed when the next row is shorter
      if (a <= p.length() && row_len > p.part(a + 1) &&
          mod_floor(row_len - a + t, e) == i)
        out.removable.push_back(Node{a, row_len, j});
      // a cell can be added after row a when the previous row is longer
      if ((a == 1 || p.part(a - 1) > row_len) &&
          mod_floor(row_len + 1 - a + t, e) == i)
        out.addable.push_back(Node{a, row_len + 1, j});
    }
  }
  return out;
}

HubVector multi_hub(const ChargedMultipartition& lam, Int e) {
  require_e(e);
  HubVector h;
  h.e = e;
  h.deltas.assign(static_cast<std::size_t>(e), 0);
  for (const BetaSet& b : beta_sets(lam)) {
    HubVector hb = hub(b, e);
    for (Int i = 0; i < e; ++i)
      h.deltas[static_cast<std::size_t>(i)] += hb.deltas[static_cast<std::size_t>(i)];
  }
  return h;
}

}  // namespace akb
