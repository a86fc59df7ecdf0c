#include "akb/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace akb {

namespace {

void require_e(Int e) {
  if (e < 2) throw std::invalid_argument("blocks: e must be >= 2");
}

void require_residue(Int e, Int i) {
  if (i < 0 || i >= e)
    throw std::invalid_argument("blocks: residue out of range");
}

// Block hub from the block core: the hub of any member equals the hub of
// the core beta-set at the total charge, corrected at residue 0 for the
// l - 1 extra full rows the stacking introduces.
HubVector hub_from_core(const Partition& core, Int charge_sum, Int e, Int l) {
  HubVector h = hub(beta_set(core, charge_sum), e);
  h.deltas[0] -= l - 1;
  return h;
}

void product(std::vector<std::vector<Partition>>& out,
             std::vector<Partition>& acc, const std::vector<Partition>& pool,
             Int rest, Int slots) {
  if (slots == 1) {
    for (const Partition& p : pool)
      if (p.size() == rest) {
        acc.push_back(p);
        out.push_back(acc);
        acc.pop_back();
      }
    return;
  }
  for (const Partition& p : pool) {
    if (p.size() > rest) continue;
    acc.push_back(p);
    product(out, acc, pool, rest - p.size(), slots - 1);
    acc.pop_back();
  }
}

}  // namespace

Int EnumerationGuard::limit(Int level) const {
  if (override_max) return *override_max;
  if (level <= 1) return max_n_level1;
  if (level == 2) return max_n_level2;
  return max_n_level3;
}

std::vector<std::vector<Partition>> multipartitions_of(Int n, Int l) {
  if (n < 0 || l < 1)
    throw std::invalid_argument("multipartitions_of: need n >= 0 and l >= 1");
  std::vector<Partition> pool = partitions_up_to(n);
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> acc;
  product(out, acc, pool, n, l);
  return out;
}

BlockDescriptor block_of(const ChargedMultipartition& lam, Int e) {
  require_e(e);
  BlockDescriptor d;
  d.e = e;
  d.l = lam.level();
  d.multicharge = lam.charge;
  d.core = pair_core(lam, e);
  CanonicalCharge can = canonicalize(lam.charge, e);
  d.weight = pair_weight(act_right(lam, can.witness, e), e);
  d.hub = multi_hub(lam, e);
  d.content = residue_content(lam, e);
  d.n = lam.size();
  return d;
}

bool same_block(const ChargedMultipartition& a, const ChargedMultipartition& b,
                Int e) {
  require_e(e);
  if (a.charge != b.charge)
    throw std::invalid_argument("same_block: multicharges differ");
  return residue_content(a, e) == residue_content(b, e);
}

std::vector<std::vector<Partition>> enumerate_block(
    Int e, const Multicharge& multicharge, Int n, const Partition& core,
    Int weight, const EnumerationGuard& guard) {
  require_e(e);
  Int l = multicharge.length();
  if (n > guard.limit(l))
    throw GuardError("enumerate_block: size exceeds the enumeration guard");
  CanonicalCharge can = canonicalize(multicharge, e);
  std::vector<std::vector<Partition>> out;
  for (auto& mp : multipartitions_of(n, l)) {
    ChargedMultipartition lam{mp, multicharge};
    if (pair_core(lam, e) != core) continue;
    if (pair_weight(act_right(lam, can.witness, e), e) != weight) continue;
    out.push_back(std::move(mp));
  }
  return out;
}

std::vector<std::vector<Partition>> enumerate_block(
    const BlockDescriptor& desc, const EnumerationGuard& guard) {
  return enumerate_block(desc.e, desc.multicharge, desc.n, desc.core,
                         desc.weight, guard);
}

BlockDescriptor si_dot_block(const BlockDescriptor& desc, Int i) {
  require_residue(desc.e, i);
  Int d = desc.hub.deltas[static_cast<std::size_t>(i)];
  Int r = desc.multicharge.sum();
  BlockDescriptor out = desc;
  out.core = dot_si_beta(beta_set(desc.core, r), desc.e, i, desc.l).shape;
  out.hub = hub_from_core(out.core, r, desc.e, desc.l);
  out.content.counts[static_cast<std::size_t>(i)] -= d;
  out.n = desc.n - d;
  return out;
}

std::optional<WkPair> wk_pair(const BlockDescriptor& desc, Int i) {
  require_residue(desc.e, i);
  Int d = desc.hub.deltas[static_cast<std::size_t>(i)];
  if (d == 0) return std::nullopt;
  return WkPair{desc.weight, d < 0 ? -d : d};
}

ScopesStatus scopes_status(const BlockDescriptor& desc, Int i,
                           const EnumerationGuard& guard) {
  require_residue(desc.e, i);
  Int d = desc.hub.deltas[static_cast<std::size_t>(i)];
  ScopesStatus st;
  st.theorem_sufficient = d != 0 && (d < 0 ? -d : d) >= desc.weight;
  if (desc.n <= guard.limit(desc.l)) {
    bool no_addable = true, no_removable = true;
    for (const auto& mp : enumerate_block(desc, guard)) {
      BoundaryNodes bn =
          boundary_nodes(ChargedMultipartition{mp, desc.multicharge}, desc.e, i);
      if (!bn.addable.empty()) no_addable = false;
      if (!bn.removable.empty()) no_removable = false;
      if (!no_addable && !no_removable) break;
    }
    st.direct = no_addable || no_removable;
  }
  return st;
}

}  // namespace akb
