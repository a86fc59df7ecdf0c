#pragma once

// Shared helpers for the randomized suites: seeded generators and
// brute-force oracles kept independent of the library's internal routes.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "akb/blocks.hpp"
#include "akb/multipartition.hpp"
#include "akb/uglov.hpp"
#include "akb/weyl.hpp"

namespace akbtest {

using akb::Int;
using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline akb::Partition random_partition(Rng& rng, Int max_size) {
  static std::map<Int, std::vector<akb::Partition>> cache;
  Int n = rand_int(rng, 0, max_size);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, akb::partitions_of(n)).first;
  const auto& all = it->second;
  return all[static_cast<std::size_t>(rand_int(rng, 0, static_cast<Int>(all.size()) - 1))];
}

inline akb::BetaSet random_beta(Rng& rng, Int max_size = 10, Int charge_range = 8) {
  return akb::beta_set(random_partition(rng, max_size),
                       rand_int(rng, -charge_range, charge_range));
}

inline akb::ChargedMultipartition random_charged(Rng& rng, Int l, Int max_total,
                                                 Int charge_range = 6) {
  std::vector<akb::Partition> comps;
  std::vector<Int> charges;
  Int budget = max_total;
  for (Int j = 0; j < l; ++j) {
    akb::Partition p = random_partition(rng, budget);
    budget -= p.size();
    comps.push_back(std::move(p));
    charges.push_back(rand_int(rng, -charge_range, charge_range));
  }
  return akb::charged(std::move(comps), std::move(charges));
}

inline akb::WeylElement random_weyl(Rng& rng, Int l, Int trans_range = 2) {
  std::vector<Int> sigma(static_cast<std::size_t>(l));
  std::iota(sigma.begin(), sigma.end(), Int{1});
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<Int> u(static_cast<std::size_t>(l));
  for (auto& v : u) v = rand_int(rng, -trans_range, trans_range);
  return akb::WeylElement(std::move(sigma), std::move(u));
}

// Members of b in [lo, hi] by direct evaluation of shape_a + charge - a.
inline std::set<Int> window(const akb::BetaSet& b, Int lo, Int hi) {
  std::set<Int> out;
  for (Int a = 1;; ++a) {
    Int x = b.element(a);
    if (x < lo) break;
    if (x <= hi) out.insert(x);
  }
  return out;
}

// Oracle for the e-quotient: direct set comprehension over a window.
inline std::set<Int> quotient_runner_window(const akb::BetaSet& b, Int e, Int i,
                                            Int lo_row, Int hi_row) {
  std::set<Int> rows;
  for (Int x : window(b, lo_row * e - (e - 1), hi_row * e + (e - 1)))
    if (akb::mod_floor(x, e) == i) {
      Int row = akb::div_floor(x, e);
      if (row >= lo_row && row <= hi_row) rows.insert(row);
    }
  return rows;
}

// Oracle for the defining e-weight: per-runner one-step lift counts computed
// from raw members, bypassing the quotient machinery.
inline Int weight_by_bead_lifts(const akb::BetaSet& b, Int e) {
  Int m = akb::div_floor(b.filled_below(), e);
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(e));
  for (Int x : akb::members_above(b, m * e))
    rows[static_cast<std::size_t>(akb::mod_floor(x, e))].push_back(
        akb::div_floor(x, e));
  Int total = 0;
  for (Int i = 0; i < e; ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    std::sort(r.begin(), r.end(), std::greater<Int>());
    Int s = m + static_cast<Int>(r.size());  // runner charge
    // rows below m contribute nothing: they already sit at s - a
    for (std::size_t a = 0; a < r.size(); ++a)
      total += r[a] - (s - static_cast<Int>(a + 1));
  }
  return total;
}

// Oracle for dot_si_multipartition: rebuild row lengths from the node lists.
inline akb::ChargedMultipartition toggle_boundary_nodes(
    const akb::ChargedMultipartition& lam, Int e, Int i) {
  akb::BoundaryNodes bn = akb::boundary_nodes(lam, e, i);
  std::vector<akb::Partition> comps;
  for (Int j = 1; j <= lam.level(); ++j) {
    std::vector<Int> parts;
    for (Int a = 1; a <= lam.component(j).length() + 1; ++a)
      parts.push_back(lam.component(j).part(a));
    for (const akb::Node& nd : bn.removable)
      if (nd.component == j) parts[static_cast<std::size_t>(nd.row - 1)] -= 1;
    for (const akb::Node& nd : bn.addable)
      if (nd.component == j) parts[static_cast<std::size_t>(nd.row - 1)] += 1;
    comps.emplace_back(std::move(parts));
  }
  return akb::ChargedMultipartition{std::move(comps), lam.charge};
}

}  // namespace akbtest
