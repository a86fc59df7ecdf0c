#pragma once

#include <vector>

#include "akb/beta_set.hpp"
#include "akb/multipartition.hpp"

namespace akb {

// An element sigma*u of the extended affine Weyl group Z^l x S_l, acting on
// the right on charged multipartitions by
//   (lambda; t)^{sigma u} = (lambda^sigma; t^sigma + e*u),
// where x^sigma places x_{sigma(a)} in slot a.  Composition matches the
// action: x^(v.then(w)) == (x^v)^w.
class WeylElement {
public:
  WeylElement(std::vector<Int> sigma, std::vector<Int> u);

  static WeylElement identity(Int l);
  static WeylElement transposition(Int l, Int k);   // s_k = (k, k+1), 1 <= k < l
  static WeylElement affine_s0(Int l);              // (e_1 - e_l)(1, l)
  static WeylElement rho_shift(Int l);              // rho * e_l, rho = (1 2 ... l)
  static WeylElement translation(std::vector<Int> u);

  Int level() const { return static_cast<Int>(sigma_.size()); }
  Int sigma(Int a) const;  // 1-based image
  const std::vector<Int>& sigma_images() const { return sigma_; }
  const std::vector<Int>& translation_vector() const { return u_; }

  WeylElement then(const WeylElement& w) const;
  WeylElement inverse() const;
  WeylElement power(Int k) const;

  bool operator==(const WeylElement&) const = default;

private:
  std::vector<Int> sigma_;  // sigma_[a-1] = sigma(a)
  std::vector<Int> u_;
};

Multicharge act_right(const Multicharge& t, const WeylElement& w, Int e);
ChargedMultipartition act_right(const ChargedMultipartition& lam,
                                const WeylElement& w, Int e);

// A:    t_1 <= ... <= t_l <= t_1 + e - 1
// Abar: ascending with t_l = t_1 + e (the closure boundary)
enum class DomainClass { InA, InAbarOnly, Outside };

DomainClass classify_charge(const Multicharge& t, Int e);

// Deterministic representative in A with entries in {0..e-1} (stable sort of
// the residues) together with a witness w satisfying t^w = standard.
struct CanonicalCharge {
  Multicharge standard;
  WeylElement witness;
};

CanonicalCharge canonicalize(const Multicharge& t, Int e);

// Left dot action of s_i on a beta-set: swaps runners i-1 and i of the
// e-abacus.  For i >= 1 this is independent of k; for i = 0 the swap crosses
// the row boundary and the bead moves k rows (k = 1 gives x -> x-1 on runner
// 0 and x -> x+1 on runner e-1).  Charge and e-weight are preserved and the
// action commutes with taking e-cores.
BetaSet dot_si_beta(const BetaSet& b, Int e, Int i, Int k = 1);

// Left dot action of e_j: moves runner j-1 down k rows; charge grows by k.
BetaSet dot_ej_beta(const BetaSet& b, Int e, Int j, Int k);

// s_i acting componentwise at the component charges: removes every removable
// i-node and adds every addable i-node; charges are unchanged.
ChargedMultipartition dot_si_multipartition(const ChargedMultipartition& lam,
                                            Int e, Int i);

}  // namespace akb
