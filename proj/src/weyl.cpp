#include "akb/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace akb {

namespace {

void require_e(Int e) {
  if (e < 2) throw std::invalid_argument("weyl: e must be >= 2");
}

std::vector<Int> identity_images(Int l) {
  std::vector<Int> sigma(static_cast<std::size_t>(l));
  std::iota(sigma.begin(), sigma.end(), Int{1});
  return sigma;
}

}  // namespace

WeylElement::WeylElement(std::vector<Int> sigma, std::vector<Int> u)
    : sigma_(std::move(sigma)), u_(std::move(u)) {
  if (sigma_.empty() || sigma_.size() != u_.size())
    throw std::invalid_argument("weyl element: sigma and u sizes must match, >= 1");
  std::vector<bool> seen(sigma_.size(), false);
  for (Int v : sigma_) {
    if (v < 1 || v > level() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("weyl element: sigma is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

WeylElement WeylElement::identity(Int l) {
  return WeylElement(identity_images(l), std::vector<Int>(static_cast<std::size_t>(l), 0));
}

WeylElement WeylElement::transposition(Int l, Int k) {
  if (k < 1 || k >= l)
    throw std::invalid_argument("weyl: transposition index out of range");
  auto sigma = identity_images(l);
  std::swap(sigma[static_cast<std::size_t>(k - 1)], sigma[static_cast<std::size_t>(k)]);
  return WeylElement(std::move(sigma), std::vector<Int>(static_cast<std::size_t>(l), 0));
}

WeylElement WeylElement::affine_s0(Int l) {
  if (l < 2) throw std::invalid_argument("weyl: affine s0 needs level >= 2");
  auto sigma = identity_images(l);
  std::swap(sigma.front(), sigma.back());
  std::vector<Int> u(static_cast<std::size_t>(l), 0);
  u.front() = -1;
  u.back() = 1;
  return WeylElement(std::move(sigma), std::move(u));
}

WeylElement WeylElement::rho_shift(Int l) {
  // t^{rho e_l} = (t_2, ..., t_l, t_1 + e)
  std::vector<Int> sigma(static_cast<std::size_t>(l));
  for (Int a = 1; a <= l; ++a)
    sigma[static_cast<std::size_t>(a - 1)] = (a % l) + 1;
  std::vector<Int> u(static_cast<std::size_t>(l), 0);
  u.back() = 1;
  return WeylElement(std::move(sigma), std::move(u));
}

WeylElement WeylElement::translation(std::vector<Int> u) {
  auto sigma = identity_images(static_cast<Int>(u.size()));
  return WeylElement(std::move(sigma), std::move(u));
}

Int WeylElement::sigma(Int a) const {
  if (a < 1 || a > level())
    throw std::invalid_argument("weyl element: index out of range");
  return sigma_[static_cast<std::size_t>(a - 1)];
}

WeylElement WeylElement::then(const WeylElement& w) const {
  if (level() != w.level())
    throw std::invalid_argument("weyl element: level mismatch");
  Int l = level();
  std::vector<Int> sigma(static_cast<std::size_t>(l));
  std::vector<Int> u(static_cast<std::size_t>(l));
  for (Int a = 1; a <= l; ++a) {
    sigma[static_cast<std::size_t>(a - 1)] = this->sigma(w.sigma(a));
    u[static_cast<std::size_t>(a - 1)] =
        u_[static_cast<std::size_t>(w.sigma(a) - 1)] +
        w.u_[static_cast<std::size_t>(a - 1)];
  }
  return WeylElement(std::move(sigma), std::move(u));
}

WeylElement WeylElement::inverse() const {
  Int l = level();
  std::vector<Int> sigma(static_cast<std::size_t>(l));
  std::vector<Int> u(static_cast<std::size_t>(l));
  for (Int a = 1; a <= l; ++a) {
    sigma[static_cast<std::size_t>(this->sigma(a) - 1)] = a;
    u[static_cast<std::size_t>(this->sigma(a) - 1)] =
        -u_[static_cast<std::size_t>(a - 1)];
  }
  return WeylElement(std::move(sigma), std::move(u));
}

WeylElement WeylElement::power(Int k) const {
  WeylElement base = k >= 0 ? *this : inverse();
  Int reps = k >= 0 ? k : -k;
  WeylElement acc = identity(level());
  for (Int i = 0; i < reps; ++i) acc = acc.then(base);
  return acc;
}

Multicharge act_right(const Multicharge& t, const WeylElement& w, Int e) {
  require_e(e);
  if (t.length() != w.level())
    throw std::invalid_argument("act_right: level mismatch");
  std::vector<Int> out(static_cast<std::size_t>(t.length()));
  for (Int a = 1; a <= t.length(); ++a)
    out[static_cast<std::size_t>(a - 1)] =
        t.entry(w.sigma(a)) + e * w.translation_vector()[static_cast<std::size_t>(a - 1)];
  return Multicharge{std::move(out)};
}

ChargedMultipartition act_right(const ChargedMultipartition& lam,
                                const WeylElement& w, Int e) {
  if (lam.level() != w.level())
    throw std::invalid_argument("act_right: level mismatch");
  std::vector<Partition> comps(static_cast<std::size_t>(lam.level()));
  for (Int a = 1; a <= lam.level(); ++a)
    comps[static_cast<std::size_t>(a - 1)] = lam.component(w.sigma(a));
  return ChargedMultipartition{std::move(comps), act_right(lam.charge, w, e)};
}

DomainClass classify_charge(const Multicharge& t, Int e) {
  require_e(e);
  Int l = t.length();
  if (l < 1) throw std::invalid_argument("classify_charge: empty multicharge");
  for (Int a = 1; a < l; ++a)
    if (t.entry(a) > t.entry(a + 1)) return DomainClass::Outside;
  Int spread = t.entry(l) - t.entry(1);
  if (spread <= e - 1) return DomainClass::InA;
  if (spread == e) return DomainClass::InAbarOnly;
  return DomainClass::Outside;
}

CanonicalCharge canonicalize(const Multicharge& t, Int e) {
  require_e(e);
  Int l = t.length();
  if (l < 1) throw std::invalid_argument("canonicalize: empty multicharge");
  std::vector<Int> order(static_cast<std::size_t>(l));
  std::iota(order.begin(), order.end(), Int{1});
  std::stable_sort(order.begin(), order.end(), [&](Int a, Int b) {
    return mod_floor(t.entry(a), e) < mod_floor(t.entry(b), e);
  });
  std::vector<Int> u(static_cast<std::size_t>(l));
  std::vector<Int> standard(static_cast<std::size_t>(l));
  for (Int a = 1; a <= l; ++a) {
    Int src = order[static_cast<std::size_t>(a - 1)];
    u[static_cast<std::size_t>(a - 1)] = -div_floor(t.entry(src), e);
    standard[static_cast<std::size_t>(a - 1)] = mod_floor(t.entry(src), e);
  }
  return CanonicalCharge{Multicharge{std::move(standard)},
                         WeylElement(std::move(order), std::move(u))};
}

BetaSet dot_si_beta(const BetaSet& b, Int e, Int i, Int k) {
  require_e(e);
  if (i < 0 || i >= e)
    throw std::invalid_argument("dot_si_beta: residue out of range");
  if (k < 1) throw std::invalid_argument("dot_si_beta: k must be positive");
  EQuotient q = e_quotient(b, e);
  auto& c = q.components;
  if (i >= 1) {
    std::swap(c[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(i)]);
  } else {
    // runners e-1 and 0 swap across the row boundary
    BetaSet last = shift(c[0], -k);
    c[0] = shift(c[static_cast<std::size_t>(e - 1)], k);
    c[static_cast<std::size_t>(e - 1)] = std::move(last);
  }
  return e_quotient_inverse(q);
}

BetaSet dot_ej_beta(const BetaSet& b, Int e, Int j, Int k) {
  require_e(e);
  if (j < 1 || j > e)
    throw std::invalid_argument("dot_ej_beta: runner index out of range");
  if (k < 1) throw std::invalid_argument("dot_ej_beta: k must be positive");
  EQuotient q = e_quotient(b, e);
  q.components[static_cast<std::size_t>(j - 1)] =
      shift(q.components[static_cast<std::size_t>(j - 1)], k);
  return e_quotient_inverse(q);
}

ChargedMultipartition dot_si_multipartition(const ChargedMultipartition& lam,
                                            Int e, Int i) {
  std::vector<Partition> comps;
  comps.reserve(static_cast<std::size_t>(lam.level()));
  for (Int j = 1; j <= lam.level(); ++j)
    comps.push_back(
        dot_si_beta(beta_set(lam.component(j), lam.charge.entry(j)), e, i).shape);
  return ChargedMultipartition{std::move(comps), lam.charge};
}

}  // namespace akb
