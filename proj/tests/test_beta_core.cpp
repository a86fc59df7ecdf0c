#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "akb/beta_set.hpp"
#include "util.hpp"

using namespace akb;
using akbtest::Rng;

TEST_CASE("beta_set denotes {shape_a + charge - a}") {
  BetaSet empty = beta_set(Partition{}, 0);
  CHECK(empty.charge == 0);
  CHECK(empty.element(1) == -1);
  CHECK(empty.element(3) == -3);

  BetaSet b = beta_set(Partition{4, 4, 3, 1}, 2);
  CHECK(members_above(b, -5) == std::vector<Int>{5, 4, 2, -1, -3, -4, -5});
  CHECK(b.contains(5));
  CHECK(!b.contains(3));
  CHECK(!b.contains(-2));
  CHECK(b.contains(-100));

  BetaSet one = beta_set(Partition{1}, -1);
  CHECK(members_above(one, -4) == std::vector<Int>{-1, -3, -4});
}

TEST_CASE("members_above") {
  CHECK(members_above(BetaSet{0, Partition{}}, -2) == std::vector<Int>{-1, -2});
  CHECK(members_above(BetaSet{2, Partition{4, 4, 3, 1}}, 0) ==
        std::vector<Int>{5, 4, 2});
  CHECK(members_above(BetaSet{2, Partition{4, 2}}, -5) ==
        std::vector<Int>{5, 2, -1, -2, -3, -4, -5});
}

TEST_CASE("shift translates the charge and fixes the shape") {
  CHECK(shift(BetaSet{0, Partition{}}, 5) == BetaSet{5, Partition{}});
  CHECK(shift(BetaSet{2, Partition{4, 4, 3, 1}}, -2) == BetaSet{0, Partition{4, 4, 3, 1}});
  CHECK(members_above(shift(BetaSet{-1, Partition{1}}, 3), -1) ==
        std::vector<Int>{2, 0, -1});
}

TEST_CASE("round trip between partitions and beta-sets") {
  Rng rng(20240601);
  for (int it = 0; it < 300; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    CHECK(beta_set(b.shape, b.charge) == b);
    Partition p = akbtest::random_partition(rng, 12);
    Int t = akbtest::rand_int(rng, -9, 9);
    CHECK(beta_set(p, t).shape == p);
    CHECK(beta_set(p, t).charge == t);
  }
}

TEST_CASE("charge difference counts symmetric set differences") {
  Rng rng(20240602);
  for (int it = 0; it < 500; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    BetaSet c = akbtest::random_beta(rng);
    Int cutoff = std::min(b.filled_below(), c.filled_below());
    auto bw = akbtest::window(b, cutoff, 100);
    auto cw = akbtest::window(c, cutoff, 100);
    Int b_minus_c = 0, c_minus_b = 0;
    for (Int x : bw)
      if (!cw.count(x)) ++b_minus_c;
    for (Int x : cw)
      if (!bw.count(x)) ++c_minus_b;
    CHECK(b_minus_c - c_minus_b == b.charge - c.charge);
  }
}

TEST_CASE("e_quotient extracts the runners") {
  SUBCASE("full negative abacus splits evenly") {
    EQuotient q = e_quotient(BetaSet{0, Partition{}}, 3);
    REQUIRE(q.components.size() == 3);
    for (const BetaSet& c : q.components) CHECK(c == BetaSet{0, Partition{}});
  }
  SUBCASE("worked example") {
    // {5,4,2,-1,-3,-4,...} on three runners: 5,2,-1,-4,... sit on runner 2
    EQuotient q = e_quotient(BetaSet{2, Partition{4, 4, 3, 1}}, 3);
    CHECK(q.components[0] == BetaSet{0, Partition{}});
    CHECK(q.components[1] == BetaSet{0, Partition{2}});
    CHECK(q.components[2] == BetaSet{2, Partition{}});
  }
  SUBCASE("against direct set comprehension") {
    Rng rng(20240603);
    for (int it = 0; it < 300; ++it) {
      BetaSet b = akbtest::random_beta(rng);
      Int e = akbtest::rand_int(rng, 2, 5);
      EQuotient q = e_quotient(b, e);
      Int lo = div_floor(b.filled_below(), e) - 2;
      for (Int i = 0; i < e; ++i) {
        auto expect = akbtest::quotient_runner_window(b, e, i, lo, 30);
        auto got = akbtest::window(q.components[static_cast<std::size_t>(i)], lo, 30);
        CHECK(got == expect);
      }
    }
  }
  CHECK_THROWS_AS(e_quotient(BetaSet{0, Partition{}}, 1), std::invalid_argument);
}

TEST_CASE("e_quotient_inverse") {
  SUBCASE("trivial components") {
    EQuotient q{2, {BetaSet{0, Partition{}}, BetaSet{0, Partition{}}}};
    CHECK(e_quotient_inverse(q) == BetaSet{0, Partition{}});
  }
  SUBCASE("worked example backwards") {
    EQuotient q{3,
                {BetaSet{0, Partition{}}, BetaSet{0, Partition{2}}, BetaSet{2, Partition{}}}};
    CHECK(e_quotient_inverse(q) == BetaSet{2, Partition{4, 4, 3, 1}});
  }
  SUBCASE("single nontrivial runner") {
    // {2a : a < 1} union {2a+1 : a < -1} = {0,-2,-3,-4,...}
    EQuotient q{2, {BetaSet{1, Partition{}}, BetaSet{-1, Partition{}}}};
    BetaSet b = e_quotient_inverse(q);
    CHECK(b.charge == 0);
    CHECK(b == BetaSet{0, Partition{1}});
  }
  SUBCASE("round trip on random inputs") {
    Rng rng(20240604);
    for (int it = 0; it < 200; ++it) {
      BetaSet b = akbtest::random_beta(rng);
      Int e = akbtest::rand_int(rng, 2, 6);
      CHECK(e_quotient_inverse(e_quotient(b, e)) == b);
    }
  }
}

TEST_CASE("charge additivity over the quotient") {
  Rng rng(20240605);
  for (int it = 0; it < 300; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    Int e = akbtest::rand_int(rng, 2, 6);
    EQuotient q = e_quotient(b, e);
    Int total = 0;
    for (const BetaSet& c : q.components) total += c.charge;
    CHECK(total == b.charge);
  }
}

TEST_CASE("shift laws for quotient, core and weight") {
  Rng rng(20240606);
  for (int it = 0; it < 300; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    Int e = akbtest::rand_int(rng, 2, 5);
    Int k = akbtest::rand_int(rng, -4, 4);
    CHECK(e_core(shift(b, k), e) == shift(e_core(b, e), k));
    CHECK(e_weight(shift(b, k), e) == e_weight(b, e));
    EQuotient q = e_quotient(b, e);
    EQuotient qs = e_quotient(shift(b, k * e), e);
    for (Int i = 0; i < e; ++i)
      CHECK(qs.components[static_cast<std::size_t>(i)] ==
            shift(q.components[static_cast<std::size_t>(i)], k));
    // one full step rotates the runners
    EQuotient q1 = e_quotient(shift(b, 1), e);
    CHECK(q1.components[0] == shift(q.components[static_cast<std::size_t>(e - 1)], 1));
    for (Int i = 1; i < e; ++i)
      CHECK(q1.components[static_cast<std::size_t>(i)] ==
            q.components[static_cast<std::size_t>(i - 1)]);
  }
}

TEST_CASE("e_core") {
  CHECK(e_core(BetaSet{2, Partition{4, 4, 3, 1}}, 3) == BetaSet{2, Partition{4, 2}});
  CHECK(members_above(e_core(BetaSet{2, Partition{4, 4, 3, 1}}, 3), -2) ==
        std::vector<Int>{5, 2, -1, -2});
  for (Int t : {-3, 0, 7})
    for (Int e : {2, 3, 5})
      CHECK(e_core(BetaSet{t, Partition{}}, e) == BetaSet{t, Partition{}});
  Rng rng(20240607);
  for (int it = 0; it < 200; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    Int e = akbtest::rand_int(rng, 2, 5);
    BetaSet c = e_core(b, e);
    CHECK(c.charge == b.charge);
    CHECK(e_core(c, e) == c);
    EQuotient qc = e_quotient(c, e);
    for (const BetaSet& comp : qc.components) CHECK(comp.shape.empty());
  }
}

TEST_CASE("e_weight") {
  CHECK(e_weight(BetaSet{2, Partition{4, 4, 3, 1}}, 3) == 2);
  CHECK(e_weight(BetaSet{-4, Partition{}}, 3) == 0);
  for (Int e : {2, 3, 4, 5}) CHECK(e_weight(BetaSet{0, Partition{e}}, e) == 1);
  CHECK_THROWS_AS(e_weight(BetaSet{0, Partition{}}, 0), std::invalid_argument);

  SUBCASE("quotient formula agrees with the defining bead-lift count") {
    Rng rng(20240608);
    for (int it = 0; it < 500; ++it) {
      BetaSet b = akbtest::random_beta(rng);
      Int e = akbtest::rand_int(rng, 2, 6);
      CHECK(e_weight(b, e) == akbtest::weight_by_bead_lifts(b, e));
    }
  }
}

TEST_CASE("size decomposition |lambda| = |core| + e * weight") {
  for (Int n = 0; n <= 9; ++n)
    for (const Partition& p : partitions_of(n))
      for (Int e : {2, 3, 4, 5}) {
        BetaSet b = beta_set(p, 0);
        CHECK(p.size() == e_core(b, e).shape.size() + e * e_weight(b, e));
      }
}

TEST_CASE("delta") {
  for (Int e : {2, 3, 5})
    for (Int i = 0; i < e; ++i)
      CHECK(delta(BetaSet{0, Partition{}}, e, i) == (i == 0 ? -1 : 0));

  // worked example: quotient charges are (0, 0, 2)
  BetaSet b{2, Partition{4, 4, 3, 1}};
  CHECK(delta(b, 3, 0) == -3);
  CHECK(delta(b, 3, 1) == 0);
  CHECK(delta(b, 3, 2) == 2);
  CHECK_THROWS_AS(delta(b, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(delta(b, 3, -1), std::invalid_argument);

  SUBCASE("defining formula equals quotient-charge formula") {
    Rng rng(20240609);
    for (int it = 0; it < 1000; ++it) {
      BetaSet r = akbtest::random_beta(rng);
      Int e = akbtest::rand_int(rng, 2, 6);
      Int i = akbtest::rand_int(rng, 0, e - 1);
      EQuotient q = e_quotient(r, e);
      Int expect = q.components[static_cast<std::size_t>(i)].charge -
                   q.components[static_cast<std::size_t>(mod_floor(i - 1, e))].charge -
                   (i == 0 ? 1 : 0);
      CHECK(delta(r, e, i) == expect);
    }
  }

  SUBCASE("hub entries sum to -1") {
    Rng rng(20240610);
    for (int it = 0; it < 500; ++it) {
      BetaSet r = akbtest::random_beta(rng);
      Int e = akbtest::rand_int(rng, 2, 6);
      HubVector h = hub(r, e);
      CHECK(std::accumulate(h.deltas.begin(), h.deltas.end(), Int{0}) == -1);
    }
  }
}

TEST_CASE("hub") {
  CHECK(hub(BetaSet{0, Partition{}}, 3) == HubVector{3, {-1, 0, 0}});
  CHECK(hub(BetaSet{2, Partition{4, 4, 3, 1}}, 3) == hub(BetaSet{2, Partition{4, 2}}, 3));

  Rng rng(20240611);
  for (int it = 0; it < 400; ++it) {
    BetaSet b = akbtest::random_beta(rng);
    Int e = akbtest::rand_int(rng, 2, 6);
    CHECK(hub(b, e) == hub(e_core(b, e), e));
    // delta_i(B^{+k}) = delta_{i-k}(B)
    Int k = akbtest::rand_int(rng, -5, 5);
    HubVector hs = hub(shift(b, k), e);
    HubVector h = hub(b, e);
    for (Int i = 0; i < e; ++i)
      CHECK(hs.deltas[static_cast<std::size_t>(i)] ==
            h.deltas[static_cast<std::size_t>(mod_floor(i - k, e))]);
  }
}
