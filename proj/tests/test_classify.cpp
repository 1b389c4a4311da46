#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "maxab/classify.hpp"
#include "maxab/errors.hpp"
#include "maxab/pairing.hpp"
#include "test_support.hpp"

using namespace maxab;

namespace {

// All non-increasing tuples of integers >= 2 forming a divisibility chain with product dividing n.
std::set<std::vector<std::int64_t>> divisor_chain_oracle(int n) {
  std::set<std::vector<std::int64_t>> out{{}};
  for (int len = 1; (1 << len) <= n; ++len) {
    std::vector<std::int64_t> t(len, 2);
    while (true) {
      std::int64_t prod = 1;
      bool ok = true;
      for (int i = 0; i < len; ++i) {
        prod *= t[i];
        if (i > 0 && t[i - 1] % t[i] != 0) ok = false;
      }
      if (ok && n % prod == 0) out.insert(t);
      int i = len - 1;
      while (i >= 0 && t[i] == n) t[i--] = 2;
      if (i < 0) break;
      ++t[i];
    }
  }
  return out;
}

// Maps of (Z/q)^2 preserving the alternating form x1 y2 - x2 y1, checked on all pairs of vectors.
int form_preserving_maps(int q) {
  int count = 0;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          bool ok = true;
          for (int x = 0; x < q * q && ok; ++x)
            for (int y = 0; y < q * q && ok; ++y) {
              const int x1 = x / q, x2 = x % q, y1 = y / q, y2 = y % q;
              const int gx1 = (a * x1 + b * x2) % q, gx2 = (c * x1 + d * x2) % q;
              const int gy1 = (a * y1 + b * y2) % q, gy2 = (c * y1 + d * y2) % q;
              ok = ((gx1 * gy2 - gx2 * gy1) % q + q) % q == ((x1 * y2 - x2 * y1) % q + q) % q;
            }
          count += ok;
        }
  return count;
}

// Distinct permutations of the diagonal torus coordinates induced by permutation matrices.
int torus_normalizer_oracle(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::set<std::vector<int>> actions;
  do {
    const Monomial m = Monomial::permutation(p);
    std::vector<int> action(n);
    for (int c = 0; c < n; ++c) {
      const auto moved = TorusDirection::diagonal(n, {c}).conjugated_by(m);
      action[c] = moved.entries().front().row;
    }
    actions.insert(action);
  } while (std::next_permutation(p.begin(), p.end()));
  return static_cast<int>(actions.size());
}

ClassInvariant pu_inv(int n, std::vector<std::int64_t> seq) {
  ClassInvariant inv;
  inv.n = n;
  inv.seq = std::move(seq);
  return inv;
}

ClassInvariant find_inv(Family f, int n, int k, int s0, int s1) {
  for (const auto& inv : enumerate_invariants(f, n))
    if (inv.k == k && inv.s0 == s0 && inv.s1 == s1) return inv;
  FAIL("invariant not enumerated");
  return {};
}

bool same_group(const AbelianPresentation& a, const AbelianPresentation& b) {
  const auto ca = close_group(a.generators, a.matrix_dim(), a.center());
  const auto cb = close_group(b.generators, b.matrix_dim(), b.center());
  if (ca.size() != cb.size()) return false;
  for (const auto& e : ca.elements)
    if (!cb.contains(e)) return false;
  return true;
}

}  // namespace

TEST_CASE("PU enumeration equals the divisor-chain oracle") {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::vector<std::int64_t>> got;
    for (const auto& inv : enumerate_invariants(Family::PU, n)) {
      CHECK(got.insert(inv.seq).second);
      CHECK_NOTHROW(validate_invariant(inv));
    }
    CHECK(got == divisor_chain_oracle(n));
  }
  std::vector<std::vector<std::int64_t>> four;
  for (const auto& inv : enumerate_invariants(Family::PU, 4)) four.push_back(inv.seq);
  CHECK(four == std::vector<std::vector<std::int64_t>>{{}, {2}, {4}, {2, 2}});
  std::vector<std::vector<std::int64_t>> six;
  for (const auto& inv : enumerate_invariants(Family::PU, 6)) six.push_back(inv.seq);
  CHECK(six == std::vector<std::vector<std::int64_t>>{{}, {2}, {3}, {6}});
  CHECK(enumerate_invariants(Family::PU, 1).size() == 1);
}

TEST_CASE("invariant validation") {
  CHECK_THROWS_AS(validate_invariant(pu_inv(6, {2, 2})), ValidationError);
  CHECK_THROWS_AS(validate_invariant(pu_inv(8, {2, 4})), ValidationError);
  CHECK_THROWS_AS(validate_invariant(pu_inv(4, {1})), ValidationError);
  ClassInvariant po = find_inv(Family::PO, 2, 1, 1, 0);
  po.s1 = 1;
  CHECK_THROWS_AS(validate_invariant(po), ValidationError);
  CHECK_THROWS_AS(enumerate_invariants(Family::TwistedPU, 1), ValidationError);
}

TEST_CASE("enumeration of the other families") {
  // PSp(1): the maximal torus and <iI, jI>
  const auto psp1 = enumerate_invariants(Family::PSp, 1);
  REQUIRE(psp1.size() == 2);
  CHECK((psp1[0].k == 0 && psp1[0].s1 == 1));
  CHECK((psp1[1].k == 1 && psp1[1].s0 == 1 && psp1[1].s1 == 0));
  // O(2)/<-I>: (k, s0, s1) in {(0,2,0), (0,0,1), (1,1,0)}
  const auto po2 = enumerate_invariants(Family::PO, 2);
  CHECK(po2.size() == 3);
  for (Family f : {Family::PO, Family::PSp, Family::TwistedPU})
    for (int n = (f == Family::TwistedPU ? 2 : 1); n <= 8; ++n) {
      const auto all = enumerate_invariants(f, n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK_NOTHROW(validate_invariant(all[i]));
        if (i > 0) CHECK(all[i - 1].encoding() < all[i].encoding());
      }
    }
  // two classes for s0 = 2 and four for s0 = 3 at k = 2
  int s2 = 0, s3 = 0;
  for (const auto& inv : enumerate_invariants(Family::PO, 12)) {
    if (inv.k == 2 && inv.s0 == 3) ++s3;
  }
  for (const auto& inv : enumerate_invariants(Family::PO, 8))
    if (inv.k == 2 && inv.s0 == 2) ++s2;
  CHECK(s2 == 2);
  CHECK(s3 == 4);
}

TEST_CASE("canonical representatives of the named examples") {
  const auto pauli = canonical_rep(pu_inv(2, {2}));
  REQUIRE(pauli.generators.size() == 2);
  CHECK(pauli.generators[0].rep() == clock(2));
  CHECK(pauli.generators[1].rep() == shift(2));
  CHECK(pauli.torus.empty());

  const auto h2 = canonical_rep(find_inv(Family::PO, 2, 1, 1, 0));
  REQUIRE(h2.generators.size() == 2);
  CHECK(equal(h2.generators[0], {named_i_pq(1, 1), Center::Sign}));
  CHECK(equal(h2.generators[1], {named_j_prime(1), Center::Sign}));

  const auto h2p = canonical_rep(find_inv(Family::PSp, 1, 1, 1, 0));
  REQUIRE(h2p.generators.size() == 2);
  CHECK(equal(h2p.generators[0], {quaternion_embed(QuatMonomial::parse_tag("iI(1)")), Center::Sign}));
  CHECK(equal(h2p.generators[1], {quaternion_embed(QuatMonomial::parse_tag("jI(1)")), Center::Sign}));

  const auto torus = canonical_rep(pu_inv(3, {}));
  CHECK(torus.generators.empty());
  CHECK(torus.torus_dim() == 2);
}

TEST_CASE("classify examples") {
  AbelianPresentation pauli;
  pauli.n = 2;
  pauli.generators = {{clock(2), Center::Circle}, {shift(2), Center::Circle}};
  const ClassInvariant p = classify(pauli);
  CHECK(p.seq == std::vector<std::int64_t>{2});
  CHECK(p.torus_size() == 1);

  AbelianPresentation h2;
  h2.family = Family::PO;
  h2.n = 2;
  h2.generators = {{named_i_pq(1, 1), Center::Sign}, {named_j_prime(1), Center::Sign}};
  const ClassInvariant c = classify(h2);
  CHECK(c.k == 1);
  CHECK(c.s0 == 1);
  CHECK(c.s1 == 0);
  CHECK(c.bf_blocks == std::vector<int>{2});
  CHECK(c.kerm_rank == 0);
  REQUIRE(c.msms.mus.size() == 1);
  CHECK(defect(c.msms.space, c.msms.mus[0]) == 2);
  CHECK(is_isomorphic(c.msms, standard_model("plus(1)")).isomorphic);

  const ClassInvariant t = classify(canonical_rep(find_inv(Family::PSp, 3, 0, 0, 3)));
  CHECK((t.k == 0 && t.s0 == 0 && t.s1 == 3));

  // a conjugated copy classifies the same way
  std::mt19937 rng(4);
  const Monomial g = testsupport::random_monomial(rng, 2, 2).with_flavor(Flavor::Real);
  AbelianPresentation moved = h2;
  for (auto& x : moved.generators) x = {g * x.rep() * g.inverse(), Center::Sign};
  CHECK(classify(moved) == c);
}

TEST_CASE("round trip on small invariants") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& inv : enumerate_invariants(Family::PU, n)) CHECK(classify(canonical_rep(inv)) == inv);
  for (Family f : {Family::PO, Family::PSp, Family::TwistedPU})
    for (int n = (f == Family::TwistedPU ? 2 : 1); n <= 8; ++n)
      for (const auto& inv : enumerate_invariants(f, n)) {
        if (2 * inv.k > 4) continue;
        const auto rep = canonical_rep(inv);
        const ClassInvariant back = classify(rep);
        CHECK(back == inv);
        if (f != Family::PSp) CHECK(rep.torus_dim() == inv.s1);
        CHECK(back.kerm_rank <= std::max(inv.s0 - 1, 0));
      }
}

TEST_CASE("elementary abelian criterion on canonical representatives") {
  for (Family f : {Family::PO, Family::PSp, Family::TwistedPU})
    for (int n = (f == Family::TwistedPU ? 2 : 1); n <= 8; ++n)
      for (const auto& inv : enumerate_invariants(f, n)) {
        if (2 * inv.k > 4) continue;
        const auto rep = canonical_rep(inv);
        bool elementary = rep.torus.empty();
        for (const auto& g : rep.generators) {
          const Monomial sq = g.rep() * g.rep();
          elementary = elementary && ProjectiveElement(sq, g.center()).canonical().is_identity();
        }
        CHECK(elementary == is_elementary_abelian(inv));
      }
}

TEST_CASE("twisted lifting") {
  AbelianPresentation f;
  f.family = Family::TwistedPU;
  f.n = 2;
  f.generators = {{Monomial::tau(2), Center::Circle}};
  const auto lifted = lift_twisted(f);
  REQUIRE(lifted.generators.size() == 2);
  CHECK(equal(lifted.generators[0], {Monomial::scalar(2, RootOfUnity::i()), Center::SignWithI}));
  CHECK(equal(lifted.generators[1], {Monomial::tau(2), Center::SignWithI}));

  AbelianPresentation real = f;
  real.generators.emplace_back(named_i_pq(1, 1).with_flavor(Flavor::Complex), Center::Circle);
  const auto lr = lift_twisted(real);
  REQUIRE(lr.generators.size() == 3);
  CHECK(equal(lr.generators[2], {named_i_pq(1, 1).with_flavor(Flavor::Complex), Center::SignWithI}));

  AbelianPresentation inside = f;
  inside.generators = {{clock(2), Center::Circle}};
  CHECK_THROWS_AS(lift_twisted(inside), ValidationError);

  // a non-real generator gets rescaled so that it commutes with u exactly
  AbelianPresentation twisted = f;
  twisted.generators.emplace_back(Monomial::diagonal({RootOfUnity::i(), RootOfUnity::i()}).scaled({1, 8}),
                                  Center::Circle);
  const auto lt = lift_twisted(twisted);
  CHECK(commutator_scalar(Monomial::tau(2), lt.generators[2].rep()).is_one());
}

TEST_CASE("maximality") {
  ClassInvariant inv = find_inv(Family::PO, 3, 0, 3, 0);
  CHECK(is_maximal(inv, 2));
  CHECK_FALSE(is_maximal(inv, 1));
  for (const auto& x : enumerate_invariants(Family::PO, 4))
    if (x.k == 1 && x.s0 == 2 && x.s1 == 0) CHECK(is_maximal(x) == !(x.msms.mus[0] == x.msms.mus[1]));
  const ClassInvariant torus = find_inv(Family::PO, 2, 0, 0, 1);
  CHECK(is_maximal(torus));
  CHECK(is_maximal(pu_inv(4, {2})));
}

TEST_CASE("quotient predicate") {
  CHECK(quotient_predicate(4, 2));
  CHECK_FALSE(quotient_predicate(6, 2));
  for (int n = 1; n <= 12; ++n) CHECK(quotient_predicate(n, n));
  CHECK_THROWS_AS(quotient_predicate(6, 4), ValidationError);
}

TEST_CASE("Weyl group orders against brute-force oracles") {
  CHECK(weyl_description(pu_inv(2, {2})).total_order == form_preserving_maps(2));
  CHECK(form_preserving_maps(2) == 6);
  CHECK(weyl_description(pu_inv(3, {3})).total_order == form_preserving_maps(3));
  CHECK(form_preserving_maps(3) == 24);
  for (int n = 1; n <= 5; ++n) {
    const mpz_class order = weyl_description(pu_inv(n, {})).total_order;
    CHECK(order == torus_normalizer_oracle(n));
  }
  const auto po = weyl_description(find_inv(Family::PO, 2, 1, 1, 0));
  CHECK(po.total_order == 2);
  CHECK(weyl_description(find_inv(Family::PSp, 1, 0, 0, 1)).total_order == 2);
  CHECK(weyl_description(find_inv(Family::PSp, 3, 0, 0, 3)).total_order == 48);
  for (const auto& f : po.factors) CHECK(f.order > 0);
}

TEST_CASE("symplectic group orders: counting formula against backtracking") {
  const std::vector<std::vector<std::int64_t>> cases = {{}, {2}, {3}, {4}, {6}, {2, 2}, {4, 2}, {3, 3}, {8}, {6, 2},
                                                        {4, 4}, {9}, {12}};
  for (const auto& s : cases) CHECK(symplectic_group_order(s) == symplectic_group_order_brute_force(s));
  CHECK(symplectic_group_order({2, 2}) == 720);
  CHECK(symplectic_group_order({2, 2, 2, 2}) == mpz_class("47377612800"));
  CHECK_THROWS_AS(symplectic_group_order_brute_force({12, 12}), BoundError);
}
