#include "doctest.h"
#include "maxab/errors.hpp"
#include "maxab/pairing.hpp"
#include "test_support.hpp"

using namespace maxab;
using namespace testsupport;

namespace {

ProjectiveElement pu(const Monomial& m) { return {m, Center::Circle}; }
ProjectiveElement po(const Monomial& m) { return {m.with_flavor(Flavor::Real), Center::Sign}; }

AbelianPresentation presentation(Family fam, int n, std::vector<ProjectiveElement> gens) {
  AbelianPresentation f;
  f.family = fam;
  f.n = n;
  f.generators = std::move(gens);
  return f;
}

}  // namespace

TEST_CASE("commutator scalars") {
  CHECK(commutator_scalar(pu(clock(2)), pu(shift(2))) == RootOfUnity::minus_one());
  CHECK(commutator_scalar(pu(clock(3)), pu(shift(3))) == RootOfUnity(2, 3));
  CHECK(commutator_scalar(pu(clock(5)), pu(clock(5))).is_one());
  const Monomial d = Monomial::diagonal({RootOfUnity::minus_one(), {}, {}}, Flavor::Real);
  const Monomial s = Monomial::permutation({1, 0, 2}, Flavor::Real);
  CHECK_THROWS_AS(commutator_scalar(ProjectiveElement(d, Center::Sign), ProjectiveElement(s, Center::Sign)),
                  NotScalarCommutator);
  CHECK_THROWS_AS(presentation(Family::PO, 3, {po(d), po(s)}).validate(), NotScalarCommutator);
}

TEST_CASE("pairing tables of Heisenberg-type groups") {
  const PairingTable pauli = build_pairing(presentation(Family::PU, 2, {pu(clock(2)), pu(shift(2))}));
  CHECK(pauli.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(kernel_m(pauli).empty());
  CHECK(symplectic_reduction(pauli) == std::vector<std::int64_t>{2});

  const Monomial i4 = Monomial::identity(4), i2 = Monomial::identity(2);
  const auto h4h2 = presentation(Family::PU, 8,
                                 {pu(kron(clock(4), i2)), pu(kron(shift(4), i2)), pu(kron(i4, clock(2))),
                                  pu(kron(i4, shift(2)))});
  const PairingTable t = build_pairing(h4h2);
  CHECK(t.invariant_factors == std::vector<std::int64_t>{2, 2, 4, 4});
  CHECK(symplectic_reduction(t) == std::vector<std::int64_t>{4, 2});

  const PairingTable torus = build_pairing(presentation(Family::PU, 3, {}));
  CHECK(torus.order() == 1);
  CHECK(symplectic_reduction(torus).empty());
}

TEST_CASE("radical of a degenerate pairing") {
  const Monomial i2 = Monomial::identity(2);
  const auto f = presentation(Family::PU, 4, {pu(kron(clock(2), i2)), pu(kron(shift(2), i2)), pu(kron(i2, clock(2)))});
  const PairingTable t = build_pairing(f);
  const auto ker = kernel_m(t);
  REQUIRE(ker.size() == 1);
  CHECK(ProjectiveElement(t.rep(ker[0]), Center::Circle).canonical() == kron(i2, clock(2)));
  const PairingTable trivial = build_pairing(presentation(Family::PU, 3, {pu(clock(3))}));
  CHECK(kernel_m(trivial).size() == 1);
}

TEST_CASE("B_F examples") {
  const auto f = presentation(Family::PO, 2, {po(named_i_pq(1, 1)), po(named_j_prime(1))});
  CHECK(compute_BF(f).generators.empty());
  const auto g = presentation(Family::PO, 4, {po(named_i_pq(1, 3))});
  const auto bg = compute_BF(g);
  REQUIRE(bg.generators.size() == 1);
  CHECK(equal({bg.generators[0], Center::Sign}, {named_i_pq(1, 3), Center::Sign}));
  const auto qi = quaternion_embed(QuatMonomial::parse_tag("iI(1)"));
  const auto qj = quaternion_embed(QuatMonomial::parse_tag("jI(1)"));
  const auto h = presentation(Family::PSp, 1, {{qi, Center::Sign}, {qj, Center::Sign}});
  CHECK(compute_BF(h).generators.empty());
  CHECK_THROWS_AS(compute_BF(presentation(Family::PU, 2, {pu(clock(2))})), ValidationError);
}

TEST_CASE("nu on kernel lifts") {
  const Monomial tau = Monomial::tau(2);
  const auto lifted = presentation(Family::TwistedPU, 2,
                                   {{Monomial::scalar(2, RootOfUnity::i()), Center::SignWithI},
                                    {tau, Center::SignWithI}});
  const NuTable nu = compute_nu(lifted, {tau, Center::SignWithI});
  REQUIRE(nu.values.size() == 1);
  CHECK(nu.values[0] == RootOfUnity::minus_one());

  const Monomial d = Monomial::diagonal({RootOfUnity::one(), RootOfUnity::minus_one()});
  const auto f = presentation(Family::TwistedPU, 2, {pu(d), pu(tau)});
  const NuTable nf = compute_nu(f, pu(tau));
  REQUIRE(nf.values.size() == 1);
  CHECK(nf.values[0].is_one());
  CHECK_THROWS_AS(compute_nu(f, pu(d)), ValidationError);
  CHECK_THROWS_AS(compute_nu(f, pu(tau * shift(2))), ValidationError);
}

TEST_CASE("nu normalizes lifts consistently") {
  // F = <[clock(2)], [shift(2)], tau> in PU(2) x| <tau>; nu does not depend on the choice of u
  const Monomial tau = Monomial::tau(2);
  const Monomial z = Monomial::diagonal({RootOfUnity::one(), RootOfUnity::minus_one()});
  const auto f = presentation(Family::TwistedPU, 4,
                              {pu(kron(z, Monomial::identity(2))), pu(kron(Monomial::identity(2), z)),
                               pu(Monomial::tau(4))});
  const NuTable a = compute_nu(f, pu(Monomial::tau(4)));
  const NuTable b = compute_nu(f, pu(Monomial::tau(4) * kron(z, Monomial::identity(2))));
  CHECK(a.values == b.values);
  for (const auto& m : a.normalized) CHECK(commutator_scalar(Monomial::tau(4), m).is_one());
  (void)tau;
}

TEST_CASE("pairing axioms on random PU presentations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 8;
    const AbelianPresentation f = random_pu_presentation(rng, n);
    const PairingTable t = build_pairing(f);
    const auto elems = t.elements();
    for (int k = 0; k < 20; ++k) {
      const auto& x = elems[rng() % elems.size()];
      const auto& y = elems[rng() % elems.size()];
      const auto& z = elems[rng() % elems.size()];
      CHECK(t.pair(x, x).is_one());
      CHECK(t.pair(x, y) == t.pair(y, x).inverse());
      CHECK(t.pair(t.add(x, y), z) == t.pair(x, z) * t.pair(y, z));
      CHECK(t.pair(x, y).pow(n).is_one());
      const auto dense_value = dense_commutator(t.rep(x), t.rep(y));
      REQUIRE(dense_value);
      CHECK(std::abs(*dense_value - to_complex(t.pair(x, y))) < 1e-9);
    }
    const auto seq = symplectic_reduction(t);
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      prod *= seq[i];
      if (i + 1 < seq.size()) CHECK(seq[i] % seq[i + 1] == 0);
      CHECK(seq[i] >= 2);
    }
    CHECK(n % prod == 0);
  }
}

TEST_CASE("reduction is independent of generator order") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    AbelianPresentation f = random_pu_presentation(rng, 4 + trial % 5);
    const auto before = symplectic_reduction(build_pairing(f));
    std::shuffle(f.generators.begin(), f.generators.end(), rng);
    f.generators.push_back(multiply(f.generators.front(), f.generators.back()));
    CHECK(symplectic_reduction(build_pairing(f)) == before);
  }
}
