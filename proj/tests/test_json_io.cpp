#include "doctest.h"
#include "maxab/errors.hpp"
#include "maxab/json_io.hpp"

using namespace maxab;

namespace {

void check_required(const Json& value, const Json& schema) {
  for (const auto& key : schema.at("required")) CHECK(value.contains(key.get<std::string>()));
}

}  // namespace

TEST_CASE("generator encoding") {
  const Json j = to_json(clock(2));
  CHECK(j.dump() == R"({"dim":2,"perm":[0,1],"phases":["0/1","1/2"],"conj":false,"flavor":"complex"})");
  CHECK(monomial_from_json(j) == clock(2));
  const Monomial t = Monomial::tau(3);
  CHECK(monomial_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(monomial_from_json(parse_json(R"({"dim":2,"perm":[0],"phases":["0/1"]})")), ValidationError);
  CHECK_THROWS_AS(monomial_from_json(parse_json(R"({"dim":2,"perm":[0,0],"phases":["0/1","0/1"]})")),
                  ValidationError);
  CHECK_THROWS_AS(monomial_from_json(parse_json(R"({"dim":"two"})")), ValidationError);
  CHECK_THROWS_AS(parse_json("{"), ValidationError);
}

TEST_CASE("invariant encoding") {
  ClassInvariant pu;
  pu.n = 8;
  pu.seq = {4, 2};
  CHECK(to_json(pu).dump() == R"({"family":"pu","n":8,"seq":[4,2]})");
  CHECK(invariant_from_json(to_json(pu)) == pu);

  for (Family f : {Family::PU, Family::PO, Family::PSp, Family::TwistedPU})
    for (int n = (f == Family::TwistedPU ? 2 : 1); n <= 8; ++n)
      for (const auto& inv : enumerate_invariants(f, n)) {
        const Json j = to_json(inv);
        CHECK(invariant_from_json(parse_json(j.dump())) == inv);
        check_required(j, schemas().at("ClassInvariant"));
      }

  for (const auto& inv : enumerate_invariants(Family::PO, 8))
    if (inv.k == 1 && inv.s0 == 2 && inv.s1 == 1) {
      const Json j = to_json(inv);
      CHECK(j.at("bf_blocks") == Json::array({2, 2, 4}));
      CHECK(j.at("msms").at("dim") == 2);
      CHECK(j.at("msms").at("gram") == Json::array({"01", "10"}));
    }

  ClassInvariant bad = pu;
  Json j = to_json(bad);
  j["seq"] = Json::array({2, 4});
  CHECK_THROWS_AS(invariant_from_json(j), ValidationError);
}

TEST_CASE("presentation round trip") {
  for (Family f : {Family::PU, Family::PO, Family::PSp, Family::TwistedPU})
    for (int n = (f == Family::TwistedPU ? 2 : 1); n <= 6; ++n)
      for (const auto& inv : enumerate_invariants(f, n)) {
        const auto rep = canonical_rep(inv);
        const Json j = to_json(rep);
        check_required(j, schemas().at("AbelianPresentation"));
        const auto back = presentation_from_json(parse_json(j.dump()));
        REQUIRE(back.generators.size() == rep.generators.size());
        for (std::size_t i = 0; i < rep.generators.size(); ++i) CHECK(equal(back.generators[i], rep.generators[i]));
        CHECK(back.torus == rep.torus);
      }
  AbelianPresentation twisted;
  twisted.family = Family::TwistedPU;
  twisted.n = 2;
  twisted.generators = {{Monomial::tau(2), Center::Circle}};
  const auto lifted = lift_twisted(twisted);
  const auto back = presentation_from_json(to_json(lifted));
  CHECK(back.center() == Center::SignWithI);
}

TEST_CASE("report, weyl and pairing encodings") {
  FixedAlgebraReport r;
  r.n = 2;
  const Json rj = to_json(r);
  check_required(rj, schemas().at("FixedAlgebraReport"));
  CHECK(rj.at("star") == true);
  CHECK(rj.at("method") == "exact-rational");

  ClassInvariant inv;
  inv.n = 3;
  inv.seq = {3};
  const Json wj = to_json(weyl_description(inv));
  check_required(wj, schemas().at("WeylDescription"));
  CHECK(wj.at("total_order") == "24");

  AbelianPresentation f;
  f.n = 2;
  f.generators = {{clock(2), Center::Circle}, {shift(2), Center::Circle}};
  const Json pj = to_json(build_pairing(f));
  check_required(pj, schemas().at("PairingTable"));
  CHECK(pj.at("invariant_factors") == Json::array({2, 2}));
  CHECK(pj.at("m_matrix")[0][1] == "1/2");
}

TEST_CASE("msms encoding") {
  const Msms m = standard_model("plus(1)");
  const Json j = to_json(m);
  CHECK(j.at("mus") == Json::array({Json::array({1, 1})}));
  CHECK(msms_from_json(j) == m);
  Json bad = j;
  bad["gram"] = Json::array({"00", "10"});
  CHECK_THROWS_AS(msms_from_json(bad), ValidationError);
}
