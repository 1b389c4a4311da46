#include "maxab/json_io.hpp"

#include "maxab/errors.hpp"

namespace maxab {

namespace {

Json phases_json(const std::vector<RootOfUnity>& ph) {
  Json out = Json::array();
  for (const auto& p : ph) out.push_back(p.to_string());
  return out;
}

Center parse_center(const std::string& s) {
  for (Center c : {Center::Circle, Center::Sign, Center::SignWithI})
    if (to_string(c) == s) return c;
  throw ValidationError("unknown center '" + s + "'");
}

std::string bit_row(F2Vec row, int dim) {
  std::string s(dim, '0');
  for (int j = 0; j < dim; ++j)
    if ((row >> j) & 1) s[j] = '1';
  return s;
}

F2Vec parse_bit_row(const std::string& s) {
  if (static_cast<int>(s.size()) > kMaxF2Dim) throw ValidationError("msms: gram row too long");
  F2Vec row = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      row |= F2Vec(1) << j;
    } else if (s[j] != '0') {
      throw ValidationError("msms: gram rows are strings of 0 and 1");
    }
  }
  return row;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

Monomial monomial_with_default(const Json& j, Flavor fallback) {
  return guarded("generator", [&] {
    const int dim = j.at("dim").get<int>();
    auto perm = j.at("perm").get<std::vector<int>>();
    const auto strs = j.at("phases").get<std::vector<std::string>>();
    if (dim < 1 || static_cast<int>(perm.size()) != dim || static_cast<int>(strs.size()) != dim)
      throw ValidationError("generator: dim, perm and phases disagree");
    std::vector<RootOfUnity> ph;
    for (const auto& s : strs) ph.push_back(RootOfUnity::parse(s));
    const bool conj = j.value("conj", false);
    const Flavor fl = j.contains("flavor") ? parse_flavor(j.at("flavor").get<std::string>()) : fallback;
    return Monomial(std::move(perm), std::move(ph), conj, fl);
  });
}

Json object_schema(Json properties, std::vector<std::string> required) {
  return Json{{"type", "object"}, {"properties", std::move(properties)}, {"required", std::move(required)}};
}

}  // namespace

Json to_json(const Monomial& m) {
  return Json{{"dim", m.dim()},
              {"perm", m.perm()},
              {"phases", phases_json(m.phases())},
              {"conj", m.conj()},
              {"flavor", to_string(m.flavor())}};
}

Json to_json(const TorusDirection& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back(Json::array({e.row, e.col, e.value.to_string()}));
  return Json{{"dim", t.dim()}, {"entries", entries}, {"tag", t.tag()}};
}

Json to_json(const AbelianPresentation& f) {
  Json gens = Json::array(), torus = Json::array();
  for (const auto& g : f.generators) gens.push_back(to_json(g.rep()));
  for (const auto& t : f.torus) torus.push_back(to_json(t));
  return Json{{"family", to_string(f.family)},
              {"n", f.n},
              {"center", to_string(f.center())},
              {"generators", gens},
              {"torus", torus}};
}

Json to_json(const PairingTable& t) {
  Json m = Json::array();
  for (const auto& row : t.m) m.push_back(phases_json(row));
  Json out{{"invariant_factors", t.invariant_factors}, {"m_matrix", m}};
  out["nu"] = t.nu ? phases_json(*t.nu) : Json(nullptr);
  out["mu"] = t.mu ? Json(*t.mu) : Json(nullptr);
  return out;
}

Json to_json(const Msms& m) {
  const int dim = m.space.dim();
  Json gram = Json::array(), mus = Json::array();
  for (auto row : m.space.gram()) gram.push_back(bit_row(row, dim));
  for (const auto& mu : m.mus) mus.push_back(mu.signs(dim));
  return Json{{"dim", dim}, {"gram", gram}, {"mus", mus}};
}

Json to_json(const ClassInvariant& inv) {
  Json out{{"family", to_string(inv.family)}, {"n", inv.n}};
  if (inv.family == Family::PU) {
    out["seq"] = inv.seq;
    return out;
  }
  out["k"] = inv.k;
  out["s0"] = inv.s0;
  out["s1"] = inv.s1;
  out["bf_blocks"] = inv.bf_blocks;
  out["kerm_rank"] = inv.kerm_rank;
  out["msms"] = to_json(inv.msms);
  return out;
}

Json to_json(const FixedAlgebraReport& r) {
  return Json{{"ambient", {{"family", to_string(r.family)}, {"n", r.n}}},
              {"dim_F", r.dim_F},
              {"dim_fixed", r.dim_fixed},
              {"method", to_string(r.method)},
              {"residual", r.residual},
              {"star", r.star()}};
}

Json to_json(const WeylDescription& w) {
  Json factors = Json::array();
  for (const auto& f : w.factors) factors.push_back(Json{{"name", f.name}, {"order", f.order.get_str()}});
  return Json{{"family", to_string(w.family)}, {"factors", factors}, {"total_order", w.total_order.get_str()}};
}

Monomial monomial_from_json(const Json& j) { return monomial_with_default(j, Flavor::Complex); }

TorusDirection torus_from_json(const Json& j) {
  return guarded("torus", [&] {
    std::vector<SparseEntry> entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw ValidationError("torus: entries are [row, col, phase]");
      entries.push_back({e[0].get<int>(), e[1].get<int>(), RootOfUnity::parse(e[2].get<std::string>())});
    }
    return TorusDirection(j.at("dim").get<int>(), std::move(entries), j.value("tag", std::string("custom")));
  });
}

AbelianPresentation presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    AbelianPresentation f;
    f.family = parse_family(j.at("family").get<std::string>());
    f.n = j.at("n").get<int>();
    if (f.n < 1) throw ValidationError("presentation: n must be positive");
    const Center c = j.contains("center") ? parse_center(j.at("center").get<std::string>()) : family_center(f.family);
    for (const auto& g : j.value("generators", Json::array()))
      f.generators.emplace_back(monomial_with_default(g, family_flavor(f.family)), c);
    for (const auto& t : j.value("torus", Json::array())) f.torus.push_back(torus_from_json(t));
    f.validate();
    return f;
  });
}

Msms msms_from_json(const Json& j) {
  return guarded("msms", [&] {
    const int dim = j.at("dim").get<int>();
    if (dim < 0 || dim > kMaxF2Dim) throw ValidationError("msms: dim out of range");
    std::vector<F2Vec> gram;
    for (const auto& row : j.at("gram")) gram.push_back(parse_bit_row(row.get<std::string>()));
    if (static_cast<int>(gram.size()) != dim) throw ValidationError("msms: gram needs dim rows");
    Msms m{F2SymplecticSpace(std::move(gram)), {}};
    for (const auto& s : j.at("mus")) {
      const auto signs = s.get<std::vector<int>>();
      if (static_cast<int>(signs.size()) != dim) throw ValidationError("msms: sign vectors need dim entries");
      m.mus.push_back(QuadraticRefinement::from_signs(signs));
    }
    m.validate();
    return m;
  });
}

ClassInvariant invariant_from_json(const Json& j) {
  return guarded("invariant", [&] {
    ClassInvariant inv;
    inv.family = parse_family(j.at("family").get<std::string>());
    inv.n = j.at("n").get<int>();
    if (inv.family == Family::PU) {
      inv.seq = j.at("seq").get<std::vector<std::int64_t>>();
    } else {
      inv.k = j.at("k").get<int>();
      inv.s0 = j.at("s0").get<int>();
      inv.s1 = j.at("s1").get<int>();
      inv.bf_blocks = j.at("bf_blocks").get<std::vector<int>>();
      inv.kerm_rank = j.value("kerm_rank", std::max(inv.s0 - 1, 0));
      inv.msms = msms_from_json(j.at("msms"));
    }
    validate_invariant(inv);
    return inv;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json schemas() {
  const Json integer{{"type", "integer"}};
  const Json phase{{"type", "string"}, {"pattern", "^-?[0-9]+/[0-9]+$"}};
  const Json int_array{{"type", "array"}, {"items", integer}};
  const Json family{{"enum", {"pu", "po", "psp", "twisted"}}};
  const Json decimal{{"type", "string"}, {"pattern", "^[0-9]+$"}};

  Json generator = object_schema({{"dim", integer},
                                  {"perm", int_array},
                                  {"phases", {{"type", "array"}, {"items", phase}}},
                                  {"conj", {{"type", "boolean"}}},
                                  {"flavor", {{"enum", {"complex", "real", "quaternion"}}}}},
                                 {"dim", "perm", "phases"});
  Json torus = object_schema({{"dim", integer},
                              {"entries", {{"type", "array"},
                                           {"items", {{"type", "array"},
                                                      {"prefixItems", {integer, integer, phase}},
                                                      {"minItems", 3},
                                                      {"maxItems", 3}}}}},
                              {"tag", {{"type", "string"}}}},
                             {"dim", "entries"});
  Json presentation = object_schema({{"family", family},
                                     {"n", integer},
                                     {"center", {{"enum", {"circle", "sign", "sign_with_i"}}}},
                                     {"generators", {{"type", "array"}, {"items", generator}}},
                                     {"torus", {{"type", "array"}, {"items", torus}}}},
                                    {"family", "n"});
  Json pairing = object_schema(
      {{"invariant_factors", int_array},
       {"m_matrix", {{"type", "array"}, {"items", {{"type", "array"}, {"items", phase}}}}},
       {"nu", {{"type", {"array", "null"}}, {"items", phase}}},
       {"mu", {{"type", {"array", "null"}}}}},
      {"invariant_factors", "m_matrix", "nu", "mu"});
  Json msms = object_schema({{"dim", integer},
                             {"gram", {{"type", "array"}, {"items", {{"type", "string"}, {"pattern", "^[01]*$"}}}}},
                             {"mus", {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"enum", {1, -1}}}}}}}}},
                            {"dim", "gram", "mus"});
  Json invariant = object_schema({{"family", family},
                                  {"n", integer},
                                  {"seq", int_array},
                                  {"k", integer},
                                  {"s0", integer},
                                  {"s1", integer},
                                  {"bf_blocks", int_array},
                                  {"kerm_rank", integer},
                                  {"msms", msms}},
                                 {"family", "n"});
  Json report = object_schema({{"ambient", object_schema({{"family", family}, {"n", integer}}, {"family", "n"})},
                               {"dim_F", integer},
                               {"dim_fixed", integer},
                               {"method", {{"enum", {"exact-rational", "floating"}}}},
                               {"residual", {{"type", "number"}, {"minimum", 0}}},
                               {"star", {{"type", "boolean"}}}},
                              {"dim_F", "dim_fixed", "method", "residual", "star"});
  Json weyl = object_schema(
      {{"family", family},
       {"factors", {{"type", "array"},
                    {"items", object_schema({{"name", {{"type", "string"}}}, {"order", decimal}}, {"name", "order"})}}},
       {"total_order", decimal}},
      {"factors", "total_order"});
  return Json{{"Generator", generator},       {"TorusDirection", torus}, {"AbelianPresentation", presentation},
              {"PairingTable", pairing},      {"Msms", msms},            {"ClassInvariant", invariant},
              {"FixedAlgebraReport", report}, {"WeylDescription", weyl}};
}

}  // namespace maxab
