#include "maxab/pairing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint64_t PairingTable::order() const {
  std::uint64_t o = 1;
  for (auto d : invariant_factors) o *= static_cast<std::uint64_t>(d);
  return o;
}

GroupElement PairingTable::unit(int i) const {
  GroupElement e = zero();
  e.at(i) = 1;
  return e;
}

GroupElement PairingTable::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] + b[i], invariant_factors[i]);
  return out;
}

GroupElement PairingTable::scale(const GroupElement& a, std::int64_t k) const {
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = mod(static_cast<std::int64_t>((static_cast<__int128>(a[i]) * k) % invariant_factors[i]),
                 invariant_factors[i]);
  return out;
}

bool PairingTable::is_zero(const GroupElement& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t PairingTable::element_order(const GroupElement& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    o = std::lcm(o, invariant_factors[i] / std::gcd(a[i], invariant_factors[i]));
  return o;
}

RootOfUnity PairingTable::pair(const GroupElement& a, const GroupElement& b) const {
  RootOfUnity acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc *= m[i][j].pow(a[i] * b[j]);
  }
  return acc;
}

std::vector<GroupElement> PairingTable::elements(std::size_t cap) const {
  if (order() > cap) throw BoundError("group order exceeds the element cap");
  std::vector<GroupElement> out;
  GroupElement cur = zero();
  while (true) {
    out.push_back(cur);
    int i = rank() - 1;
    while (i >= 0 && cur[i] + 1 == invariant_factors[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<GroupElement> PairingTable::span(const std::vector<GroupElement>& gens) const {
  std::vector<GroupElement> out{zero()};
  std::set<GroupElement> seen{zero()};
  for (std::size_t cur = 0; cur < out.size(); ++cur)
    for (const auto& g : gens) {
      GroupElement next = add(out[cur], g);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  return out;
}

Monomial PairingTable::rep(const GroupElement& a) const {
  Monomial acc = Monomial::identity(dim, flavor);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) acc = acc * generator_reps[i].pow(a[i]);
  return acc;
}

// ---------------------------------------------------------------------------

RootOfUnity commutator_scalar(const Monomial& a, const Monomial& b) {
  const Monomial c = a * b * a.inverse() * b.inverse();
  const auto lambda = c.scalar_value();
  if (!lambda) throw NotScalarCommutator("commutator is not a scalar matrix");
  return *lambda;
}

RootOfUnity commutator_scalar(const ProjectiveElement& a, const ProjectiveElement& b) {
  if (a.dim() != b.dim()) throw ValidationError("commutator: dimension mismatch");
  if (a.center() != b.center()) throw ValidationError("commutator: center mismatch");
  return commutator_scalar(a.rep(), b.rep());
}

std::vector<ProjectiveElement> linear_part(const std::vector<ProjectiveElement>& gens) {
  std::vector<ProjectiveElement> out;
  const ProjectiveElement* first = nullptr;
  for (const auto& g : gens) {
    if (!g.conj()) {
      out.push_back(g);
    } else if (!first) {
      first = &g;
      out.push_back(multiply(g, g));
    } else {
      out.push_back(multiply(g, inverse(*first)));
    }
  }
  return out;
}

PairingTable build_pairing(const std::vector<ProjectiveElement>& gens, int dim, Center center,
                           std::size_t cap) {
  for (const auto& g : gens)
    if (g.conj()) throw ValidationError("build_pairing: generators must be linear");
  PairingTable t;
  t.center = center;
  t.dim = dim;
  if (gens.empty()) return t;
  t.flavor = gens.front().rep().flavor();
  const FiniteClosure c = close_group(gens, dim, center, cap);
  if (c.size() == 1) return t;
  const SmithForm s = c.relations.smith();
  t.invariant_factors = s.invariant_factors;
  t.generator_words = s.generator_words;
  const Flavor fl = gens.front().rep().flavor();
  for (const auto& w : s.generator_words) t.generator_reps.push_back(evaluate_word(gens, w, dim, fl));
  const int r = t.rank();
  t.m.assign(r, std::vector<RootOfUnity>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) t.m[i][j] = commutator_scalar(t.generator_reps[i], t.generator_reps[j]);
  return t;
}

PairingTable build_pairing(const AbelianPresentation& f, std::size_t cap) {
  f.validate();
  return build_pairing(linear_part(f.generators), f.matrix_dim(), f.center(), cap);
}

std::vector<GroupElement> subgroup_generators(const PairingTable& t, const std::vector<GroupElement>& subgroup) {
  std::vector<GroupElement> sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  std::vector<GroupElement> gens;
  std::set<GroupElement> spanned{t.zero()};
  for (const auto& x : sorted) {
    if (spanned.contains(x)) continue;
    gens.push_back(x);
    const auto s = t.span(gens);
    spanned = std::set<GroupElement>(s.begin(), s.end());
    if (spanned.size() == subgroup.size()) break;
  }
  return gens;
}

std::vector<GroupElement> kernel_m(const PairingTable& t) {
  std::vector<GroupElement> radical;
  for (const auto& x : t.elements()) {
    bool central = true;
    for (int j = 0; j < t.rank() && central; ++j) central = t.pair(x, t.unit(j)).is_one();
    if (central) radical.push_back(x);
  }
  return subgroup_generators(t, radical);
}

std::vector<std::int64_t> symplectic_reduction(const PairingTable& t) {
  std::vector<std::int64_t> seq;
  // m only depends on cosets of the radical; keep one element per coset
  std::vector<GroupElement> cur;
  std::set<std::vector<RootOfUnity>> seen;
  for (const auto& x : t.elements()) {
    std::vector<RootOfUnity> sig;
    for (int j = 0; j < t.rank(); ++j) sig.push_back(t.pair(x, t.unit(j)));
    if (seen.insert(std::move(sig)).second) cur.push_back(x);
  }
  while (true) {
    std::int64_t best = 1;
    std::size_t bx = 0, by = 0;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        const std::int64_t o = t.pair(cur[a], cur[b]).order();
        if (o > best) {
          best = o;
          bx = a;
          by = b;
        }
      }
    if (best == 1) break;
    seq.push_back(best);
    const GroupElement x = cur[bx], y = cur[by];
    std::vector<GroupElement> next;
    for (const auto& z : cur)
      if (t.pair(z, x).is_one() && t.pair(z, y).is_one()) next.push_back(z);
    cur = std::move(next);
  }
  return seq;
}

// ---------------------------------------------------------------------------

BFResult compute_BF(const AbelianPresentation& f, std::size_t cap) {
  if (f.family != Family::PO && f.family != Family::PSp)
    throw ValidationError("compute_BF: family must be PO or PSp");
  f.validate();
  std::vector<ProjectiveElement> gens = f.generators;
  const Flavor fl = family_flavor(f.family);
  for (const auto& x : f.torus) gens.emplace_back(x.half_turn(fl), Center::Sign);
  BFResult out;
  if (gens.empty()) return out;
  const PairingTable t = build_pairing(gens, f.matrix_dim(), Center::Sign, cap);
  const auto ker = t.span(kernel_m(t));
  std::vector<GroupElement> bf;
  for (const auto& x : ker) {
    const Monomial a = t.rep(x);
    const Monomial minus = a.scaled(RootOfUnity::minus_one());
    if ((a * a).is_identity() && (minus * minus).is_identity()) bf.push_back(x);
  }
  std::sort(bf.begin(), bf.end());
  for (const auto& x : bf) out.elements.push_back(ProjectiveElement(t.rep(x), Center::Sign).canonical());
  for (const auto& g : subgroup_generators(t, bf))
    out.generators.push_back(ProjectiveElement(t.rep(g), Center::Sign).canonical());
  return out;
}

NuTable compute_nu(const AbelianPresentation& f, const ProjectiveElement& u, std::size_t cap) {
  if (f.family != Family::TwistedPU) throw ValidationError("compute_nu: family must be twisted");
  if (!u.conj()) throw ValidationError("compute_nu: u must be antiunitary");
  f.validate();
  const FiniteClosure all = close_group(f.generators, f.matrix_dim(), f.center(), cap);
  if (u.center() != f.center() || !all.contains(u.rep()))
    throw ValidationError("compute_nu: u is not an element of F");
  const PairingTable t = build_pairing(f, cap);
  NuTable out;
  for (const auto& x : kernel_m(t)) {
    const Monomial a = t.rep(x);
    const RootOfUnity lambda = commutator_scalar(u.rep(), a);
    out.lifts.push_back(a);
    out.values.push_back(lambda);
    out.normalized.push_back(a.scaled(lambda.sqrt()));
  }
  return out;
}

}  // namespace maxab
