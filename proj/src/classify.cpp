#include <algorithm>
#include <numeric>
#include <set>

#include "maxab/classify.hpp"
#include "maxab/cyclotomic.hpp"
#include "maxab/errors.hpp"
#include "maxab/pairing.hpp"

namespace maxab {

namespace {

// Trace data of a monomial: counts[a] = number of diagonal entries equal to zeta_N^a.
using Counts = std::vector<std::int64_t>;

Counts diagonal_counts(const Monomial& m, int order) {
  Counts c(order, 0);
  for (const auto& p : m.diagonal_phases()) {
    if (order % p.den() != 0) throw Error("diagonal phase order does not divide the working order");
    ++c[p.num() * (order / p.den())];
  }
  return c;
}

int phase_order(const Monomial& m) {
  std::int64_t o = 1;
  for (const auto& p : m.phases()) o = std::lcm(o, p.den());
  return static_cast<int>(o);
}

// In place: f[eps] <- sum_S (-1)^{|S & eps|} f[S].
void walsh_hadamard(std::vector<Counts>& f) {
  for (std::size_t h = 1; h < f.size(); h <<= 1)
    for (std::size_t i = 0; i < f.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j)
        for (std::size_t a = 0; a < f[j].size(); ++a) {
          const std::int64_t x = f[j][a], y = f[j + h][a];
          f[j][a] = x + y;
          f[j + h][a] = x - y;
        }
}

long counts_to_integer(const Counts& c) {
  const int order = static_cast<int>(c.size());
  const CyclotomicRing ring(order);
  CyclotomicRing::Elem acc = ring.zero();
  for (int a = 0; a < order; ++a)
    if (c[a] != 0) acc = ring.add(acc, ring.mul_root(ring.from_int(c[a]), RootOfUnity(a, order)));
  const auto v = ring.as_integer(acc);
  if (!v || !v->fits_slong_p()) throw Error("trace sum is not an integer");
  return v->get_si();
}

// Table of traces tr(M * A_S) over all products A_S of the lifts, S in Gray-code order.
std::vector<Counts> subset_traces(const Monomial& m, const std::vector<Monomial>& lifts) {
  const std::size_t r = lifts.size();
  int order = phase_order(m);
  for (const auto& a : lifts) order = std::lcm(order, phase_order(a));
  std::vector<Counts> out(std::size_t(1) << r);
  Monomial cur = m;
  std::size_t mask = 0;
  out[0] = diagonal_counts(cur, order);
  for (std::size_t step = 1; step < out.size(); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= std::size_t(1) << bit;
    cur = cur * lifts[bit];
    out[mask] = diagonal_counts(cur, order);
  }
  return out;
}

// Rank of the group generated by diagonal sign matrices modulo +-I.
int sign_rank_mod_center(const std::vector<Monomial>& signs, int dim) {
  std::vector<std::vector<char>> rows;
  rows.emplace_back(dim, 1);
  for (const auto& s : signs) {
    std::vector<char> row(dim);
    for (int i = 0; i < dim; ++i) row[i] = s.phases()[i].is_one() ? 0 : 1;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && rows[i][col])
        for (int c = 0; c < dim; ++c) rows[i][c] ^= rows[rank][c];
    ++rank;
  }
  return rank - 1;
}

ClassInvariant classify_pu(const AbelianPresentation& f, std::size_t cap) {
  ClassInvariant inv;
  inv.n = f.n;
  inv.seq = symplectic_reduction(build_pairing(f, cap));
  return inv;
}

// Shared analysis for PO, PSp and the lifted twisted group. `linear` generates
// the linear part together with the torus half-turns; u is the antiunitary
// element for the twisted family.
ClassInvariant classify_blocks(Family fam, int n, int dim, Center center, const std::vector<ProjectiveElement>& linear,
                               const std::vector<Monomial>& half_turns, const Monomial* u, std::size_t cap) {
  const PairingTable t = build_pairing(linear, dim, center, cap);
  const auto seq = symplectic_reduction(t);
  for (auto d : seq)
    if (d != 2) throw ValidationError("classify: commutator pairing takes values other than +-1");
  const int k = static_cast<int>(seq.size());

  auto in_kernel_nu = [&](const GroupElement& x) { return !u || commutator_scalar(*u, t.rep(x)).is_one(); };
  std::vector<GroupElement> knu, bf;
  for (const auto& x : t.span(kernel_m(t)))
    if (in_kernel_nu(x)) knu.push_back(x);
  for (const auto& x : knu) {
    const Monomial a = t.rep(x);
    if ((a * a).is_identity()) bf.push_back(x);
  }
  const auto bgens = subgroup_generators(t, bf);
  std::vector<Monomial> lifts;
  for (const auto& g : bgens) lifts.push_back(t.rep(g));
  const std::size_t r = lifts.size();
  if (r > 24) throw BoundError("classify: B_F too large");

  // joint eigenspace dimensions of the lifts
  auto traces = subset_traces(Monomial::identity(dim, t.flavor), lifts);
  walsh_hadamard(traces);
  const int d0 = 1 << k, d1 = 2 << k;
  std::vector<std::size_t> s0_chars;
  int s1 = 0;
  std::vector<int> blocks;
  for (std::size_t eps = 0; eps < traces.size(); ++eps) {
    const long total = counts_to_integer(traces[eps]);
    if (total % (long(1) << r) != 0) throw Error("classify: eigenspace dimension is not an integer");
    const long d = total >> r;
    if (d == 0) continue;
    if (d == d0 && !(fam == Family::PSp && k == 0)) {
      s0_chars.push_back(eps);
    } else if (d == d1) {
      ++s1;
    } else {
      throw ValidationError("classify: B_F block of dimension " + std::to_string(d) +
                            " does not fit the block structure of a subgroup satisfying (*)");
    }
    blocks.push_back(static_cast<int>(fam == Family::PSp ? d / 2 : d));
  }
  std::sort(blocks.begin(), blocks.end());

  // basis of V = (linear part) / ker m, or / ker nu for the twisted family
  std::vector<GroupElement> basis;
  {
    const auto kgens = subgroup_generators(t, knu);
    std::vector<GroupElement> gens = kgens;
    std::set<GroupElement> spanned;
    {
      const auto s = t.span(gens);
      spanned.insert(s.begin(), s.end());
    }
    for (const auto& x : t.elements()) {
      if (spanned.size() == t.order()) break;
      if (spanned.contains(x)) continue;
      basis.push_back(x);
      gens.push_back(x);
      const auto s = t.span(gens);
      spanned = std::set<GroupElement>(s.begin(), s.end());
    }
  }
  const int vdim = static_cast<int>(basis.size());
  if (vdim != 2 * k + (u ? 1 : 0)) throw ValidationError("classify: unexpected rank of the quotient by the kernel");
  if (vdim > kMaxF2Dim) throw BoundError("classify: quotient too large");

  std::vector<F2Vec> gram(vdim, 0);
  for (int a = 0; a < vdim; ++a)
    for (int b = 0; b < vdim; ++b)
      if (!t.pair(basis[a], basis[b]).is_one()) gram[a] |= F2Vec(1) << b;

  std::vector<QuadraticRefinement> mus(s0_chars.size());
  for (int a = 0; a < vdim; ++a) {
    const Monomial x = t.rep(basis[a]);
    auto tr = subset_traces(x * x, lifts);
    walsh_hadamard(tr);
    for (std::size_t i = 0; i < s0_chars.size(); ++i) {
      const long v = counts_to_integer(tr[s0_chars[i]]) >> r;
      if (v == -d0) {
        mus[i].bits |= F2Vec(1) << a;
      } else if (v != d0) {
        throw ValidationError("classify: a square does not act by a sign on a block");
      }
    }
  }

  ClassInvariant inv;
  inv.family = fam;
  inv.n = n;
  inv.k = k;
  inv.s0 = static_cast<int>(s0_chars.size());
  inv.s1 = s1;
  inv.bf_blocks = blocks;
  inv.kerm_rank = static_cast<int>(r) - sign_rank_mod_center(half_turns, dim);
  inv.msms = canonical_form(Msms{F2SymplecticSpace(gram), mus}).form;
  return inv;
}

}  // namespace

AbelianPresentation lift_twisted(const AbelianPresentation& f) {
  if (f.family != Family::TwistedPU) throw ValidationError("lift: family must be twisted");
  f.validate();
  if (f.is_lifted()) throw ValidationError("lift: presentation is already lifted");
  const auto first = std::find_if(f.generators.begin(), f.generators.end(),
                                  [](const ProjectiveElement& g) { return g.conj(); });
  if (first == f.generators.end()) throw ValidationError("lift: F has no antiunitary element");
  const Monomial u = first->rep();
  AbelianPresentation out;
  out.family = Family::TwistedPU;
  out.n = f.n;
  out.torus = f.torus;
  out.generators.emplace_back(Monomial::scalar(f.n, RootOfUnity::i()), Center::SignWithI);
  out.generators.emplace_back(u, Center::SignWithI);
  for (auto g = f.generators.begin(); g != f.generators.end(); ++g) {
    if (g == first) continue;
    const Monomial a = g->conj() ? g->rep() * u.inverse() : g->rep();
    const RootOfUnity lambda = commutator_scalar(u, a);
    out.generators.emplace_back(a.scaled(lambda.sqrt()), Center::SignWithI);
  }
  out.validate();
  return out;
}

ClassInvariant classify(const AbelianPresentation& f, std::size_t cap) {
  f.validate();
  if (f.family == Family::PU) return classify_pu(f, cap);

  const Flavor fl = family_flavor(f.family);
  std::vector<Monomial> half_turns;
  for (const auto& x : f.torus) half_turns.push_back(x.half_turn(fl));

  if (f.family == Family::TwistedPU) {
    const AbelianPresentation lifted = f.is_lifted() ? f : lift_twisted(f);
    const auto first = std::find_if(lifted.generators.begin(), lifted.generators.end(),
                                    [](const ProjectiveElement& g) { return g.conj(); });
    if (first == lifted.generators.end()) throw ValidationError("classify: F has no antiunitary element");
    const Monomial u = first->rep();
    std::vector<ProjectiveElement> linear = linear_part(lifted.generators);
    for (const auto& h : half_turns) linear.emplace_back(h, Center::SignWithI);
    return classify_blocks(f.family, f.n, f.n, Center::SignWithI, linear, half_turns, &u, cap);
  }

  std::vector<ProjectiveElement> linear = f.generators;
  for (const auto& h : half_turns) linear.emplace_back(h, Center::Sign);
  return classify_blocks(f.family, f.n, f.matrix_dim(), Center::Sign, linear, half_turns, nullptr, cap);
}

}  // namespace maxab
