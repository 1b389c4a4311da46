#include <numeric>

#include "maxab/classify.hpp"
#include "maxab/errors.hpp"

namespace maxab {

namespace {

// Images of e_0, ..., e_{2k-1} under the real representation of plus(k) on
// R^(2^k): pair p acts by I_{1,1} and J'_1 on the p-th tensor factor.
std::vector<Monomial> real_plus_images(int k) {
  std::vector<Monomial> out;
  for (int p = 0; p < k; ++p) {
    const Monomial left = Monomial::identity(1 << p, Flavor::Real);
    const Monomial right = Monomial::identity(1 << (k - p - 1), Flavor::Real);
    out.push_back(kron(kron(left, named_i_pq(1, 1)), right));
    out.push_back(kron(kron(left, named_j_prime(1)), right));
  }
  return out;
}

template <class M>
M image_of(const std::vector<M>& basis, const M& identity, F2Vec v) {
  M acc = identity;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((v >> j) & 1) acc = acc * basis[j];
  return acc;
}

Monomial block_diagonal(const std::vector<Monomial>& blocks) {
  Monomial acc = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) acc = direct_sum(acc, blocks[b]);
  return acc;
}

// -I on the given block, I elsewhere.
Monomial block_sign(const std::vector<int>& sizes, std::size_t which, Flavor fl) {
  std::vector<RootOfUnity> phases;
  for (std::size_t b = 0; b < sizes.size(); ++b)
    phases.insert(phases.end(), sizes[b], b == which ? RootOfUnity::minus_one() : RootOfUnity::one());
  return Monomial::diagonal(std::move(phases), fl);
}

// Isometry h of (V, m) with mu_model o h = mu.
F2Map transport(const F2SymplecticSpace& v, const QuadraticRefinement& mu, const QuadraticRefinement& model) {
  const auto r = is_isomorphic(Msms{v, {mu}}, Msms{v, {model}});
  if (!r.isomorphic) throw ValidationError("canonical_rep: refinement is not of the family's model type");
  return *r.witness;
}

// Sign generators separating the blocks: -I on each s0 block, dropping one
// when the torus half-turns and the remaining signs already give it.
void add_block_signs(AbelianPresentation& f, const std::vector<int>& sizes, int s0, int s1, Flavor fl,
                     Center c) {
  const int count = (s1 == 0) ? s0 - 1 : s0;
  for (int i = 0; i < count; ++i) f.generators.emplace_back(block_sign(sizes, i, fl), c);
}

AbelianPresentation canonical_pu(const ClassInvariant& inv) {
  AbelianPresentation f;
  f.family = Family::PU;
  f.n = inv.n;
  const int m = inv.torus_size();
  const int prod = inv.n / m;
  int before = 1;
  for (auto d64 : inv.seq) {
    const int d = static_cast<int>(d64);
    const int after = prod / (before * d) * m;
    const Monomial left = Monomial::identity(before), right = Monomial::identity(after);
    f.generators.emplace_back(kron(kron(left, clock(d)), right), Center::Circle);
    f.generators.emplace_back(kron(kron(left, shift(d)), right), Center::Circle);
    before *= d;
  }
  for (int c = 0; c + 1 < m; ++c) {
    std::vector<int> pos;
    for (int a = 0; a < prod; ++a) pos.push_back(a * m + c);
    f.torus.push_back(TorusDirection::diagonal(inv.n, pos));
  }
  return f;
}

AbelianPresentation canonical_po(const ClassInvariant& inv) {
  const int k = inv.k, s0 = inv.s0, s1 = inv.s1;
  AbelianPresentation f;
  f.family = Family::PO;
  f.n = inv.n;
  const auto rho = real_plus_images(k);
  const Monomial id = Monomial::identity(1 << k, Flavor::Real);
  const F2SymplecticSpace& v = inv.msms.space;
  std::vector<F2Map> h;
  for (const auto& mu : inv.msms.mus) h.push_back(transport(v, mu, standard_refinement(ModelTag::Plus, k)));
  std::vector<int> sizes(s0, 1 << k);
  sizes.insert(sizes.end(), s1, 1 << (k + 1));
  for (int j = 0; j < 2 * k; ++j) {
    std::vector<Monomial> blocks;
    for (int i = 0; i < s0; ++i) blocks.push_back(image_of(rho, id, h[i].apply(F2Vec(1) << j)));
    for (int i = 0; i < s1; ++i) blocks.push_back(kron(rho[j], Monomial::identity(2, Flavor::Real)));
    f.generators.emplace_back(block_diagonal(blocks), Center::Sign);
  }
  add_block_signs(f, sizes, s0, s1, Flavor::Real, Center::Sign);
  int offset = s0 << k;
  for (int i = 0; i < s1; ++i, offset += 2 << k) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < (1 << k); ++a) pairs.emplace_back(offset + 2 * a, offset + 2 * a + 1);
    f.torus.push_back(TorusDirection::rotation(inv.n, pairs));
  }
  return f;
}

AbelianPresentation canonical_psp(const ClassInvariant& inv) {
  const int k = inv.k, s0 = inv.s0, s1 = inv.s1;
  AbelianPresentation f;
  f.family = Family::PSp;
  f.n = inv.n;
  if (k == 0) {
    for (int c = 0; c < inv.n; ++c) f.torus.push_back(TorusDirection::quaternion_diagonal(inv.n, {c}));
    return f;
  }
  // s0 blocks: real plus(k-1) on the first k-1 pairs, quaternion scalars i, j on the last
  const int d0 = 1 << (k - 1);
  std::vector<QuatMonomial> minus_basis;
  for (const auto& r : real_plus_images(k - 1)) minus_basis.push_back(QuatMonomial::from_real(r));
  minus_basis.push_back(QuatMonomial::scalar(d0, QuatUnit{1, 1}));
  minus_basis.push_back(QuatMonomial::scalar(d0, QuatUnit{1, 2}));
  // s1 blocks: real plus(k) with the circle generated by i
  std::vector<QuatMonomial> plus_basis;
  for (const auto& r : real_plus_images(k)) plus_basis.push_back(QuatMonomial::from_real(r));

  const F2SymplecticSpace& v = inv.msms.space;
  std::vector<F2Map> h;
  for (const auto& mu : inv.msms.mus) h.push_back(transport(v, mu, standard_refinement(ModelTag::Minus, k)));
  std::vector<int> sizes(s0, 2 * d0);
  sizes.insert(sizes.end(), s1, 4 * d0);
  for (int j = 0; j < 2 * k; ++j) {
    std::vector<Monomial> blocks;
    for (int i = 0; i < s0; ++i)
      blocks.push_back(
          quaternion_embed(image_of(minus_basis, QuatMonomial::identity(d0), h[i].apply(F2Vec(1) << j))));
    for (int i = 0; i < s1; ++i) blocks.push_back(quaternion_embed(plus_basis[j]));
    f.generators.emplace_back(block_diagonal(blocks), Center::Sign);
  }
  add_block_signs(f, sizes, s0, s1, Flavor::Quaternion, Center::Sign);
  int coord = s0 * d0;
  for (int i = 0; i < s1; ++i, coord += 2 * d0) {
    std::vector<int> coords(2 * d0);
    std::iota(coords.begin(), coords.end(), coord);
    f.torus.push_back(TorusDirection::quaternion_diagonal(inv.n, coords));
  }
  return f;
}

AbelianPresentation canonical_twisted(const ClassInvariant& inv) {
  const int k = inv.k, s0 = inv.s0, s1 = inv.s1;
  AbelianPresentation f;
  f.family = Family::TwistedPU;
  f.n = inv.n;
  std::vector<Monomial> rho;
  for (const auto& r : real_plus_images(k)) rho.push_back(r.with_flavor(Flavor::Complex));
  const Monomial id = Monomial::identity(1 << k);
  std::vector<int> sizes(s0, 1 << k);
  sizes.insert(sizes.end(), s1, 2 << k);
  // On s0 block i the generator for e_j is i^{mu_i(e_j)} rho(e_j); the block
  // of u is rho(w_i) tau with m(w_i, e_j) = mu_i(e_j), so u commutes with it.
  for (int j = 0; j < 2 * k; ++j) {
    std::vector<Monomial> blocks;
    for (int i = 0; i < s0; ++i) {
      const bool minus = (inv.msms.mus[i].bits >> j) & 1;
      blocks.push_back(minus ? rho[j].scaled(RootOfUnity::i()) : rho[j]);
    }
    for (int i = 0; i < s1; ++i) blocks.push_back(kron(rho[j], Monomial::identity(2)));
    f.generators.emplace_back(block_diagonal(blocks), Center::Circle);
  }
  add_block_signs(f, sizes, s0, s1, Flavor::Complex, Center::Circle);
  std::vector<Monomial> ublocks;
  for (int i = 0; i < s0; ++i) {
    F2Vec w = 0;
    for (int j = 0; j < 2 * k; ++j)
      if ((inv.msms.mus[i].bits >> j) & 1) w |= F2Vec(1) << (j ^ 1);
    ublocks.push_back(image_of(rho, id, w));
  }
  for (int i = 0; i < s1; ++i) ublocks.push_back(Monomial::identity(2 << k));
  f.generators.emplace_back(block_diagonal(ublocks).with_conj(true), Center::Circle);
  int offset = s0 << k;
  for (int i = 0; i < s1; ++i, offset += 2 << k) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < (1 << k); ++a) pairs.emplace_back(offset + 2 * a, offset + 2 * a + 1);
    f.torus.push_back(TorusDirection::rotation(inv.n, pairs));
  }
  return f;
}

}  // namespace

AbelianPresentation canonical_rep(const ClassInvariant& inv) {
  validate_invariant(inv);
  if (inv.family != Family::PU && inv.kerm_rank != std::max(inv.s0 - 1, 0))
    throw ValidationError("canonical_rep: only the full sign group on the blocks is supported");
  AbelianPresentation f;
  switch (inv.family) {
    case Family::PU:
      f = canonical_pu(inv);
      break;
    case Family::PO:
      f = canonical_po(inv);
      break;
    case Family::PSp:
      f = canonical_psp(inv);
      break;
    case Family::TwistedPU:
      f = canonical_twisted(inv);
      break;
  }
  f.validate();
  return f;
}

}  // namespace maxab
