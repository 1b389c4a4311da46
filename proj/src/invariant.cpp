#include <algorithm>
#include <functional>
#include <numeric>

#include "maxab/classify.hpp"
#include "maxab/errors.hpp"

namespace maxab {

namespace {

int family_index(Family f) { return static_cast<int>(f); }

Msms empty_msms(Family f, int k) {
  return Msms{F2SymplecticSpace::standard(k, f == Family::TwistedPU ? 1 : 0), {}};
}

ModelTag family_model(Family f) {
  switch (f) {
    case Family::PSp:
      return ModelTag::Minus;
    case Family::TwistedPU:
      return ModelTag::Twisted;
    default:
      return ModelTag::Plus;
  }
}

void chains(std::int64_t rest, std::int64_t bound, std::vector<std::int64_t>& cur,
            std::vector<std::vector<std::int64_t>>& out) {
  out.push_back(cur);
  for (std::int64_t d = 2; d <= bound; ++d)
    if (rest % d == 0 && bound % d == 0) {
      cur.push_back(d);
      chains(rest / d, d, cur, out);
      cur.pop_back();
    }
}

}  // namespace

int ClassInvariant::torus_size() const {
  std::int64_t prod = 1;
  for (auto d : seq) prod *= d;
  return static_cast<int>(n / prod);
}

std::vector<std::int64_t> ClassInvariant::encoding() const {
  std::vector<std::int64_t> e{family_index(family), n};
  if (family == Family::PU) {
    e.push_back(static_cast<std::int64_t>(seq.size()));
    e.insert(e.end(), seq.begin(), seq.end());
    return e;
  }
  e.insert(e.end(), {k, s0, s1, kerm_rank, msms.space.dim()});
  for (auto row : msms.space.gram()) e.push_back(row);
  e.push_back(static_cast<std::int64_t>(msms.mus.size()));
  for (const auto& mu : msms.mus) e.push_back(mu.bits);
  return e;
}

std::vector<int> expected_blocks(Family f, int k, int s0, int s1) {
  std::vector<int> blocks;
  if (f == Family::PSp) {
    if (k == 0) {
      blocks.assign(s1, 1);
    } else {
      blocks.assign(s0, 1 << (k - 1));
      blocks.insert(blocks.end(), s1, 1 << k);
    }
  } else {
    blocks.assign(s0, 1 << k);
    blocks.insert(blocks.end(), s1, 1 << (k + 1));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

void validate_invariant(const ClassInvariant& inv) {
  if (inv.n < 1) throw ValidationError("invariant: n must be positive");
  if (inv.family == Family::PU) {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < inv.seq.size(); ++i) {
      if (inv.seq[i] < 2) throw ValidationError("invariant: sequence entries must be at least 2");
      if (i > 0 && inv.seq[i - 1] % inv.seq[i] != 0)
        throw ValidationError("invariant: each entry must divide the previous one");
      prod *= inv.seq[i];
      if (prod > inv.n) break;
    }
    if (inv.n % prod != 0) throw ValidationError("invariant: the product of the sequence must divide n");
    return;
  }
  if (inv.family == Family::TwistedPU && inv.n < 2) throw ValidationError("invariant: twisted family needs n >= 2");
  if (inv.k < 0 || inv.s0 < 0 || inv.s1 < 0) throw ValidationError("invariant: k, s0, s1 must be nonnegative");
  if (inv.k > 8) throw BoundError("invariant: k out of range");
  std::int64_t total = 0;
  if (inv.family == Family::PSp) {
    if (inv.k == 0) {
      if (inv.s0 != 0 || inv.s1 != inv.n) throw ValidationError("invariant: k = 0 needs s0 = 0 and s1 = n");
      total = inv.n;
    } else {
      total = (std::int64_t(inv.s0) << (inv.k - 1)) + (std::int64_t(inv.s1) << inv.k);
    }
  } else {
    total = (std::int64_t(inv.s0) << inv.k) + (std::int64_t(inv.s1) << (inv.k + 1));
  }
  if (total != inv.n) throw ValidationError("invariant: block sizes do not add up to n");
  if (inv.bf_blocks != expected_blocks(inv.family, inv.k, inv.s0, inv.s1))
    throw ValidationError("invariant: bf_blocks do not match k, s0, s1");
  if (inv.kerm_rank < 0 || inv.kerm_rank > std::max(inv.s0 - 1, 0))
    throw ValidationError("invariant: kerm_rank out of range");
  inv.msms.validate();
  const Msms model = inv.family == Family::PSp && inv.k == 0 ? empty_msms(Family::PSp, 0)
                                                             : standard_model(family_model(inv.family), inv.k);
  if (!(inv.msms.space == model.space)) throw ValidationError("invariant: msms has the wrong space");
  if (static_cast<int>(inv.msms.mus.size()) != inv.s0) throw ValidationError("invariant: msms needs s0 refinements");
  for (const auto& mu : inv.msms.mus)
    if (!is_isomorphic(Msms{model.space, {mu}}, model).isomorphic)
      throw ValidationError("invariant: refinement is not of the family's model type");
}

std::vector<ClassInvariant> enumerate_invariants(Family f, int n) {
  if (n < 1) throw ValidationError("enumerate: n must be positive");
  std::vector<ClassInvariant> out;
  if (f == Family::PU) {
    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::int64_t> cur;
    chains(n, n, cur, all);
    for (auto& s : all) {
      ClassInvariant inv;
      inv.n = n;
      inv.seq = std::move(s);
      out.push_back(std::move(inv));
    }
  } else {
    if (f == Family::TwistedPU && n < 2) throw ValidationError("enumerate: twisted family needs n >= 2");
    auto add = [&](int k, int s0, int s1) {
      ClassInvariant base;
      base.family = f;
      base.n = n;
      base.k = k;
      base.s0 = s0;
      base.s1 = s1;
      base.bf_blocks = expected_blocks(f, k, s0, s1);
      base.kerm_rank = std::max(s0 - 1, 0);
      if (s0 == 0) {
        base.msms = empty_msms(f, k);
        out.push_back(base);
        return;
      }
      for (const auto& c : enumerate_classes(k, s0, family_model(f))) {
        ClassInvariant inv = base;
        inv.msms = canonical_form(c.representative).form;
        out.push_back(std::move(inv));
      }
    };
    if (f == Family::PSp) {
      add(0, 0, n);
      for (int k = 1; (1 << (k - 1)) <= n; ++k)
        for (int s1 = 0; (s1 << k) <= n; ++s1) {
          const int rest = n - (s1 << k);
          if (rest % (1 << (k - 1)) == 0) add(k, rest >> (k - 1), s1);
        }
    } else {
      for (int k = 0; (1 << k) <= n; ++k)
        for (int s1 = 0; (s1 << (k + 1)) <= n; ++s1) {
          const int rest = n - (s1 << (k + 1));
          if (rest % (1 << k) == 0) add(k, rest >> k, s1);
        }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ClassInvariant& a, const ClassInvariant& b) { return a.encoding() < b.encoding(); });
  return out;
}

bool is_elementary_abelian(const ClassInvariant& inv) {
  if (inv.family == Family::PU)
    return inv.torus_size() == 1 && std::all_of(inv.seq.begin(), inv.seq.end(), [](auto d) { return d == 2; });
  if (inv.s1 != 0) return false;
  for (const auto& mu : inv.msms.mus)
    if (!(mu == inv.msms.mus.front())) return false;
  return true;
}

bool is_maximal(const ClassInvariant& inv, int rank_kerm_mod_f0) {
  if (inv.family == Family::PU) return true;
  const int bound = std::max(inv.s0 - 1, 0);
  if (rank_kerm_mod_f0 != bound) return false;
  if (inv.s0 == 2 && inv.s1 == 0) return !is_elementary_abelian(inv);
  return true;
}

bool is_maximal(const ClassInvariant& inv) { return is_maximal(inv, inv.kerm_rank); }

bool quotient_predicate(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw ValidationError("quotient_predicate: arguments must be positive");
  if (n % m != 0) throw ValidationError("quotient_predicate: m must divide n");
  std::int64_t rest = n;
  for (std::int64_t g = std::gcd(rest, m); g > 1; g = std::gcd(rest, m)) rest /= g;
  return rest == 1;
}

}  // namespace maxab
