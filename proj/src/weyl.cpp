#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "maxab/classify.hpp"
#include "maxab/errors.hpp"

namespace maxab {

namespace {

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class power(long base, long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

int moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  if (n > 1) sign = -sign;
  return sign;
}

// Number of elements of order exactly e in the sum of (Z/n_j)^2.
mpz_class elements_of_order(std::int64_t e, const std::vector<std::int64_t>& ns) {
  mpz_class total = 0;
  for (std::int64_t d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    const int mu = moebius(e / d);
    if (mu == 0) continue;
    mpz_class count = 1;
    for (auto n : ns) count *= power(std::gcd(d, n), 2);
    total += mu * count;
  }
  return total;
}

}  // namespace

mpz_class symplectic_group_order(const std::vector<std::int64_t>& seq) {
  std::vector<std::int64_t> ns = seq;
  std::sort(ns.rbegin(), ns.rend());
  mpz_class order = 1;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::vector<std::int64_t> rest(ns.begin() + static_cast<long>(i), ns.end());
    mpz_class size = 1;
    for (auto n : rest) size *= n * n;
    // pairs (x, y) with m(x, y) a fixed primitive n_i-th root
    order *= elements_of_order(ns[i], rest) * size / ns[i];
  }
  return order;
}

mpz_class symplectic_group_order_brute_force(const std::vector<std::int64_t>& seq) {
  std::vector<std::int64_t> ns = seq;
  std::sort(ns.rbegin(), ns.rend());
  const int s = static_cast<int>(ns.size());
  std::int64_t size = 1;
  for (auto n : ns) {
    size *= n * n;
    if (size > kSymplecticBruteForceBound) throw BoundError("symplectic brute force: group too large");
  }
  if (s == 0) return 1;
  const std::int64_t big = ns.front();
  // coordinates (x_1, y_1, ..., x_s, y_s) with x_i, y_i mod n_i
  std::vector<std::int64_t> mods;
  for (auto n : ns) mods.insert(mods.end(), {n, n});
  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::int64_t> cur(2 * s, 0);
  while (true) {
    all.push_back(cur);
    int i = 2 * s - 1;
    while (i >= 0 && cur[i] + 1 == mods[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  // m(u, v) as an exponent of a primitive big-th root of unity
  auto pair = [&](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    std::int64_t acc = 0;
    for (int i = 0; i < s; ++i) acc += (u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]) * (big / ns[i]);
    return ((acc % big) + big) % big;
  };
  auto killed_by = [&](const std::vector<std::int64_t>& u, std::int64_t n) {
    for (int i = 0; i < 2 * s; ++i)
      if ((u[i] * n) % mods[i] != 0) return false;
    return true;
  };
  std::vector<std::vector<std::int64_t>> basis;
  for (int a = 0; a < 2 * s; ++a) {
    std::vector<std::int64_t> e(2 * s, 0);
    e[a] = 1;
    basis.push_back(e);
  }
  std::vector<std::size_t> image(2 * s);
  mpz_class count = 0;
  std::function<void(int)> extend = [&](int a) {
    if (a == 2 * s) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < all.size(); ++c) {
      if (!killed_by(all[c], mods[a])) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) ok = pair(all[image[b]], all[c]) == pair(basis[b], basis[a]);
      if (!ok) continue;
      image[a] = c;
      extend(a + 1);
    }
  };
  extend(0);
  return count;
}

WeylDescription weyl_description(const ClassInvariant& inv) {
  validate_invariant(inv);
  if (!is_maximal(inv)) throw ValidationError("weyl: the invariant does not describe a maximal abelian subgroup");
  WeylDescription w;
  w.family = inv.family;
  if (inv.family == Family::PU) {
    const long m = inv.torus_size();
    mpz_class v = 1;
    for (auto d : inv.seq) v *= d * d;
    mpz_class hom;
    mpz_pow_ui(hom.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m - 1));
    w.factors = {{"Hom(V, U(1)^m/Z_m)", hom}, {"S_m", factorial(m)}, {"Sp(V)", symplectic_group_order(inv.seq)}};
  } else {
    const bool twisted = inv.family == Family::TwistedPU;
    const int rank_bf = inv.kerm_rank + inv.s1 - (inv.s0 == 0 ? 1 : 0);
    const int quotient_rank = 2 * inv.k + (twisted ? 1 : 0);
    mpz_class s_mu = 1;
    std::map<F2Vec, long> mult;
    for (const auto& mu : inv.msms.mus) ++mult[mu.bits];
    for (const auto& [bits, a] : mult) s_mu *= factorial(a);
    w.factors = {
        {twisted ? "Hom(F'/ker m', B_F')" : "Hom(F/ker m, B_F)", power(2, long(quotient_rank) * rank_bf)},
        {"S_mu", s_mu},
        {twisted ? "Aut(H_F'/ker nu', m', mu)" : "Aut(F/ker m, m, mu)", mpz_class(std::to_string(aut_order(inv.msms)))},
        {"{+-1}^s1 x| S_s1", power(2, inv.s1) * factorial(inv.s1)},
    };
  }
  w.total_order = 1;
  for (const auto& f : w.factors) w.total_order *= f.order;
  return w;
}

}  // namespace maxab
