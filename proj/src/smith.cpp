#include "maxab/smith.hpp"

#include <gmpxx.h>

#include <numeric>
#include <utility>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

std::int64_t checked_combine(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  // a*x + b*y without silent overflow
  std::int64_t p = 0, q = 0, r = 0;
  if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) ||
      __builtin_add_overflow(p, q, &r))
    throw Error("relation lattice: integer overflow");
  return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("smith form: integer overflow");
  return z.get_si();
}

}  // namespace

std::vector<std::int64_t> SmithForm::coords(const std::vector<std::int64_t>& word) const {
  std::vector<std::int64_t> out(invariant_factors.size(), 0);
  for (std::size_t k = 0; k < word.size() && k < to_coords.size(); ++k) {
    if (word[k] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::int64_t d = invariant_factors[i];
      const std::int64_t w = floor_mod(word[k], d);
      out[i] = floor_mod(out[i] + static_cast<std::int64_t>((static_cast<__int128>(w) * to_coords[k][i]) % d), d);
    }
  }
  return out;
}

RelationLattice::RelationLattice(std::size_t g) : g_(g), pivot_rows_(g) {}

bool RelationLattice::full_rank() const {
  for (const auto& r : pivot_rows_)
    if (r.empty()) return false;
  return true;
}

void RelationLattice::update_modulus() {
  if (!full_rank()) return;
  std::int64_t det = 1;
  for (std::size_t c = 0; c < g_; ++c)
    if (__builtin_mul_overflow(det, pivot_rows_[c][c], &det))
      throw Error("relation lattice: determinant overflow");
  modulus_ = det;
}

bool RelationLattice::add(std::vector<std::int64_t> v) {
  if (v.size() != g_) throw Error("relation lattice: wrong vector length");
  bool grew = false;
  for (std::size_t c = 0; c < g_; ++c) {
    if (modulus_ > 0)
      for (std::size_t t = c; t < g_; ++t) v[t] = floor_mod(v[t], modulus_);
    if (v[c] == 0) continue;
    auto& p = pivot_rows_[c];
    if (p.empty()) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      p = std::move(v);
      grew = true;
      break;
    }
    const std::int64_t a = p[c], b = v[c];
    if (b % a == 0) {
      const std::int64_t q = b / a;
      for (std::size_t t = c; t < g_; ++t) v[t] = checked_combine(1, v[t], -q, p[t]);
      continue;
    }
    // extended gcd: s a + t b = gcd
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::tie(old_r, r) = std::pair(r, old_r - q * r);
      std::tie(old_s, s) = std::pair(s, old_s - q * s);
      std::tie(old_t, t) = std::pair(t, old_t - q * t);
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    std::vector<std::int64_t> np(g_, 0), nv(g_, 0);
    for (std::size_t k = c; k < g_; ++k) {
      np[k] = checked_combine(old_s, p[k], old_t, v[k]);
      nv[k] = checked_combine(b / old_r, p[k], -(a / old_r), v[k]);
    }
    p = std::move(np);
    v = std::move(nv);
    grew = true;
  }
  if (grew) update_modulus();
  return grew;
}

SmithForm RelationLattice::smith() const {
  if (!full_rank()) throw Error("relation lattice: quotient is infinite");
  const std::size_t g = g_;
  std::vector<std::vector<mpz_class>> a(g, std::vector<mpz_class>(g));
  std::vector<std::vector<mpz_class>> v(g, std::vector<mpz_class>(g)), vinv = v;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) a[i][j] = static_cast<long>(pivot_rows_[i][j]);
    v[i][i] = 1;
    vinv[i][i] = 1;
  }
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < g; ++r) {
      std::swap(a[r][i], a[r][j]);
      std::swap(v[r][i], v[r][j]);
    }
    std::swap(vinv[i], vinv[j]);
  };
  auto add_col = [&](std::size_t src, std::size_t dst, const mpz_class& q) {
    // col_dst += q col_src
    for (std::size_t r = 0; r < g; ++r) {
      a[r][dst] += q * a[r][src];
      v[r][dst] += q * v[r][src];
    }
    for (std::size_t k = 0; k < g; ++k) vinv[src][k] -= q * vinv[dst][k];
  };
  for (std::size_t t = 0; t < g; ++t) {
    while (true) {
      std::size_t pi = g, pj = g;
      for (std::size_t i = t; i < g; ++i)
        for (std::size_t j = t; j < g; ++j)
          if (a[i][j] != 0 && (pi == g || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == g) break;
      std::swap(a[t], a[pi]);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < g; ++i) {
        const mpz_class q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t k = t; k < g; ++k) a[i][k] -= q * a[t][k];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < g; ++j) {
        const mpz_class q = a[t][j] / a[t][t];
        if (q != 0) add_col(t, j, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < g && divisible; ++i)
        for (std::size_t j = t + 1; j < g; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < g; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t r = 0; r < g; ++r) {
        a[r][t] = -a[r][t];
        v[r][t] = -v[r][t];
      }
      for (auto& x : vinv[t]) x = -x;
    }
  }

  SmithForm out;
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < g; ++t)
    if (a[t][t] != 1) {
      kept.push_back(t);
      out.invariant_factors.push_back(to_i64(a[t][t]));
    }
  out.to_coords.assign(g, std::vector<std::int64_t>(kept.size(), 0));
  std::vector<std::int64_t> order(g, 1);
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      mpz_class r = v[k][kept[i]] % a[kept[i]][kept[i]];
      if (r < 0) r += a[kept[i]][kept[i]];
      out.to_coords[k][i] = to_i64(r);
      const std::int64_t d = out.invariant_factors[i];
      order[k] = std::lcm(order[k], d / std::gcd(out.to_coords[k][i], d));
    }
  }
  for (std::size_t i : kept) {
    std::vector<std::int64_t> w(g, 0);
    for (std::size_t k = 0; k < g; ++k) {
      mpz_class r = vinv[i][k] % order[k];
      if (r < 0) r += order[k];
      w[k] = to_i64(r);
    }
    out.generator_words.push_back(std::move(w));
  }
  return out;
}

}  // namespace maxab
