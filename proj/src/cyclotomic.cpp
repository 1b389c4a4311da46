#include "maxab/cyclotomic.hpp"

#include <numeric>

#include "maxab/errors.hpp"

namespace maxab {

namespace {

// exact division of polynomials with integer coefficients by a monic divisor
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class c = num[i];
    q[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n <= 0) throw Error("cyclotomic polynomial: order must be positive");
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

CyclotomicRing::CyclotomicRing(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  const int d = degree();
  powers_.reserve(n);
  Elem cur = zero();
  if (d == 0) {
    powers_.assign(n, cur);
    return;
  }
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    powers_.push_back(cur);
    // multiply by zeta: shift, then fold the top coefficient with the monic relation
    const mpz_class top = cur[d - 1];
    for (int k = d - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (int k = 0; k < d; ++k) cur[k] -= top * phi_[k];
  }
}

CyclotomicRing::Elem CyclotomicRing::from_int(long v) const {
  Elem e = zero();
  if (!e.empty()) e[0] = v;
  return e;
}

CyclotomicRing::Elem CyclotomicRing::root(RootOfUnity r) const {
  if (n_ % r.den() != 0) throw Error("cyclotomic ring: root order does not divide the ring order");
  return powers_[r.num() * (n_ / r.den())];
}

CyclotomicRing::Elem CyclotomicRing::sum_of_roots(const std::vector<RootOfUnity>& roots) const {
  Elem acc = zero();
  for (const auto& r : roots) {
    const Elem& p = root(r);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += p[k];
  }
  return acc;
}

CyclotomicRing::Elem CyclotomicRing::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

CyclotomicRing::Elem CyclotomicRing::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

CyclotomicRing::Elem CyclotomicRing::neg(const Elem& a) const {
  Elem out = a;
  for (auto& x : out) x = -x;
  return out;
}

CyclotomicRing::Elem CyclotomicRing::mul(const Elem& a, const Elem& b) const {
  const int d = degree();
  Elem out = zero();
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const mpz_class c = a[i] * b[j];
      const Elem& p = powers_[(i + j) % n_];
      if (i + j < d) {
        out[i + j] += c;
      } else {
        for (int k = 0; k < d; ++k)
          if (p[k] != 0) out[k] += c * p[k];
      }
    }
  }
  return out;
}

CyclotomicRing::Elem CyclotomicRing::mul_root(const Elem& a, RootOfUnity r) const {
  return mul(a, root(r));
}

bool CyclotomicRing::is_zero(const Elem& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::optional<mpz_class> CyclotomicRing::as_integer(const Elem& a) const {
  if (a.empty()) return mpz_class(0);
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] != 0) return std::nullopt;
  return a[0];
}

mpz_class CyclotomicRing::content(const Elem& a) {
  mpz_class g = 0;
  for (const auto& x : a)
    if (x != 0) g = gcd(g, x);
  return g;
}

CyclotomicRing::Elem CyclotomicRing::divexact(const Elem& a, const mpz_class& c) {
  Elem out = a;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

std::optional<long> integer_sum(const std::vector<RootOfUnity>& roots) {
  std::int64_t n = 1;
  for (const auto& r : roots) n = std::lcm(n, r.den());
  const CyclotomicRing ring(static_cast<int>(n));
  const auto v = ring.as_integer(ring.sum_of_roots(roots));
  if (!v || !v->fits_slong_p()) return std::nullopt;
  return v->get_si();
}

}  // namespace maxab
