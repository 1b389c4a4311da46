#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "maxab/root_of_unity.hpp"

namespace maxab {

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// The ring Z[zeta_N] with elements stored in the power basis 1, zeta, ..., zeta^(d-1),
/// d = phi(N), reduced modulo the cyclotomic polynomial. Zero tests are exact.
class CyclotomicRing {
 public:
  using Elem = std::vector<mpz_class>;

  explicit CyclotomicRing(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  Elem zero() const { return Elem(degree()); }
  Elem from_int(long v) const;
  /// exp(2 pi i a/b); b must divide N.
  Elem root(RootOfUnity r) const;
  Elem sum_of_roots(const std::vector<RootOfUnity>& roots) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  /// a * zeta^k, a cheap product by a root of unity.
  Elem mul_root(const Elem& a, RootOfUnity r) const;

  static bool is_zero(const Elem& a);
  std::optional<mpz_class> as_integer(const Elem& a) const;
  /// Gcd of the coefficients (0 for the zero element).
  static mpz_class content(const Elem& a);
  static Elem divexact(const Elem& a, const mpz_class& c);

 private:
  int n_;
  std::vector<mpz_class> phi_;
  std::vector<Elem> powers_;  // zeta^j reduced, j = 0..N-1
};

/// Exact sum of roots of unity as an integer, if it is one.
std::optional<long> integer_sum(const std::vector<RootOfUnity>& roots);

}  // namespace maxab
