#pragma once

// Shared helpers for the test binaries: dense complex matrices as an
// independent oracle and random abelian presentations.

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "maxab/monomial.hpp"
#include "maxab/presentation.hpp"

namespace testsupport {

using cd = std::complex<double>;
using Dense = std::vector<std::vector<cd>>;

inline Dense dense(const maxab::Monomial& m) {
  Dense d(m.dim(), std::vector<cd>(m.dim()));
  for (int j = 0; j < m.dim(); ++j) d[m.perm()[j]][j] = cd(m.phases()[j].real(), m.phases()[j].imag());
  return d;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<cd>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != cd(0))
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense conj_entries(Dense a) {
  for (auto& row : a)
    for (auto& x : row) x = std::conj(x);
  return a;
}

inline Dense adjoint(const Dense& a) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<cd>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

/// If d = lambda I, returns lambda.
inline std::optional<cd> dense_scalar(const Dense& d, double tol = 1e-9) {
  const cd lambda = d[0][0];
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (std::abs(d[i][j] - (i == j ? lambda : cd(0))) > tol) return std::nullopt;
  return lambda;
}

/// Commutator scalar of two linear unitary monomials, computed densely.
inline std::optional<cd> dense_commutator(const maxab::Monomial& a, const maxab::Monomial& b) {
  const Dense da = dense(a), db = dense(b);
  return dense_scalar(matmul(matmul(da, db), matmul(adjoint(da), adjoint(db))));
}

inline cd to_complex(const maxab::RootOfUnity& r) { return {r.real(), r.imag()}; }

inline maxab::Monomial random_monomial(std::mt19937& rng, int n, int order) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<maxab::RootOfUnity> ph;
  for (int i = 0; i < n; ++i) ph.emplace_back(std::uniform_int_distribution<int>(0, order - 1)(rng), order);
  return {perm, ph};
}

/// Random divisor chain n_1 >= n_2 >= ... (each n_{i+1} | n_i, all >= 2) with product dividing n.
inline std::vector<int> random_chain(std::mt19937& rng, int n) {
  std::vector<int> seq;
  int rest = n;
  int cap = n;
  while (true) {
    std::vector<int> options;
    for (int d = 2; d <= rest; ++d)
      if (rest % d == 0 && cap % d == 0) options.push_back(d);
    if (options.empty() || rng() % 3 == 0) break;
    const int d = options[rng() % options.size()];
    seq.push_back(d);
    rest /= d;
    cap = d;
  }
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

/// Random finite abelian subgroup of PU(n): random words in the generators of
/// H_{n_1} x ... x H_{n_s} tensored with random diagonal phases, conjugated by a
/// random monomial.
inline maxab::AbelianPresentation random_pu_presentation(std::mt19937& rng, int n) {
  using namespace maxab;
  const std::vector<int> seq = random_chain(rng, n);
  int prod = 1;
  for (int d : seq) prod *= d;
  const int rest = n / prod;
  std::vector<Monomial> base;
  int before = 1;
  for (int d : seq) {
    const int after = prod / (before * d);
    const Monomial left = Monomial::identity(before), right = Monomial::identity(after * rest);
    base.push_back(kron(kron(left, clock(d)), right));
    base.push_back(kron(kron(left, shift(d)), right));
    before *= d;
  }
  for (int t = 0; t < 2; ++t) {
    std::vector<RootOfUnity> ph;
    for (int i = 0; i < rest; ++i) ph.emplace_back(static_cast<int>(rng() % 6), 6);
    base.push_back(kron(Monomial::identity(prod), Monomial::diagonal(ph)));
  }
  const Monomial p = random_monomial(rng, n, 12);
  AbelianPresentation f;
  f.family = Family::PU;
  f.n = n;
  const int words = 1 + static_cast<int>(rng() % 4);
  for (int w = 0; w < words; ++w) {
    Monomial acc = Monomial::identity(n);
    for (const auto& b : base) acc = acc * b.pow(static_cast<int>(rng() % 5));
    f.generators.emplace_back(p * acc * p.inverse(), Center::Circle);
  }
  return f;
}

}  // namespace testsupport
