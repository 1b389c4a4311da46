#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "maxab/f2msms.hpp"
#include "maxab/presentation.hpp"

namespace maxab {

/// Conjugacy-class invariant of a closed abelian subgroup satisfying (*).
///
/// PU: the divisor chain seq = (n_1, ..., n_s) with torus rank m - 1,
/// m = n / (n_1 ... n_s).
/// PO, PSp, twisted: k, the block counts s0 and s1, the B_F block
/// multiset, rank(ker m / F_0) and the canonical linear structure on F/ker m
/// (on H_F'/ker nu' for the twisted family, with the radical [iI]).
struct ClassInvariant {
  Family family = Family::PU;
  int n = 1;
  std::vector<std::int64_t> seq;
  int k = 0;
  int s0 = 0;
  int s1 = 0;
  /// Block dimensions of the joint eigenspaces of B_F, ascending (real
  /// dimensions for PO, quaternionic for PSp, complex for twisted).
  std::vector<int> bf_blocks;
  int kerm_rank = 0;
  Msms msms;

  /// PU: m = n / prod(seq).
  int torus_size() const;
  /// Integer key giving the enumeration order.
  std::vector<std::int64_t> encoding() const;

  friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
};

/// Throws ValidationError unless the invariant is consistent with its family and n.
void validate_invariant(const ClassInvariant& inv);

/// Block dimensions for given k, s0, s1 in the family's units.
std::vector<int> expected_blocks(Family f, int k, int s0, int s1);

/// All invariants for (family, n), sorted by encoding(). For PO, PSp and the
/// twisted family the B_F part ranges over the block multisets with the full
/// sign group on the blocks (rank(ker m / F_0) = max(s0 - 1, 0)).
std::vector<ClassInvariant> enumerate_invariants(Family f, int n);

/// Explicit generators and torus directions realizing the invariant.
AbelianPresentation canonical_rep(const ClassInvariant& inv);

/// Recomputes the invariant from a presentation. The twisted family is
/// first lifted with lift_twisted.
ClassInvariant classify(const AbelianPresentation& f, std::size_t cap = default_closure_cap());

/// Abelian lift F' of a twisted presentation to (U(n)/<-I>) x| <tau>:
/// generators [iI], the first antiunitary generator u, and the linear
/// generators rescaled to commute with u exactly.
AbelianPresentation lift_twisted(const AbelianPresentation& f);

/// Maximality from k, s0, s1, the mus and rank(ker m / F_0).
bool is_maximal(const ClassInvariant& inv, int rank_kerm_mod_f0);
bool is_maximal(const ClassInvariant& inv);
/// Elementary abelian 2-group test: s0 = s and all mus equal.
bool is_elementary_abelian(const ClassInvariant& inv);

struct WeylFactor {
  std::string name;
  mpz_class order;
};

struct WeylDescription {
  Family family = Family::PU;
  std::vector<WeylFactor> factors;
  mpz_class total_order;
};

/// Weyl group factors and order for a maximal invariant.
WeylDescription weyl_description(const ClassInvariant& inv);

/// |Sp(V)| for V = sum (Z/n_i)^2 with its standard form, by counting symplectic bases.
mpz_class symplectic_group_order(const std::vector<std::int64_t>& seq);
/// Same, by backtracking over images of a basis; requires |V| <= kSymplecticBruteForceBound.
inline constexpr std::int64_t kSymplecticBruteForceBound = 10'000;
mpz_class symplectic_group_order_brute_force(const std::vector<std::int64_t>& seq);

/// Whether SU(n)/<omega_m I> has a closed abelian subgroup satisfying (*):
/// true iff n divides a power of m. Requires m | n.
bool quotient_predicate(std::int64_t n, std::int64_t m);

}  // namespace maxab
