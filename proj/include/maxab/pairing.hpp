#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxab/monomial.hpp"
#include "maxab/presentation.hpp"

namespace maxab {

/// Element of Z/d_1 + ... + Z/d_r as a coordinate vector.
using GroupElement = std::vector<std::int64_t>;

/// Finite abelian group with its commutator pairing m, given on the cyclic
/// generators and extended bimultiplicatively.
struct PairingTable {
  std::vector<std::int64_t> invariant_factors;
  /// Exponent vectors of the cyclic generators in the presentation generators.
  std::vector<std::vector<std::int64_t>> generator_words;
  /// Matrix representatives of the cyclic generators.
  std::vector<Monomial> generator_reps;
  Center center = Center::Circle;
  int dim = 1;
  Flavor flavor = Flavor::Complex;
  std::vector<std::vector<RootOfUnity>> m;
  std::optional<std::vector<RootOfUnity>> nu;
  std::optional<std::vector<std::vector<int>>> mu;

  int rank() const { return static_cast<int>(invariant_factors.size()); }
  std::uint64_t order() const;
  GroupElement zero() const { return GroupElement(invariant_factors.size(), 0); }
  GroupElement unit(int i) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;
  bool is_zero(const GroupElement& a) const;
  std::int64_t element_order(const GroupElement& a) const;

  RootOfUnity pair(const GroupElement& a, const GroupElement& b) const;
  /// All elements in lexicographic coordinate order; throws BoundError above cap.
  std::vector<GroupElement> elements(std::size_t cap = default_closure_cap()) const;
  /// Elements of the subgroup generated by gens, in breadth-first order.
  std::vector<GroupElement> span(const std::vector<GroupElement>& gens) const;
  /// Matrix representative of an element.
  Monomial rep(const GroupElement& a) const;
};

/// lambda with A B A^-1 B^-1 = lambda I. For an antiunitary argument the
/// value depends on the representative of the other argument.
RootOfUnity commutator_scalar(const ProjectiveElement& a, const ProjectiveElement& b);
RootOfUnity commutator_scalar(const Monomial& a, const Monomial& b);

/// Generators of H_F = F meet the linear group: the linear generators, the
/// square of the first antiunitary generator and the quotients of the others by it.
std::vector<ProjectiveElement> linear_part(const std::vector<ProjectiveElement>& gens);

/// Table of the group generated by the given (projectively commuting) elements.
PairingTable build_pairing(const std::vector<ProjectiveElement>& gens, int dim, Center center,
                           std::size_t cap = default_closure_cap());
/// Table on the finite generators of F (on H_F for the twisted family). The
/// torus pairs trivially with everything and is not part of the table.
PairingTable build_pairing(const AbelianPresentation& f, std::size_t cap = default_closure_cap());

/// Generators of the radical {x : m(x, y) = 1 for all y}.
std::vector<GroupElement> kernel_m(const PairingTable& t);
/// Minimal generating list (greedy, lexicographic) of a subgroup given by its elements.
std::vector<GroupElement> subgroup_generators(const PairingTable& t, const std::vector<GroupElement>& subgroup);

/// The invariant sequence n_1 >= n_2 >= ... of the symplectic type of m.
std::vector<std::int64_t> symplectic_reduction(const PairingTable& t);

struct BFResult {
  std::vector<Monomial> elements;     ///< lifts (canonical sign) of all elements of B_F
  std::vector<Monomial> generators;   ///< lifts of a generating set
};

/// B_F = {x in ker m : A^2 = I for every lift A} for PO and PSp, computed on
/// the group generated by the finite generators and the half-turns of the
/// torus. The twisted family is handled inside classify on the lifted group.
BFResult compute_BF(const AbelianPresentation& f, std::size_t cap = default_closure_cap());

/// nu on lifts of ker m: [C, A] = nu(A) I for an antiunitary element u = [C].
struct NuTable {
  std::vector<Monomial> lifts;
  std::vector<RootOfUnity> values;
  /// lambda A with nu(lambda A) = 1 (the lifts in ker nu).
  std::vector<Monomial> normalized;
};
NuTable compute_nu(const AbelianPresentation& f, const ProjectiveElement& u,
                   std::size_t cap = default_closure_cap());

}  // namespace maxab
