#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxab/monomial.hpp"
#include "maxab/smith.hpp"

namespace maxab {

enum class Family { PU, PO, PSp, TwistedPU };

std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Default element cap for finite closures (overridden by MAXAB_CAP).
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;
std::size_t default_closure_cap();

struct SparseEntry {
  int row = 0;
  int col = 0;
  RootOfUnity value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Infinitesimal generator X of a circle factor exp(t X): a skew-Hermitian
/// partial monomial matrix whose entries are roots of unity. Such X satisfy
/// X^2 = -P for the coordinate projector P onto its support.
class TorusDirection {
 public:
  TorusDirection() = default;
  TorusDirection(int dim, std::vector<SparseEntry> entries, std::string tag = "custom");

  /// i * (indicator of positions).
  static TorusDirection diagonal(int dim, const std::vector<int>& positions);
  /// Real rotation generator: +1 at (a, b), -1 at (b, a) for each pair.
  static TorusDirection rotation(int dim, const std::vector<std::pair<int, int>>& pairs);
  /// Quaternion i on quaternionic coordinates, embedded as diag(i, -i) blocks.
  static TorusDirection quaternion_diagonal(int quaternionic_dim, const std::vector<int>& coords);

  int dim() const { return dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  const std::string& tag() const { return tag_; }

  /// g X g^-1 (with conjugated entries when g is antiunitary).
  TorusDirection conjugated_by(const Monomial& g) const;
  /// exp(pi X) = I - 2P, a diagonal +-1 matrix.
  Monomial half_turn(Flavor flavor) const;
  /// Entries with the same support as a dense-lookup map key row*dim+col.
  std::vector<std::pair<int, RootOfUnity>> keyed() const;
  bool commutes_with(const TorusDirection& o) const;
  bool is_real() const;

  friend bool operator==(const TorusDirection& a, const TorusDirection& b);

 private:
  int dim_ = 0;
  std::vector<SparseEntry> entries_;  // sorted by (col, row)
  std::string tag_;
};

/// Closed abelian subgroup given by finitely many monomial generators and a
/// symbolic torus (one-parameter circles).
struct AbelianPresentation {
  Family family = Family::PU;
  int n = 1;  ///< ambient degree (PSp: quaternionic degree)
  std::vector<ProjectiveElement> generators;
  std::vector<TorusDirection> torus;

  /// Matrix size of the representatives (2n for PSp).
  int matrix_dim() const { return family == Family::PSp ? 2 * n : n; }
  /// Center of the generators (Circle for an empty generator list of PU/Twisted).
  Center center() const;
  bool is_lifted() const { return center() == Center::SignWithI; }
  int torus_dim() const { return static_cast<int>(torus.size()); }

  /// Throws ValidationError unless flavors, dimensions and pairwise
  /// commutation are consistent with the family.
  void validate() const;
};

Flavor family_flavor(Family f);
Center family_center(Family f);

/// Finite group generated by projective elements, enumerated breadth-first.
/// words[i] is an exponent vector expressing elements[i] in the generators;
/// relations spans the exponent vectors that evaluate to the identity.
struct FiniteClosure {
  Center center = Center::Circle;
  std::vector<Monomial> elements;  // canonical representatives, elements[0] = identity
  std::vector<std::vector<std::int64_t>> words;
  RelationLattice relations{0};
  std::unordered_map<Monomial, std::size_t, ProjectiveHash> index;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t size() const { return elements.size(); }
  std::size_t find(const Monomial& m) const;
  bool contains(const Monomial& m) const { return find(m) != npos; }
};

/// Breadth-first closure; throws BoundError when more than cap elements appear.
/// The generators must commute projectively (the words assume an abelian group).
FiniteClosure close_group(const std::vector<ProjectiveElement>& generators, int dim, Center center,
                          std::size_t cap = default_closure_cap());

/// Product of gens[i]^word[i] in generator order.
Monomial evaluate_word(const std::vector<ProjectiveElement>& gens, const std::vector<std::int64_t>& word,
                       int dim, Flavor flavor);

}  // namespace maxab
