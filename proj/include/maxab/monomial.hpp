#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxab/root_of_unity.hpp"

namespace maxab {

enum class Flavor { Complex, Real, Quaternion };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Generalized permutation matrix with root-of-unity phases, optionally
/// composed with complex conjugation (the antiunitary part).
///
/// As a matrix, entry (perm[j], j) is phases[j] and every other entry is 0.
/// The pair (A, conj) acts as v -> A * conj^conj(v), so products follow
/// (A, e) * (B, d) = (A * sigma^e(B), e xor d) with sigma the entrywise
/// complex conjugation.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> perm, std::vector<RootOfUnity> phases, bool conj = false,
           Flavor flavor = Flavor::Complex);

  static Monomial identity(int dim, Flavor flavor = Flavor::Complex);
  static Monomial scalar(int dim, RootOfUnity lambda, Flavor flavor = Flavor::Complex);
  static Monomial diagonal(std::vector<RootOfUnity> phases, Flavor flavor = Flavor::Complex);
  static Monomial permutation(std::vector<int> perm, Flavor flavor = Flavor::Complex);
  /// Pure complex conjugation tau on C^dim.
  static Monomial tau(int dim);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<RootOfUnity>& phases() const { return phases_; }
  bool conj() const { return conj_; }
  Flavor flavor() const { return flavor_; }

  /// Entry at (row, col) of the matrix part, if nonzero.
  std::optional<RootOfUnity> entry(int row, int col) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  /// sigma(A): entrywise conjugate of the matrix part (conj flag unchanged).
  Monomial conjugate() const;
  Monomial scaled(RootOfUnity lambda) const;
  Monomial pow(long long e) const;
  /// Relabels the flavor after checking the flavor's invariants.
  Monomial with_flavor(Flavor f) const;
  /// Same matrix part with the antiunitary flag set or cleared.
  Monomial with_conj(bool c) const;

  /// lambda if this element is the linear scalar lambda*I.
  std::optional<RootOfUnity> scalar_value() const;
  bool is_identity() const;

  /// Phases on the diagonal (fixed points of perm); the trace is their sum.
  std::vector<RootOfUnity> diagonal_phases() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_flavor() const;

  std::vector<int> perm_;
  std::vector<RootOfUnity> phases_;
  bool conj_ = false;
  Flavor flavor_ = Flavor::Complex;
};

/// Kronecker product A (x) B, index (i, j) -> i * B.dim() + j.
Monomial kron(const Monomial& a, const Monomial& b);
/// Block diagonal diag(A, B).
Monomial direct_sum(const Monomial& a, const Monomial& b);
/// Tests the quaternionic condition X J = J conj(X) for the standard J.
bool is_quaternionic(const Monomial& m);
/// The standard complex structure diag-blocks [[0,-1],[1,0]] on C^(2n).
Monomial standard_j(int n);

/// Diagonal clock diag{I_block, w I_block, ..., w^(n-1) I_block}, w = exp(2 pi i / n).
Monomial clock(int n, int block = 1);
/// Cyclic block shift with I_block on the block superdiagonal and in the
/// bottom-left corner.
Monomial shift(int n, int block = 1);

/// I_{p,q} = diag(-I_p, I_q).
Monomial named_i_pq(int p, int q);
/// J_n = [[0, I_n], [-I_n, 0]].
Monomial named_j(int n);
/// J'_n = [[0, I_n], [I_n, 0]].
Monomial named_j_prime(int n);
/// K_n, the 4x4 block matrix with I_n, -I_n, I_n, -I_n on the antidiagonal.
Monomial named_k(int n);

// ---------------------------------------------------------------------------
// Quaternions.

/// One of the eight units +-1, +-i, +-j, +-k.
struct QuatUnit {
  int sign = 1;  // +1 or -1
  int axis = 0;  // 0 = 1, 1 = i, 2 = j, 3 = k

  QuatUnit operator*(const QuatUnit& o) const;
  QuatUnit inverse() const;
  friend bool operator==(const QuatUnit&, const QuatUnit&) = default;
  static std::array<QuatUnit, 8> all();
};

/// Quaternionic monomial matrix: entry (perm[j], j) is units[j].
class QuatMonomial {
 public:
  QuatMonomial() = default;
  QuatMonomial(std::vector<int> perm, std::vector<QuatUnit> units);

  static QuatMonomial identity(int n);
  /// q * I_n.
  static QuatMonomial scalar(int n, QuatUnit q);
  /// Real signed monomial (phases must be +-1) viewed quaternionically.
  static QuatMonomial from_real(const Monomial& real);
  /// Parses "iI(n)", "jI(n)", "kI(n)" and "-iI(n)" style tags.
  static QuatMonomial parse_tag(const std::string& tag);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<QuatUnit>& units() const { return units_; }

  QuatMonomial operator*(const QuatMonomial& o) const;
  friend bool operator==(const QuatMonomial&, const QuatMonomial&) = default;

 private:
  std::vector<int> perm_;
  std::vector<QuatUnit> units_;
};

/// Image of a unit under the standard embedding H -> M_2(C):
/// i -> diag(i, -i), j -> [[0,-1],[1,0]], k = ij.
Monomial complex_image(QuatUnit q);
/// Complex embedding Sp(n) -> U(2n); result has flavor Quaternion.
Monomial quaternion_embed(const QuatMonomial& q);
/// Real embedding phi: Sp(n) -> O(4n), with the 4x4 block layout
/// (A C B D / -C A D -B / -B -D A C / -D B -C A) for A + iB + jC + kD.
Monomial phi_embed(const QuatMonomial& q);

// ---------------------------------------------------------------------------
// Projective elements.

/// The scalar subgroup an element is taken modulo.
enum class Center {
  Circle,    ///< Z_n, the full circle of scalars (PU(n) and its twist)
  Sign,      ///< <-I> (O(n)/<-I>, Sp(n)/<-I>)
  SignWithI  ///< <-I> inside the lifted twisted group (U(n)/<-I>) x| <tau>
};

std::string to_string(Center c);

/// Coset [A] = A * center.
class ProjectiveElement {
 public:
  ProjectiveElement() = default;
  ProjectiveElement(Monomial rep, Center center);

  const Monomial& rep() const { return rep_; }
  Center center() const { return center_; }
  int dim() const { return rep_.dim(); }
  bool conj() const { return rep_.conj(); }

  /// Canonical representative of the coset (used for hashing/equality).
  Monomial canonical() const;
  /// Whether a ratio lambda between two representatives lies in the center.
  bool center_contains(RootOfUnity lambda) const;

 private:
  Monomial rep_;
  Center center_ = Center::Circle;
};

ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b);
ProjectiveElement inverse(const ProjectiveElement& a);
bool equal(const ProjectiveElement& a, const ProjectiveElement& b);
/// Ratio lambda with a.rep = lambda * b.rep, when the matrix parts are proportional.
std::optional<RootOfUnity> proportionality(const Monomial& a, const Monomial& b);

struct ProjectiveHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace maxab
