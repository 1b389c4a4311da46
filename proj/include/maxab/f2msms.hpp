#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace maxab {

/// Vector over F_2 as a bit mask; bit j is the coordinate on basis vector e_j.
using F2Vec = std::uint32_t;
inline constexpr int kMaxF2Dim = 20;

inline int parity(F2Vec v) { return __builtin_parity(v); }

/// Linear map F_2^dim -> F_2^dim given by the images of the basis vectors.
struct F2Map {
  int dim = 0;
  std::vector<F2Vec> cols;

  static F2Map identity(int dim);
  F2Vec apply(F2Vec x) const;
  /// (a * b)(x) = a(b(x)).
  F2Map operator*(const F2Map& b) const;
  std::optional<F2Map> inverse() const;
  friend bool operator==(const F2Map&, const F2Map&) = default;
};

/// Rank of a list of vectors.
int f2_rank(std::vector<F2Vec> vs);

/// (V, m): F_2^dim with a symmetric, zero-diagonal Gram matrix (rows as bit masks).
class F2SymplecticSpace {
 public:
  F2SymplecticSpace() = default;
  explicit F2SymplecticSpace(std::vector<F2Vec> gram);

  /// Hyperbolic pairs (e_{2i}, e_{2i+1}), i < k, followed by `radical` radical vectors.
  static F2SymplecticSpace standard(int k, int radical = 0);

  int dim() const { return static_cast<int>(gram_.size()); }
  const std::vector<F2Vec>& gram() const { return gram_; }
  int form(F2Vec x, F2Vec y) const;
  /// sum_{i<j} x_i x_j m(e_i, e_j).
  int cross(F2Vec x) const;

  std::vector<F2Vec> radical_basis() const;
  int radical_rank() const { return static_cast<int>(radical_basis().size()); }
  /// Half the rank of m.
  int half_rank() const { return (dim() - radical_rank()) / 2; }
  bool is_standard() const;

  bool is_isometry(const F2Map& g) const;
  /// Map P from the standard space of the same shape into this one (P e_j is
  /// the j-th vector of a symplectic basis followed by a radical basis).
  F2Map symplectic_basis() const;

  /// Order of the isometry group of (V, m).
  std::uint64_t isometry_group_order() const;
  /// Generators of the isometry group (transvections, radical shears and
  /// elementary maps of the radical), valid for standard spaces.
  std::vector<F2Map> standard_isometry_generators() const;
  /// Calls f on every isometry (backtracking); f returns false to stop.
  void for_each_isometry(const std::function<bool(const F2Map&)>& f) const;

  friend bool operator==(const F2SymplecticSpace&, const F2SymplecticSpace&) = default;

 private:
  std::vector<F2Vec> gram_;
};

/// Quadratic refinement mu of m, stored additively: bit j is 1 iff mu(e_j) = -1.
/// Extended to V by mu(x + y) = mu(x) + mu(y) + m(x, y).
struct QuadraticRefinement {
  F2Vec bits = 0;

  static QuadraticRefinement from_signs(const std::vector<int>& signs);
  std::vector<int> signs(int dim) const;
  /// Additive value mu(x) in {0, 1}.
  int value(const F2SymplecticSpace& v, F2Vec x) const { return (parity(bits & x) + v.cross(x)) & 1; }
  int sign(const F2SymplecticSpace& v, F2Vec x) const { return value(v, x) ? -1 : 1; }
  /// mu o g.
  QuadraticRefinement pullback(const F2SymplecticSpace& v, const F2Map& g) const;

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;
  friend auto operator<=>(const QuadraticRefinement&, const QuadraticRefinement&) = default;
};

/// defe(mu) = sum over x of mu(x) in {+-1}.
long long defect(const F2SymplecticSpace& v, const QuadraticRefinement& mu);

/// (V, m, mu_1, ..., mu_s); the order of mus is irrelevant for isomorphism.
struct Msms {
  F2SymplecticSpace space;
  std::vector<QuadraticRefinement> mus;

  /// Validates dimension bounds and the Gram matrix; throws ValidationError.
  void validate() const;
  friend bool operator==(const Msms&, const Msms&) = default;
};

enum class ModelTag { Plus, Minus, Radical1Plus, Twisted };

std::string to_string(ModelTag t, int k);
/// Parses "plus(k)", "minus(k)", "radical1_plus(k)", "twisted(k)".
std::pair<ModelTag, int> parse_model_tag(const std::string& s);

/// Standard single-refinement models: plus(k) and minus(k) on the standard
/// rank-2k space (defect +2^k / -2^k); radical1_plus(k) and twisted(k) on the
/// standard space with one radical vector r, with mu(r) = +1 / -1.
Msms standard_model(ModelTag tag, int k);
Msms standard_model(const std::string& tag);
QuadraticRefinement standard_refinement(ModelTag tag, int k);

/// Canonical representative of the isomorphism class: the space is standard
/// and the sorted mus are lexicographically minimal in the orbit.
/// to_canonical maps the input space isometrically onto the canonical one,
/// carrying the multiset of mus onto the canonical multiset.
struct CanonicalMsms {
  Msms form;
  F2Map to_canonical;
};
CanonicalMsms canonical_form(const Msms& a);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<F2Map> witness;  ///< V_a -> V_b with {mu_b o w} = {mu_a}
};
IsomorphismResult is_isomorphic(const Msms& a, const Msms& b);
/// Exhaustive search over all isometries of V_b; dims up to kBruteForceDim.
inline constexpr int kBruteForceDim = 6;
IsomorphismResult is_isomorphic_brute_force(const Msms& a, const Msms& b);

/// Order of the stabilizer of the mu multiset in the isometry group of (V, m).
std::uint64_t aut_order(const Msms& a);

struct MsmsClass {
  Msms representative;
  std::uint64_t tuple_count = 0;  ///< ordered s-tuples in this class
};
/// Orbits of s-tuples drawn from `allowed` (a set of refinements on a
/// standard space closed under isometries) under Isom(V, m) x S_s.
std::vector<MsmsClass> enumerate_classes(const F2SymplecticSpace& space,
                                         const std::vector<QuadraticRefinement>& allowed, int s);
/// Tuples of refinements each isomorphic to the model (plus(k) by default).
std::vector<MsmsClass> enumerate_classes(int k, int s, ModelTag model = ModelTag::Plus);

/// All refinements mu on the space with (V, m, mu) isomorphic to (V, m, model).
std::vector<QuadraticRefinement> refinements_like(const F2SymplecticSpace& space, const QuadraticRefinement& model);

}  // namespace maxab
