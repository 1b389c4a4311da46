#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxab {

/// Decomposition Z^g / L = Z/d_1 + ... + Z/d_r with d_1 | d_2 | ... | d_r, d_1 > 1.
struct SmithForm {
  std::vector<std::int64_t> invariant_factors;
  /// Row k: coordinates of the k-th standard generator in the cyclic factors.
  std::vector<std::vector<std::int64_t>> to_coords;
  /// Row i: exponent vector (in the standard generators) of the i-th cyclic generator.
  std::vector<std::vector<std::int64_t>> generator_words;

  /// Coordinates (reduced mod d_i) of an exponent vector.
  std::vector<std::int64_t> coords(const std::vector<std::int64_t>& word) const;
};

/// Incrementally maintained Hermite basis of a relation lattice L in Z^g.
class RelationLattice {
 public:
  explicit RelationLattice(std::size_t g);

  /// Adds a relation; returns whether the lattice grew.
  bool add(std::vector<std::int64_t> v);
  bool full_rank() const;
  /// Throws Error when the lattice does not have full rank (infinite quotient).
  SmithForm smith() const;
  std::size_t rank() const { return g_; }

 private:
  std::size_t g_;
  std::vector<std::vector<std::int64_t>> pivot_rows_;  // indexed by pivot column, empty if none
  std::int64_t modulus_ = 0;                           // det once full rank
  void update_modulus();
};

}  // namespace maxab
