#pragma once

#include <optional>
#include <string>

#include "maxab/classify.hpp"
#include "maxab/presentation.hpp"

namespace maxab {

enum class VerifyMethod { Exact, Floating };
std::string to_string(VerifyMethod m);

/// Singular values at or below this count as zero in the floating path.
inline constexpr double kSingularValueThreshold = 1e-9;

/// Largest matrix size the floating path accepts.
inline constexpr int kFloatingMaxDim = 16;

struct FixedAlgebraReport {
  Family family = Family::PU;
  int n = 1;
  int dim_F = 0;
  int dim_fixed = 0;
  VerifyMethod method = VerifyMethod::Exact;
  double residual = 0.0;  // floating only: largest singular value treated as zero
  bool star() const { return dim_fixed == dim_F; }
};

/// Real dimension of the fixed subalgebra, computed over C as the number of
/// orbits of matrix units with trivial phase cocycle. Returns nullopt when a
/// generator or torus direction is not monomial in the torus-adapted basis.
std::optional<int> fixed_dim_exact(const AbelianPresentation& f);

/// Same dimension as the nullity of the stacked dense operator.
FixedAlgebraReport fixed_dim_floating(const AbelianPresentation& f);

/// Exact path when available, otherwise (or when forced) the floating path.
FixedAlgebraReport fixed_dim(const AbelianPresentation& f, bool force_floating = false);

/// fixed_dim(canonical_rep(inv)).star() on the exact path.
bool verify_star(const ClassInvariant& inv);

}  // namespace maxab
