#pragma once

// Integer Hermite and Smith normal forms.  Every exactness, homology and
// splitting computation in the library reduces to these routines.
//
// Elimination first runs on overflow-checked int64 and transparently restarts
// in arbitrary precision when an intermediate value leaves the int64 range.

#include "mackey/integer.hpp"

#include <optional>
#include <vector>

namespace mackey {

enum class Transforms { none, both };

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Integer> invariant_factors;  // the nonzero diagonal, positive
  BigMatrix U;                             // rows x rows, empty without transforms
  BigMatrix V;                             // cols x cols, empty without transforms

  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariant_factors.size()); }
  bool has_transforms() const { return U.size() > 0 || V.size() > 0 || rows == 0 || cols == 0; }
  BigMatrix diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a, Transforms transforms = Transforms::none);
SmithForm smith_normal_form(const BigMatrix& a, Transforms transforms = Transforms::none);

template <typename Derived>
SmithForm smith_normal_form(const Eigen::MatrixBase<Derived>& a, Transforms transforms = Transforms::none) {
  if constexpr (std::is_same_v<typename Derived::Scalar, std::int64_t>)
    return smith_normal_form(IntMatrix(a), transforms);
  else
    return smith_normal_form(to_big(a), transforms);
}

/// Row-style Hermite normal form H = U * A: pivots positive and strictly
/// right-moving, entries above a pivot reduced into [0, pivot).  Zero rows
/// sit at the bottom.
struct HermiteForm {
  BigMatrix H;
  BigMatrix U;  // empty unless requested
  Eigen::Index rank = 0;
};

HermiteForm hermite_normal_form(const BigMatrix& a, bool with_transform = false);
HermiteForm hermite_normal_form(const IntMatrix& a, bool with_transform = false);

std::vector<Integer> invariant_factors(const IntMatrix& a);
Eigen::Index integer_rank(const IntMatrix& a);

/// Columns form a Z-basis of {x : A x = 0}, in Hermite-reduced form.
BigMatrix kernel_basis(const IntMatrix& a);
BigMatrix kernel_basis(const BigMatrix& a);

/// Integer solution X of A X = B, or nullopt when none exists.
std::optional<BigMatrix> solve_integer(const BigMatrix& a, const BigMatrix& b);
std::optional<BigMatrix> solve_integer(const SmithForm& snf, const BigMatrix& b);

/// True iff every column of B lies in the Z-span of the columns of A.
bool in_column_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace mackey
