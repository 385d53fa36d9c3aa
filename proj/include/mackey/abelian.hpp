#pragma once

#include "mackey/integer.hpp"

#include <string>
#include <vector>

namespace mackey {

/// Finitely generated abelian group Z^free_rank ⊕ ⊕ Z/torsion[i], with the
/// torsion coefficients in divisibility order and all greater than 1.
struct AbelianGroup {
  Eigen::Index free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^rows / (column span of a).
AbelianGroup cokernel(const IntMatrix& a);

/// ker(outgoing) / im(incoming) on Z^dim.  Either map may have zero rows or
/// columns; outgoing * incoming must vanish.
AbelianGroup subquotient(Eigen::Index dim, const IntMatrix& outgoing, const IntMatrix& incoming);

}  // namespace mackey
