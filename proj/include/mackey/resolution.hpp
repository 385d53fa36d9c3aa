#pragma once

// Kernels, covers, free resolutions, Hom/Ext, tensor products and
// splittings for modules over an AddCategory.  Everything is reduced to
// objectwise integer matrices and solved with Smith/Hermite forms.

#include "mackey/module.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mackey {

/// An element of X(object) for a module X.
struct ModuleElement {
  int object = 0;
  IntVector vector;
};

/// Generators of ker(m), chosen by scanning objects from last to first and
/// adding Hermite-reduced kernel vectors (last row first) that are not yet in
/// the generated submodule.
std::vector<ModuleElement> kernel_generators(const AddCategory& cat, const ModMorphism& m);
std::vector<ModuleElement> kernel_generators(const AddCategory& cat, const LatticeModule& target, const Augmentation& e);

/// ⊕_k Z[-, object_k] -> F sending the k-th identity to gens[k].
ModMorphism free_cover(const AddCategory& cat, const FreeModule& f, const std::vector<ModuleElement>& gens);
/// Objectwise surjection onto a contravariant lattice module.
Augmentation free_cover(const AddCategory& cat, const LatticeModule& n);

/// P1 -> P0 with cokernel isomorphic to n.
PresentedModule present(const AddCategory& cat, const LatticeModule& n);

/// Free resolution F_* -> M, F_0 = P0, d_1 = presentation, further terms
/// covering kernels, stopping at `length` or at the first zero kernel.
ChainComplex resolve(const AddCategory& cat, const PresentedModule& m, int length);
/// Augmented resolution of a lattice module.
ChainComplex resolve(const AddCategory& cat, const LatticeModule& n, int length);
/// Adds terms to `c` until it reaches `length` or its top kernel vanishes.
void extend_resolution(const AddCategory& cat, ChainComplex& c, int length);

/// Hom(F_{k-1}, N) -> Hom(F_k, N) induced by d: F_k -> F_{k-1}, through
/// Hom(Z[-, c], N) = N(c).
IntMatrix hom_coboundary(const AddCategory& cat, const ModMorphism& d, const LatticeModule& n);

/// Ext^k(M, N) from a free resolution of M.  Throws Error when the
/// resolution is too short to determine degree k.
AbelianGroup ext(const AddCategory& cat, const ChainComplex& resolution, const LatticeModule& n, int k);
AbelianGroup hom_group(const AddCategory& cat, const PresentedModule& m, const LatticeModule& n);

/// Natural transformations N -> M between contravariant lattice modules,
/// by solving the naturality equations directly.
AbelianGroup hom_by_definition(const AddCategory& cat, const LatticeModule& n, const LatticeModule& m);

/// For e: F -> P0 inducing F -> M = coker(p: P1 -> P0), returns s: P0 -> F
/// with s ∘ p = 0 and e ∘ s ≡ id modulo im p, i.e. a section of F -> M.
/// nullopt when the integer system has no solution.  Throws Error if F -> M
/// is not objectwise surjective.
std::optional<ModMorphism> split_surjection(const AddCategory& cat, const ModMorphism& e, const ModMorphism& p);
/// r: B -> A with r ∘ s = id_A for s: A -> B, or nullopt.  One integer
/// system is solved per summand of A, sharing the Smith form between summands
/// on the same object.
std::optional<ModMorphism> left_inverse(const AddCategory& cat, const ModMorphism& s);

/// Checks the defining equations of a section returned above.
bool verify_section(const AddCategory& cat, const ModMorphism& e, const ModMorphism& p, const ModMorphism& s);

/// ⊕ L(c_j) -> ⊕ L(d_i) induced by m: F -> F' for covariant L.
IntMatrix tensor_matrix(const AddCategory& cat, const ModMorphism& m, const LatticeModule& l);
/// M ⊗ L for M = coker(P1 -> P0), via Z[-, c] ⊗ L = L(c).
AbelianGroup tensor_over_category(const AddCategory& cat, const PresentedModule& m, const LatticeModule& l);
/// Homology of F_* ⊗ L at degree k.
AbelianGroup tensor_homology(const AddCategory& cat, const ChainComplex& c, const LatticeModule& l, int k);

/// Rank-level evidence that P ⊕ Z[-, c]^k could be free: the smallest k ≤
/// bound for which the objectwise ranks of P ⊕ Z[-, c]^k are those of a
/// free module.  This is a necessary condition only; it does not decide
/// stable freeness.
struct StablyFreeEvidence {
  int k = 0;
  std::vector<std::int64_t> multiplicities;  // of Z[-, d] per object d
};
std::optional<StablyFreeEvidence> stably_free_rank_evidence(const AddCategory& cat, const std::vector<int>& ranks, int c,
                                                            int bound);

}  // namespace mackey
