#pragma once

// Right (contravariant) modules over an AddCategory.
//
// A free module is a formal sum of representables Z[-, c].  A morphism
// between free modules is a matrix whose (i, j) entry lies in
// Hom(source_j, target_i); at an object a it acts on Z Hom(a, source_j) by
// post-composition.  Modules with known values and action matrices are
// LatticeModules; they serve as coefficients, augmentation targets and
// covariant tensor factors.

#include "mackey/abelian.hpp"
#include "mackey/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mackey {

struct FreeModule {
  std::vector<int> summands;  // object index per summand

  int size() const { return static_cast<int>(summands.size()); }
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

FreeModule direct_sum(const FreeModule& a, const FreeModule& b);

/// Rank of F(a), the sum of |Hom(a, c_i)|.
int evaluate_rank(const AddCategory& cat, const FreeModule& f, int a);
/// Offset of summand i inside F(a).
std::vector<int> summand_offsets(const AddCategory& cat, const FreeModule& f, int a);

struct ModMorphism {
  FreeModule source;
  FreeModule target;
  std::vector<std::vector<HomVector>> entries;  // [target i][source j]

  const HomVector& entry(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  HomVector& entry(int i, int j) { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  static ModMorphism zero(const AddCategory& cat, const FreeModule& source, const FreeModule& target);
  static ModMorphism identity(const AddCategory& cat, const FreeModule& f);
  friend bool operator==(const ModMorphism&, const ModMorphism&) = default;
};

/// Integer matrix of m at object a, rows F_target(a), columns F_source(a).
IntMatrix evaluate(const AddCategory& cat, const ModMorphism& m, int a);
/// g ∘ f.
ModMorphism compose(const AddCategory& cat, const ModMorphism& g, const ModMorphism& f);
ModMorphism add(const ModMorphism& a, const ModMorphism& b);
bool is_zero(const ModMorphism& m);
/// Block matrix [a b] with a common target.
ModMorphism hstack(const ModMorphism& a, const ModMorphism& b);

enum class Variance { contravariant, covariant };

/// Module given by values and basis-morphism action matrices.  For f ∈
/// Hom(a, b) the stored matrix is M(b) -> M(a) when contravariant and
/// M(a) -> M(b) when covariant.
struct LatticeModule {
  Variance variance = Variance::contravariant;
  std::string kind;
  std::vector<int> ranks;
  std::vector<std::vector<std::vector<IntMatrix>>> action;  // [a][b][f]

  int rank(int a) const { return ranks[static_cast<std::size_t>(a)]; }
  const IntMatrix& act(int a, int b, int f) const {
    return action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(f)];
  }
  /// Matrix of a hom combination.
  IntMatrix act(const AddCategory& cat, int a, int b, const HomVector& f) const;
};

/// Z[-, c] (contravariant) or Z[c, -] (covariant).
LatticeModule representable(const AddCategory& cat, int c, Variance variance = Variance::contravariant);
/// Z in every value with every basis morphism acting by 1.  Only a module
/// when composites of basis elements are single basis elements, as in an
/// orbit category.
LatticeModule constant_module(const AddCategory& cat, Variance variance = Variance::contravariant);
LatticeModule restrict_module(const LatticeModule& m, const std::vector<int>& objects);
/// Functoriality on all basis pairs.
bool check_functorial(const AddCategory& cat, const LatticeModule& m);

/// Map from a free module to a contravariant LatticeModule, fixed by the
/// image of each summand's identity.
struct Augmentation {
  FreeModule source;
  std::vector<IntVector> images;  // images[j] ∈ N(source_j)
};

IntMatrix evaluate(const AddCategory& cat, const LatticeModule& target, const Augmentation& e, int a);
Augmentation compose(const AddCategory& cat, const LatticeModule& target, const Augmentation& e, const ModMorphism& m);

/// Cokernel of P1 -> P0.
struct PresentedModule {
  ModMorphism presentation;
  const FreeModule& generators() const { return presentation.target; }
};

AbelianGroup evaluate(const AddCategory& cat, const PresentedModule& m, int a);
PresentedModule free_presentation(const AddCategory& cat, const FreeModule& f);

/// modules[n] = C_n, differentials[n - 1] : C_n -> C_{n-1}.  With an
/// augmentation the complex is read as augmented over `augmentation_target`.
struct ChainComplex {
  std::vector<FreeModule> modules;
  std::vector<ModMorphism> differentials;
  std::optional<LatticeModule> augmentation_target;
  std::optional<Augmentation> augmentation;
  bool complete = false;  // no further nonzero terms

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

/// d ∘ d = 0 at the morphism level, and ε ∘ d_1 = 0.
bool is_chain_complex(const AddCategory& cat, const ChainComplex& c);

/// Homology at degree n and object a.  Degree -1 is the cokernel of the
/// augmentation; with an augmentation, degree 0 is ker ε / im d_1.
AbelianGroup homology(const AddCategory& cat, const ChainComplex& c, int n, int a);
bool is_exact_at(const AddCategory& cat, const ChainComplex& c, int n, int a);
/// Exact at every object in degrees -1 .. top (augmented) or 1 .. top.
bool is_exact(const AddCategory& cat, const ChainComplex& c, int top);

}  // namespace mackey
