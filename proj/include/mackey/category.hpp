#pragma once

// Finite additive categories presented by hom bases and composition tables.
//
// Hom(a, b) is the free abelian group on hom_labels(a, b).  Composition is
// supplied as a callback on basis pairs and memoized per object triple, so
// large categories only pay for the blocks that are actually used.

#include "mackey/integer.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mackey {

struct HomTerm {
  int index = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const HomTerm&, const HomTerm&) = default;
};

/// Sparse integer combination of hom basis elements, sorted by index.
using HomCombo = std::vector<HomTerm>;

/// Dense coordinates of a morphism in a hom basis.
using HomVector = IntVector;

class AddCategory {
 public:
  /// Returns g ∘ f for basis elements f ∈ Hom(a, b), g ∈ Hom(b, c).
  using Composer = std::function<HomCombo(int a, int b, int c, int f, int g)>;

  AddCategory(std::string name, std::vector<std::string> objects,
              std::vector<std::vector<std::vector<std::string>>> hom_labels, std::vector<int> identities,
              Composer composer);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int a) const { return objects_[static_cast<std::size_t>(a)]; }
  int object_index(const std::string& name) const;
  int hom_rank(int a, int b) const {
    return static_cast<int>(labels_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].size());
  }
  const std::vector<std::string>& hom_labels(int a, int b) const {
    return labels_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  /// Basis index of the identity of a.
  int identity(int a) const { return identities_[static_cast<std::size_t>(a)]; }

  /// g ∘ f on basis elements, f: a -> b, g: b -> c.
  const HomCombo& compose(int a, int b, int c, int f, int g) const;
  /// g ∘ f extended bilinearly.
  HomVector compose(int a, int b, int c, const HomVector& f, const HomVector& g) const;
  /// Adds coeff * (g ∘ f) into `out`.
  void compose_into(int a, int b, int c, int f, int g, std::int64_t coeff, HomVector& out) const;

  HomVector identity_vector(int a) const;
  HomVector basis_vector(int a, int b, int index) const;

  /// Full subcategory on `objects`, sharing this category's composition.
  static std::shared_ptr<const AddCategory> full_subcategory(std::shared_ptr<const AddCategory> parent,
                                                             const std::vector<int>& objects, std::string name);

  /// Identity and associativity laws, exhaustively when the number of basis
  /// triples is at most `budget`, otherwise on `budget` seeded samples.
  bool check_laws(std::size_t budget = 2000, std::uint64_t seed = 1) const;

 private:
  struct Cache;
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::vector<std::vector<std::string>>> labels_;
  std::vector<int> identities_;
  Composer composer_;
  std::shared_ptr<Cache> cache_;
};

using CategoryPtr = std::shared_ptr<const AddCategory>;

}  // namespace mackey
