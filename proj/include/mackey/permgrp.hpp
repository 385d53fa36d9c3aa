#pragma once

// Finite permutation groups by explicit element enumeration.
//
// Elements of a PermGroup are stored sorted lexicographically by image
// array, so the identity always has index 0.  Subgroups are handled as sorted
// lists of element indices into the ambient group; because the ambient order
// is lexicographic, comparing two such lists compares the subgroups
// lexicographically as well.

#include "mackey/integer.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mackey {

class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  /// (p * q)(i) = p(q(i)).
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Sorted element indices of a subgroup, relative to its ambient group.
using Subgroup = std::vector<int>;

/// Upper bound on enumerated group orders: MACKEY_KIT_CAP if set, else 10000.
std::size_t group_order_cap();

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap);
};

class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap = group_order_cap());

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

  /// Index of `p`, or -1 when p is not in the group.
  int index_of(const Permutation& p) const;
  /// Indices of the generators.
  std::vector<int> generator_indices() const;

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g h g^-1
  int conjugate(int g, int h) const { return multiply(multiply(g, h), inverse(g)); }
  int element_order(int a) const;
  int act(int g, int point) const { return element(g)(point); }

  Subgroup whole() const;
  Subgroup trivial() const { return {0}; }
  Subgroup generated_by(const std::vector<int>& gens) const;
  /// Smallest subgroup containing h and the element g.
  Subgroup join(const Subgroup& h, int g) const;
  Subgroup conjugate(int g, const Subgroup& h) const;
  bool is_subgroup(const Subgroup& h) const;
  bool contains(const Subgroup& h, int g) const;
  /// A short generating set chosen greedily in element order.
  std::vector<int> generating_set(const Subgroup& h) const;
  /// H as a permutation group in its own right on the same points.  Its
  /// element i is the i-th element of h.
  PermGroup as_group(const Subgroup& h) const;

 private:
  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::vector<int> table_;  // order^2 products, when small enough
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subset(const Subgroup& a, const Subgroup& b);

struct SubgroupClass {
  Subgroup representative;     // lexicographically minimal member
  std::vector<int> members;    // subgroup ids, ascending
  std::size_t order = 0;
  std::size_t normalizer_order = 0;
  std::string label;
};

/// Every subgroup of G, grouped into conjugacy classes.  Classes are sorted
/// by (order, representative); subgroups by (order, element list).
class SubgroupClassTable {
 public:
  std::vector<Subgroup> subgroups;
  std::vector<int> class_of;  // subgroup id -> class index
  std::vector<SubgroupClass> classes;
  /// subconjugate[h][k]: some conjugate of class h lies in class k.
  std::vector<std::vector<bool>> subconjugate;

  int class_count() const { return static_cast<int>(classes.size()); }
  int subgroup_count() const { return static_cast<int>(subgroups.size()); }
  /// -1 if `h` is not a subgroup in the table.
  int subgroup_id(const Subgroup& h) const;
  int class_of_subgroup(const Subgroup& h) const;
  /// Class whose label matches, or nullopt.
  std::optional<int> find_label(const std::string& label) const;
  const Subgroup& representative(int cls) const { return classes[static_cast<std::size_t>(cls)].representative; }
};

SubgroupClassTable enumerate_subgroup_classes(const PermGroup& g);

/// Element conjugacy classes, each sorted, listed by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const PermGroup& g);

struct DoubleCoset {
  int representative = 0;  // smallest element index in S g K
  std::size_t size = 0;
};

/// S\G/K; throws Error if S or K is not a subgroup.
std::vector<DoubleCoset> double_cosets(const PermGroup& g, const Subgroup& s, const Subgroup& k);

Subgroup normalizer(const PermGroup& g, const Subgroup& h);

struct WeylGroup {
  Subgroup normalizer;
  Subgroup subgroup;
  /// N/H acting on the left cosets of H in N, numbered by smallest member.
  PermGroup quotient;
};

WeylGroup weyl_group(const PermGroup& g, const Subgroup& h);

/// Keys: trivial C1 C2 C3 C4 V4 C5 S3 C6 D4 Q8 D5 A4 D6 C2^3 S4 A5.
PermGroup named_group(const std::string& name);
std::vector<std::string> named_group_keys();

}  // namespace mackey
