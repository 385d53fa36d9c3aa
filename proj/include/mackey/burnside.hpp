#pragma once

#include "mackey/integer.hpp"
#include "mackey/permgrp.hpp"

#include <vector>

namespace mackey {

/// Left cosets xH of a subgroup, numbered in order of their smallest element.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<int> coset_of;        // element -> coset
  std::vector<int> representative;  // coset -> smallest element

  CosetSpace() = default;
  CosetSpace(const PermGroup& g, const Subgroup& h);
  int size() const { return static_cast<int>(representative.size()); }
  /// Coset of g * (coset c).
  int act(const PermGroup& g, int elem, int c) const {
    return coset_of[static_cast<std::size_t>(g.multiply(elem, representative[static_cast<std::size_t>(c)]))];
  }
};

struct Orbit {
  std::vector<int> points;  // ascending
  Subgroup stabilizer;      // of points.front()
  int stabilizer_class = -1;
};

/// A finite set with an action of a fixed PermGroup, stored as a full
/// element-by-point table.  The group itself is passed to the operations
/// that need it.
class GSet {
 public:
  GSet() = default;
  /// images[k][x] is the image of x under the k-th generator of g.  Throws
  /// Error when the assignment does not extend to an action.
  static GSet from_generator_images(const PermGroup& g, int points, const std::vector<std::vector<int>>& images);
  static GSet from_table(int points, std::vector<std::vector<int>> table);

  int size() const { return points_; }
  int group_order() const { return static_cast<int>(table_.size()); }
  int act(int elem, int point) const { return table_[static_cast<std::size_t>(elem)][static_cast<std::size_t>(point)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::vector<Orbit> orbits(const PermGroup& g, const SubgroupClassTable& classes) const;
  Subgroup stabilizer(int point) const;

 private:
  int points_ = 0;
  std::vector<std::vector<int>> table_;
};

GSet coset_gset(const PermGroup& g, const Subgroup& h);
GSet point_gset(const PermGroup& g);

/// Points of X fixed by every element of H.
std::vector<int> fixed_points(const GSet& x, const Subgroup& h);

/// m(i, j) = |(G/K_j)^{H_i}| over subgroup classes.
IntMatrix table_of_marks(const PermGroup& g, const SubgroupClassTable& classes);

/// Coefficients over the transitive G-sets G/H, indexed by subgroup class.
struct BurnsideElement {
  IntVector coefficients;

  static BurnsideElement basis(const SubgroupClassTable& classes, int cls);
  static BurnsideElement zero(const SubgroupClassTable& classes);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) { return a.coefficients == b.coefficients; }
  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    return {a.coefficients + b.coefficients};
  }
};

/// Isomorphism class of a G-set as a Burnside element.
BurnsideElement decompose(const PermGroup& g, const SubgroupClassTable& classes, const GSet& x);

/// Product computed from the orbit decomposition of G/H x G/K.
BurnsideElement burnside_multiply(const PermGroup& g, const SubgroupClassTable& classes, const BurnsideElement& a,
                                  const BurnsideElement& b);

/// Marks of x: entry i is |X^{H_i}| for a G-set X in the class of x.
IntVector mark_vector(const IntMatrix& marks, const BurnsideElement& x);

struct Pullback {
  GSet set;
  std::vector<int> to_left;   // point -> point of X
  std::vector<int> to_right;  // point -> point of Y
};

/// X x_Z Y for equivariant maps f: X -> Z and h: Y -> Z, with diagonal
/// action; points ordered lexicographically by (x, y).
Pullback pullback(const GSet& x, const GSet& y, const GSet& z, const std::vector<int>& f, const std::vector<int>& h);

bool is_equivariant(const GSet& source, const GSet& target, const std::vector<int>& map);

}  // namespace mackey
