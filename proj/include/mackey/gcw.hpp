#pragma once

// Two-dimensional G-complexes: regular CW complexes with polygonal 2-cells,
// simplicial complexes with a vertex action, their barycentric
// subdivisions, fixed subcomplexes, homology and Bredon chain complexes.

#include "mackey/abelian.hpp"
#include "mackey/burnside.hpp"
#include "mackey/module.hpp"
#include "mackey/orbitmackey.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mackey {

using Simplex = std::vector<int>;  // sorted vertex ids

/// Finite simplicial complex of dimension ≤ 2, simplices listed per
/// dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Adds all faces of the given simplices.
  SimplicialComplex(int vertex_count, const std::vector<Simplex>& simplices);

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const { return cells_.empty() || cells_[0].empty(); }
  const std::vector<Simplex>& simplices(int dim) const;
  int count(int dim) const { return static_cast<int>(simplices(dim).size()); }
  /// -1 when absent.
  int index_of(const Simplex& s) const;
  long euler_characteristic() const;
  /// Boundary C_dim -> C_{dim-1} with the alternating face signs.
  IntMatrix boundary(int dim) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::map<Simplex, int>> lookup_;
};

struct Homology {
  bool empty = false;                  // the complex has no simplices
  std::vector<AbelianGroup> unreduced; // degrees 0..dim
  std::vector<AbelianGroup> reduced;   // degrees 0..dim; meaningless when empty
  bool acyclic() const;                // nonempty with vanishing reduced homology
};

Homology homology(const SimplicialComplex& x);

/// Simplicial complex with a group acting on its vertices.
struct SimpGComplex {
  SimplicialComplex complex;
  PermGroup group;
  GSet vertex_action;

  /// Image of a simplex, sorted.
  Simplex act(int g, const Simplex& s) const;
};

/// Every g stabilizing a simplex setwise fixes it pointwise.
bool is_admissible(const SimpGComplex& x);
/// Also throws Error when the vertex action does not permute simplices.
void validate(const SimpGComplex& x);

/// Subcomplex on the H-fixed vertices.  Throws Error for non-admissible x.
SimplicialComplex fixed_subcomplex(const SimpGComplex& x, const Subgroup& h);

/// Regular 2-dimensional CW complex with polygonal 2-cells, G acting on the
/// vertices.  Edges are sorted vertex pairs; 2-cells are closed vertex walks.
struct RegularGCW {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;
  PermGroup group;
  GSet vertex_action;

  int edge_index(int u, int v) const;
  /// Sorted edge indices on the boundary of a face.
  std::vector<int> face_edges(int f) const;
  /// Face with the same edge set as `walk`, or -1.
  int find_face(const std::vector<int>& walk) const;
  /// Cellular boundary: dim 1 sends an edge (u<v) to v - u; dim 2 sums the
  /// boundary walk's edges with the sign of their traversal.
  IntMatrix boundary(int dim) const;
  std::vector<int> cell_counts() const { return {vertex_count, static_cast<int>(edges.size()), static_cast<int>(faces.size())}; }
};

/// Checks that the boundary walks are closed, use existing edges without
/// repetition, and that the action permutes the cells.
void validate(const RegularGCW& x);
Homology homology(const RegularGCW& x);

/// Vertices of the result are the cells of x (vertices, then edges, then
/// faces); simplices are chains of cells.
SimpGComplex barycentric_subdivision(const RegularGCW& x);
/// Vertices of the result are the simplices of x in dimension-then-lex order.
SimpGComplex barycentric_subdivision(const SimpGComplex& x);

struct CellOrbit {
  Simplex base;          // cell whose stabilizer is the class representative
  Simplex min_cell;      // lexicographically smallest cell of the orbit
  int stabilizer_class;  // subgroup class index
  int size = 0;
};

/// Free chain complex over O_F G with one summand Z[-, G/K] per orbit of
/// simplices, augmented over Z̲.
struct BredonComplex {
  Family family;
  std::vector<std::vector<CellOrbit>> orbits;  // per dimension
  ChainComplex chain;

  /// Stabilizer class labels per dimension, in orbit order.
  std::vector<std::vector<std::string>> labels(const SubgroupClassTable& classes) const;
};

/// Throws Error if x is not admissible or a stabilizer lies outside F.
/// The engine's group must be the group of x.
BredonComplex bredon_complex(const SimpGComplex& x, const EnginePtr& engine, const Family& family);

/// Exact at every object: every fixed set X^H (H ∈ F) is nonempty and acyclic.
bool is_resolution_of_z(const BredonComplex& b, const AddCategory& orbit_cat);

/// H_n(C_*(X^-) ⊗ L) for a covariant module L over O_F G.
std::vector<AbelianGroup> bredon_homology_with_coeffs(const BredonComplex& b, const AddCategory& orbit_cat,
                                                      const LatticeModule& l);

}  // namespace mackey
