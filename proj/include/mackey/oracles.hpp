#pragma once

// Reference computations that reach the same answers as the main library by
// deliberately different routes.  Used by the tests and by `selftest`.

#include "mackey/burnside.hpp"
#include "mackey/category.hpp"
#include "mackey/gcw.hpp"
#include "mackey/module.hpp"
#include "mackey/orbitmackey.hpp"
#include "mackey/permgrp.hpp"

#include <string>
#include <vector>

namespace mackey::oracle {

/// Every subgroup, as the closure of the cyclic subgroups under pairwise joins.
/// Products are taken from the permutations themselves.
std::vector<Subgroup> all_subgroups(const PermGroup& g);

/// Same subgroups and the same conjugacy partition as `table`.  On mismatch
/// `why` receives a short description.
bool subgroup_table_matches(const PermGroup& g, const SubgroupClassTable& table, std::string* why = nullptr);

/// x * y through marks: multiply mark vectors pointwise and solve the
/// triangular mark system by exact back substitution.
BurnsideElement burnside_product_by_marks(const IntMatrix& marks, const BurnsideElement& x, const BurnsideElement& y);

/// g ∘ f for basis spans, by building G/L_f ->... as explicit G-sets, forming
/// the pullback point by point, and reading off each orbit.
HomCombo mackey_compose_by_pullback(const OrbitMackeyEngine& engine, int a, int b, int c, int f, int g);

/// Σ over S\G/K of the number of conjugacy classes of subgroups of S ∩ gKg^-1.
int mackey_rank_formula(const OrbitMackeyEngine& engine, int a, int b);

/// Coend M ⊗ L = ⊕_a M(a) ⊗ L(a) modulo M(f)m ⊗ l - m ⊗ L(f)l, for M
/// contravariant and L covariant.
AbelianGroup tensor_by_definition(const AddCategory& cat, const LatticeModule& m, const LatticeModule& l);

/// Homology of the Bredon complex evaluated at each family object equals the
/// unreduced homology of the fixed subcomplex.
bool bredon_matches_fixed_points(const BredonComplex& b, const AddCategory& orbit_cat, const SimpGComplex& x,
                                 const OrbitMackeyEngine& engine, std::string* why = nullptr);

}  // namespace mackey::oracle
