#pragma once

// Orbit categories O_F G and Mackey (Burnside) categories M_F G of a finite
// group, the comparison functor π: O_F G -> M_F G, and the induced
// restriction and induction of modules.
//
// Objects are subgroup classes, realized by their representatives.
//
//  * A basis of Hom_O(G/H, G/K) is the set of cosets tK fixed by H; the map
//    sends eH to tK.
//  * A basis of Hom_M(G/S, G/K) is the set of S-orbits of pairs (L, tK) with
//    L ≤ S fixing tK, standing for the span G/S <- G/L -> G/K.  Each orbit
//    is labelled by its member minimizing (class of L, subgroup id of L,
//    coset index of tK).
//  * Mackey composition forms the pullback of the two spans and decomposes it
//    into orbits.

#include "mackey/burnside.hpp"
#include "mackey/category.hpp"
#include "mackey/module.hpp"
#include "mackey/permgrp.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mackey {

struct SpanLabel {
  int middle = 0;  // subgroup id of L
  int coset = 0;   // coset index of tK in G/K
  friend auto operator<=>(const SpanLabel&, const SpanLabel&) = default;
};

class OrbitMackeyEngine {
 public:
  explicit OrbitMackeyEngine(PermGroup g);

  const PermGroup& group() const { return group_; }
  const SubgroupClassTable& classes() const { return classes_; }
  int class_count() const { return classes_.class_count(); }
  /// Subgroup id of the representative of class c.
  int rep_id(int c) const { return rep_id_[static_cast<std::size_t>(c)]; }
  const Subgroup& subgroup(int id) const { return classes_.subgroups[static_cast<std::size_t>(id)]; }
  const CosetSpace& cosets(int id) const { return cosets_[static_cast<std::size_t>(id)]; }
  /// Subgroup id of g L g^-1.
  int conjugate(int g, int id) const {
    return conj_[static_cast<std::size_t>(g) * classes_.subgroups.size() + static_cast<std::size_t>(id)];
  }
  int intersection(int a, int b) const {
    return meet_[static_cast<std::size_t>(a) * classes_.subgroups.size() + static_cast<std::size_t>(b)];
  }

  /// Coset indices (in G/K_b) forming the basis of Hom_O(G/H_a, G/K_b).
  const std::vector<int>& orbit_basis(int a, int b) const { return orbit_basis_[idx(a, b)]; }
  int orbit_index(int a, int b, int coset) const;
  const std::vector<SpanLabel>& mackey_basis(int a, int b) const { return mackey_basis_[idx(a, b)]; }
  /// Basis index of the class of (L, tK), for L ≤ S_a fixing tK.
  int mackey_index(int a, int b, SpanLabel span) const;
  SpanLabel canonical(int a, int b, SpanLabel span) const;

  HomCombo orbit_compose(int a, int b, int c, int f, int g) const;
  HomCombo mackey_compose(int a, int b, int c, int f, int g) const;
  /// π on basis elements.
  int pi(int a, int b, int f) const;

  std::string span_label(int a, int b, int f) const;
  std::string orbit_label(int a, int b, int f) const;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(class_count()) + static_cast<std::size_t>(b);
  }

  PermGroup group_;
  SubgroupClassTable classes_;
  std::vector<int> rep_id_;
  std::vector<CosetSpace> cosets_;
  std::vector<int> conj_;
  std::vector<int> meet_;
  std::vector<std::vector<int>> orbit_basis_;
  std::vector<std::vector<int>> orbit_lookup_;  // coset -> basis index or -1
  std::vector<std::vector<SpanLabel>> mackey_basis_;
  std::vector<std::map<SpanLabel, int>> mackey_lookup_;
};

using EnginePtr = std::shared_ptr<const OrbitMackeyEngine>;

EnginePtr make_engine(const PermGroup& g);

/// Subgroup classes closed under conjugation and passage to subgroups.
struct Family {
  std::vector<int> classes;  // ascending class indices; category object i is classes[i]
  int object_of(int cls) const;
  bool contains(int cls) const { return object_of(cls) >= 0; }
};

/// Throws Error if the set is not closed under subgroups or lacks e.
Family make_family(const SubgroupClassTable& table, std::vector<int> classes);
/// "all", "proper", "trivial", or comma-separated class labels.
Family named_family(const SubgroupClassTable& table, const std::string& name);

CategoryPtr orbit_category(const EnginePtr& engine, const Family& family);
CategoryPtr mackey_category(const EnginePtr& engine, const Family& family);

/// π on a hom vector between family objects a, b.
HomVector pi_map(const OrbitMackeyEngine& engine, const Family& family, int a, int b, const HomVector& v);
/// Entrywise π; summand Z[-, G/H] goes to Z^G[-, H].
ModMorphism ind_pi(const OrbitMackeyEngine& engine, const Family& family, const ModMorphism& m);
PresentedModule ind_pi(const OrbitMackeyEngine& engine, const Family& family, const PresentedModule& m);
/// Induces a free complex.  An augmentation onto the constant module goes to
/// the augmentation onto the Burnside functor sending each generator to the
/// unit of A(H).
ChainComplex ind_pi(const EnginePtr& engine, const Family& family, const ChainComplex& c);
/// M ∘ π for a contravariant or covariant module over the Mackey category.
LatticeModule res_pi(const OrbitMackeyEngine& engine, const Family& family, const LatticeModule& m);

/// H ↦ A(H) over M_F G, i.e. Z^G[-, G] restricted to the family.
LatticeModule burnside_functor(const EnginePtr& engine, const Family& family);
/// Z̲ over O_F G.
LatticeModule constant_functor(const EnginePtr& engine, const Family& family);
/// Direct sum of representables as a LatticeModule.
LatticeModule free_lattice(const AddCategory& cat, const FreeModule& f, Variance variance = Variance::contravariant);

/// Rank equality for Hom_O(N, res_π M) and Hom_M(ind_π N, M), each computed
/// by solving the naturality equations.
bool adjunction_check(const EnginePtr& engine, const Family& family, const FreeModule& n, const LatticeModule& m);

struct RestrictedSummand {
  int double_coset_rep = 0;  // element of G
  Subgroup intersection;     // K ∩ gLg^-1, as element indices of G
  int class_in_k = 0;        // class of the intersection among subgroups of K
};

/// res^G_K Z[-, G/L] = ⊕_{KgL} Z[-, K/(K ∩ gLg^-1)].
std::vector<RestrictedSummand> restrict_to_subgroup(const OrbitMackeyEngine& engine, const Subgroup& k, int l_class);

struct Lemma42Result {
  bool ind_zero = false;
  bool m_zero = false;
  bool holds() const { return !ind_zero || m_zero; }
};
/// Compares ind_π(M)(G/K) with M(G/K) for M presented over O_F G; `object`
/// is the family object of K.
Lemma42Result lemma42_check(const EnginePtr& engine, const Family& family, const PresentedModule& m, int object);

}  // namespace mackey
