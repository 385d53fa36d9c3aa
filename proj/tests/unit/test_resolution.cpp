#include "mackey/orbitmackey.hpp"
#include "mackey/oracles.hpp"
#include "mackey/resolution.hpp"

#include <doctest.h>

using namespace mackey;

TEST_CASE("free cover of the constant functor over the C2 orbit category") {
  EnginePtr engine = make_engine(named_group("C2"));
  Family family = named_family(engine->classes(), "all");
  CategoryPtr o = orbit_category(engine, family);
  LatticeModule z = constant_functor(engine, family);
  ChainComplex r = resolve(*o, z, 3);
  CHECK(r.complete);
  CHECK(r.length() == 0);
  CHECK(r.modules[0].summands == std::vector<int>{1});
  CHECK(ext(*o, r, z, 1).is_zero());
}

TEST_CASE("resolutions are exact and square to zero") {
  EnginePtr engine = make_engine(named_group("C3"));
  Family family = named_family(engine->classes(), "trivial");
  CategoryPtr o = orbit_category(engine, family);
  ChainComplex r = resolve(*o, constant_functor(engine, family), 4);
  CHECK(is_chain_complex(*o, r));
  CHECK(is_exact(*o, r, r.length() - 1));
  CHECK(ext(*o, r, constant_functor(engine, family), 2).torsion == std::vector<Integer>{3});
}

TEST_CASE("split surjection and left inverse") {
  EnginePtr engine = make_engine(named_group("C2"));
  Family family = named_family(engine->classes(), "all");
  CategoryPtr m = mackey_category(engine, family);
  FreeModule one{{0}}, two{{0, 1}};
  ModMorphism inc = ModMorphism::zero(*m, one, two);
  inc.entry(0, 0) = m->identity_vector(0);
  auto r = left_inverse(*m, inc);
  REQUIRE(r.has_value());
  CHECK(compose(*m, *r, inc) == ModMorphism::identity(*m, one));

  ModMorphism proj = ModMorphism::zero(*m, two, one);
  proj.entry(0, 0) = m->identity_vector(0);
  ModMorphism id = ModMorphism::identity(*m, one);
  auto s = split_surjection(*m, id, proj);
  REQUIRE(s.has_value());
  CHECK(verify_section(*m, id, proj, *s));

  ModMorphism twice = ModMorphism::identity(*m, one);
  twice.entry(0, 0) *= 2;
  CHECK_FALSE(left_inverse(*m, twice).has_value());
}

TEST_CASE("tensor products agree with the coend definition") {
  EnginePtr engine = make_engine(named_group("S3"));
  Family family = named_family(engine->classes(), "all");
  CategoryPtr o = orbit_category(engine, family);
  for (int a = 0; a < o->object_count(); ++a) {
    FreeModule f{{a}};
    LatticeModule l = representable(*o, (a + 1) % o->object_count(), Variance::covariant);
    AbelianGroup lhs = tensor_over_category(*o, free_presentation(*o, f), l);
    AbelianGroup rhs = oracle::tensor_by_definition(*o, free_lattice(*o, f), l);
    CHECK(lhs == rhs);
    CHECK(lhs.free_rank == l.rank(a));
  }
}

TEST_CASE("Hom from a representable is evaluation") {
  EnginePtr engine = make_engine(named_group("S3"));
  Family family = named_family(engine->classes(), "all");
  CategoryPtr m = mackey_category(engine, family);
  LatticeModule a = burnside_functor(engine, family);
  for (int x = 0; x < m->object_count(); ++x) {
    AbelianGroup h = hom_group(*m, free_presentation(*m, FreeModule{{x}}), a);
    CHECK(h.free_rank == a.rank(x));
    CHECK(h.torsion.empty());
  }
}
