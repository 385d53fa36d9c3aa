#include "mackey/floyd_richardson.hpp"
#include "mackey/gcw.hpp"
#include "mackey/oracles.hpp"

#include <doctest.h>

using namespace mackey;

TEST_CASE("simplicial homology of small complexes") {
  SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
  Homology h = homology(circle);
  CHECK_FALSE(h.acyclic());
  CHECK(h.reduced[1].free_rank == 1);
  CHECK(circle.euler_characteristic() == 0);

  SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  Homology s = homology(sphere);
  CHECK(s.reduced[2].free_rank == 1);
  CHECK(s.reduced[1].is_zero());

  SimplicialComplex disc(3, {{0, 1, 2}});
  CHECK(homology(disc).acyclic());
  CHECK(homology(SimplicialComplex()).empty);
}

TEST_CASE("boundary squares to zero") {
  SimplicialComplex x(4, {{0, 1, 2, 3}});
  CHECK((x.boundary(1) * x.boundary(2)).isZero());
  CHECK((x.boundary(2) * x.boundary(3)).isZero());
}

TEST_CASE("subdivision of a triangle with the rotation action") {
  PermGroup c3 = named_group("C3");
  SimpGComplex t{SimplicialComplex(3, {{0, 1, 2}}), c3, GSet::from_table(3, [&] {
                   std::vector<std::vector<int>> table;
                   for (const Permutation& p : c3.elements()) table.push_back(p.images());
                   return table;
                 }())};
  CHECK_FALSE(is_admissible(t));
  SimpGComplex sd = barycentric_subdivision(t);
  CHECK(sd.complex.count(0) == 7);
  CHECK(sd.complex.count(1) == 12);
  CHECK(sd.complex.count(2) == 6);
  CHECK(is_admissible(sd));
  SimplicialComplex fixed = fixed_subcomplex(sd, c3.whole());
  CHECK(fixed.count(0) == 1);
}

TEST_CASE("Floyd-Richardson complexes") {
  const FloydRichardson& fr = floyd_richardson();
  CHECK(fr.m.cell_counts() == std::vector<int>{5, 10, 6});
  CHECK(homology(fr.m).acyclic());
  CHECK(fr.l.complex.count(0) == 21);
  CHECK(fr.l.complex.count(1) == 80);
  CHECK(fr.l.complex.count(2) == 60);
  CHECK(fr.l.complex.euler_characteristic() == 1);
  CHECK(fr.l2.complex.count(0) == 161);
  CHECK(fr.l2.complex.count(1) == 520);
  CHECK(fr.l2.complex.count(2) == 360);
  CHECK(fixed_subcomplex(fr.l, fr.m.group.whole()).empty());
  const int c5 = *fr.engine->classes().find_label("C5");
  CHECK(homology(fixed_subcomplex(fr.l, fr.engine->classes().representative(c5))).acyclic());
}

TEST_CASE("Bredon complex of L") {
  const FloydRichardson& fr = floyd_richardson();
  BredonComplex b = bredon_complex(fr.l, fr.engine, fr.proper);
  CHECK(b.chain.modules[2].size() == 1);
  CHECK(b.chain.modules[1].size() == 3);
  CHECK(b.chain.modules[0].size() == 3);
  CHECK(is_resolution_of_z(b, *fr.orbit));
  CHECK(oracle::bredon_matches_fixed_points(b, *fr.orbit, fr.l, *fr.engine));

  CategoryPtr all = orbit_category(fr.engine, fr.all);
  CHECK_FALSE(is_resolution_of_z(bredon_complex(fr.l, fr.engine, fr.all), *all));
}
