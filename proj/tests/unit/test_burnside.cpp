#include "mackey/burnside.hpp"
#include "mackey/oracles.hpp"

#include <doctest.h>

using namespace mackey;

namespace {

int label(const SubgroupClassTable& t, const std::string& name) {
  auto c = t.find_label(name);
  REQUIRE(c.has_value());
  return *c;
}

}  // namespace

TEST_CASE("coset G-sets and fixed points") {
  PermGroup g = named_group("A5");
  SubgroupClassTable t = enumerate_subgroup_classes(g);
  GSet x = coset_gset(g, t.representative(label(t, "A4")));
  CHECK(x.size() == 5);
  Subgroup c3 = g.generated_by({g.index_of(Permutation::from_cycles(5, {{0, 1, 2}}))});
  CHECK(fixed_points(x, c3).size() == 2);
}

TEST_CASE("table of marks") {
  PermGroup c2 = named_group("C2");
  IntMatrix m = table_of_marks(c2, enumerate_subgroup_classes(c2));
  IntMatrix expected(2, 2);
  expected << 2, 1, 0, 1;
  CHECK(m == expected);

  PermGroup a5 = named_group("A5");
  SubgroupClassTable t = enumerate_subgroup_classes(a5);
  IntMatrix ma = table_of_marks(a5, t);
  CHECK(ma.rows() == 9);
  CHECK(ma(0, 0) == 60);
  CHECK(ma(8, 8) == 1);
}

TEST_CASE("Burnside products") {
  PermGroup c2 = named_group("C2");
  SubgroupClassTable t2 = enumerate_subgroup_classes(c2);
  BurnsideElement free = BurnsideElement::basis(t2, 0);
  CHECK(burnside_multiply(c2, t2, free, free) == free + free);

  PermGroup a5 = named_group("A5");
  SubgroupClassTable t = enumerate_subgroup_classes(a5);
  BurnsideElement a4 = BurnsideElement::basis(t, label(t, "A4"));
  BurnsideElement c3 = BurnsideElement::basis(t, label(t, "C3"));
  BurnsideElement prod = burnside_multiply(a5, t, a4, a4);
  CHECK(prod == a4 + c3);
  CHECK(prod == oracle::burnside_product_by_marks(table_of_marks(a5, t), a4, a4));
}

TEST_CASE("pullbacks over a point") {
  PermGroup c2 = named_group("C2");
  SubgroupClassTable t = enumerate_subgroup_classes(c2);
  GSet free = coset_gset(c2, c2.trivial());
  GSet pt = point_gset(c2);
  Pullback p = pullback(free, free, pt, {0, 0}, {0, 0});
  CHECK(p.set.size() == 4);
  CHECK(is_equivariant(p.set, free, p.to_left));
  BurnsideElement d = decompose(c2, t, p.set);
  CHECK(d.coefficients(0) == 2);
  CHECK(d.coefficients(1) == 0);
}
