#include "mackey/oracles.hpp"
#include "mackey/orbitmackey.hpp"
#include "mackey/resolution.hpp"

#include <doctest.h>

using namespace mackey;

namespace {

struct Cats {
  EnginePtr engine;
  Family family;
  CategoryPtr orbit;
  CategoryPtr mackey;
};

Cats cats(const std::string& group, const std::string& family = "all") {
  Cats c;
  c.engine = make_engine(named_group(group));
  c.family = named_family(c.engine->classes(), family);
  c.orbit = orbit_category(c.engine, c.family);
  c.mackey = mackey_category(c.engine, c.family);
  return c;
}

int object(const Cats& c, const std::string& label) {
  auto cls = c.engine->classes().find_label(label);
  REQUIRE(cls.has_value());
  return c.family.object_of(*cls);
}

}  // namespace

TEST_CASE("orbit and Mackey hom ranks for C2") {
  Cats c = cats("C2");
  const int e = object(c, "e"), top = object(c, "C2");
  CHECK(c.orbit->hom_rank(e, e) == 2);
  CHECK(c.orbit->hom_rank(top, e) == 0);
  CHECK(c.mackey->hom_rank(top, top) == 2);
  CHECK(c.mackey->hom_rank(top, e) == 1);
  CHECK(c.orbit->check_laws());
  CHECK(c.mackey->check_laws());
}

TEST_CASE("Mackey hom ranks over A5") {
  Cats c = cats("A5");
  const int e = object(c, "e");
  CHECK(c.mackey->hom_rank(e, e) == 60);
  CHECK(c.mackey->hom_rank(object(c, "A5"), object(c, "A5")) == 9);
  CHECK(c.orbit->hom_rank(object(c, "A4"), object(c, "A4")) == 1);
  for (int a = 0; a < c.mackey->object_count(); ++a)
    for (int b = 0; b < c.mackey->object_count(); ++b)
      CHECK(c.mackey->hom_rank(a, b) == oracle::mackey_rank_formula(*c.engine, c.family.classes[static_cast<std::size_t>(a)],
                                                                     c.family.classes[static_cast<std::size_t>(b)]));
}

TEST_CASE("Mackey composition agrees with explicit pullbacks on S3") {
  Cats c = cats("S3");
  const int n = c.mackey->object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int f = 0; f < c.mackey->hom_rank(a, b); ++f)
          for (int g = 0; g < c.mackey->hom_rank(b, d); ++g)
            CHECK(c.mackey->compose(a, b, d, f, g) ==
                  oracle::mackey_compose_by_pullback(*c.engine, c.family.classes[static_cast<std::size_t>(a)],
                                                     c.family.classes[static_cast<std::size_t>(b)],
                                                     c.family.classes[static_cast<std::size_t>(d)], f, g));
}

TEST_CASE("pi is injective on basis elements") {
  Cats c = cats("C2");
  for (int a = 0; a < c.orbit->object_count(); ++a)
    for (int b = 0; b < c.orbit->object_count(); ++b) {
      std::vector<int> images;
      for (int f = 0; f < c.orbit->hom_rank(a, b); ++f) images.push_back(c.engine->pi(c.family.classes[static_cast<std::size_t>(a)], c.family.classes[static_cast<std::size_t>(b)], f));
      std::sort(images.begin(), images.end());
      CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
}

TEST_CASE("representable modules") {
  Cats c = cats("C2");
  LatticeModule o = representable(*c.orbit, object(c, "e"));
  CHECK(o.rank(object(c, "e")) == 2);
  CHECK(check_functorial(*c.orbit, o));
  LatticeModule m = representable(*c.mackey, object(c, "C2"));
  CHECK(m.rank(object(c, "C2")) == 2);
  CHECK(check_functorial(*c.mackey, m));
}

TEST_CASE("Burnside functor ranks over A5") {
  Cats c = cats("A5");
  LatticeModule a = burnside_functor(c.engine, c.family);
  std::vector<int> ranks;
  for (int i = 0; i < c.mackey->object_count(); ++i) ranks.push_back(a.rank(i));
  CHECK(ranks == std::vector<int>{1, 2, 2, 5, 2, 4, 4, 5, 9});
  CHECK(check_functorial(*c.mackey, a));
}

TEST_CASE("Burnside functor is representable over the full family") {
  for (std::string g : {"C2", "S3"}) {
    Cats c = cats(g);
    ChainComplex r = resolve(*c.mackey, burnside_functor(c.engine, c.family), 2);
    CHECK(r.complete);
    CHECK(r.length() == 0);
    REQUIRE(r.modules[0].size() == 1);
    CHECK(r.modules[0].summands[0] == c.mackey->object_count() - 1);
  }
}

TEST_CASE("restriction of a representable follows double cosets") {
  Cats c = cats("A5");
  PermGroup g = named_group("A5");
  Subgroup k = g.generated_by({g.index_of(Permutation::from_cycles(5, {{0, 1}, {2, 3}}))});
  auto parts = restrict_to_subgroup(*c.engine, k, *c.engine->classes().find_label("A4"));
  REQUIRE(parts.size() == 3);
  std::vector<std::size_t> orders;
  for (const auto& p : parts) orders.push_back(p.intersection.size());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("adjunction between res and ind holds on random free modules") {
  Cats c = cats("S3");
  FreeModule n{{0, 1, 3}};
  CHECK(adjunction_check(c.engine, c.family, n, burnside_functor(c.engine, c.family)));
  CHECK(adjunction_check(c.engine, c.family, FreeModule{{2}}, representable(*c.mackey, 1)));
}
