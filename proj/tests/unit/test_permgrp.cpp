#include "mackey/burnside.hpp"
#include "mackey/oracles.hpp"
#include "mackey/permgrp.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mackey;

TEST_CASE("permutation products compose right to left") {
  Permutation p = Permutation::from_cycles(3, {{0, 1}});
  Permutation q = Permutation::from_cycles(3, {{1, 2}});
  CHECK((p * q)(1) == p(q(1)));
  CHECK((p * q)(1) == 2);
  CHECK((q * p)(1) == 0);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("closure of two generators gives A5") {
  PermGroup g(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})});
  CHECK(g.order() == 60);
  CHECK(named_group("A5").order() == 60);
}

TEST_CASE("subgroup classes of A5 and S3") {
  PermGroup a5 = named_group("A5");
  SubgroupClassTable t = enumerate_subgroup_classes(a5);
  REQUIRE(t.class_count() == 9);
  std::vector<std::size_t> orders;
  for (const auto& c : t.classes) orders.push_back(c.order);
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 10, 12, 60});
  CHECK(t.subgroup_count() == 59);
  CHECK(oracle::subgroup_table_matches(a5, t));

  PermGroup s3 = named_group("S3");
  SubgroupClassTable u = enumerate_subgroup_classes(s3);
  CHECK(u.class_count() == 4);
  CHECK(oracle::subgroup_table_matches(s3, u));
}

TEST_CASE("conjugacy classes of A5") {
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(named_group("A5"))) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("double cosets, normalizers and Weyl groups") {
  PermGroup g = named_group("A5");
  Subgroup s = g.generated_by({g.index_of(Permutation::from_cycles(5, {{0, 1}, {2, 3}}))});
  Subgroup k;
  for (int x = 0; x < g.size(); ++x)
    if (g.act(x, 4) == 4) k.push_back(x);
  std::size_t total = 0;
  auto dcs = double_cosets(g, s, k);
  for (const auto& d : dcs) total += d.size;
  CHECK(dcs.size() == 3);
  CHECK(total == 60);

  Subgroup c5 = g.generated_by({g.index_of(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}))});
  CHECK(normalizer(g, c5).size() == 10);
  CHECK(weyl_group(g, c5).quotient.order() == 2);
}

TEST_CASE("unknown catalogue names are rejected") { CHECK_THROWS_AS(named_group("no-such-group"), Error); }
