#include "mackey/floyd_richardson.hpp"
#include "mackey/orbitmackey.hpp"
#include "mackey/serialize.hpp"

#include <doctest.h>

using namespace mackey;

TEST_CASE("group round trip") {
  PermGroup g = named_group("A5");
  PermGroup back = group_from_json(Json::parse(dump(group_to_json(g))));
  CHECK(back.order() == 60);
  CHECK(back.elements() == g.elements());
  CHECK(group_from_json(Json("S3")).order() == 6);
  CHECK_THROWS(group_from_json(Json{{"degree", 3}, {"generators", {{0, 0, 1}}}}));
}

TEST_CASE("complex round trip keeps the content hash") {
  const FloydRichardson& fr = floyd_richardson();
  Json j = complex_to_json(fr.l);
  SimpGComplex back = complex_from_json(Json::parse(dump(j)));
  CHECK(back.complex.count(2) == 60);
  CHECK(content_hash(complex_to_json(back)) == content_hash(j));

  Json r = regular_to_json(fr.m);
  CHECK(regular_from_json(r).cell_counts() == std::vector<int>{5, 10, 6});
}

TEST_CASE("morphism round trip") {
  const FloydRichardson& fr = floyd_richardson();
  BredonComplex b = bredon_complex(fr.l, fr.engine, fr.proper);
  const ModMorphism& d = b.chain.differentials[1];
  CHECK(morphism_from_json(*fr.orbit, morphism_to_json(*fr.orbit, d)) == d);
}

TEST_CASE("reports omit wall time unless asked") {
  VerificationReport r;
  r.target = "demo";
  r.add("ok", true);
  r.wall_seconds = 1.5;
  Json plain = report_to_json(r);
  CHECK_FALSE(plain.contains("wall_seconds"));
  CHECK(plain["pass"] == true);
  CHECK(report_to_json(r, true)["wall_seconds"] == 1.5);
  r.add("bad", false);
  CHECK_FALSE(r.pass());
}

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
