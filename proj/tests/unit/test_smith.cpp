#include "mackey/abelian.hpp"
#include "mackey/smith.hpp"

#include <doctest.h>

using namespace mackey;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (std::int64_t v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

BigMatrix big(const IntMatrix& m) { return m.cast<Integer>(); }

}  // namespace

TEST_CASE("smith normal form of a 2x2 matrix") {
  SmithForm s = smith_normal_form(mat({{2, 4}, {6, 8}}));
  REQUIRE(s.rank() == 2);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 4);
}

TEST_CASE("smith transforms reproduce the diagonal") {
  IntMatrix a = mat({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}});
  SmithForm s = smith_normal_form(a, Transforms::both);
  REQUIRE(s.has_transforms());
  BigMatrix d = s.U * big(a) * s.V;
  CHECK(d == s.diagonal());
  for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
    CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
}

TEST_CASE("large entries fall back to arbitrary precision") {
  const std::int64_t huge = std::int64_t{1} << 61;
  IntMatrix a = mat({{huge, huge - 1}, {huge - 1, huge}});
  SmithForm s = smith_normal_form(a);
  REQUIRE(s.rank() == 2);
  CHECK(s.invariant_factors[0] == 1);
  Integer det = Integer(huge) * huge - Integer(huge - 1) * (huge - 1);
  CHECK(s.invariant_factors[1] == det);
}

TEST_CASE("hermite normal form has the expected rank and transform") {
  IntMatrix a = mat({{2, 3, 6}, {4, 6, 12}, {1, 0, 1}});
  HermiteForm h = hermite_normal_form(a, true);
  CHECK(h.rank == 2);
  CHECK(h.U * big(a) == h.H);
}

TEST_CASE("kernel basis and integer solving") {
  IntMatrix a = mat({{1, 2, 3}, {2, 4, 6}});
  BigMatrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK((big(a) * k).isZero());

  BigMatrix lhs = big(mat({{2, 0}, {0, 3}}));
  CHECK(solve_integer(lhs, big(mat({{4}, {9}}))).has_value());
  CHECK_FALSE(solve_integer(lhs, big(mat({{1}, {0}}))).has_value());
  CHECK(integer_rank(a) == 1);
}

TEST_CASE("cokernels") {
  AbelianGroup g = cokernel(mat({{2, 0}, {0, 6}, {0, 0}}));
  CHECK(g.free_rank == 1);
  REQUIRE(g.torsion.size() == 2);
  CHECK(g.torsion[0] == 2);
  CHECK(g.torsion[1] == 6);
  CHECK(cokernel(mat({{1, 0}, {0, -1}})).is_zero());
}
