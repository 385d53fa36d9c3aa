#include "mackey/abelian.hpp"

#include "mackey/smith.hpp"

#include <sstream>

namespace mackey {

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const Integer& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

AbelianGroup cokernel(const IntMatrix& a) {
  AbelianGroup g;
  if (a.cols() == 0) {
    g.free_rank = a.rows();
    return g;
  }
  SmithForm snf = smith_normal_form(a);
  g.free_rank = a.rows() - snf.rank();
  for (const Integer& d : snf.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup subquotient(Eigen::Index dim, const IntMatrix& outgoing, const IntMatrix& incoming) {
  if (outgoing.cols() != dim && outgoing.size() != 0) throw Error("subquotient: outgoing map has wrong source");
  if (incoming.rows() != dim && incoming.size() != 0) throw Error("subquotient: incoming map has wrong target");
  AbelianGroup g;
  Eigen::Index out_rank = outgoing.size() == 0 ? 0 : integer_rank(outgoing);
  Eigen::Index in_rank = 0;
  if (incoming.size() != 0) {
    SmithForm snf = smith_normal_form(incoming);
    in_rank = snf.rank();
    for (const Integer& d : snf.invariant_factors)
      if (d != 1) g.torsion.push_back(d);
  }
  g.free_rank = dim - out_rank - in_rank;
  return g;
}

}  // namespace mackey
