#include "mackey/oracles.hpp"

#include "mackey/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mackey::oracle {

namespace {

// Closure computed from Permutation products, independent of PermGroup::multiply.
Subgroup closure(const PermGroup& g, std::set<int> gens) {
  std::set<Permutation> elems{Permutation::identity(g.degree())};
  std::vector<Permutation> frontier{Permutation::identity(g.degree())};
  std::vector<Permutation> gp;
  for (int x : gens) gp.push_back(g.element(x));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& q : gp) {
        Permutation r = p * q;
        if (elems.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  Subgroup out;
  for (const Permutation& p : elems) out.push_back(g.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  std::set<Subgroup> found;
  for (int x = 0; x < g.size(); ++x) found.insert(closure(g, {x}));
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    std::vector<Subgroup> snapshot(found.begin(), found.end());
    for (const Subgroup& a : frontier)
      for (const Subgroup& b : snapshot) {
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()) || std::includes(b.begin(), b.end(), a.begin(), a.end()))
          continue;
        std::set<int> gens(a.begin(), a.end());
        gens.insert(b.begin(), b.end());
        Subgroup j = closure(g, gens);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool subgroup_table_matches(const PermGroup& g, const SubgroupClassTable& table, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<Subgroup> subs = all_subgroups(g);
  std::set<Subgroup> expected(subs.begin(), subs.end());
  std::set<Subgroup> got(table.subgroups.begin(), table.subgroups.end());
  if (expected != got)
    return fail("subgroup sets differ: oracle " + std::to_string(expected.size()) + ", table " + std::to_string(got.size()));

  // conjugacy partition by explicit conjugation of element sets
  std::map<Subgroup, int> oracle_class;
  int next_class = 0;
  for (const Subgroup& h : subs) {
    if (oracle_class.count(h)) continue;
    for (int x = 0; x < g.size(); ++x) {
      Subgroup c;
      for (int e : h) c.push_back(g.index_of(g.element(x) * g.element(e) * g.element(x).inverse()));
      std::sort(c.begin(), c.end());
      oracle_class.emplace(c, next_class);
    }
    ++next_class;
  }
  if (next_class != table.class_count())
    return fail("class counts differ: oracle " + std::to_string(next_class) + ", table " + std::to_string(table.class_count()));
  for (const Subgroup& a : subs)
    for (const Subgroup& b : subs) {
      const bool same = oracle_class[a] == oracle_class[b];
      if (same != (table.class_of_subgroup(a) == table.class_of_subgroup(b))) return fail("conjugacy partitions differ");
    }
  return true;
}

BurnsideElement burnside_product_by_marks(const IntMatrix& marks, const BurnsideElement& x, const BurnsideElement& y) {
  const Eigen::Index n = marks.rows();
  IntVector mx = marks * x.coefficients;
  IntVector my = marks * y.coefficients;
  IntVector v = mx.cwiseProduct(my);
  // marks(h, k) = 0 unless h is subconjugate to k, and classes are sorted by
  // order, so the system is upper triangular.
  IntVector c = IntVector::Zero(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    std::int64_t rest = v(k);
    for (Eigen::Index j = k + 1; j < n; ++j) rest -= marks(k, j) * c(j);
    if (marks(k, k) == 0 || rest % marks(k, k) != 0) throw Error("mark system has no integral solution");
    c(k) = rest / marks(k, k);
  }
  return {c};
}

HomCombo mackey_compose_by_pullback(const OrbitMackeyEngine& engine, int a, int b, int c, int f, int g) {
  const PermGroup& G = engine.group();
  const SubgroupClassTable& table = engine.classes();
  const SpanLabel sf = engine.mackey_basis(a, b)[static_cast<std::size_t>(f)];
  const SpanLabel sg = engine.mackey_basis(b, c)[static_cast<std::size_t>(g)];

  const CosetSpace& over_s = engine.cosets(engine.rep_id(a));
  const CosetSpace& over_k = engine.cosets(engine.rep_id(b));
  const CosetSpace& over_t = engine.cosets(engine.rep_id(c));
  const CosetSpace& x_set = engine.cosets(sf.middle);
  const CosetSpace& y_set = engine.cosets(sg.middle);
  const int t_rep = over_k.representative[static_cast<std::size_t>(sf.coset)];
  const int u_rep = over_t.representative[static_cast<std::size_t>(sg.coset)];

  // legs as functions of a coset representative element
  auto beta_f = [&](int xp) { return over_k.coset_of[static_cast<std::size_t>(G.multiply(x_set.representative[static_cast<std::size_t>(xp)], t_rep))]; };
  auto alpha_g = [&](int yp) { return over_k.coset_of[static_cast<std::size_t>(y_set.representative[static_cast<std::size_t>(yp)])]; };

  std::vector<std::pair<int, int>> points;
  for (int xp = 0; xp < x_set.size(); ++xp)
    for (int yp = 0; yp < y_set.size(); ++yp)
      if (beta_f(xp) == alpha_g(yp)) points.emplace_back(xp, yp);
  std::set<std::pair<int, int>> unseen(points.begin(), points.end());

  std::map<int, std::int64_t> out;
  while (!unseen.empty()) {
    const auto p = *unseen.begin();
    Subgroup stab;
    for (int h = 0; h < G.size(); ++h) {
      std::pair<int, int> img{x_set.act(G, h, p.first), y_set.act(G, h, p.second)};
      unseen.erase(img);
      if (img == p) stab.push_back(h);
    }
    // legs of this orbit, translated so the left leg sends the point to eS
    const int xrep = x_set.representative[static_cast<std::size_t>(p.first)];
    const int left_coset = over_s.coset_of[static_cast<std::size_t>(xrep)];
    const int a_elem = over_s.representative[static_cast<std::size_t>(left_coset)];
    const int ainv = G.inverse(a_elem);
    const int yrep = y_set.representative[static_cast<std::size_t>(p.second)];
    const int right = over_t.coset_of[static_cast<std::size_t>(G.multiply(ainv, G.multiply(yrep, u_rep)))];
    const Subgroup middle = G.conjugate(ainv, stab);

    // minimize over the S-action by brute force
    std::tuple<int, int, int> best{1 << 30, 0, 0};
    for (int s : table.representative(a)) {
      Subgroup m2 = G.conjugate(s, middle);
      const int id = table.subgroup_id(m2);
      const int cos = over_t.act(G, s, right);
      best = std::min(best, std::make_tuple(table.class_of[static_cast<std::size_t>(id)], id, cos));
    }
    const auto& basis = engine.mackey_basis(a, c);
    const SpanLabel label{std::get<1>(best), std::get<2>(best)};
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) throw Error("pullback orbit does not match a basis span");
    out[static_cast<int>(it - basis.begin())] += 1;
  }
  HomCombo combo;
  for (auto [idx, coeff] : out) combo.push_back({idx, coeff});
  return combo;
}

int mackey_rank_formula(const OrbitMackeyEngine& engine, int a, int b) {
  const PermGroup& G = engine.group();
  const SubgroupClassTable& table = engine.classes();
  const Subgroup& s = table.representative(a);
  const CosetSpace& over_k = engine.cosets(engine.rep_id(b));
  const Subgroup& k = table.representative(b);

  std::vector<bool> seen(static_cast<std::size_t>(over_k.size()), false);
  int total = 0;
  for (int start = 0; start < over_k.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    for (int x : s) seen[static_cast<std::size_t>(over_k.act(G, x, start))] = true;
    const int rep = over_k.representative[static_cast<std::size_t>(start)];
    Subgroup inter = intersect(s, G.conjugate(rep, k));
    // subgroups of the intersection up to conjugation inside it
    std::vector<Subgroup> subs;
    for (const Subgroup& h : table.subgroups)
      if (is_subset(h, inter)) subs.push_back(h);
    std::set<Subgroup> counted;
    for (const Subgroup& h : subs) {
      if (counted.count(h)) continue;
      ++total;
      for (int x : inter) counted.insert(G.conjugate(x, h));
    }
  }
  return total;
}

AbelianGroup tensor_by_definition(const AddCategory& cat, const LatticeModule& m, const LatticeModule& l) {
  if (m.variance != Variance::contravariant || l.variance != Variance::covariant)
    throw Error("tensor_by_definition expects a contravariant and a covariant module");
  const int n = cat.object_count();
  std::vector<int> offset{0};
  for (int a = 0; a < n; ++a) offset.push_back(offset.back() + m.rank(a) * l.rank(a));
  std::vector<IntVector> relations;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < cat.hom_rank(a, b); ++f) {
        const IntMatrix& mf = m.act(a, b, f);  // M(b) -> M(a)
        const IntMatrix& lf = l.act(a, b, f);  // L(a) -> L(b)
        for (int i = 0; i < m.rank(b); ++i)
          for (int j = 0; j < l.rank(a); ++j) {
            IntVector r = IntVector::Zero(offset.back());
            for (int p = 0; p < m.rank(a); ++p) r(offset[a] + p * l.rank(a) + j) += mf(p, i);
            for (int q = 0; q < l.rank(b); ++q) r(offset[b] + i * l.rank(b) + q) -= lf(q, j);
            if (!r.isZero()) relations.push_back(std::move(r));
          }
      }
  IntMatrix rel(offset.back(), static_cast<Eigen::Index>(relations.size()));
  for (std::size_t k = 0; k < relations.size(); ++k) rel.col(static_cast<Eigen::Index>(k)) = relations[k];
  return cokernel(rel);
}

bool bredon_matches_fixed_points(const BredonComplex& b, const AddCategory& orbit_cat, const SimpGComplex& x,
                                 const OrbitMackeyEngine& engine, std::string* why) {
  ChainComplex plain;
  plain.modules = b.chain.modules;
  plain.differentials = b.chain.differentials;
  for (std::size_t obj = 0; obj < b.family.classes.size(); ++obj) {
    const int cls = b.family.classes[obj];
    Homology h = homology(fixed_subcomplex(x, engine.classes().representative(cls)));
    for (int n = 0; n <= plain.length(); ++n) {
      AbelianGroup expected = n < static_cast<int>(h.unreduced.size()) ? h.unreduced[static_cast<std::size_t>(n)] : AbelianGroup{};
      AbelianGroup got = homology(orbit_cat, plain, n, static_cast<int>(obj));
      if (!(expected == got)) {
        if (why)
          *why = "class " + engine.classes().classes[static_cast<std::size_t>(cls)].label + " degree " + std::to_string(n) +
                 ": fixed " + expected.to_string() + ", Bredon " + got.to_string();
        return false;
      }
    }
  }
  return true;
}

}  // namespace mackey::oracle
