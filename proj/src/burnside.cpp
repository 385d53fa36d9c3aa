#include "mackey/burnside.hpp"

#include <algorithm>
#include <map>

namespace mackey {

CosetSpace::CosetSpace(const PermGroup& g, const Subgroup& h) : subgroup(h), coset_of(static_cast<std::size_t>(g.size()), -1) {
  for (int x = 0; x < g.size(); ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int c = static_cast<int>(representative.size());
    representative.push_back(x);
    for (int y : h) coset_of[static_cast<std::size_t>(g.multiply(x, y))] = c;
  }
}

GSet GSet::from_generator_images(const PermGroup& g, int points, const std::vector<std::vector<int>>& images) {
  const auto gens = g.generator_indices();
  if (images.size() != gens.size()) throw Error("G-set needs one image list per group generator");
  for (const auto& im : images) {
    if (static_cast<int>(im.size()) != points) throw Error("G-set generator image has wrong length");
    for (int v : im)
      if (v < 0 || v >= points) throw Error("G-set image out of range");
  }
  const int n = g.size();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
  std::vector<int> id(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) id[static_cast<std::size_t>(i)] = i;
  table[0] = id;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int p = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int q = g.multiply(gens[k], p);
      std::vector<int> act(static_cast<std::size_t>(points));
      for (int x = 0; x < points; ++x)
        act[static_cast<std::size_t>(x)] = images[k][static_cast<std::size_t>(table[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)])];
      auto& slot = table[static_cast<std::size_t>(q)];
      if (slot.empty()) {
        slot = std::move(act);
        queue.push_back(q);
      } else if (slot != act) {
        throw Error("generator images do not define a group action");
      }
    }
  }
  return from_table(points, std::move(table));
}

GSet GSet::from_table(int points, std::vector<std::vector<int>> table) {
  GSet x;
  x.points_ = points;
  x.table_ = std::move(table);
  return x;
}

Subgroup GSet::stabilizer(int point) const {
  Subgroup out;
  for (int e = 0; e < group_order(); ++e)
    if (act(e, point) == point) out.push_back(e);
  return out;
}

std::vector<Orbit> GSet::orbits(const PermGroup&, const SubgroupClassTable& classes) const {
  std::vector<char> done(static_cast<std::size_t>(points_), 0);
  std::vector<Orbit> out;
  for (int p = 0; p < points_; ++p) {
    if (done[static_cast<std::size_t>(p)]) continue;
    Orbit o;
    for (int e = 0; e < group_order(); ++e) {
      int q = act(e, p);
      if (!done[static_cast<std::size_t>(q)]) {
        done[static_cast<std::size_t>(q)] = 1;
        o.points.push_back(q);
      }
    }
    std::sort(o.points.begin(), o.points.end());
    o.stabilizer = stabilizer(p);
    o.stabilizer_class = classes.class_of_subgroup(o.stabilizer);
    out.push_back(std::move(o));
  }
  return out;
}

GSet coset_gset(const PermGroup& g, const Subgroup& h) {
  CosetSpace cs(g, h);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(g.size()), std::vector<int>(static_cast<std::size_t>(cs.size())));
  for (int e = 0; e < g.size(); ++e)
    for (int c = 0; c < cs.size(); ++c) table[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)] = cs.act(g, e, c);
  return GSet::from_table(cs.size(), std::move(table));
}

GSet point_gset(const PermGroup& g) { return coset_gset(g, g.whole()); }

std::vector<int> fixed_points(const GSet& x, const Subgroup& h) {
  std::vector<int> out;
  for (int p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int e : h)
      if (x.act(e, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

IntMatrix table_of_marks(const PermGroup& g, const SubgroupClassTable& classes) {
  const int m = classes.class_count();
  IntMatrix marks(m, m);
  for (int k = 0; k < m; ++k) {
    GSet x = coset_gset(g, classes.representative(k));
    for (int h = 0; h < m; ++h) marks(h, k) = static_cast<std::int64_t>(fixed_points(x, classes.representative(h)).size());
  }
  return marks;
}

BurnsideElement BurnsideElement::basis(const SubgroupClassTable& classes, int cls) {
  BurnsideElement x = zero(classes);
  x.coefficients(cls) = 1;
  return x;
}

BurnsideElement BurnsideElement::zero(const SubgroupClassTable& classes) {
  return {IntVector::Zero(classes.class_count())};
}

BurnsideElement decompose(const PermGroup& g, const SubgroupClassTable& classes, const GSet& x) {
  BurnsideElement out = BurnsideElement::zero(classes);
  for (const Orbit& o : x.orbits(g, classes)) out.coefficients(o.stabilizer_class) += 1;
  return out;
}

BurnsideElement burnside_multiply(const PermGroup& g, const SubgroupClassTable& classes, const BurnsideElement& a,
                                  const BurnsideElement& b) {
  const int m = classes.class_count();
  if (a.coefficients.size() != m || b.coefficients.size() != m) throw Error("Burnside elements of different groups");
  std::vector<GSet> transitive(static_cast<std::size_t>(m));
  auto coset = [&](int c) -> const GSet& {
    auto& slot = transitive[static_cast<std::size_t>(c)];
    if (slot.size() == 0) slot = coset_gset(g, classes.representative(c));
    return slot;
  };
  GSet point = point_gset(g);
  BurnsideElement out = BurnsideElement::zero(classes);
  for (int i = 0; i < m; ++i) {
    if (a.coefficients(i) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.coefficients(j) == 0) continue;
      const GSet& x = coset(i);
      const GSet& y = coset(j);
      Pullback p = pullback(x, y, point, std::vector<int>(static_cast<std::size_t>(x.size()), 0),
                            std::vector<int>(static_cast<std::size_t>(y.size()), 0));
      out.coefficients += a.coefficients(i) * b.coefficients(j) * decompose(g, classes, p.set).coefficients;
    }
  }
  return out;
}

IntVector mark_vector(const IntMatrix& marks, const BurnsideElement& x) { return marks * x.coefficients; }

bool is_equivariant(const GSet& source, const GSet& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size() || source.group_order() != target.group_order()) return false;
  for (int v : map)
    if (v < 0 || v >= target.size()) return false;
  for (int e = 0; e < source.group_order(); ++e)
    for (int p = 0; p < source.size(); ++p)
      if (map[static_cast<std::size_t>(source.act(e, p))] != target.act(e, map[static_cast<std::size_t>(p)])) return false;
  return true;
}

Pullback pullback(const GSet& x, const GSet& y, const GSet& z, const std::vector<int>& f, const std::vector<int>& h) {
  if (!is_equivariant(x, z, f) || !is_equivariant(y, z, h)) throw Error("pullback: map is not equivariant");
  Pullback out;
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      if (f[static_cast<std::size_t>(a)] == h[static_cast<std::size_t>(b)]) {
        index[{a, b}] = static_cast<int>(out.to_left.size());
        out.to_left.push_back(a);
        out.to_right.push_back(b);
      }
  const int n = static_cast<int>(out.to_left.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(x.group_order()), std::vector<int>(static_cast<std::size_t>(n)));
  for (int e = 0; e < x.group_order(); ++e)
    for (int p = 0; p < n; ++p)
      table[static_cast<std::size_t>(e)][static_cast<std::size_t>(p)] =
          index.at({x.act(e, out.to_left[static_cast<std::size_t>(p)]), y.act(e, out.to_right[static_cast<std::size_t>(p)])});
  out.set = GSet::from_table(n, std::move(table));
  return out;
}

}  // namespace mackey
