#include "mackey/gcw.hpp"

#include "mackey/cancel.hpp"
#include "mackey/resolution.hpp"

#include <algorithm>
#include <set>

namespace mackey {

namespace {

const std::vector<Simplex> kNoSimplices;

int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

Homology homology_from(const std::vector<int>& counts, const std::function<IntMatrix(int)>& boundary) {
  Homology h;
  const int top = static_cast<int>(counts.size()) - 1;
  h.empty = counts.empty() || counts[0] == 0;
  for (int k = 0; k <= top; ++k) {
    const int n = counts[static_cast<std::size_t>(k)];
    IntMatrix out = k == 0 ? IntMatrix(0, n) : boundary(k);
    IntMatrix in = k == top ? IntMatrix(n, 0) : boundary(k + 1);
    h.unreduced.push_back(subquotient(n, out, in));
    if (!h.empty) {
      if (k == 0) out = IntMatrix::Ones(1, n);
      h.reduced.push_back(subquotient(n, out, in));
    }
  }
  return h;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, const std::vector<Simplex>& simplices)
    : vertex_count_(vertex_count) {
  std::vector<std::set<Simplex>> cells;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("simplex with a repeated vertex");
    if (s.empty()) continue;
    if (s.front() < 0 || s.back() >= vertex_count) throw Error("simplex vertex out of range");
    if (s.size() > 16) throw Error("simplex dimension too large");
    const std::size_t n = s.size();
    if (cells.size() < n) cells.resize(n);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      cells[face.size() - 1].insert(std::move(face));
    }
  }
  for (auto& level : cells) {
    cells_.emplace_back(level.begin(), level.end());
    auto& lookup = lookup_.emplace_back();
    for (std::size_t i = 0; i < cells_.back().size(); ++i) lookup[cells_.back()[i]] = static_cast<int>(i);
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || dim > dimension()) return kNoSimplices;
  return cells_[static_cast<std::size_t>(dim)];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  const int dim = static_cast<int>(s.size()) - 1;
  if (dim < 0 || dim > dimension()) return -1;
  auto it = lookup_[static_cast<std::size_t>(dim)].find(s);
  return it == lookup_[static_cast<std::size_t>(dim)].end() ? -1 : it->second;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
  return chi;
}

IntMatrix SimplicialComplex::boundary(int dim) const {
  if (dim <= 0) return IntMatrix::Zero(0, count(std::max(dim, 0)));
  IntMatrix d = IntMatrix::Zero(count(dim - 1), count(dim));
  const auto& cells = simplices(dim);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      Simplex face = cells[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      d(index_of(face), static_cast<Eigen::Index>(j)) += i % 2 == 0 ? 1 : -1;
    }
  }
  return d;
}

bool Homology::acyclic() const {
  if (empty) return false;
  return std::all_of(reduced.begin(), reduced.end(), [](const AbelianGroup& a) { return a.is_zero(); });
}

Homology homology(const SimplicialComplex& x) {
  std::vector<int> counts;
  for (int d = 0; d <= x.dimension(); ++d) counts.push_back(x.count(d));
  return homology_from(counts, [&](int d) { return x.boundary(d); });
}

Simplex SimpGComplex::act(int g, const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(vertex_action.act(g, v));
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const SimpGComplex& x) {
  if (x.vertex_action.size() != x.complex.vertex_count() || x.vertex_action.group_order() != x.group.size())
    throw Error("vertex action does not match the complex and group");
  for (int d = 0; d <= x.complex.dimension(); ++d)
    for (const Simplex& s : x.complex.simplices(d))
      for (int g = 0; g < x.group.size(); ++g)
        if (x.complex.index_of(x.act(g, s)) < 0) throw Error("group action does not preserve simplices");
}

bool is_admissible(const SimpGComplex& x) {
  for (int d = 1; d <= x.complex.dimension(); ++d)
    for (const Simplex& s : x.complex.simplices(d))
      for (int g = 0; g < x.group.size(); ++g) {
        if (x.act(g, s) != s) continue;
        for (int v : s)
          if (x.vertex_action.act(g, v) != v) return false;
      }
  return true;
}

SimplicialComplex fixed_subcomplex(const SimpGComplex& x, const Subgroup& h) {
  if (!is_admissible(x)) throw Error("fixed subcomplex requires an admissible action");
  std::vector<int> fixed = fixed_points(x.vertex_action, h);
  std::vector<bool> is_fixed(static_cast<std::size_t>(x.complex.vertex_count()), false);
  for (int v : fixed) is_fixed[static_cast<std::size_t>(v)] = true;
  std::vector<Simplex> kept;
  for (int d = 0; d <= x.complex.dimension(); ++d)
    for (const Simplex& s : x.complex.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](int v) { return is_fixed[static_cast<std::size_t>(v)]; }))
        kept.push_back(s);
  return SimplicialComplex(x.complex.vertex_count(), kept);
}

// ---------------------------------------------------------------------------

int RegularGCW::edge_index(int u, int v) const {
  std::array<int, 2> e{std::min(u, v), std::max(u, v)};
  auto it = std::find(edges.begin(), edges.end(), e);
  return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
}

std::vector<int> RegularGCW::face_edges(int f) const {
  const auto& w = faces[static_cast<std::size_t>(f)];
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(edge_index(w[i], w[(i + 1) % w.size()]));
  std::sort(out.begin(), out.end());
  return out;
}

int RegularGCW::find_face(const std::vector<int>& walk) const {
  std::vector<int> target;
  for (std::size_t i = 0; i < walk.size(); ++i) target.push_back(edge_index(walk[i], walk[(i + 1) % walk.size()]));
  std::sort(target.begin(), target.end());
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].size() == walk.size() && face_edges(static_cast<int>(f)) == target) return static_cast<int>(f);
  return -1;
}

IntMatrix RegularGCW::boundary(int dim) const {
  const auto counts = cell_counts();
  if (dim <= 0 || dim > 2) return IntMatrix::Zero(0, dim <= 0 ? counts[0] : 0);
  IntMatrix d = IntMatrix::Zero(counts[static_cast<std::size_t>(dim - 1)], counts[static_cast<std::size_t>(dim)]);
  if (dim == 1) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      d(edges[e][0], static_cast<Eigen::Index>(e)) -= 1;
      d(edges[e][1], static_cast<Eigen::Index>(e)) += 1;
    }
  } else {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& w = faces[f];
      for (std::size_t i = 0; i < w.size(); ++i) {
        int u = w[i], v = w[(i + 1) % w.size()];
        d(edge_index(u, v), static_cast<Eigen::Index>(f)) += u < v ? 1 : -1;
      }
    }
  }
  return d;
}

void validate(const RegularGCW& x) {
  for (const auto& e : x.edges)
    if (e[0] < 0 || e[0] >= e[1] || e[1] >= x.vertex_count) throw Error("edges must be increasing vertex pairs");
  std::set<std::array<int, 2>> distinct(x.edges.begin(), x.edges.end());
  if (distinct.size() != x.edges.size()) throw Error("repeated edge");
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    const auto& w = x.faces[f];
    if (w.size() < 3) throw Error("a 2-cell needs at least three boundary edges");
    std::set<int> verts(w.begin(), w.end());
    if (verts.size() != w.size()) throw Error("boundary walk repeats a vertex");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (x.edge_index(w[i], w[(i + 1) % w.size()]) < 0) throw Error("boundary walk uses a missing edge");
  }
  if (x.vertex_action.size() != x.vertex_count || x.vertex_action.group_order() != x.group.size())
    throw Error("vertex action does not match the complex and group");
  for (int g = 0; g < x.group.size(); ++g) {
    for (const auto& e : x.edges)
      if (x.edge_index(x.vertex_action.act(g, e[0]), x.vertex_action.act(g, e[1])) < 0)
        throw Error("group action does not preserve edges");
    for (const auto& w : x.faces) {
      std::vector<int> image;
      for (int v : w) image.push_back(x.vertex_action.act(g, v));
      if (x.find_face(image) < 0) throw Error("group action does not preserve 2-cells");
    }
  }
}

Homology homology(const RegularGCW& x) {
  auto counts = x.cell_counts();
  while (!counts.empty() && counts.back() == 0 && counts.size() > 1) counts.pop_back();
  return homology_from(counts, [&](int d) { return x.boundary(d); });
}

SimpGComplex barycentric_subdivision(const RegularGCW& x) {
  const int nv = x.vertex_count;
  const int ne = static_cast<int>(x.edges.size());
  const int nf = static_cast<int>(x.faces.size());
  std::vector<Simplex> chains;
  for (int v = 0; v < nv; ++v) chains.push_back({v});
  for (int e = 0; e < ne; ++e)
    for (int v : x.edges[static_cast<std::size_t>(e)]) chains.push_back({v, nv + e});
  for (int f = 0; f < nf; ++f)
    for (int e : x.face_edges(f))
      for (int v : x.edges[static_cast<std::size_t>(e)]) chains.push_back({v, nv + e, nv + ne + f});

  std::vector<std::vector<int>> table(static_cast<std::size_t>(x.group.size()));
  for (int g = 0; g < x.group.size(); ++g) {
    auto& row = table[static_cast<std::size_t>(g)];
    for (int v = 0; v < nv; ++v) row.push_back(x.vertex_action.act(g, v));
    for (const auto& e : x.edges) row.push_back(nv + x.edge_index(row[static_cast<std::size_t>(e[0])], row[static_cast<std::size_t>(e[1])]));
    for (const auto& w : x.faces) {
      std::vector<int> image;
      for (int v : w) image.push_back(row[static_cast<std::size_t>(v)]);
      int f = x.find_face(image);
      if (f < 0) throw Error("group action does not preserve 2-cells");
      row.push_back(nv + ne + f);
    }
  }
  SimpGComplex out{SimplicialComplex(nv + ne + nf, chains), x.group, GSet::from_table(nv + ne + nf, std::move(table))};
  return out;
}

SimpGComplex barycentric_subdivision(const SimpGComplex& x) {
  const SimplicialComplex& c = x.complex;
  std::vector<int> offset{0};
  for (int d = 0; d <= c.dimension(); ++d) offset.push_back(offset.back() + c.count(d));
  auto vertex_of = [&](const Simplex& s) {
    return offset[s.size() - 1] + c.index_of(s);
  };

  std::vector<Simplex> chains;
  for (int d = 0; d <= c.dimension(); ++d) {
    for (const Simplex& s : c.simplices(d)) {
      // every full flag ending at s, obtained by deleting vertices in each order
      std::vector<int> order(s.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      do {
        Simplex flag, current = s;
        flag.push_back(vertex_of(current));
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
          current.erase(std::find(current.begin(), current.end(), s[static_cast<std::size_t>(order[k])]));
          flag.push_back(vertex_of(current));
        }
        chains.push_back(std::move(flag));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  std::vector<std::vector<int>> table(static_cast<std::size_t>(x.group.size()));
  for (int g = 0; g < x.group.size(); ++g)
    for (int d = 0; d <= c.dimension(); ++d)
      for (const Simplex& s : c.simplices(d)) {
        Simplex image = x.act(g, s);
        if (c.index_of(image) < 0) throw Error("group action does not preserve simplices");
        table[static_cast<std::size_t>(g)].push_back(vertex_of(image));
      }
  return SimpGComplex{SimplicialComplex(offset.back(), chains), x.group, GSet::from_table(offset.back(), std::move(table))};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::string>> BredonComplex::labels(const SubgroupClassTable& classes) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& level : orbits) {
    auto& row = out.emplace_back();
    for (const auto& o : level) row.push_back(classes.classes[static_cast<std::size_t>(o.stabilizer_class)].label);
  }
  return out;
}

BredonComplex bredon_complex(const SimpGComplex& x, const EnginePtr& engine, const Family& family) {
  const OrbitMackeyEngine& eng = *engine;
  const PermGroup& g = eng.group();
  if (g.size() != x.group.size()) throw Error("engine group differs from the complex's group");
  if (!is_admissible(x)) throw Error("Bredon chains require an admissible action");
  const SimplicialComplex& c = x.complex;
  const int top = c.dimension();

  BredonComplex b;
  b.family = family;
  // per dimension and simplex: orbit index and an element carrying the base onto it
  std::vector<std::vector<int>> orbit_of(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<int>> carrier(static_cast<std::size_t>(top + 1));

  for (int d = 0; d <= top; ++d) {
    throw_if_cancelled();
    const auto& cells = c.simplices(d);
    auto& orb = orbit_of[static_cast<std::size_t>(d)];
    auto& car = carrier[static_cast<std::size_t>(d)];
    orb.assign(cells.size(), -1);
    car.assign(cells.size(), -1);
    auto& level = b.orbits.emplace_back();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (orb[i] >= 0) continue;
      const Simplex& sigma = cells[i];
      Subgroup stab;
      for (int h = 0; h < g.size(); ++h)
        if (x.act(h, sigma) == sigma) stab.push_back(h);
      const int cls = eng.classes().class_of_subgroup(stab);
      if (!family.contains(cls)) throw Error("a cell stabilizer lies outside the family");
      const Subgroup& rep = eng.classes().representative(cls);
      Simplex base;
      for (int h = 0; h < g.size(); ++h) {
        if (g.conjugate(h, stab) != rep) continue;
        Simplex cand = x.act(h, sigma);
        if (base.empty() || cand < base) base = std::move(cand);
      }
      CellOrbit o{base, sigma, cls, 0};
      const int id = static_cast<int>(level.size());
      for (int h = 0; h < g.size(); ++h) {
        int k = c.index_of(x.act(h, base));
        if (orb[static_cast<std::size_t>(k)] < 0) {
          orb[static_cast<std::size_t>(k)] = id;
          car[static_cast<std::size_t>(k)] = h;
          ++o.size;
        }
      }
      level.push_back(std::move(o));
    }
  }

  CategoryPtr cat = orbit_category(engine, family);
  for (int d = 0; d <= top; ++d) {
    FreeModule f;
    for (const auto& o : b.orbits[static_cast<std::size_t>(d)]) f.summands.push_back(family.object_of(o.stabilizer_class));
    b.chain.modules.push_back(std::move(f));
  }
  for (int d = 1; d <= top; ++d) {
    throw_if_cancelled();
    ModMorphism m = ModMorphism::zero(*cat, b.chain.modules[static_cast<std::size_t>(d)],
                                      b.chain.modules[static_cast<std::size_t>(d - 1)]);
    const auto& level = b.orbits[static_cast<std::size_t>(d)];
    const auto& lower = b.orbits[static_cast<std::size_t>(d - 1)];
    for (std::size_t j = 0; j < level.size(); ++j) {
      const Simplex& beta = level[j].base;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        Simplex face = beta;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const int k = c.index_of(face);
        const int t = orbit_of[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(k)];
        const int h = carrier[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(k)];
        const CellOrbit& target = lower[static_cast<std::size_t>(t)];
        std::vector<int> transported;
        for (int v : target.base) transported.push_back(x.vertex_action.act(h, v));
        const int sign = (i % 2 == 0 ? 1 : -1) * permutation_sign(transported);
        const int coset = eng.cosets(eng.rep_id(target.stabilizer_class)).coset_of[static_cast<std::size_t>(h)];
        const int basis = eng.orbit_index(level[j].stabilizer_class, target.stabilizer_class, coset);
        m.entry(t, static_cast<int>(j))(basis) += sign;
      }
    }
    b.chain.differentials.push_back(std::move(m));
  }
  b.chain.augmentation_target = constant_functor(engine, family);
  Augmentation e;
  e.source = b.chain.modules.empty() ? FreeModule{} : b.chain.modules[0];
  for (std::size_t j = 0; j < e.source.summands.size(); ++j) e.images.push_back(IntVector::Ones(1));
  b.chain.augmentation = std::move(e);
  b.chain.complete = true;
  return b;
}

bool is_resolution_of_z(const BredonComplex& b, const AddCategory& orbit_cat) {
  if (b.chain.modules.empty()) return false;
  return is_exact(orbit_cat, b.chain, b.chain.length());
}

std::vector<AbelianGroup> bredon_homology_with_coeffs(const BredonComplex& b, const AddCategory& orbit_cat,
                                                      const LatticeModule& l) {
  if (l.variance != Variance::covariant) throw Error("coefficients must be a covariant module");
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= b.chain.length(); ++k) out.push_back(tensor_homology(orbit_cat, b.chain, l, k));
  return out;
}

}  // namespace mackey
