#include "mackey/orbitmackey.hpp"

#include "mackey/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace mackey {

OrbitMackeyEngine::OrbitMackeyEngine(PermGroup g) : group_(std::move(g)), classes_(enumerate_subgroup_classes(group_)) {
  const int n = group_.size();
  const std::size_t m = classes_.subgroups.size();
  for (int c = 0; c < class_count(); ++c) rep_id_.push_back(classes_.subgroup_id(classes_.representative(c)));
  for (const Subgroup& h : classes_.subgroups) cosets_.emplace_back(group_, h);
  conj_.resize(static_cast<std::size_t>(n) * m);
  for (int x = 0; x < n; ++x)
    for (std::size_t id = 0; id < m; ++id)
      conj_[static_cast<std::size_t>(x) * m + id] = classes_.subgroup_id(group_.conjugate(x, classes_.subgroups[id]));
  meet_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      int id = classes_.subgroup_id(intersect(classes_.subgroups[a], classes_.subgroups[b]));
      meet_[a * m + b] = id;
      meet_[b * m + a] = id;
    }

  const int k = class_count();
  orbit_basis_.resize(static_cast<std::size_t>(k * k));
  orbit_lookup_.resize(static_cast<std::size_t>(k * k));
  mackey_basis_.resize(static_cast<std::size_t>(k * k));
  mackey_lookup_.resize(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a) {
    const Subgroup& s = subgroup(rep_id(a));
    std::vector<int> subs;
    for (std::size_t id = 0; id < m; ++id)
      if (is_subset(classes_.subgroups[id], s)) subs.push_back(static_cast<int>(id));
    for (int b = 0; b < k; ++b) {
      const CosetSpace& cs = cosets(rep_id(b));
      auto fixes = [&](const Subgroup& h, int t) {
        for (int x : h)
          if (cs.act(group_, x, t) != t) return false;
        return true;
      };
      auto& ob = orbit_basis_[idx(a, b)];
      auto& ol = orbit_lookup_[idx(a, b)];
      ol.assign(static_cast<std::size_t>(cs.size()), -1);
      for (int t = 0; t < cs.size(); ++t)
        if (fixes(s, t)) {
          ol[static_cast<std::size_t>(t)] = static_cast<int>(ob.size());
          ob.push_back(t);
        }
      std::vector<SpanLabel> spans;
      for (int l : subs)
        for (int t = 0; t < cs.size(); ++t)
          if (fixes(subgroup(l), t)) spans.push_back(canonical(a, b, {l, t}));
      std::sort(spans.begin(), spans.end(), [&](const SpanLabel& x, const SpanLabel& y) {
        int cx = classes_.class_of[static_cast<std::size_t>(x.middle)];
        int cy = classes_.class_of[static_cast<std::size_t>(y.middle)];
        if (cx != cy) return cx < cy;
        return x < y;
      });
      spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
      auto& lookup = mackey_lookup_[idx(a, b)];
      for (std::size_t i = 0; i < spans.size(); ++i) lookup[spans[i]] = static_cast<int>(i);
      mackey_basis_[idx(a, b)] = std::move(spans);
    }
  }
}

int OrbitMackeyEngine::orbit_index(int a, int b, int coset) const {
  int i = orbit_lookup_[idx(a, b)][static_cast<std::size_t>(coset)];
  if (i < 0) throw Error("coset is not fixed by the source subgroup");
  return i;
}

SpanLabel OrbitMackeyEngine::canonical(int a, int b, SpanLabel span) const {
  const CosetSpace& cs = cosets(rep_id(b));
  auto key = [&](const SpanLabel& x) {
    return std::make_tuple(classes_.class_of[static_cast<std::size_t>(x.middle)], x.middle, x.coset);
  };
  SpanLabel best = span;
  auto best_key = key(best);
  for (int s : subgroup(rep_id(a))) {
    SpanLabel c{conjugate(s, span.middle), cs.act(group_, s, span.coset)};
    auto k = key(c);
    if (k < best_key) {
      best = c;
      best_key = k;
    }
  }
  return best;
}

int OrbitMackeyEngine::mackey_index(int a, int b, SpanLabel span) const {
  const auto& lookup = mackey_lookup_[idx(a, b)];
  auto it = lookup.find(canonical(a, b, span));
  if (it == lookup.end()) throw Error("not a span between these objects");
  return it->second;
}

HomCombo OrbitMackeyEngine::orbit_compose(int a, int b, int c, int f, int g) const {
  const CosetSpace& kb = cosets(rep_id(b));
  const CosetSpace& tc = cosets(rep_id(c));
  const int x = kb.representative[static_cast<std::size_t>(orbit_basis(a, b)[static_cast<std::size_t>(f)])];
  const int y = tc.representative[static_cast<std::size_t>(orbit_basis(b, c)[static_cast<std::size_t>(g)])];
  const int t = tc.coset_of[static_cast<std::size_t>(group_.multiply(x, y))];
  return {{orbit_index(a, c, t), 1}};
}

HomCombo OrbitMackeyEngine::mackey_compose(int a, int b, int c, int f, int g) const {
  const SpanLabel first = mackey_basis(a, b)[static_cast<std::size_t>(f)];
  const SpanLabel second = mackey_basis(b, c)[static_cast<std::size_t>(g)];
  const int b1 = cosets(rep_id(b)).representative[static_cast<std::size_t>(first.coset)];
  const int b2 = cosets(rep_id(c)).representative[static_cast<std::size_t>(second.coset)];
  const CosetSpace& l2 = cosets(second.middle);
  const CosetSpace& tc = cosets(rep_id(c));
  const Subgroup& l1 = subgroup(first.middle);

  std::vector<char> in_fiber(static_cast<std::size_t>(l2.size()), 0);
  std::vector<int> fiber;
  for (int k : subgroup(rep_id(b))) {
    int cidx = l2.coset_of[static_cast<std::size_t>(group_.multiply(b1, k))];
    if (!in_fiber[static_cast<std::size_t>(cidx)]) {
      in_fiber[static_cast<std::size_t>(cidx)] = 1;
      fiber.push_back(cidx);
    }
  }
  std::sort(fiber.begin(), fiber.end());
  std::vector<char> done(static_cast<std::size_t>(l2.size()), 0);
  std::map<int, std::int64_t> terms;
  for (int start : fiber) {
    if (done[static_cast<std::size_t>(start)]) continue;
    for (int l : l1) done[static_cast<std::size_t>(l2.act(group_, l, start))] = 1;
    const int y = l2.representative[static_cast<std::size_t>(start)];
    const int middle = intersection(first.middle, conjugate(y, second.middle));
    const int coset = tc.coset_of[static_cast<std::size_t>(group_.multiply(y, b2))];
    ++terms[mackey_index(a, c, {middle, coset})];
  }
  HomCombo out;
  for (const auto& [i, k] : terms) out.push_back({i, k});
  return out;
}

int OrbitMackeyEngine::pi(int a, int b, int f) const {
  return mackey_index(a, b, {rep_id(a), orbit_basis(a, b)[static_cast<std::size_t>(f)]});
}

std::string OrbitMackeyEngine::orbit_label(int a, int b, int f) const {
  const CosetSpace& cs = cosets(rep_id(b));
  return group_.element(cs.representative[static_cast<std::size_t>(orbit_basis(a, b)[static_cast<std::size_t>(f)])]).to_cycle_string();
}

std::string OrbitMackeyEngine::span_label(int a, int b, int f) const {
  const SpanLabel s = mackey_basis(a, b)[static_cast<std::size_t>(f)];
  const CosetSpace& cs = cosets(rep_id(b));
  std::ostringstream out;
  out << classes_.classes[static_cast<std::size_t>(classes_.class_of[static_cast<std::size_t>(s.middle)])].label << '#'
      << s.middle << ':' << group_.element(cs.representative[static_cast<std::size_t>(s.coset)]).to_cycle_string();
  return out.str();
}

EnginePtr make_engine(const PermGroup& g) { return std::make_shared<const OrbitMackeyEngine>(g); }

int Family::object_of(int cls) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), cls);
  if (it == classes.end() || *it != cls) return -1;
  return static_cast<int>(it - classes.begin());
}

Family make_family(const SubgroupClassTable& table, std::vector<int> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  Family f{classes};
  if (!f.contains(0)) throw Error("family must contain the trivial subgroup");
  for (int c : classes) {
    if (c < 0 || c >= table.class_count()) throw Error("family class index out of range");
    for (int h = 0; h < table.class_count(); ++h)
      if (table.subconjugate[static_cast<std::size_t>(h)][static_cast<std::size_t>(c)] && !f.contains(h))
        throw Error("family is not closed under subgroups");
  }
  return f;
}

Family named_family(const SubgroupClassTable& table, const std::string& name) {
  std::vector<int> classes;
  if (name == "all") {
    for (int c = 0; c < table.class_count(); ++c) classes.push_back(c);
  } else if (name == "proper") {
    for (int c = 0; c + 1 < table.class_count(); ++c) classes.push_back(c);
    if (classes.empty()) throw Error("the trivial group has no proper subgroups");
  } else if (name == "trivial") {
    classes.push_back(0);
  } else {
    std::stringstream in(name);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto c = table.find_label(item);
      if (!c) throw Error("unknown subgroup class label: " + item);
      classes.push_back(*c);
    }
  }
  return make_family(table, std::move(classes));
}

namespace {

std::string family_name(const OrbitMackeyEngine& engine, const Family& f) {
  if (static_cast<int>(f.classes.size()) == engine.class_count()) return "all";
  if (static_cast<int>(f.classes.size()) + 1 == engine.class_count()) return "proper";
  std::string s;
  for (int c : f.classes) s += (s.empty() ? "" : ",") + engine.classes().classes[static_cast<std::size_t>(c)].label;
  return s;
}

}  // namespace

CategoryPtr orbit_category(const EnginePtr& engine, const Family& family) {
  std::vector<std::string> objects;
  std::vector<std::vector<std::vector<std::string>>> labels;
  std::vector<int> ids;
  for (int ca : family.classes) {
    objects.push_back(engine->classes().classes[static_cast<std::size_t>(ca)].label);
    ids.push_back(engine->orbit_index(ca, ca, 0));
    std::vector<std::vector<std::string>> row;
    for (int cb : family.classes) {
      std::vector<std::string> l;
      for (std::size_t f = 0; f < engine->orbit_basis(ca, cb).size(); ++f) l.push_back(engine->orbit_label(ca, cb, static_cast<int>(f)));
      row.push_back(std::move(l));
    }
    labels.push_back(std::move(row));
  }
  AddCategory::Composer composer = [engine, cls = family.classes](int a, int b, int c, int f, int g) {
    return engine->orbit_compose(cls[static_cast<std::size_t>(a)], cls[static_cast<std::size_t>(b)], cls[static_cast<std::size_t>(c)], f, g);
  };
  return std::make_shared<AddCategory>("O_" + family_name(*engine, family), std::move(objects), std::move(labels),
                                       std::move(ids), std::move(composer));
}

CategoryPtr mackey_category(const EnginePtr& engine, const Family& family) {
  std::vector<std::string> objects;
  std::vector<std::vector<std::vector<std::string>>> labels;
  std::vector<int> ids;
  for (int ca : family.classes) {
    objects.push_back(engine->classes().classes[static_cast<std::size_t>(ca)].label);
    ids.push_back(engine->mackey_index(ca, ca, {engine->rep_id(ca), 0}));
    std::vector<std::vector<std::string>> row;
    for (int cb : family.classes) {
      std::vector<std::string> l;
      for (std::size_t f = 0; f < engine->mackey_basis(ca, cb).size(); ++f) l.push_back(engine->span_label(ca, cb, static_cast<int>(f)));
      row.push_back(std::move(l));
    }
    labels.push_back(std::move(row));
  }
  AddCategory::Composer composer = [engine, cls = family.classes](int a, int b, int c, int f, int g) {
    return engine->mackey_compose(cls[static_cast<std::size_t>(a)], cls[static_cast<std::size_t>(b)], cls[static_cast<std::size_t>(c)], f, g);
  };
  return std::make_shared<AddCategory>("M_" + family_name(*engine, family), std::move(objects), std::move(labels),
                                       std::move(ids), std::move(composer));
}

HomVector pi_map(const OrbitMackeyEngine& engine, const Family& family, int a, int b, const HomVector& v) {
  const int ca = family.classes[static_cast<std::size_t>(a)];
  const int cb = family.classes[static_cast<std::size_t>(b)];
  HomVector out = HomVector::Zero(static_cast<Eigen::Index>(engine.mackey_basis(ca, cb).size()));
  for (int f = 0; f < v.size(); ++f)
    if (v(f) != 0) out(engine.pi(ca, cb, f)) += v(f);
  return out;
}

ModMorphism ind_pi(const OrbitMackeyEngine& engine, const Family& family, const ModMorphism& m) {
  ModMorphism out{m.source, m.target, {}};
  for (int i = 0; i < m.target.size(); ++i) {
    std::vector<HomVector> row;
    for (int j = 0; j < m.source.size(); ++j)
      row.push_back(pi_map(engine, family, m.source.summands[static_cast<std::size_t>(j)], m.target.summands[static_cast<std::size_t>(i)],
                           m.entry(i, j)));
    out.entries.push_back(std::move(row));
  }
  return out;
}

PresentedModule ind_pi(const OrbitMackeyEngine& engine, const Family& family, const PresentedModule& m) {
  return {ind_pi(engine, family, m.presentation)};
}

ChainComplex ind_pi(const EnginePtr& engine_ptr, const Family& family, const ChainComplex& c) {
  const OrbitMackeyEngine& engine = *engine_ptr;
  ChainComplex out;
  out.modules = c.modules;
  out.complete = c.complete;
  for (const ModMorphism& d : c.differentials) out.differentials.push_back(ind_pi(engine, family, d));
  if (c.augmentation) {
    for (const IntVector& v : c.augmentation->images)
      if (v.size() != 1) throw Error("ind_pi: only augmentations onto the constant module are supported");
    LatticeModule a = burnside_functor(engine_ptr, family);
    Augmentation e{c.augmentation->source, {}};
    for (std::size_t j = 0; j < c.augmentation->images.size(); ++j) {
      const int obj = c.augmentation->source.summands[j];
      const int cls = family.classes[static_cast<std::size_t>(obj)];
      IntVector v = IntVector::Zero(a.rank(obj));
      v(engine.mackey_index(cls, engine.class_count() - 1, {engine.rep_id(cls), 0})) = c.augmentation->images[j](0);
      e.images.push_back(std::move(v));
    }
    out.augmentation_target = std::move(a);
    out.augmentation = std::move(e);
  }
  return out;
}

LatticeModule res_pi(const OrbitMackeyEngine& engine, const Family& family, const LatticeModule& m) {
  const int n = static_cast<int>(family.classes.size());
  LatticeModule out;
  out.variance = m.variance;
  out.kind = "res(" + m.kind + ")";
  out.ranks = m.ranks;
  out.action.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    out.action[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(n));
    const int ca = family.classes[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      const int cb = family.classes[static_cast<std::size_t>(b)];
      for (std::size_t f = 0; f < engine.orbit_basis(ca, cb).size(); ++f)
        out.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].push_back(m.act(a, b, engine.pi(ca, cb, static_cast<int>(f))));
    }
  }
  return out;
}

LatticeModule burnside_functor(const EnginePtr& engine, const Family& family) {
  std::vector<int> all(static_cast<std::size_t>(engine->class_count()));
  for (int c = 0; c < engine->class_count(); ++c) all[static_cast<std::size_t>(c)] = c;
  Family full{all};
  CategoryPtr cat = mackey_category(engine, full);
  LatticeModule a = restrict_module(representable(*cat, engine->class_count() - 1), family.classes);
  a.kind = "burnside";
  return a;
}

LatticeModule constant_functor(const EnginePtr& engine, const Family& family) {
  LatticeModule z = constant_module(*orbit_category(engine, family));
  z.kind = "constant";
  return z;
}

LatticeModule free_lattice(const AddCategory& cat, const FreeModule& f, Variance variance) {
  const int n = cat.object_count();
  LatticeModule out;
  out.variance = variance;
  out.kind = "free";
  out.ranks.assign(static_cast<std::size_t>(n), 0);
  out.action.assign(static_cast<std::size_t>(n), std::vector<std::vector<IntMatrix>>(static_cast<std::size_t>(n)));
  std::vector<LatticeModule> parts;
  for (int c : f.summands) parts.push_back(representable(cat, c, variance));
  for (int a = 0; a < n; ++a)
    for (const LatticeModule& p : parts) out.ranks[static_cast<std::size_t>(a)] += p.rank(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int h = 0; h < cat.hom_rank(a, b); ++h) {
        const int rows = variance == Variance::contravariant ? out.rank(a) : out.rank(b);
        const int cols = variance == Variance::contravariant ? out.rank(b) : out.rank(a);
        IntMatrix mat = IntMatrix::Zero(rows, cols);
        int r = 0, c = 0;
        for (const LatticeModule& p : parts) {
          const IntMatrix& block = p.act(a, b, h);
          mat.block(r, c, block.rows(), block.cols()) = block;
          r += static_cast<int>(block.rows());
          c += static_cast<int>(block.cols());
        }
        out.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].push_back(std::move(mat));
      }
  return out;
}

bool adjunction_check(const EnginePtr& engine, const Family& family, const FreeModule& n, const LatticeModule& m) {
  CategoryPtr o = orbit_category(engine, family);
  CategoryPtr mk = mackey_category(engine, family);
  AbelianGroup lhs = hom_by_definition(*o, free_lattice(*o, n), res_pi(*engine, family, m));
  AbelianGroup rhs = hom_by_definition(*mk, free_lattice(*mk, n), m);
  return lhs == rhs;
}

std::vector<RestrictedSummand> restrict_to_subgroup(const OrbitMackeyEngine& engine, const Subgroup& k, int l_class) {
  const PermGroup& g = engine.group();
  const Subgroup& l = engine.classes().representative(l_class);
  PermGroup kg = g.as_group(k);
  SubgroupClassTable kt = enumerate_subgroup_classes(kg);
  std::vector<RestrictedSummand> out;
  for (const DoubleCoset& dc : double_cosets(g, k, l)) {
    RestrictedSummand s;
    s.double_coset_rep = dc.representative;
    s.intersection = intersect(k, g.conjugate(dc.representative, l));
    Subgroup local;
    for (int x : s.intersection) local.push_back(static_cast<int>(std::lower_bound(k.begin(), k.end(), x) - k.begin()));
    s.class_in_k = kt.class_of_subgroup(local);
    out.push_back(std::move(s));
  }
  return out;
}

Lemma42Result lemma42_check(const EnginePtr& engine, const Family& family, const PresentedModule& m, int object) {
  CategoryPtr o = orbit_category(engine, family);
  CategoryPtr mk = mackey_category(engine, family);
  Lemma42Result r;
  r.m_zero = evaluate(*o, m, object).is_zero();
  r.ind_zero = evaluate(*mk, ind_pi(*engine, family, m), object).is_zero();
  return r;
}

}  // namespace mackey
