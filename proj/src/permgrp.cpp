#include "mackey/permgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mackey {

namespace {

constexpr std::size_t kTableLimit = 1000;

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw Error("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree) throw Error("cycle point out of range");
      if (used[static_cast<std::size_t>(a)]) throw Error("cycles are not disjoint");
      used[static_cast<std::size_t>(a)] = 1;
      im[static_cast<std::size_t>(a)] = b;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.degree() != degree()) throw Error("permutation degree mismatch");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[static_cast<std::size_t>(q.images_[i])];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = 1;
      if (!first) out << ' ';
      out << p;
      first = false;
      p = static_cast<std::size_t>(images_[p]);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t group_order_cap() {
  if (const char* env = std::getenv("MACKEY_KIT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

CapExceeded::CapExceeded(std::size_t cap)
    : Error("group order exceeds the configured cap of " + std::to_string(cap) + " elements") {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw Error("group degree must be positive");
  for (const Permutation& p : generators_)
    if (p.degree() != degree) throw Error("generator degree does not match group degree");
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : generators_) {
      Permutation q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded(cap);
        queue.push_back(std::move(q));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(elements_[i].inverse());
  if (elements_.size() <= kTableLimit) {
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_of(elements_[a] * elements_[b]);
  }
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> PermGroup::generator_indices() const {
  std::vector<int> out;
  for (const Permutation& p : generators_) out.push_back(index_of(p));
  return out;
}

int PermGroup::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return index_of(element(a) * element(b));
}

int PermGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

Subgroup PermGroup::whole() const {
  Subgroup all(elements_.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

Subgroup PermGroup::generated_by(const std::vector<int>& gens) const {
  std::vector<char> in(elements_.size(), 0);
  std::vector<int> found{0};
  in[0] = 1;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (int g : gens) {
      int x = multiply(g, found[i]);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        found.push_back(x);
      }
    }
  std::sort(found.begin(), found.end());
  return found;
}

Subgroup PermGroup::join(const Subgroup& h, int g) const {
  std::vector<int> gens = generating_set(h);
  gens.push_back(g);
  return generated_by(gens);
}

Subgroup PermGroup::conjugate(int g, const Subgroup& h) const {
  Subgroup out;
  out.reserve(h.size());
  for (int x : h) out.push_back(conjugate(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::contains(const Subgroup& h, int g) const { return std::binary_search(h.begin(), h.end(), g); }

bool PermGroup::is_subgroup(const Subgroup& h) const {
  if (h.empty() || h.front() != 0 || !std::is_sorted(h.begin(), h.end())) return false;
  if (std::adjacent_find(h.begin(), h.end()) != h.end()) return false;
  if (h.back() >= size()) return false;
  for (int a : h)
    for (int b : h)
      if (!contains(h, multiply(a, b))) return false;
  return true;
}

std::vector<int> PermGroup::generating_set(const Subgroup& h) const {
  std::vector<int> gens;
  Subgroup current{0};
  for (int x : h) {
    if (contains(current, x)) continue;
    gens.push_back(x);
    current = generated_by(gens);
    if (current.size() == h.size()) break;
  }
  return gens;
}

PermGroup PermGroup::as_group(const Subgroup& h) const {
  std::vector<Permutation> gens;
  for (int x : generating_set(h)) gens.push_back(element(x));
  return PermGroup(degree_, std::move(gens), std::max<std::size_t>(h.size(), 1));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const Subgroup& a, const Subgroup& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

int SubgroupClassTable::subgroup_id(const Subgroup& h) const {
  auto less = [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  };
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h, less);
  if (it == subgroups.end() || *it != h) return -1;
  return static_cast<int>(it - subgroups.begin());
}

int SubgroupClassTable::class_of_subgroup(const Subgroup& h) const {
  int id = subgroup_id(h);
  if (id < 0) throw Error("not a subgroup of the enumerated group");
  return class_of[static_cast<std::size_t>(id)];
}

std::optional<int> SubgroupClassTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

std::string isomorphism_label(const PermGroup& g, const Subgroup& h) {
  const int n = static_cast<int>(h.size());
  if (n == 1) return "e";
  std::map<int, int> order_count;
  int max_order = 1;
  for (int x : h) {
    int o = g.element_order(x);
    ++order_count[o];
    max_order = std::max(max_order, o);
  }
  if (max_order == n) return "C" + std::to_string(n);
  bool abelian = true;
  for (int a : h)
    for (int b : h)
      if (g.multiply(a, b) != g.multiply(b, a)) abelian = false;
  if (abelian) {
    if (order_count[2] == n - 1) {
      if (n == 4) return "V4";
      int k = 0;
      while ((1 << k) < n) ++k;
      return "C2^" + std::to_string(k);
    }
    return "Ab" + std::to_string(n);
  }
  if (n % 2 == 0 && max_order == n / 2 && order_count[2] >= n / 2) return n == 6 ? "S3" : "D" + std::to_string(n / 2);
  if (n == 8) return "Q8";
  if (n == 12 && max_order == 3) return "A4";
  if (n == 24 && max_order == 4) return "S4";
  if (n == 60 && max_order == 5) return "A5";
  return "G" + std::to_string(n);
}

}  // namespace

SubgroupClassTable enumerate_subgroup_classes(const PermGroup& g) {
  const int n = g.size();
  if (static_cast<std::size_t>(n) > group_order_cap()) throw CapExceeded(group_order_cap());
  auto canonical = [&](const Subgroup& h) {
    Subgroup best = h;
    for (int x = 0; x < n; ++x) {
      Subgroup c = g.conjugate(x, h);
      if (c < best) best = std::move(c);
    }
    return best;
  };

  // Every subgroup is reached by adjoining one element at a time starting
  // from the trivial group, and adjoining commutes with conjugation, so it is
  // enough to extend one representative per class.
  std::vector<Subgroup> reps{g.trivial()};
  std::set<Subgroup> known{g.trivial()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Subgroup h = reps[i];
    std::set<Subgroup> seen_here;
    for (int x = 0; x < n; ++x) {
      if (g.contains(h, x)) continue;
      Subgroup k = g.join(h, x);
      if (!seen_here.insert(k).second) continue;
      Subgroup c = canonical(k);
      if (known.insert(c).second) reps.push_back(std::move(c));
    }
  }

  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  SubgroupClassTable table;
  std::vector<std::vector<Subgroup>> conjugates;
  for (const Subgroup& r : reps) {
    std::set<Subgroup> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.conjugate(x, r));
    conjugates.emplace_back(cls.begin(), cls.end());
    for (const Subgroup& s : cls) table.subgroups.push_back(s);
  }
  std::sort(table.subgroups.begin(), table.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  table.class_of.assign(table.subgroups.size(), -1);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    SubgroupClass cls;
    cls.representative = reps[c];
    cls.order = reps[c].size();
    cls.normalizer_order = static_cast<std::size_t>(n) / conjugates[c].size();
    for (const Subgroup& s : conjugates[c]) {
      int id = table.subgroup_id(s);
      cls.members.push_back(id);
      table.class_of[static_cast<std::size_t>(id)] = static_cast<int>(c);
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.label = isomorphism_label(g, reps[c]);
    table.classes.push_back(std::move(cls));
  }

  std::map<std::string, int> label_count;
  for (const SubgroupClass& c : table.classes) ++label_count[c.label];
  std::map<std::string, int> next;
  for (SubgroupClass& c : table.classes)
    if (label_count[c.label] > 1) {
      int k = next[c.label]++;
      c.label += static_cast<char>('a' + k);
    }

  const std::size_t m = table.classes.size();
  table.subconjugate.assign(m, std::vector<bool>(m, false));
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t k = 0; k < m; ++k) {
      if (table.classes[k].order % table.classes[h].order != 0) continue;
      for (int id : table.classes[h].members)
        if (is_subset(table.subgroups[static_cast<std::size_t>(id)], table.classes[k].representative)) {
          table.subconjugate[h][k] = true;
          break;
        }
    }
  return table;
}

std::vector<std::vector<int>> conjugacy_classes(const PermGroup& g) {
  const int n = g.size();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    if (done[static_cast<std::size_t>(a)]) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.conjugate(x, a));
    for (int c : cls) done[static_cast<std::size_t>(c)] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(const PermGroup& g, const Subgroup& s, const Subgroup& k) {
  if (!g.is_subgroup(s) || !g.is_subgroup(k)) throw Error("double_cosets: argument is not a subgroup");
  const int n = g.size();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<DoubleCoset> out;
  for (int x = 0; x < n; ++x) {
    if (done[static_cast<std::size_t>(x)]) continue;
    std::size_t size = 0;
    for (int a : s) {
      int ax = g.multiply(a, x);
      for (int b : k) {
        int y = g.multiply(ax, b);
        if (!done[static_cast<std::size_t>(y)]) {
          done[static_cast<std::size_t>(y)] = 1;
          ++size;
        }
      }
    }
    out.push_back({x, size});
  }
  return out;
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  if (!g.is_subgroup(h)) throw Error("normalizer: argument is not a subgroup");
  Subgroup out;
  for (int x = 0; x < g.size(); ++x)
    if (g.conjugate(x, h) == h) out.push_back(x);
  return out;
}

WeylGroup weyl_group(const PermGroup& g, const Subgroup& h) {
  WeylGroup w;
  w.subgroup = h;
  w.normalizer = normalizer(g, h);
  std::vector<int> coset_of(static_cast<std::size_t>(g.size()), -1);
  int cosets = 0;
  for (int x : w.normalizer) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    for (int y : h) coset_of[static_cast<std::size_t>(g.multiply(x, y))] = cosets;
    ++cosets;
  }
  std::vector<int> rep(static_cast<std::size_t>(cosets), -1);
  for (int x : w.normalizer)
    if (rep[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] < 0)
      rep[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] = x;
  std::vector<Permutation> gens;
  for (int y : g.generating_set(w.normalizer)) {
    std::vector<int> im(static_cast<std::size_t>(cosets));
    for (int c = 0; c < cosets; ++c)
      im[static_cast<std::size_t>(c)] = coset_of[static_cast<std::size_t>(g.multiply(y, rep[static_cast<std::size_t>(c)]))];
    Permutation p(std::move(im));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  w.quotient = PermGroup(cosets, std::move(gens));
  return w;
}

namespace {

using Cycles = std::vector<std::vector<int>>;

struct NamedGroup {
  const char* key;
  int degree;
  std::vector<Cycles> generators;
};

const std::vector<NamedGroup>& catalogue() {
  static const std::vector<NamedGroup> groups = {
      {"trivial", 1, {}},
      {"C1", 1, {}},
      {"C2", 2, {{{0, 1}}}},
      {"C3", 3, {{{0, 1, 2}}}},
      {"C4", 4, {{{0, 1, 2, 3}}}},
      {"V4", 4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}},
      {"C5", 5, {{{0, 1, 2, 3, 4}}}},
      {"S3", 3, {{{0, 1}}, {{0, 1, 2}}}},
      {"C6", 5, {{{0, 1, 2}, {3, 4}}}},
      {"D4", 4, {{{0, 1, 2, 3}}, {{0, 2}}}},
      // regular representation on 1, i, j, k, -1, -i, -j, -k
      {"Q8", 8, {{{0, 1, 4, 5}, {2, 3, 6, 7}}, {{0, 2, 4, 6}, {1, 7, 5, 3}}}},
      {"D5", 5, {{{0, 1, 2, 3, 4}}, {{1, 4}, {2, 3}}}},
      {"A4", 4, {{{0, 1, 2}}, {{0, 1}, {2, 3}}}},
      {"D6", 6, {{{0, 1, 2, 3, 4, 5}}, {{1, 5}, {2, 4}}}},
      {"C2^3", 6, {{{0, 1}}, {{2, 3}}, {{4, 5}}}},
      {"S4", 4, {{{0, 1, 2, 3}}, {{0, 1}}}},
      {"A5", 5, {{{0, 1, 2, 3, 4}}, {{0, 1, 2}}}},
  };
  return groups;
}

}  // namespace

PermGroup named_group(const std::string& name) {
  for (const NamedGroup& g : catalogue()) {
    if (name != g.key) continue;
    std::vector<Permutation> gens;
    for (const Cycles& c : g.generators) gens.push_back(Permutation::from_cycles(g.degree, c));
    return PermGroup(g.degree, std::move(gens));
  }
  throw Error("unknown group name: " + name);
}

std::vector<std::string> named_group_keys() {
  std::vector<std::string> out;
  for (const NamedGroup& g : catalogue()) out.emplace_back(g.key);
  return out;
}

}  // namespace mackey
