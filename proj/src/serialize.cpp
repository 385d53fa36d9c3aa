#include "mackey/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mackey {

namespace {

std::vector<std::vector<int>> generator_images(const PermGroup& g, const GSet& x) {
  std::vector<std::vector<int>> out;
  for (int gi : g.generator_indices()) {
    std::vector<int> row;
    for (int p = 0; p < x.size(); ++p) row.push_back(x.act(gi, p));
    out.push_back(std::move(row));
  }
  return out;
}

PermGroup group_from_images(int degree, const Json& gens) {
  std::vector<Permutation> perms;
  for (const Json& row : gens) {
    auto images = row.get<std::vector<int>>();
    if (static_cast<int>(images.size()) != degree) throw Error("generator has the wrong degree");
    perms.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(perms));
}

}  // namespace

std::string tool_version() { return MACKEY_KIT_VERSION; }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string content_hash(const Json& j) { return fnv1a_hex(j.dump()); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Permutation& p : g.generators()) gens.push_back(p.images());
  return {{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j) {
  if (j.is_string()) return named_group(j.get<std::string>());
  if (!j.is_object()) throw Error("group must be a name or an object");
  if (j.contains("name")) return named_group(j.at("name").get<std::string>());
  return group_from_images(j.at("degree").get<int>(), j.at("generators"));
}

Json group_summary(const PermGroup& g, const SubgroupClassTable& classes) {
  Json out = group_to_json(g);
  out["order"] = g.order();
  Json gens = Json::array();
  for (const Permutation& p : g.generators()) gens.push_back(p.to_cycle_string());
  out["generator_cycles"] = gens;
  out["subgroups"] = classes.subgroup_count();
  Json cls = Json::array();
  for (const SubgroupClass& c : classes.classes)
    cls.push_back({{"label", c.label}, {"order", c.order}, {"conjugates", c.members.size()}, {"normalizer_order", c.normalizer_order}});
  out["subgroup_classes"] = cls;
  Json sizes = Json::array();
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  out["conjugacy_class_sizes"] = sizes;
  return out;
}

Json gset_to_json(const PermGroup& g, const GSet& x) {
  return {{"points", x.size()}, {"action", generator_images(g, x)}};
}

GSet gset_from_json(const PermGroup& g, const Json& j) {
  return GSet::from_generator_images(g, j.at("points").get<int>(), j.at("action").get<std::vector<std::vector<int>>>());
}

Json complex_to_json(const SimpGComplex& x) {
  Json simplices = Json::array();
  for (int d = 0; d <= x.complex.dimension(); ++d)
    for (const Simplex& s : x.complex.simplices(d)) simplices.push_back(s);
  return {{"group", group_to_json(x.group)},
          {"vertices", x.complex.vertex_count()},
          {"action", generator_images(x.group, x.vertex_action)},
          {"simplices", simplices}};
}

SimpGComplex complex_from_json(const Json& j) {
  const int n = j.at("vertices").get<int>();
  const Json action = j.value("action", Json::array());
  PermGroup g = j.contains("group") ? group_from_json(j.at("group")) : group_from_images(n, action);
  auto images = action.get<std::vector<std::vector<int>>>();
  if (images.size() != g.generators().size()) throw Error("action must list one vertex image per generator");
  std::vector<Simplex> simplices = j.at("simplices").get<std::vector<Simplex>>();
  SimpGComplex x{SimplicialComplex(n, simplices), g, GSet::from_generator_images(g, n, images)};
  validate(x);
  return x;
}

Json regular_to_json(const RegularGCW& x) {
  return {{"group", group_to_json(x.group)},
          {"vertices", x.vertex_count},
          {"edges", x.edges},
          {"faces", x.faces},
          {"action", generator_images(x.group, x.vertex_action)}};
}

RegularGCW regular_from_json(const Json& j) {
  RegularGCW x;
  x.vertex_count = j.at("vertices").get<int>();
  x.edges = j.at("edges").get<std::vector<std::array<int, 2>>>();
  x.faces = j.value("faces", std::vector<std::vector<int>>{});
  const Json action = j.value("action", Json::array());
  x.group = j.contains("group") ? group_from_json(j.at("group")) : group_from_images(x.vertex_count, action);
  x.vertex_action = GSet::from_generator_images(x.group, x.vertex_count, action.get<std::vector<std::vector<int>>>());
  validate(x);
  return x;
}

Json category_to_json(const AddCategory& cat) {
  const int n = cat.object_count();
  Json objects = Json::array();
  for (int a = 0; a < n; ++a) objects.push_back(cat.object_name(a));
  Json homs = Json::array();
  Json ids = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(cat.hom_labels(a, b));
    homs.push_back(row);
    ids.push_back(cat.identity(a));
  }
  // table[f][g] lists the nonzero [index, coeff] terms of g ∘ f
  Json composition = Json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (cat.hom_rank(a, b) == 0 || cat.hom_rank(b, c) == 0) continue;
        Json table = Json::array();
        for (int f = 0; f < cat.hom_rank(a, b); ++f) {
          Json row = Json::array();
          for (int g = 0; g < cat.hom_rank(b, c); ++g) {
            Json terms = Json::array();
            for (const HomTerm& t : cat.compose(a, b, c, f, g)) terms.push_back({t.index, t.coeff});
            row.push_back(terms);
          }
          table.push_back(row);
        }
        composition.push_back({{"a", a}, {"b", b}, {"c", c}, {"table", table}});
      }
  return {{"name", cat.name()}, {"objects", objects}, {"hom", homs}, {"identities", ids}, {"composition", composition}};
}

Json morphism_to_json(const AddCategory& cat, const ModMorphism& m) {
  auto objects = [&](const FreeModule& f) {
    Json j = Json::array();
    for (int x : f.summands) j.push_back(cat.object_name(x));
    return j;
  };
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const HomVector& v : row) r.push_back(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
    entries.push_back(r);
  }
  return {{"source", objects(m.source)}, {"target", objects(m.target)}, {"entries", entries}};
}

ModMorphism morphism_from_json(const AddCategory& cat, const Json& j) {
  auto objects = [&](const Json& names) {
    FreeModule f;
    for (const Json& n : names) {
      int x = cat.object_index(n.get<std::string>());
      if (x < 0) throw Error("unknown object " + n.get<std::string>());
      f.summands.push_back(x);
    }
    return f;
  };
  ModMorphism m = ModMorphism::zero(cat, objects(j.at("source")), objects(j.at("target")));
  const Json& entries = j.at("entries");
  if (entries.size() != m.entries.size()) throw Error("morphism has the wrong number of rows");
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    if (entries[i].size() != m.entries[i].size()) throw Error("morphism has the wrong number of columns");
    for (std::size_t k = 0; k < m.entries[i].size(); ++k) {
      auto v = entries[i][k].get<std::vector<std::int64_t>>();
      if (static_cast<Eigen::Index>(v.size()) != m.entries[i][k].size()) throw Error("hom vector has the wrong length");
      for (std::size_t t = 0; t < v.size(); ++t) m.entries[i][k](static_cast<Eigen::Index>(t)) = v[t];
    }
  }
  return m;
}

Json to_json(const AbelianGroup& a) {
  Json torsion = Json::array();
  for (const Integer& t : a.torsion) torsion.push_back(fits_int64(t) ? Json(to_int64(t)) : Json(to_string(t)));
  return {{"rank", a.free_rank}, {"torsion", torsion}, {"text", a.to_string()}};
}

Json to_json(const Homology& h) {
  Json out;
  out["empty"] = h.empty;
  Json un = Json::array(), red = Json::array();
  for (const auto& a : h.unreduced) un.push_back(to_json(a));
  for (const auto& a : h.reduced) red.push_back(to_json(a));
  out["unreduced"] = un;
  out["reduced"] = h.empty ? Json("empty") : red;
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Json report_to_json(const VerificationReport& r, bool timing) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["tool_version"] = tool_version();
  out["target"] = r.target;
  out["pass"] = r.pass();
  out["inputs"] = r.inputs.is_null() ? Json::object() : r.inputs;
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json item = {{"name", c.name}, {"pass", c.pass}};
    if (!c.details.is_null()) item["details"] = c.details;
    checks.push_back(item);
  }
  out["checks"] = checks;
  if (!r.witness.is_null()) out["witness"] = r.witness;
  if (timing && r.wall_seconds) out["wall_seconds"] = *r.wall_seconds;
  return out;
}

}  // namespace mackey
