// mackey-kit: command-line front end.  Exit codes: 0 pass, 1 failed
// verification, 2 usage or input error.

#include "mackey/floyd_richardson.hpp"
#include "mackey/gcw.hpp"
#include "mackey/orbitmackey.hpp"
#include "mackey/resolution.hpp"
#include "mackey/selftest.hpp"
#include "mackey/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <variant>

using namespace mackey;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string out;
  bool timing = false;
  bool parallel = false;
};

using AnyComplex = std::variant<RegularGCW, SimpGComplex>;

AnyComplex load_complex(const std::string& spec) {
  if (spec == "M") return floyd_richardson().m;
  if (spec == "L") return floyd_richardson().l;
  if (spec == "L'" || spec == "Lp") return floyd_richardson().l2;
  if (spec == "point") return SimpGComplex{SimplicialComplex(1, {{0}}), PermGroup(1, {}), GSet::from_table(1, {{0}})};
  if (!std::filesystem::exists(spec)) throw UsageError("unknown complex '" + spec + "' (use M, L, L', point or a JSON file)");
  Json j = read_json_file(spec);
  if (j.contains("edges")) return regular_from_json(j);
  return complex_from_json(j);
}

/// Simplicial model: regular complexes are replaced by their subdivision.
SimpGComplex simplicial(const AnyComplex& x) {
  if (const auto* r = std::get_if<RegularGCW>(&x)) return barycentric_subdivision(*r);
  return std::get<SimpGComplex>(x);
}

EnginePtr engine_for(const std::string& spec, const PermGroup& g) {
  if (spec == "M" || spec == "L" || spec == "L'" || spec == "Lp") return floyd_richardson().engine;
  return make_engine(g);
}

PermGroup load_group(const std::string& name, const std::string& file) {
  if (!file.empty()) return group_from_json(read_json_file(file));
  try {
    return named_group(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> subgroup_selection(const SubgroupClassTable& table, const std::string& spec) {
  std::vector<int> out;
  const int top = table.class_count() - 1;
  if (spec == "all-proper" || spec == "proper") {
    for (int c = 0; c < top; ++c) out.push_back(c);
  } else if (spec == "all") {
    for (int c = 0; c <= top; ++c) out.push_back(c);
  } else {
    std::stringstream ss(spec);
    std::string label;
    while (std::getline(ss, label, ',')) {
      auto c = table.find_label(label);
      if (!c) throw UsageError("unknown subgroup label '" + label + "'");
      out.push_back(*c);
    }
  }
  return out;
}

void emit(const Globals& g, const Json& j) {
  std::cout << dump(j);
  if (!g.out.empty()) write_text_file(g.out, dump(j));
}

int emit_report(const Globals& g, VerificationReport r, double seconds) {
  r.wall_seconds = seconds;
  emit(g, report_to_json(r, g.timing));
  return r.pass() ? 0 : 1;
}

template <class F>
int timed_report(const Globals& g, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = f();
  return emit_report(g, std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

Json homology_json(const AnyComplex& x) {
  if (const auto* r = std::get_if<RegularGCW>(&x)) return to_json(homology(*r));
  return to_json(homology(std::get<SimpGComplex>(x).complex));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit and Mackey category toolkit for finite groups", "mackey-kit"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--out", globals.out, "Also write the JSON result to this file");
  app.add_flag("--timing", globals.timing, "Include wall time in reports");
  app.add_flag("--parallel", globals.parallel, "Check independent objects concurrently");

  std::string group_name = "A5", group_file;
  auto add_group_opts = [&](CLI::App* sub) {
    sub->add_option("--group", group_name, "Catalogue group name");
    sub->add_option("--file", group_file, "Group JSON file")->check(CLI::ExistingFile);
  };

  auto* group_cmd = app.add_subcommand("group", "Group order, subgroup classes and conjugacy classes");
  add_group_opts(group_cmd);
  auto* marks_cmd = app.add_subcommand("marks", "Table of marks");
  add_group_opts(marks_cmd);

  auto* cat_cmd = app.add_subcommand("cat", "Category construction");
  cat_cmd->require_subcommand(1);
  auto* cat_build = cat_cmd->add_subcommand("build", "Serialize an orbit or Mackey category");
  add_group_opts(cat_build);
  std::string family_name = "all", kind = "mackey";
  cat_build->add_option("--family", family_name, "all, proper, trivial or comma-separated class labels");
  cat_build->add_option("--kind", kind, "orbit or mackey")->check(CLI::IsMember({"orbit", "mackey"}));

  std::string complex_spec = "M", subgroup_spec = "all-proper";
  auto* complex_cmd = app.add_subcommand("complex", "Complex operations");
  complex_cmd->require_subcommand(1);
  auto* cx_sub = complex_cmd->add_subcommand("subdivide", "Barycentric subdivision");
  auto* cx_fixed = complex_cmd->add_subcommand("fixed", "Fixed subcomplex of a subgroup class");
  auto* cx_hom = complex_cmd->add_subcommand("homology", "Reduced and unreduced homology");
  for (auto* s : {cx_sub, cx_fixed, cx_hom}) s->add_option("--complex", complex_spec, "M, L, L', point or a JSON file");
  cx_fixed->add_option("--subgroup", subgroup_spec, "Subgroup class label")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification");
  verify_cmd->require_subcommand(1);
  auto* v9 = verify_cmd->add_subcommand("eq9", "Orbit-category resolution from L");
  auto* v10 = verify_cmd->add_subcommand("eq10", "Mackey resolution from L'");
  auto* vac = verify_cmd->add_subcommand("acyclic", "Acyclicity of fixed sets");
  vac->add_option("--complex", complex_spec, "M, L, L', point or a JSON file");
  vac->add_option("--subgroup", subgroup_spec, "all-proper, all, or comma-separated labels");

  std::string check_file;
  auto* split_cmd = app.add_subcommand("split", "Splitting r of the top differential from L'");
  split_cmd->add_option("--check", check_file, "Re-verify the witness in a saved report")->check(CLI::ExistingFile);

  int truncation = 2;
  std::string sm_family = "auto";
  auto* sm_cmd = app.add_subcommand("stable-model", "Truncated Mackey resolution and kernel projectivity");
  sm_cmd->add_option("--complex", complex_spec, "M, L, L', point or a JSON file");
  sm_cmd->add_option("--family", sm_family, "Family; auto means proper for M, L, L' and all otherwise");
  sm_cmd->add_option("-m", truncation, "Truncation degree")->check(CLI::NonNegativeNumber);

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const ExecOptions opts{globals.parallel};
  try {
    if (*group_cmd) {
      PermGroup g = load_group(group_name, group_file);
      emit(globals, group_summary(g, enumerate_subgroup_classes(g)));
      return 0;
    }
    if (*marks_cmd) {
      PermGroup g = load_group(group_name, group_file);
      Json m = to_json(table_of_marks(g, enumerate_subgroup_classes(g)));
      std::cout << m.dump() << "\n";
      if (!globals.out.empty()) write_text_file(globals.out, dump(m));
      return 0;
    }
    if (*cat_build) {
      PermGroup g = load_group(group_name, group_file);
      EnginePtr engine = make_engine(g);
      Family family = named_family(engine->classes(), family_name);
      CategoryPtr cat = kind == "orbit" ? orbit_category(engine, family) : mackey_category(engine, family);
      Json j = category_to_json(*cat);
      if (globals.out.empty())
        std::cout << dump(j);
      else
        write_text_file(globals.out, dump(j));
      return 0;
    }
    if (*cx_sub) {
      AnyComplex x = load_complex(complex_spec);
      SimpGComplex s = std::holds_alternative<RegularGCW>(x) ? barycentric_subdivision(std::get<RegularGCW>(x))
                                                              : barycentric_subdivision(std::get<SimpGComplex>(x));
      emit(globals, complex_to_json(s));
      return 0;
    }
    if (*cx_fixed) {
      SimpGComplex x = simplicial(load_complex(complex_spec));
      SubgroupClassTable table = enumerate_subgroup_classes(x.group);
      auto cls = subgroup_selection(table, subgroup_spec);
      if (cls.size() != 1) throw UsageError("--subgroup must name a single class");
      SimplicialComplex f = fixed_subcomplex(x, table.representative(cls[0]));
      Json simplices = Json::array();
      for (int d = 0; d <= f.dimension(); ++d)
        for (const Simplex& s : f.simplices(d)) simplices.push_back(s);
      emit(globals, {{"subgroup", table.classes[static_cast<std::size_t>(cls[0])].label},
                     {"vertices", f.vertex_count()},
                     {"simplices", simplices},
                     {"homology", to_json(homology(f))}});
      return 0;
    }
    if (*cx_hom) {
      AnyComplex x = load_complex(complex_spec);
      emit(globals, homology_json(x));
      return 0;
    }
    if (*v9) return timed_report(globals, [&] { return verify_eq9(opts); });
    if (*v10) return timed_report(globals, [&] { return verify_eq10(opts); });
    if (*vac) {
      return timed_report(globals, [&] {
        AnyComplex raw = load_complex(complex_spec);
        SimpGComplex x = simplicial(raw);
        EnginePtr engine = engine_for(complex_spec, x.group);
        VerificationReport r = verify_acyclic(x, *engine, subgroup_selection(engine->classes(), subgroup_spec));
        if (const auto* m = std::get_if<RegularGCW>(&raw)) {
          Homology h = homology(*m);
          r.add("complex itself acyclic", h.acyclic(), to_json(h));
        }
        return r;
      });
    }
    if (*split_cmd) {
      if (!check_file.empty()) {
        const bool ok = verify_splitting_witness(read_json_file(check_file));
        std::cout << (ok ? "witness verified\n" : "witness rejected\n");
        return ok ? 0 : 1;
      }
      return timed_report(globals, [&] { return compute_splitting(opts); });
    }
    if (*sm_cmd) {
      return timed_report(globals, [&] {
        SimpGComplex x = simplicial(load_complex(complex_spec));
        EnginePtr engine = engine_for(complex_spec, x.group);
        std::string fam = sm_family;
        if (fam == "auto") fam = engine == floyd_richardson().engine ? "proper" : "all";
        return stable_model_report(x, engine, named_family(engine->classes(), fam), truncation);
      });
    }
    if (*self_cmd) {
      return timed_report(globals, [&] {
        return run_selftest(opts, [](const Criterion& c, const CheckResult& r, double) {
          std::cerr << "criterion " << c.id << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        });
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
