#include "mackey/selftest.hpp"

#include "mackey/floyd_richardson.hpp"
#include "mackey/oracles.hpp"
#include "mackey/resolution.hpp"
#include "mackey/serialize.hpp"

#include <chrono>
#include <random>

namespace mackey {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

CheckResult from_report(const VerificationReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json item = {{"name", c.name}, {"pass", c.pass}};
    if (!c.pass && !c.details.is_null()) item["details"] = c.details;
    checks.push_back(item);
  }
  return {r.target, r.pass(), {{"checks", checks}}};
}

struct Setup {
  EnginePtr engine;
  Family family;
  CategoryPtr orbit;
  CategoryPtr mackey;
};

Setup setup(const std::string& group, const std::string& family) {
  Setup s;
  s.engine = make_engine(named_group(group));
  s.family = named_family(s.engine->classes(), family);
  s.orbit = orbit_category(s.engine, s.family);
  s.mackey = mackey_category(s.engine, s.family);
  return s;
}

FreeModule random_free(Rng& rng, int objects) {
  FreeModule f;
  const int n = 1 + pick(rng, 3);
  for (int i = 0; i < n; ++i) f.summands.push_back(pick(rng, objects));
  return f;
}

CheckResult criterion1(const ExecOptions&) { return from_report(verify_floyd_richardson()); }

CheckResult criterion2(const ExecOptions&) {
  const FloydRichardson& fr = floyd_richardson();
  VerificationReport r = verify_acyclic(fr.l, *fr.engine, fr.proper.classes);
  CheckResult out = from_report(r);
  const bool empty_top = fixed_subcomplex(fr.l, fr.m.group.whole()).empty();
  out.details["proper_classes"] = fr.proper.classes.size();
  out.details["top_fixed_set_empty"] = empty_top;
  out.pass = out.pass && empty_top && fr.proper.classes.size() == 8;
  return out;
}

CheckResult criterion3(const ExecOptions& opts) { return from_report(verify_eq9(opts)); }
CheckResult criterion4(const ExecOptions& opts) { return from_report(verify_eq10(opts)); }

CheckResult criterion5(const ExecOptions& opts) {
  const FloydRichardson& fr = floyd_richardson();
  VerificationReport r = compute_splitting(opts);
  CheckResult out = from_report(r);
  const Json reloaded = Json::parse(dump(report_to_json(r)));
  const bool reverified = verify_splitting_witness(reloaded);
  out.details["witness_reverified"] = reverified;

  BredonComplex b = bredon_complex(fr.l2, fr.engine, fr.proper);
  ChainComplex c = ind_pi(fr.engine, fr.proper, b.chain);
  std::vector<std::pair<std::string, LatticeModule>> coefficients{
      {"Burnside functor", burnside_functor(fr.engine, fr.proper)},
      {"Z^G[-,e]", representable(*fr.mackey, fr.proper.object_of(0))},
      {"Z^G[-,C5]", representable(*fr.mackey, fr.proper.object_of(*fr.engine->classes().find_label("C5")))},
      {"Z^G[-,A4]", representable(*fr.mackey, fr.proper.object_of(*fr.engine->classes().find_label("A4")))}};
  bool ext_zero = true;
  Json ext_details = Json::object();
  for (const auto& [name, n] : coefficients) {
    AbelianGroup e1 = ext(*fr.mackey, c, n, 1);
    ext_details[name] = e1.to_string();
    ext_zero = ext_zero && e1.is_zero();
  }
  out.details["ext1"] = ext_details;
  out.pass = out.pass && reverified && ext_zero;
  return out;
}

CheckResult criterion6(const ExecOptions&) {
  Json per_group = Json::array();
  bool pass = true;
  for (std::string g : {"C2", "C3", "S3", "A4", "D5", "A5"}) {
    EnginePtr engine = make_engine(named_group(g));
    for (std::string fam : {"all", "proper"}) {
      Family family = named_family(engine->classes(), fam);
      CategoryPtr cat = mackey_category(engine, family);
      int pairs = 0, mismatches = 0;
      for (int a = 0; a < cat->object_count(); ++a)
        for (int b = 0; b < cat->object_count(); ++b) {
          ++pairs;
          const int expected = oracle::mackey_rank_formula(*engine, family.classes[static_cast<std::size_t>(a)],
                                                           family.classes[static_cast<std::size_t>(b)]);
          if (cat->hom_rank(a, b) != expected) ++mismatches;
        }
      pass = pass && mismatches == 0;
      per_group.push_back({{"group", g}, {"family", fam}, {"pairs", pairs}, {"mismatches", mismatches}});
    }
  }
  return {"double-coset rank law", pass, {{"groups", per_group}}};
}

bool pi_respects(const OrbitMackeyEngine& engine, const Family& family, const AddCategory& o, const AddCategory& m, int a,
                 int b, int c, int f, int g) {
  HomVector composite = o.compose(a, b, c, o.basis_vector(a, b, f), o.basis_vector(b, c, g));
  HomVector lhs = pi_map(engine, family, a, c, composite);
  HomVector rhs = m.compose(a, b, c, pi_map(engine, family, a, b, o.basis_vector(a, b, f)),
                            pi_map(engine, family, b, c, o.basis_vector(b, c, g)));
  return lhs == rhs;
}

bool compose_matches_oracle(const OrbitMackeyEngine& engine, const Family& family, const AddCategory& m, int a, int b,
                            int c, int f, int g) {
  const int ca = family.classes[static_cast<std::size_t>(a)];
  const int cb = family.classes[static_cast<std::size_t>(b)];
  const int cc = family.classes[static_cast<std::size_t>(c)];
  return m.compose(a, b, c, f, g) == oracle::mackey_compose_by_pullback(engine, ca, cb, cc, f, g);
}

CheckResult criterion7(const ExecOptions&) {
  Json details;
  bool pass = true;
  Rng rng(20240607);

  {  // exhaustive on S3
    Setup s = setup("S3", "all");
    const int n = s.orbit->object_count();
    int pairs = 0, bad_pi = 0, bad_compose = 0, bad_identity = 0;
    for (int a = 0; a < n; ++a) {
      if (pi_map(*s.engine, s.family, a, a, s.orbit->identity_vector(a)) != s.mackey->identity_vector(a)) ++bad_identity;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          for (int f = 0; f < s.orbit->hom_rank(a, b); ++f)
            for (int g = 0; g < s.orbit->hom_rank(b, c); ++g) {
              ++pairs;
              if (!pi_respects(*s.engine, s.family, *s.orbit, *s.mackey, a, b, c, f, g)) ++bad_pi;
            }
          for (int f = 0; f < s.mackey->hom_rank(a, b); ++f)
            for (int g = 0; g < s.mackey->hom_rank(b, c); ++g)
              if (!compose_matches_oracle(*s.engine, s.family, *s.mackey, a, b, c, f, g)) ++bad_compose;
        }
    }
    details["S3_exhaustive"] = {{"pairs", pairs}, {"pi_failures", bad_pi}, {"identity_failures", bad_identity},
                                {"pullback_failures", bad_compose}};
    pass = pass && bad_pi == 0 && bad_compose == 0 && bad_identity == 0;
  }
  {  // sampled on A5, proper family
    const FloydRichardson& fr = floyd_richardson();
    const int n = fr.orbit->object_count();
    int samples = 0, bad_pi = 0, bad_compose = 0;
    while (samples < 1000) {
      const int a = pick(rng, n), b = pick(rng, n), c = pick(rng, n);
      if (fr.orbit->hom_rank(a, b) == 0 || fr.orbit->hom_rank(b, c) == 0) continue;
      ++samples;
      if (!pi_respects(*fr.engine, fr.proper, *fr.orbit, *fr.mackey, a, b, c, pick(rng, fr.orbit->hom_rank(a, b)),
                       pick(rng, fr.orbit->hom_rank(b, c))))
        ++bad_pi;
      if (!compose_matches_oracle(*fr.engine, fr.proper, *fr.mackey, a, b, c, pick(rng, fr.mackey->hom_rank(a, b)),
                                  pick(rng, fr.mackey->hom_rank(b, c))))
        ++bad_compose;
    }
    const bool laws = fr.mackey->check_laws(1000, 7);
    details["A5_sampled"] = {{"pairs", samples}, {"pi_failures", bad_pi}, {"pullback_failures", bad_compose},
                             {"associativity_sampled", laws}};
    pass = pass && bad_pi == 0 && bad_compose == 0 && laws;
  }
  for (std::string g : {"C2", "S3"}) {
    Setup s = setup(g, "all");
    const int n = s.orbit->object_count();
    int adj_fail = 0, tensor_fail = 0;
    for (int trial = 0; trial < 10; ++trial) {
      FreeModule nmod = random_free(rng, n);
      LatticeModule m = trial % 3 == 0 ? burnside_functor(s.engine, s.family) : representable(*s.mackey, pick(rng, n));
      if (!adjunction_check(s.engine, s.family, nmod, m)) ++adj_fail;

      LatticeModule l = representable(*s.mackey, pick(rng, n), Variance::covariant);
      AbelianGroup lhs = oracle::tensor_by_definition(*s.mackey, free_lattice(*s.mackey, nmod), l);
      AbelianGroup rhs = tensor_over_category(*s.orbit, free_presentation(*s.orbit, nmod), res_pi(*s.engine, s.family, l));
      if (!(lhs == rhs)) ++tensor_fail;
    }
    details["adjunction_" + g] = {{"trials", 10}, {"failures", adj_fail}};
    details["tensor_adjunction_" + g] = {{"trials", 10}, {"failures", tensor_fail}};
    pass = pass && adj_fail == 0 && tensor_fail == 0;
  }
  return {"functor laws", pass, details};
}

CheckResult criterion8(const ExecOptions&) {
  const FloydRichardson& fr = floyd_richardson();
  Json details = Json::array();
  bool pass = true;
  for (const auto& [name, x] : {std::pair<std::string, const SimpGComplex*>{"L", &fr.l}, {"L'", &fr.l2}}) {
    BredonComplex b = bredon_complex(*x, fr.engine, fr.proper);
    ChainComplex c = ind_pi(fr.engine, fr.proper, b.chain);
    const bool base = is_exact(*fr.orbit, b.chain, 2);
    const bool induced = is_exact(*fr.mackey, c, 2);
    details.push_back({{"complex", name}, {"exact", base}, {"induced_exact", induced}});
    pass = pass && base == induced && base;
  }
  return {"exactness and induction", pass, {{"complexes", details}}};
}

CheckResult criterion9(const ExecOptions&) {
  Json details;
  bool pass = true;
  Rng rng(99);
  Json groups = Json::array();
  for (const std::string& key : named_group_keys()) {
    PermGroup g = named_group(key);
    SubgroupClassTable table = enumerate_subgroup_classes(g);
    std::string why;
    const bool subgroups_ok = oracle::subgroup_table_matches(g, table, &why);
    IntMatrix marks = table_of_marks(g, table);
    int burnside_fail = 0;
    for (int trial = 0; trial < 100; ++trial) {
      BurnsideElement x = BurnsideElement::zero(table), y = BurnsideElement::zero(table);
      for (int k = 0; k < table.class_count(); ++k) {
        x.coefficients(k) = pick(rng, 5) - 2;
        y.coefficients(k) = pick(rng, 5) - 2;
      }
      if (!(burnside_multiply(g, table, x, y) == oracle::burnside_product_by_marks(marks, x, y))) ++burnside_fail;
    }
    Json item = {{"group", key}, {"order", g.order()}, {"subgroups", table.subgroup_count()}, {"subgroups_match", subgroups_ok},
                 {"burnside_failures", burnside_fail}};
    if (!subgroups_ok) item["reason"] = why;
    groups.push_back(item);
    pass = pass && subgroups_ok && burnside_fail == 0;
  }
  details["groups"] = groups;

  const FloydRichardson& fr = floyd_richardson();
  CategoryPtr orbit_all = orbit_category(fr.engine, fr.all);
  Json bredon = Json::array();
  for (const auto& [name, x] : {std::pair<std::string, const SimpGComplex*>{"L", &fr.l}, {"L'", &fr.l2}}) {
    BredonComplex b = bredon_complex(*x, fr.engine, fr.all);
    std::string why;
    const bool ok = oracle::bredon_matches_fixed_points(b, *orbit_all, *x, *fr.engine, &why);
    Json item = {{"complex", name}, {"classes", fr.all.classes.size()}, {"match", ok}};
    if (!ok) item["reason"] = why;
    bredon.push_back(item);
    pass = pass && ok;
  }
  details["bredon_vs_fixed_points"] = bredon;
  return {"oracle equivalences", pass, details};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list{
      {1, "Floyd-Richardson complex is acyclic", 1.0, criterion1},
      {2, "fixed sets of L are acyclic, top fixed set empty", 10.0, criterion2},
      {3, "orbit-category resolution from L", 30.0, criterion3},
      {4, "Mackey resolution of the Burnside functor from L'", 300.0, criterion4},
      {5, "splitting r with r∘s = Id", 300.0, criterion5},
      {6, "double-coset rank law", 120.0, criterion6},
      {7, "functor laws and adjunctions", 120.0, criterion7},
      {8, "exactness is detected after induction", 300.0, criterion8},
      {9, "oracle equivalences", 300.0, criterion9},
  };
  return list;
}

VerificationReport run_selftest(const ExecOptions& opts,
                                const std::function<void(const Criterion&, const CheckResult&, double)>& progress) {
  VerificationReport report;
  report.target = "selftest";
  for (const Criterion& c : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run(opts);
    } catch (const std::exception& e) {
      r = {c.title, false, {{"error", e.what()}}};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.name = "criterion " + std::to_string(c.id) + ": " + c.title;
    if (progress) progress(c, r, seconds);
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace mackey
