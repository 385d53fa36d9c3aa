#pragma once

// The Floyd–Richardson complex M for A5 acting on five points, its
// subdivisions L = sd M and L' = sd L, and the checks built on them:
// Bredon resolutions over the orbit and Mackey categories of the proper
// family, the splitting r of the top differential, and truncated resolutions.

#include "mackey/gcw.hpp"
#include "mackey/orbitmackey.hpp"
#include "mackey/report.hpp"

#include <string>
#include <vector>

namespace mackey {

/// Five vertices with the natural A5 action, all ten edges, and one pentagon
/// per pair {x, x^-1} of 5-cycles conjugate to (0 1 2 3 4).  The walk starts
/// at vertex 0 and follows x or x^-1, whichever reaches the smaller vertex
/// first.  Throws Error if the pentagon set is not A5-stable.
RegularGCW build_floyd_richardson();

/// Shared immutable data for the worked example.
struct FloydRichardson {
  EnginePtr engine;
  Family proper;
  Family all;
  CategoryPtr orbit;       // O_P A5
  CategoryPtr mackey;      // M_P A5
  CategoryPtr mackey_all;  // M_F A5, F = all subgroups
  RegularGCW m;
  SimpGComplex l;
  SimpGComplex l2;  // L'
};

/// Built once per process.
const FloydRichardson& floyd_richardson();

/// Exactness at every object in degrees -1..top, with failures listed in
/// `details`.  With opts.parallel the objects are checked concurrently.
bool exact_everywhere(const AddCategory& cat, const ChainComplex& c, int top, const ExecOptions& opts, Json& details);

/// Summand labels of a free module, sorted by class index.
std::vector<std::string> summand_labels(const OrbitMackeyEngine& engine, const Family& family, const FreeModule& f);

VerificationReport verify_floyd_richardson();
VerificationReport verify_eq9(const ExecOptions& opts = {});
VerificationReport verify_eq10(const ExecOptions& opts = {});

/// Acyclicity of X^H for each listed subgroup class, computed on a simplicial
/// G-complex.  Classes not listed are reported without affecting the verdict.
VerificationReport verify_acyclic(const SimpGComplex& x, const OrbitMackeyEngine& engine, const std::vector<int>& classes);

/// Solves r ∘ s = Id for s the degree-2 differential of ind_π of the L'
/// complex.  The witness holds r; the report also records whether r uses
/// spans outside the image of π, the same identity over M_F A5, and whether
/// the degree-2 differential of the L complex over O_P A5 splits.
VerificationReport compute_splitting(const ExecOptions& opts = {});
/// Rebuilds s and checks r ∘ s = Id for the r stored in a splitting report.
bool verify_splitting_witness(const Json& report);

/// Truncation at m of ind_π of the Bredon complex of X: tests whether
/// K = ker d_{m-1} (with d_0 = ε and m = 0 read as m = 1) is projective.  The
/// cover C_m -> K has kernel im d_{m+1}, and K is projective exactly when the
/// cover splits.  Throws Error when the Bredon complex is not a resolution of
/// Z̲ or m exceeds its length + 1.
VerificationReport stable_model_report(const SimpGComplex& x, const EnginePtr& engine, const Family& family, int m);

}  // namespace mackey
