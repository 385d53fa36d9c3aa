#pragma once

// JSON encodings of groups, G-sets, complexes, categories, morphisms and
// reports.  Reports carry a schema version and FNV-1a hashes of their inputs.

#include "mackey/burnside.hpp"
#include "mackey/category.hpp"
#include "mackey/gcw.hpp"
#include "mackey/module.hpp"
#include "mackey/permgrp.hpp"
#include "mackey/report.hpp"

#include <string>

namespace mackey {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();
std::string fnv1a_hex(const std::string& bytes);
/// Hash of the compact dump of a JSON value.
std::string content_hash(const Json& j);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"degree": n, "generators": [[images...], ...]}.
Json group_to_json(const PermGroup& g);
/// Accepts a catalogue name, {"name": ...}, or the form above.
PermGroup group_from_json(const Json& j);
/// Order, generators, subgroup classes and conjugacy class sizes.
Json group_summary(const PermGroup& g, const SubgroupClassTable& classes);

/// {"points": n, "action": images per generator}.
Json gset_to_json(const PermGroup& g, const GSet& x);
GSet gset_from_json(const PermGroup& g, const Json& j);

/// {"vertices", "action", "simplices", "group"}; "group" is optional on input
/// and defaults to the group generated by the action permutations.
Json complex_to_json(const SimpGComplex& x);
SimpGComplex complex_from_json(const Json& j);
/// {"vertices", "edges", "faces", "action", "group"}.
Json regular_to_json(const RegularGCW& x);
RegularGCW regular_from_json(const Json& j);

/// Objects, hom labels, identities and the full composition table.
Json category_to_json(const AddCategory& cat);

Json morphism_to_json(const AddCategory& cat, const ModMorphism& m);
/// Throws Error when shapes do not match the category.
ModMorphism morphism_from_json(const AddCategory& cat, const Json& j);

Json to_json(const AbelianGroup& a);
Json to_json(const Homology& h);
Json to_json(const IntMatrix& m);

/// With timing == false the wall time is omitted, so equal runs give equal bytes.
Json report_to_json(const VerificationReport& r, bool timing = false);

}  // namespace mackey
