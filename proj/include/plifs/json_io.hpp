#pragma once

#include <string>

#include "plifs/build.hpp"

namespace plifs {

// "p/q" rationals in lowest terms throughout; key order is fixed so equal
// values serialize byte-identically.

std::string arcset_to_json(const ArcSet &s);
ArcSet arcset_from_json(const std::string &text);

std::string plmap_to_json(const PLMap &m);
PLMap plmap_from_json(const std::string &text);

std::string trace_to_json(const IterationTrace &t);
std::string trace_to_csv(const IterationTrace &t); // lo_num,lo_den,hi_num,hi_den,level

std::string orbit_to_json(const Orbit &o);
std::string bundle_to_json(const ExampleBundle &b);
std::string classification_report_json(int example, const Decomposition &d,
                                       const Classification &cls, const ExclusionVerdict &v);
std::string cantorval_report_json(int example, int depth, int checks, bool value);
std::string psi_to_json(const std::string &pair_name, int depth, const PsiMap &psi);

} // namespace plifs
