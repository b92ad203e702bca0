#pragma once

#include <string>
#include <vector>

#include "plifs/build.hpp"

namespace plifs {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance matrix (exact arithmetic, fixed tolerances).
std::vector<CriterionResult> run_acceptance();

std::string acceptance_report_json(const std::vector<CriterionResult> &results);

} // namespace plifs
