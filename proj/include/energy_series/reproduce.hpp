#pragma once

#include <string>
#include <vector>

#include "energy_series/potential.hpp"
#include "energy_series/report.hpp"

namespace energy_series {

/// Reference value for one reproduced cell. A tolerance of zero marks a
/// cell that is reported but not checked.
struct ReferenceCell {
  std::string key;
  double value = 0.0;
  double tolerance = 0.0;
};

struct ReproductionTarget {
  std::string id;
  std::string description;
  std::vector<ReferenceCell> cells;
};

const std::vector<ReproductionTarget>& reproduction_manifest();
const ReproductionTarget& reproduction_target(const std::string& id);

/// Computes every cell of `id` and compares it with the manifest. Columns:
/// key, value, reference, abs_error, tolerance, status.
Report reproduce(const std::string& id, const GridConfig& grid = {});

}  // namespace energy_series
