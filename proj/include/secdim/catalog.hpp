#pragma once

#include <string>
#include <vector>

#include "secdim/terracini.hpp"

namespace secdim {

// Regression case with a known defect, together with where that expected
// value comes from.
struct CatalogEntry {
  std::string name;
  MultiProjectiveFormat format;
  BundleDegree bundle;
  std::uint64_t z = 0;
  std::uint64_t expected_defect = 0;
  std::string provenance;
};

struct CatalogOutcome {
  CatalogEntry entry;
  std::uint64_t observed_defect = 0;
  bool ok = false;
  SecantResult secant;
};

// Known defective and non-defective cases: the two-factor double-curve
// family, the plane-conic double-point case and a desk-scale product
// instance.
std::vector<CatalogEntry> builtin_catalog();

std::vector<CatalogOutcome> run_catalog(const Config& config);

}  // namespace secdim
