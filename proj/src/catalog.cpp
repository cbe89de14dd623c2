#include "secdim/catalog.hpp"

#include <sstream>

namespace secdim {

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> entries;

  // P^1 x P^1 with O(2a, 2): defective exactly at z = 2a + 1, where a general
  // point set lies on a unique double curve.
  for (int a = 1; a <= 3; ++a) {
    const MultiProjectiveFormat fmt({1, 1});
    const BundleDegree bdl({2 * a, 2});
    const std::uint64_t n_sections = basis_size(fmt, bdl);
    for (std::uint64_t z = 1; 3 * z <= n_sections + 2; ++z) {
      const bool defective = z == static_cast<std::uint64_t>(2 * a + 1);
      std::ostringstream name;
      name << "p1xp1-O(" << 2 * a << ",2)-z" << z;
      entries.push_back(
          {name.str(), fmt, bdl, z, defective ? 1ULL : 0ULL,
           defective ? "classical two-factor double-curve defect family"
                     : "expected dimension, classical two-factor family"});
    }
  }

  // Plane conics: two double points lie on a double line.
  entries.push_back({"p2-O(2)-z1", MultiProjectiveFormat({2}), BundleDegree({2}), 1, 0,
                     "independent rational-elimination oracle"});
  entries.push_back({"p2-O(2)-z2", MultiProjectiveFormat({2}), BundleDegree({2}), 2, 1,
                     "independent rational-elimination oracle"});

  // Desk-scale three-factor product, decisive z value.
  entries.push_back({"p1^3-O(3,3,2)-z12", MultiProjectiveFormat({1, 1, 1}),
                     BundleDegree({3, 3, 2}), 12, 0,
                     "verified line-factor product instance"});

  return entries;
}

std::vector<CatalogOutcome> run_catalog(const Config& config) {
  std::vector<CatalogOutcome> out;
  std::uint64_t tag = 0;
  for (const auto& entry : builtin_catalog()) {
    CatalogOutcome o;
    o.entry = entry;
    o.secant = secant_dimension(entry.format, entry.bundle, entry.z, config.fork(tag++));
    o.observed_defect = o.secant.defect;
    o.ok = o.observed_defect == entry.expected_defect;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace secdim
