#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "secdim/horace.hpp"
#include "secdim/terracini.hpp"

namespace secdim {

inline constexpr const char* kToolVersion = "0.1.0";

// Persisted outcome of one rank computation. Everything is an integer;
// re-running with the same version, seed, prime and inputs reproduces the
// record byte-for-byte apart from wall_time_ms.
struct Certificate {
  std::string tool_version = kToolVersion;
  MultiProjectiveFormat format;
  BundleDegree bundle;
  SchemeDescriptor scheme;
  CohomologyResult result;
  std::uint64_t master_seed = 0;
  std::int64_t wall_time_ms = 0;
  std::optional<SecantResult> secant;  // present for secant-dimension runs
};

Certificate make_certificate(const MultiProjectiveFormat& format,
                             const BundleDegree& bundle, const SchemeDescriptor& scheme,
                             const CohomologyResult& result, const Config& config,
                             std::int64_t wall_time_ms);

// Keys in fixed order, no floating point anywhere.
nlohmann::ordered_json to_json(const Certificate& cert);
nlohmann::ordered_json to_json(const ScheduleTrace& trace);
nlohmann::ordered_json to_json(const CohomologyResult& r);

// Re-validates the internal arithmetic of a written certificate
// (h0 = cols - rank, h1 = rows - rank, expected_h0, verdict consistency).
bool validate_certificate_json(const nlohmann::json& j);

// One spreadsheet-friendly line per z.
std::string csv_header();
std::string csv_row(const SecantResult& r);

}  // namespace secdim
