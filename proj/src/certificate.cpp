#include "secdim/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace secdim {

Certificate make_certificate(const MultiProjectiveFormat& format,
                             const BundleDegree& bundle, const SchemeDescriptor& scheme,
                             const CohomologyResult& result, const Config& config,
                             std::int64_t wall_time_ms) {
  Certificate c;
  c.format = format;
  c.bundle = bundle;
  c.scheme = scheme;
  c.result = result;
  c.master_seed = config.seed;
  c.wall_time_ms = wall_time_ms;
  return c;
}

nlohmann::ordered_json to_json(const CohomologyResult& r) {
  nlohmann::ordered_json j;
  j["matrix_shape"] = {r.rows, r.cols};
  j["rank"] = r.rank;
  j["h0"] = r.h0;
  j["h1"] = r.h1;
  j["expected_h0"] = r.expected_h0;
  j["verdict"] = verdict_name(r.verdict);
  j["trials_used"] = r.trials_used;
  j["primes"] = r.primes_used;
  return j;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["tool_version"] = cert.tool_version;
  j["format"] = cert.format.factor_dims;
  j["bundle"] = cert.bundle.degrees;
  j["scheme"] = nlohmann::ordered_json::parse(to_canonical_json(cert.scheme));
  j["primes"] = cert.result.primes_used;
  j["master_seed"] = cert.master_seed;
  j["trials"] = cert.result.trials_used;
  j["matrix_shape"] = {cert.result.rows, cert.result.cols};
  j["rank"] = cert.result.rank;
  j["h0"] = cert.result.h0;
  j["h1"] = cert.result.h1;
  j["expected_h0"] = cert.result.expected_h0;
  j["verdict"] = verdict_name(cert.result.verdict);
  if (cert.secant) {
    nlohmann::ordered_json s;
    s["z"] = cert.secant->z;
    s["dim"] = cert.secant->dim;
    s["expected_dim"] = cert.secant->expected;
    s["defect"] = cert.secant->defect;
    j["secant"] = s;
  }
  j["wall_time_ms"] = cert.wall_time_ms;
  return j;
}

nlohmann::ordered_json to_json(const ScheduleTrace& trace) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["schedule"] = trace.schedule;
  j["instance"] = trace.instance;
  j["hypothesis"] = nlohmann::ordered_json::array();
  for (const auto& h : trace.hypothesis) {
    nlohmann::ordered_json c;
    c["name"] = h.name;
    c["ok"] = h.ok;
    c["detail"] = h.detail;
    j["hypothesis"].push_back(c);
  }
  j["goals"] = nlohmann::ordered_json::array();
  for (const auto& g : trace.goals) {
    nlohmann::ordered_json c;
    c["description"] = g.description;
    c["status"] = goal_status_name(g.status);
    if (!g.detail.empty()) c["detail"] = g.detail;
    if (g.cohom) c["cohomology"] = to_json(*g.cohom);
    j["goals"].push_back(c);
  }
  j["verdict"] = schedule_verdict_name(trace.verdict);
  return j;
}

bool validate_certificate_json(const nlohmann::json& j) {
  try {
    const std::uint64_t rows = j.at("matrix_shape").at(0).get<std::uint64_t>();
    const std::uint64_t cols = j.at("matrix_shape").at(1).get<std::uint64_t>();
    const std::uint64_t rank = j.at("rank").get<std::uint64_t>();
    const std::uint64_t h0 = j.at("h0").get<std::uint64_t>();
    const std::uint64_t h1 = j.at("h1").get<std::uint64_t>();
    const std::uint64_t expected = j.at("expected_h0").get<std::uint64_t>();
    const std::string verdict = j.at("verdict").get<std::string>();

    if (rank > std::min(rows, cols)) return false;
    if (h0 != cols - rank) return false;
    if (h1 != rows - rank) return false;
    if (expected != (cols > rows ? cols - rows : 0)) return false;
    const bool certified = verdict == "certified_expected";
    if (certified != (h0 == expected)) return false;
    if (j.contains("secant")) {
      const auto& s = j.at("secant");
      const std::uint64_t dim = s.at("dim").get<std::uint64_t>();
      const std::uint64_t exp_dim = s.at("expected_dim").get<std::uint64_t>();
      const std::uint64_t defect = s.at("defect").get<std::uint64_t>();
      if (dim != cols - 1 - h0) return false;
      if (defect != exp_dim - dim) return false;
    }
    return true;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

std::string csv_header() {
  return "z,rows,cols,rank,h0,h1,expected_h0,dim,expected_dim,defect,verdict,trials";
}

std::string csv_row(const SecantResult& r) {
  std::ostringstream os;
  os << r.z << ',' << r.cohom.rows << ',' << r.cohom.cols << ',' << r.cohom.rank << ','
     << r.cohom.h0 << ',' << r.cohom.h1 << ',' << r.cohom.expected_h0 << ',' << r.dim
     << ',' << r.expected << ',' << r.defect << ',' << verdict_name(r.verdict) << ','
     << r.cohom.trials_used;
  return os.str();
}

}  // namespace secdim
