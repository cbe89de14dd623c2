#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secdim/schemes.hpp"

namespace secdim {

// Shared run configuration. The default seed is a fixed constant so that
// default runs are reproducible; entropy is opt-in at the CLI.
struct Config {
  std::uint64_t prime = PrimeField::kDefaultModulus;
  std::uint64_t second_prime = PrimeField::kRetryModulus;
  std::uint64_t seed = 0x5ECD1E5EEDULL;
  int trials = 3;  // sampled realizations per prime

  // Derives an independent, deterministic sub-configuration for one task.
  Config fork(std::uint64_t tag) const {
    Config c = *this;
    c.seed = mix(seed, tag);
    return c;
  }
};

// Euclidean split of the section count: sections = ambient_dim * quotient +
// remainder with 0 <= remainder < ambient_dim (the specialization counts for
// the divisor steps).
struct SplitParams {
  std::int64_t sections = 0;    // h^0 on the divisor-side variety
  std::int64_t ambient_dim = 0; // dimension of the product X
  std::int64_t quotient = 0;
  std::int64_t remainder = 0;
};

SplitParams split_params(std::int64_t sections, std::int64_t ambient_dim);

// Worker threads for fan-out over independent tasks, from SECDIM_WORKERS
// (default 1). Results are always merged in task order.
int worker_count();

// The two z values that decide non-defectivity for every z: floor and
// ceiling of N / (ambient_dim + 1).
std::pair<std::uint64_t, std::uint64_t> critical_z(std::uint64_t n_sections,
                                                   int ambient_dim);

enum class Verdict { CertifiedExpected, ExceedsExpected };

const char* verdict_name(Verdict v);

// One rank computation with retry provenance. h0 = N - rank and
// h1 = deg - rank; a sampled h0 can only exceed the generic value, so hitting
// the expected value certifies it.
struct CohomologyResult {
  std::uint64_t n_sections = 0;    // N = h^0 of the ambient bundle
  std::uint64_t scheme_degree = 0; // = number of condition rows
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t rank = 0;          // best (largest) rank over trials
  std::uint64_t h0 = 0;            // smallest observed h0
  std::uint64_t h1 = 0;
  std::uint64_t expected_h0 = 0;   // max(0, N - deg)
  Verdict verdict = Verdict::ExceedsExpected;
  int trials_used = 0;
  std::vector<std::uint64_t> primes_used;
};

CohomologyResult cohomology(const SchemeDescriptor& s,
                            const MultiProjectiveFormat& format,
                            const BundleDegree& bundle, const Config& config,
                            const std::optional<DivisorHandle>& divisor = {});

// Secant-variety dimension through z general double points.
struct SecantResult {
  std::uint64_t z = 0;
  std::uint64_t n_sections = 0;
  int ambient_dim = 0;
  std::uint64_t dim = 0;       // N - 1 - h0
  std::uint64_t expected = 0;  // min(N - 1, z (n+1) - 1)
  std::uint64_t defect = 0;    // expected - dim
  Verdict verdict = Verdict::ExceedsExpected;
  CohomologyResult cohom;
};

SecantResult secant_dimension(const MultiProjectiveFormat& format,
                              const BundleDegree& bundle, std::uint64_t z,
                              const Config& config);

enum class ScanMode { CriticalOnly, All };

struct ScanReport {
  ScanMode mode = ScanMode::CriticalOnly;
  std::vector<SecantResult> per_z;
  bool nondefective = false;
};

// CriticalOnly tests the two decisive z values; All tests every z with
// (n+1) z <= N + n. Tasks fan out over SECDIM_WORKERS threads and are merged
// in task order.
ScanReport nondefectivity_scan(const MultiProjectiveFormat& format,
                               const BundleDegree& bundle, const Config& config,
                               ScanMode mode);

// Verdict of one ladder statement instance. `holds` means the computed h^0
// equals the statement's bound; `vacuous` marks the analytically-true
// branches that need no computation.
struct StatementResult {
  bool holds = false;
  bool vacuous = false;
  std::optional<CohomologyResult> cohom;
  std::string description;
  // statement B carries two bounds: the one derived from the scheme's degree
  // (authoritative) and the printed closed form, which disagree in general.
  std::optional<std::int64_t> expected_scheme;
  std::optional<std::int64_t> expected_printed;
  bool printed_matches = false;
};

// A(t,z): z general double points of X = Y x P^1 impose independent
// conditions on L[t] (equivalently the z-secant variety of (X, L[t]) has the
// expected dimension).
StatementResult statement_a(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            const Config& config);

// B(t,z): the specialized scheme (z-e-f ambient double points, f divisor
// double points, e reduced points of H) has the expected h^0 in L[t-1].
// The split (e, f) defaults to split_params but any pair with
// n*e + f = sections is accepted.
StatementResult statement_b(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            std::int64_t e, std::int64_t f, const Config& config);

// C(t,z): max(0, z-e-f) general double points of X impose at least the
// expected number of conditions on L[t-2].
StatementResult statement_c(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            std::int64_t e, std::int64_t f, const Config& config);

// Arithmetic side conditions of the divisor-induction argument, evaluated
// exactly on 64-bit integers.
struct InequalityRecord {
  std::int64_t delta = 0;  // (t+1) alpha + n - z (n+1)
  std::int64_t w = 0;      // z - (t-1) e1 - f1
  std::int64_t claim1_lhs = 0;
  std::int64_t claim1_rhs = 0;
  bool claim1_ok = false;
  bool claim2_vacuous = false;  // w < e1
  std::int64_t claim2_lhs = 0;
  bool claim2_ok = false;
  std::int64_t fn_t = 0;         // (t+1) n e1 + (t+1) f1 - (n+1) t f1 - (n+1) e1 - n(n+2)
  std::int64_t fn2_printed = 0;  // (2n-1) n e1 + (1-2n) f1 - n(n+2)
};

InequalityRecord inequality_oracles(const SplitParams& split, std::int64_t t,
                                    std::int64_t z);

// The degree-1 case: under n (z - e1) + e1 <= alpha, the z-secant variety of
// (X, L[1]) has dimension z (n+1) - 1.
struct U1Result {
  bool applicable = false;
  bool verified = false;
  std::int64_t hypothesis_lhs = 0;  // n (z - e1) + e1
  std::int64_t sections = 0;
  std::optional<SecantResult> secant;
};

U1Result prop_u1_check(const MultiProjectiveFormat& y_format,
                       const BundleDegree& y_bundle, std::uint64_t z,
                       const Config& config);

}  // namespace secdim
