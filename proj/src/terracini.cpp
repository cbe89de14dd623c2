#include "secdim/terracini.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace secdim {

SplitParams split_params(std::int64_t sections, std::int64_t ambient_dim) {
  if (sections < 1 || ambient_dim < 1)
    throw std::invalid_argument("split_params: positive arguments required");
  SplitParams s;
  s.sections = sections;
  s.ambient_dim = ambient_dim;
  s.quotient = sections / ambient_dim;
  s.remainder = sections - ambient_dim * s.quotient;
  return s;
}

std::pair<std::uint64_t, std::uint64_t> critical_z(std::uint64_t n_sections,
                                                   int ambient_dim) {
  if (n_sections < 1 || ambient_dim < 1)
    throw std::invalid_argument("critical_z: positive arguments required");
  const std::uint64_t d = static_cast<std::uint64_t>(ambient_dim) + 1;
  return {n_sections / d, (n_sections + d - 1) / d};
}

const char* verdict_name(Verdict v) {
  return v == Verdict::CertifiedExpected ? "certified_expected" : "exceeds_expected";
}

int worker_count() {
  if (const char* env = std::getenv("SECDIM_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<int>(std::min(n, 64L));
  }
  return 1;
}

CohomologyResult cohomology(const SchemeDescriptor& s,
                            const MultiProjectiveFormat& format,
                            const BundleDegree& bundle, const Config& config,
                            const std::optional<DivisorHandle>& divisor) {
  validate(s);
  const auto basis = monomial_basis(format, bundle);
  const std::uint64_t n_sections = basis.size();
  const std::uint64_t deg = degree(s, format);
  const DivisorHandle* div = divisor ? &*divisor : nullptr;

  CohomologyResult best;
  best.n_sections = n_sections;
  best.scheme_degree = deg;
  best.cols = basis.size();
  best.expected_h0 = n_sections > deg ? n_sections - deg : 0;
  best.h0 = n_sections;  // no conditions applied yet

  const std::uint64_t primes[2] = {config.prime, config.second_prime};
  for (int prime_idx = 0; prime_idx < 2; ++prime_idx) {
    const PrimeField field(primes[prime_idx]);
    if (best.primes_used.empty() || best.primes_used.back() != primes[prime_idx])
      best.primes_used.push_back(primes[prime_idx]);
    for (int trial = 0; trial < std::max(1, config.trials); ++trial) {
      SplitMix64 rng(mix(config.seed, static_cast<std::uint64_t>(prime_idx),
                         static_cast<std::uint64_t>(trial)));
      const auto points = realize(s, format, field, rng, div);

      DenseMatrix m(0, basis.size());
      m.entries.reserve(deg * basis.size());
      for (const auto& rp : points) {
        const DenseMatrix rows =
            condition_rows(rp.point, rp.kind, format, basis, field, div);
        m.entries.insert(m.entries.end(), rows.entries.begin(), rows.entries.end());
        m.rows += rows.rows;
      }
      assert(m.rows == deg);

      const std::uint64_t rank = rank_mod_p(m, field);
      const std::uint64_t h0 = n_sections - rank;
      ++best.trials_used;
      if (h0 < best.h0 || best.rows == 0) {
        best.rows = m.rows;
        best.rank = rank;
        best.h0 = h0;
        best.h1 = deg - rank;
      }
      if (best.h0 == best.expected_h0) {
        best.verdict = Verdict::CertifiedExpected;
        return best;
      }
    }
  }
  best.verdict = Verdict::ExceedsExpected;
  return best;
}

SecantResult secant_dimension(const MultiProjectiveFormat& format,
                              const BundleDegree& bundle, std::uint64_t z,
                              const Config& config) {
  if (z < 1) throw std::invalid_argument("secant_dimension: z must be >= 1");
  SecantResult r;
  r.z = z;
  r.ambient_dim = format.ambient_dim();
  r.cohom = cohomology(SchemeDescriptor::double_points(z), format, bundle, config);
  r.n_sections = r.cohom.n_sections;
  const std::uint64_t tangent = z * (static_cast<std::uint64_t>(r.ambient_dim) + 1);
  r.expected = std::min(r.n_sections - 1, tangent - 1);
  r.dim = r.n_sections - 1 - r.cohom.h0;
  r.defect = r.expected - r.dim;
  r.verdict = r.cohom.verdict;
  return r;
}

ScanReport nondefectivity_scan(const MultiProjectiveFormat& format,
                               const BundleDegree& bundle, const Config& config,
                               ScanMode mode) {
  const std::uint64_t n_sections = basis_size(format, bundle);
  const int n = format.ambient_dim();

  std::vector<std::uint64_t> zs;
  if (mode == ScanMode::CriticalOnly) {
    auto [z1, z2] = critical_z(n_sections, n);
    if (z1 >= 1) zs.push_back(z1);
    if (z2 != z1) zs.push_back(z2);
    if (zs.empty()) zs.push_back(1);
  } else {
    const std::uint64_t d = static_cast<std::uint64_t>(n) + 1;
    for (std::uint64_t z = 1; d * z <= n_sections + static_cast<std::uint64_t>(n); ++z)
      zs.push_back(z);
  }

  ScanReport report;
  report.mode = mode;
  report.per_z.resize(zs.size());

  const int workers = std::min<int>(worker_count(), static_cast<int>(zs.size()));
  auto run_range = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < zs.size(); i += step)
      report.per_z[i] = secant_dimension(format, bundle, zs[i], config.fork(zs[i]));
  };
  if (workers <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run_range, static_cast<std::size_t>(w),
                        static_cast<std::size_t>(workers));
    for (auto& t : pool) t.join();
  }

  report.nondefective = std::all_of(report.per_z.begin(), report.per_z.end(),
                                    [](const SecantResult& r) { return r.defect == 0; });
  return report;
}

namespace {

struct ProductSetup {
  MultiProjectiveFormat x_format;
  std::int64_t sections;  // h^0 on Y
  int n;                  // dim X
};

ProductSetup product_setup(const MultiProjectiveFormat& y_format,
                           const BundleDegree& y_bundle) {
  ProductSetup p{y_format.with_line_factor(),
                 static_cast<std::int64_t>(basis_size(y_format, y_bundle)), 0};
  p.n = p.x_format.ambient_dim();
  return p;
}

}  // namespace

StatementResult statement_a(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            const Config& config) {
  if (t < 0) throw std::invalid_argument("statement A: t must be >= 0");
  if (z < 1) throw std::invalid_argument("statement A: z must be >= 1");
  const auto setup = product_setup(y_format, y_bundle);
  StatementResult r;
  {
    std::ostringstream os;
    os << "A(" << t << "," << z << ")";
    r.description = os.str();
  }
  r.cohom = cohomology(SchemeDescriptor::double_points(z), setup.x_format,
                       y_bundle.with_degree(t), config);
  // the statement's bound max{alpha (t+1) - (n+1) z, 0} is exactly the
  // engine's expected h0 here
  [[maybe_unused]] const std::int64_t bound =
      std::max<std::int64_t>(0, setup.sections * (t + 1) -
                                    static_cast<std::int64_t>(z) * (setup.n + 1));
  assert(static_cast<std::uint64_t>(bound) == r.cohom->expected_h0);
  r.holds = r.cohom->verdict == Verdict::CertifiedExpected;
  return r;
}

StatementResult statement_b(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            std::int64_t e, std::int64_t f, const Config& config) {
  if (t < 1) throw std::invalid_argument("statement B: t must be >= 1");
  const auto setup = product_setup(y_format, y_bundle);
  if (e * setup.n + f != setup.sections || e < 0 || f < 0)
    throw std::invalid_argument("statement B: split does not match the section count");

  StatementResult r;
  {
    std::ostringstream os;
    os << "B(" << t << "," << z << ")";
    r.description = os.str();
  }
  if (static_cast<std::int64_t>(z) < e + f) {
    r.holds = true;
    r.vacuous = true;
    return r;
  }
  const std::int64_t ambient = static_cast<std::int64_t>(z) - e - f;
  const DivisorHandle divisor(setup.x_format, setup.x_format.factor_count() - 1);
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient,
        static_cast<std::size_t>(ambient));
  s.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralOnDivisor,
        static_cast<std::size_t>(f));
  s.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor,
        static_cast<std::size_t>(e));

  r.cohom = cohomology(s, setup.x_format, y_bundle.with_degree(t - 1), config,
                       divisor);
  r.expected_scheme = std::max<std::int64_t>(
      0, t * setup.sections - (setup.n + 1) * ambient - setup.n * f - e);
  r.expected_printed = std::max<std::int64_t>(
      0, t * setup.sections - (setup.n + 1) * ambient - setup.n * e - f);
  assert(static_cast<std::uint64_t>(*r.expected_scheme) == r.cohom->expected_h0);
  r.holds = r.cohom->verdict == Verdict::CertifiedExpected;
  r.printed_matches =
      r.cohom->h0 == static_cast<std::uint64_t>(*r.expected_printed);
  return r;
}

StatementResult statement_c(const MultiProjectiveFormat& y_format,
                            const BundleDegree& y_bundle, int t, std::uint64_t z,
                            std::int64_t e, std::int64_t f, const Config& config) {
  if (t < 2) throw std::invalid_argument("statement C: t must be >= 2");
  const auto setup = product_setup(y_format, y_bundle);
  if (e * setup.n + f != setup.sections || e < 0 || f < 0)
    throw std::invalid_argument("statement C: split does not match the section count");

  StatementResult r;
  {
    std::ostringstream os;
    os << "C(" << t << "," << z << ")";
    r.description = os.str();
  }
  const std::int64_t w = static_cast<std::int64_t>(z) - e - f;
  if (w <= 0) {
    r.holds = true;
    r.vacuous = true;
    return r;
  }
  r.cohom = cohomology(SchemeDescriptor::double_points(static_cast<std::size_t>(w)),
                       setup.x_format, y_bundle.with_degree(t - 2), config);
  // h0 <= max(0, (t-1) alpha - deg W) together with the universal lower bound
  // pins h0 to the expected value exactly.
  r.holds = r.cohom->verdict == Verdict::CertifiedExpected;
  return r;
}

InequalityRecord inequality_oracles(const SplitParams& split, std::int64_t t,
                                    std::int64_t z) {
  const std::int64_t alpha = split.sections;
  const std::int64_t n = split.ambient_dim;
  const std::int64_t e1 = split.quotient;
  const std::int64_t f1 = split.remainder;

  InequalityRecord r;
  r.delta = (t + 1) * alpha + n - z * (n + 1);
  r.w = z - (t - 1) * e1 - f1;
  r.claim1_lhs = r.delta + z;
  r.claim1_rhs = t * f1 + e1 + n;
  r.claim1_ok = r.claim1_lhs >= r.claim1_rhs;
  r.claim2_vacuous = r.w < e1;
  r.claim2_lhs = n * f1 + n * (r.w - e1) + e1;
  r.claim2_ok = r.claim2_vacuous || r.claim2_lhs <= alpha;
  r.fn_t = (t + 1) * n * e1 + (t + 1) * f1 - (n + 1) * t * f1 - (n + 1) * e1 -
           n * (n + 2);
  r.fn2_printed = (2 * n - 1) * n * e1 + (1 - 2 * n) * f1 - n * (n + 2);
  return r;
}

U1Result prop_u1_check(const MultiProjectiveFormat& y_format,
                       const BundleDegree& y_bundle, std::uint64_t z,
                       const Config& config) {
  if (z < 1) throw std::invalid_argument("prop_u1_check: z must be >= 1");
  const auto setup = product_setup(y_format, y_bundle);
  const SplitParams sp = split_params(setup.sections, setup.n);

  U1Result r;
  r.sections = setup.sections;
  r.hypothesis_lhs =
      setup.n * (static_cast<std::int64_t>(z) - sp.quotient) + sp.quotient;
  r.applicable = r.hypothesis_lhs <= setup.sections;
  if (!r.applicable) return r;

  r.secant = secant_dimension(setup.x_format, y_bundle.with_degree(1), z, config);
  r.verified = r.secant->dim ==
               z * (static_cast<std::uint64_t>(setup.n) + 1) - 1;
  return r;
}

}  // namespace secdim
