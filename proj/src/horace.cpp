#include "secdim/horace.hpp"

#include <sstream>
#include <stdexcept>

namespace secdim {

namespace {

// Certified h^i = 0 for the linear system of s: i = 0 needs rank = N (only
// possible when deg >= N), i = 1 needs rank = deg (only possible when
// deg <= N). Both reduce to a certified expected h^0 plus the right
// inequality between degree and section count.
bool vanishes(const CohomologyResult& r, int which_h) {
  if (r.verdict != Verdict::CertifiedExpected) return false;
  return which_h == 0 ? r.scheme_degree >= r.n_sections
                      : r.scheme_degree <= r.n_sections;
}

GoalOutcome eval_goal(std::string description, const SchemeDescriptor& s,
                      const MultiProjectiveFormat& format, const BundleDegree& bundle,
                      int which_h, const Config& config,
                      const std::optional<DivisorHandle>& divisor = {}) {
  GoalOutcome g;
  g.description = std::move(description);
  g.cohom = cohomology(s, format, bundle, config, divisor);
  g.holds = vanishes(g.cohom, which_h);
  return g;
}

}  // namespace

HoraceStepReport horace_step_verify(const HoraceStep& step, const Config& config) {
  if (step.which_h != 0 && step.which_h != 1)
    throw std::invalid_argument("horace_step_verify: which_h must be 0 or 1");

  const PrimeField field(config.prime);
  const ResidualPair split =
      residual_split(step.base, step.format, step.bundle, step.divisor, field);

  // trace goal on H: (E n H) u F with F = g general reduced points of H
  SchemeDescriptor trace_scheme = split.trace;
  trace_scheme.add(ConditionKind::Reduced, LocationKind::GeneralAmbient, step.g);

  // residual goal on X: Res_H(E) u (2F, H) in the twisted bundle
  SchemeDescriptor residual_scheme = split.residual;
  residual_scheme.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralOnDivisor,
                      step.g);

  // direct goal on X: E u 2S with S = g general ambient points
  SchemeDescriptor direct_scheme = step.base;
  direct_scheme.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, step.g);

  HoraceStepReport report;
  report.trace_goal = eval_goal("trace", trace_scheme, split.trace_format,
                                split.trace_bundle, step.which_h, config.fork(1));
  report.residual_goal =
      eval_goal("residual", residual_scheme, split.residual_format,
                split.residual_bundle, step.which_h, config.fork(2), step.divisor);
  report.combined_direct = eval_goal("direct", direct_scheme, step.format, step.bundle,
                                     step.which_h, config.fork(3), step.divisor);
  report.premises_hold = report.trace_goal.holds && report.residual_goal.holds;
  report.sound = !report.premises_hold || report.combined_direct.holds;
  return report;
}

const char* goal_status_name(GoalStatus s) {
  switch (s) {
    case GoalStatus::Certified: return "certified";
    case GoalStatus::Vacuous: return "vacuous";
    case GoalStatus::Failed: return "failed";
  }
  return "?";
}

const char* schedule_verdict_name(ScheduleVerdict v) {
  switch (v) {
    case ScheduleVerdict::Verified: return "verified";
    case ScheduleVerdict::NotVerified: return "not_verified";
    case ScheduleVerdict::HypothesisFailed: return "hypothesis_failed";
  }
  return "?";
}

namespace {

std::string format_string(const MultiProjectiveFormat& f, const BundleDegree& b) {
  std::ostringstream os;
  os << "P^(";
  for (std::size_t i = 0; i < f.factor_dims.size(); ++i)
    os << (i ? "," : "") << f.factor_dims[i];
  os << ") O(";
  for (std::size_t i = 0; i < b.degrees.size(); ++i)
    os << (i ? "," : "") << b.degrees[i];
  os << ")";
  return os.str();
}

void push_statement_goal(ScheduleTrace& trace, const StatementResult& s,
                         const std::string& prefix = "") {
  ScheduleGoal g;
  g.description = prefix + s.description;
  g.cohom = s.cohom;
  g.status = s.vacuous ? GoalStatus::Vacuous
                       : (s.holds ? GoalStatus::Certified : GoalStatus::Failed);
  trace.goals.push_back(std::move(g));
}

void push_arith_goal(ScheduleTrace& trace, std::string description, bool ok,
                     std::string detail) {
  ScheduleGoal g;
  g.description = std::move(description);
  g.status = ok ? GoalStatus::Certified : GoalStatus::Failed;
  g.detail = std::move(detail);
  trace.goals.push_back(std::move(g));
}

void finish_verdict(ScheduleTrace& trace) {
  trace.verdict = ScheduleVerdict::Verified;
  for (const auto& g : trace.goals) {
    if (g.status == GoalStatus::Failed) {
      trace.verdict = ScheduleVerdict::NotVerified;
      return;
    }
  }
}

std::vector<std::uint64_t> critical_list(std::uint64_t n_sections, int n) {
  auto [z1, z2] = critical_z(n_sections, n);
  std::vector<std::uint64_t> zs;
  if (z1 >= 1) zs.push_back(z1);
  if (z2 != z1) zs.push_back(z2);
  if (zs.empty()) zs.push_back(1);
  return zs;
}

}  // namespace

ScheduleTrace replay_theorem_i1(const MultiProjectiveFormat& y_format,
                                const BundleDegree& y_bundle, int t,
                                const Config& config) {
  if (t < 2) throw std::invalid_argument("replay_theorem_i1: t must be >= 2");

  ScheduleTrace trace;
  trace.schedule = "i1";
  trace.instance = "Y = " + format_string(y_format, y_bundle) + ", t = " + std::to_string(t);

  const std::int64_t alpha = static_cast<std::int64_t>(basis_size(y_format, y_bundle));
  const int n = y_format.ambient_dim() + 1;  // dim X = dim Y + 1

  bool hyp_ok = true;
  {
    HypothesisCheck c{"dim X >= 3", n >= 3, "dim X = " + std::to_string(n)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  {
    HypothesisCheck c{"sections > (dim X)^2",
                      alpha > static_cast<std::int64_t>(n) * n,
                      "sections = " + std::to_string(alpha) +
                          ", bound = " + std::to_string(static_cast<std::int64_t>(n) * n)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  SplitParams split{};
  if (hyp_ok) {
    split = split_params(alpha, n);
    const SecantResult sec = secant_dimension(
        y_format, y_bundle, static_cast<std::uint64_t>(split.quotient),
        config.fork(0xA1));
    HypothesisCheck c{"quotient-secant variety of Y has expected dimension",
                      sec.defect == 0,
                      "z = " + std::to_string(split.quotient) +
                          ", dim = " + std::to_string(sec.dim) +
                          ", expected = " + std::to_string(sec.expected)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  if (!hyp_ok) {
    trace.verdict = ScheduleVerdict::HypothesisFailed;
    return trace;
  }

  std::uint64_t goal_tag = 0x100;
  auto next = [&]() { return config.fork(goal_tag++); };

  for (int tp = 2; tp <= t; ++tp) {
    const std::uint64_t n_tp =
        static_cast<std::uint64_t>(alpha) * static_cast<std::uint64_t>(tp + 1);
    const auto zs = critical_list(n_tp, n);

    for (std::uint64_t z : zs) {
      const InequalityRecord ineq =
          inequality_oracles(split, tp, static_cast<std::int64_t>(z));
      std::ostringstream os;
      os << "delta = " << ineq.delta << ", claim1 " << ineq.claim1_lhs
         << " >= " << ineq.claim1_rhs << ", claim2 "
         << (ineq.claim2_vacuous
                 ? std::string("vacuous")
                 : std::to_string(ineq.claim2_lhs) + " <= " + std::to_string(alpha));
      push_arith_goal(trace,
                      "claims 1-2 at (t=" + std::to_string(tp) +
                          ", z=" + std::to_string(z) + ")",
                      ineq.claim1_ok && ineq.claim2_ok, os.str());
    }

    if (tp == 2) {
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_b(y_format, y_bundle, 2, z,
                                               split.quotient, split.remainder, next()));
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_a(y_format, y_bundle, 2, z, next()));
    } else if (tp == 3) {
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_c(y_format, y_bundle, 3, z,
                                               split.quotient, split.remainder, next()));
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_a(y_format, y_bundle, 3, z, next()));
    } else {
      // induction: A(t'-2) feeds C(t'), which feeds B(t'), which gives A(t')
      const std::uint64_t n_prev =
          static_cast<std::uint64_t>(alpha) * static_cast<std::uint64_t>(tp - 1);
      for (std::uint64_t z : critical_list(n_prev, n))
        push_statement_goal(trace,
                            statement_a(y_format, y_bundle, tp - 2, z, next()),
                            "revalidate ");
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_c(y_format, y_bundle, tp, z,
                                               split.quotient, split.remainder, next()));
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_b(y_format, y_bundle, tp, z,
                                               split.quotient, split.remainder, next()));
      for (std::uint64_t z : zs)
        push_statement_goal(trace, statement_a(y_format, y_bundle, tp, z, next()));
    }
  }

  finish_verdict(trace);
  return trace;
}

ScheduleTrace replay_theorem_minus(int n1, int n2, const std::vector<int>& degrees,
                                   const Config& config) {
  ScheduleTrace trace;
  trace.schedule = "minus";
  {
    std::ostringstream os;
    os << "X = P^" << n1 << " x P^" << n2 << " x (P^1)^" << (degrees.size() - 2)
       << ", degrees (";
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    os << ")";
    trace.instance = os.str();
  }

  const std::size_t k = degrees.size();
  bool hyp_ok = true;
  {
    HypothesisCheck c{"k >= 3 factors", k >= 3, "k = " + std::to_string(k)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  if (n1 < 1 || n2 < 1) {
    trace.hypothesis.push_back({"n1, n2 >= 1", false, ""});
    hyp_ok = false;
  }
  if (k >= 3) {
    bool degs_ok = degrees[0] >= 3 && degrees[1] >= 3;
    for (std::size_t i = 2; i < k; ++i) degs_ok = degs_ok && degrees[i] >= 2;
    std::ostringstream os;
    os << "d1 = " << degrees[0] << ", d2 = " << degrees[1];
    trace.hypothesis.push_back(
        {"degrees: d_i >= 2 for all i, d1 >= 3, d2 >= 3", degs_ok, os.str()});
    hyp_ok = hyp_ok && degs_ok;
  }
  if (!hyp_ok) {
    trace.verdict = ScheduleVerdict::HypothesisFailed;
    return trace;
  }

  // grow Y one line factor at a time, replaying the line-factor schedule
  for (std::size_t stage = 0; stage + 3 <= k; ++stage) {
    std::vector<int> y_dims{n1, n2};
    y_dims.insert(y_dims.end(), stage, 1);
    const MultiProjectiveFormat y_format(std::move(y_dims));
    const BundleDegree y_bundle(
        std::vector<int>(degrees.begin(), degrees.begin() + 2 + stage));
    const int t = degrees[2 + stage];

    const std::string prefix = "stage " + std::to_string(stage) + ": ";
    ScheduleTrace sub = replay_theorem_i1(y_format, y_bundle, t, config.fork(stage));
    for (auto& h : sub.hypothesis) {
      h.name = prefix + h.name;
      trace.hypothesis.push_back(std::move(h));
    }
    for (auto& g : sub.goals) {
      g.description = prefix + g.description;
      trace.goals.push_back(std::move(g));
    }
    if (sub.verdict == ScheduleVerdict::HypothesisFailed) {
      trace.verdict = ScheduleVerdict::HypothesisFailed;
      return trace;
    }
  }

  // the full product at the decisive z values
  std::vector<int> x_dims{n1, n2};
  x_dims.insert(x_dims.end(), k - 2, 1);
  const MultiProjectiveFormat x_format(std::move(x_dims));
  const BundleDegree x_bundle(degrees);
  const ScanReport scan =
      nondefectivity_scan(x_format, x_bundle, config.fork(0xF1A1), ScanMode::CriticalOnly);
  for (const auto& r : scan.per_z) {
    std::ostringstream os;
    os << "dim = " << r.dim << ", expected = " << r.expected;
    push_arith_goal(trace, "final scan: z = " + std::to_string(r.z), r.defect == 0,
                    os.str());
    trace.goals.back().cohom = r.cohom;
  }

  finish_verdict(trace);
  return trace;
}

ScheduleTrace replay_theorem_i10(const MultiProjectiveFormat& y_format,
                                 const BundleDegree& y_bundle, int t,
                                 std::optional<std::uint64_t> z, const Config& config) {
  if (t < 2) throw std::invalid_argument("replay_theorem_i10: t must be >= 2");

  ScheduleTrace trace;
  trace.schedule = "i1.0";
  trace.instance = "Y = " + format_string(y_format, y_bundle) + ", t = " + std::to_string(t);

  const std::int64_t alpha = static_cast<std::int64_t>(basis_size(y_format, y_bundle));
  const int n = y_format.ambient_dim() + 1;

  bool hyp_ok = n >= 3;
  trace.hypothesis.push_back({"dim X >= 3", n >= 3, "dim X = " + std::to_string(n)});
  {
    const std::int64_t bound = 2 * static_cast<std::int64_t>(n) * n + 4 * n;
    HypothesisCheck c{"sections >= 2 (dim X)^2 + 4 dim X", alpha >= bound,
                      "sections = " + std::to_string(alpha) +
                          ", bound = " + std::to_string(bound)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  if (hyp_ok) {
    const SplitParams sp = split_params(alpha, n);
    const std::int64_t g1 = sp.quotient - 1;  // shifted split (g1, f1 + n)
    const SecantResult sec = secant_dimension(
        y_format, y_bundle, static_cast<std::uint64_t>(g1), config.fork(0xA2));
    HypothesisCheck c{"(quotient-1)-secant variety of Y has expected dimension",
                      sec.defect == 0,
                      "z = " + std::to_string(g1) + ", dim = " + std::to_string(sec.dim) +
                          ", expected = " + std::to_string(sec.expected)};
    hyp_ok = hyp_ok && c.ok;
    trace.hypothesis.push_back(std::move(c));
  }
  if (!hyp_ok) {
    trace.verdict = ScheduleVerdict::HypothesisFailed;
    return trace;
  }

  const MultiProjectiveFormat x_format = y_format.with_line_factor();
  const BundleDegree x_bundle = y_bundle.with_degree(t);
  std::vector<std::uint64_t> zs;
  if (z) {
    zs.push_back(*z);
  } else {
    zs = critical_list(basis_size(x_format, x_bundle), n);
  }
  for (std::uint64_t zz : zs) {
    const SecantResult r = secant_dimension(x_format, x_bundle, zz, config.fork(zz));
    std::ostringstream os;
    os << "dim = " << r.dim << ", expected = " << r.expected;
    push_arith_goal(trace, "secant dimension at z = " + std::to_string(zz),
                    r.defect == 0, os.str());
    trace.goals.back().cohom = r.cohom;
  }

  finish_verdict(trace);
  return trace;
}

ScheduleTrace check_u1(const MultiProjectiveFormat& y_format,
                       const BundleDegree& y_bundle, std::uint64_t z,
                       const Config& config) {
  ScheduleTrace trace;
  trace.schedule = "u1";
  trace.instance =
      "Y = " + format_string(y_format, y_bundle) + ", z = " + std::to_string(z);

  const U1Result r = prop_u1_check(y_format, y_bundle, z, config);
  trace.hypothesis.push_back(
      {"n (z - quotient) + quotient <= sections", r.applicable,
       std::to_string(r.hypothesis_lhs) + " <= " + std::to_string(r.sections)});
  if (!r.applicable) {
    trace.verdict = ScheduleVerdict::HypothesisFailed;
    return trace;
  }
  std::ostringstream os;
  os << "dim = " << r.secant->dim << ", target = "
     << z * (static_cast<std::uint64_t>(y_format.ambient_dim()) + 2) - 1;
  push_arith_goal(trace, "secant dimension of (X, L[1]) at z = " + std::to_string(z),
                  r.verified, os.str());
  trace.goals.back().cohom = r.secant->cohom;
  finish_verdict(trace);
  return trace;
}

}  // namespace secdim
