#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secdim/terracini.hpp"

namespace secdim {

// One application of the differential divisor-splitting step: prove
// h^i(I_{E u 2S} (x) R) = 0 for g extra general double points S by proving a
// trace goal on the divisor and a residual goal in the twisted bundle.
struct HoraceStep {
  SchemeDescriptor base;  // E
  MultiProjectiveFormat format;
  BundleDegree bundle;  // R
  DivisorHandle divisor;
  std::size_t g = 0;
  int which_h = 1;  // 0 or 1
};

struct GoalOutcome {
  std::string description;
  bool holds = false;  // certified h^{which_h} = 0
  CohomologyResult cohom;
};

struct HoraceStepReport {
  GoalOutcome trace_goal;     // on H: (E n H) u F, bundle restricted
  GoalOutcome residual_goal;  // on X: Res_H(E) u (2F, H), bundle twisted down
  GoalOutcome combined_direct;  // on X: E u 2S, original bundle
  bool premises_hold = false;
  bool sound = false;  // premises imply the direct goal on this instance
};

HoraceStepReport horace_step_verify(const HoraceStep& step, const Config& config);

enum class GoalStatus { Certified, Vacuous, Failed };
enum class ScheduleVerdict { Verified, NotVerified, HypothesisFailed };

const char* goal_status_name(GoalStatus s);
const char* schedule_verdict_name(ScheduleVerdict v);

struct ScheduleGoal {
  std::string description;
  GoalStatus status = GoalStatus::Failed;
  std::optional<CohomologyResult> cohom;  // absent for arithmetic goals
  std::string detail;
};

struct HypothesisCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Replayed proof schedule: the ordered list of subgoals the induction
// prescribes, each discharged numerically or arithmetically.
struct ScheduleTrace {
  std::string schedule;
  std::string instance;
  std::vector<HypothesisCheck> hypothesis;
  std::vector<ScheduleGoal> goals;
  ScheduleVerdict verdict = ScheduleVerdict::HypothesisFailed;
};

// The line-factor theorem: X = Y x P^1 with bundle L[t], t >= 2, dim X >= 3,
// h^0(L) > (dim X)^2 and the quotient-secant variety of Y of expected
// dimension. The schedule runs the B/A ladder at t'=2, the C/A ladder at
// t'=3, and the full C/B/A chain with the A(t'-2) revalidation for t' >= 4,
// all at the decisive z values, with the arithmetic side conditions checked
// at every level.
ScheduleTrace replay_theorem_i1(const MultiProjectiveFormat& y_format,
                                const BundleDegree& y_bundle, int t,
                                const Config& config);

// Product chain: X = P^{n1} x P^{n2} x (P^1)^{k-2} with degrees d_i >= 2,
// d_1, d_2 >= 3. Grows Y one line factor at a time, replaying the line-factor
// schedule at each stage, and finishes with a critical-z scan of the full
// product.
ScheduleTrace replay_theorem_minus(int n1, int n2, const std::vector<int>& degrees,
                                   const Config& config);

// Variant with the shifted split (quotient - 1, remainder + dim X): hypothesis
// h^0(L) >= 2 n^2 + 4n and the (quotient-1)-secant variety of Y of expected
// dimension; the conclusion is verified instance-wise at the given z (or at
// the critical z values when none is given).
ScheduleTrace replay_theorem_i10(const MultiProjectiveFormat& y_format,
                                 const BundleDegree& y_bundle, int t,
                                 std::optional<std::uint64_t> z, const Config& config);

// Wraps the degree-1 proposition check in a schedule trace for the CLI.
ScheduleTrace check_u1(const MultiProjectiveFormat& y_format,
                       const BundleDegree& y_bundle, std::uint64_t z,
                       const Config& config);

}  // namespace secdim
