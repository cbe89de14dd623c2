#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secdim/variety.hpp"

namespace secdim {

enum class LocationKind { GeneralAmbient, GeneralOnDivisor, Fixed };

// One group of identical components of a zero-dimensional scheme.
struct SchemeComponent {
  ConditionKind kind = ConditionKind::DoubleAmbient;
  LocationKind location = LocationKind::GeneralAmbient;
  std::size_t count = 0;
  std::optional<MPPoint> point;  // Fixed location only; count must be 1
};

// Symbolic description of a zero-dimensional scheme: double points, divisor
// double points and reduced points, with location constraints. Stays symbolic
// until realized, so the same descriptor can be sampled repeatedly.
struct SchemeDescriptor {
  std::vector<SchemeComponent> components;

  static SchemeDescriptor double_points(std::size_t count);

  SchemeDescriptor& add(ConditionKind kind, LocationKind location, std::size_t count);
  SchemeDescriptor& add_fixed(ConditionKind kind, MPPoint p);

  bool empty() const;
  std::size_t point_count() const;
};

// Validates the kind/location combinations (divisor double points must sit on
// the divisor, fixed components carry exactly one point).
void validate(const SchemeDescriptor& s);

// deg(Z): 1 per reduced point, ambient_dim + 1 per double point,
// ambient_dim per divisor double point.
std::uint64_t degree(const SchemeDescriptor& s, const MultiProjectiveFormat& format);

// Outcome of splitting a scheme along a divisor H: the residual lives on the
// ambient format with the bundle twisted down, the trace lives on the
// divisor's own format with the bundle restricted. A divisor double point
// becomes a full double point of the divisor; an ambient double point
// supported on H leaves a reduced point behind.
struct ResidualPair {
  SchemeDescriptor residual;
  MultiProjectiveFormat residual_format;  // = input format
  BundleDegree residual_bundle;           // input bundle twisted by -H
  SchemeDescriptor trace;
  MultiProjectiveFormat trace_format;     // divisor factor dropped
  BundleDegree trace_bundle;              // divisor factor dropped
};

ResidualPair residual_split(const SchemeDescriptor& s,
                            const MultiProjectiveFormat& format,
                            const BundleDegree& bundle, const DivisorHandle& divisor,
                            const PrimeField& field);

struct RealizedPoint {
  MPPoint point;
  ConditionKind kind;
};

// Samples every general point of the descriptor (uniform over the field,
// distinctness enforced by projective comparison) and passes fixed points
// through. Deterministic given the rng state.
std::vector<RealizedPoint> realize(const SchemeDescriptor& s,
                                   const MultiProjectiveFormat& format,
                                   const PrimeField& field, SplitMix64& rng,
                                   const DivisorHandle* divisor = nullptr);

// Canonical serialized form embedded in certificates: fixed component order,
// fixed key order, integers only.
std::string to_canonical_json(const SchemeDescriptor& s);

const char* kind_name(ConditionKind k);
const char* location_name(LocationKind l);

}  // namespace secdim
