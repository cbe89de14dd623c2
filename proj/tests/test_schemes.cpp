#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secdim/schemes.hpp"

using namespace secdim;

namespace {

const MultiProjectiveFormat kP13({1, 1, 1});
const BundleDegree kBdl({3, 3, 2});

}  // namespace

TEST_CASE("degrees of the three component kinds") {
  CHECK(degree(SchemeDescriptor::double_points(3), kP13) == 12);

  SchemeDescriptor div_dbl;
  div_dbl.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralOnDivisor, 1);
  CHECK(degree(div_dbl, kP13) == 3);

  CHECK(degree(SchemeDescriptor{}, kP13) == 0);

  SchemeDescriptor reduced;
  reduced.add(ConditionKind::Reduced, LocationKind::GeneralAmbient, 5);
  CHECK(degree(reduced, kP13) == 5);
}

TEST_CASE("residual split: ambient double point off the divisor is untouched") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  const auto pair =
      residual_split(SchemeDescriptor::double_points(1), kP13, kBdl, d, f);
  CHECK(pair.trace.empty());
  REQUIRE(pair.residual.components.size() == 1);
  CHECK(pair.residual.components[0].kind == ConditionKind::DoubleAmbient);
  CHECK(pair.residual_bundle.degrees == std::vector<int>{3, 3, 1});
  CHECK(pair.trace_format.factor_dims == std::vector<int>{1, 1});
  CHECK(pair.trace_bundle.degrees == std::vector<int>{3, 3});
}

TEST_CASE("residual split: ambient double point on the divisor leaves a reduced point") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralOnDivisor, 1);
  const auto pair = residual_split(s, kP13, kBdl, d, f);
  REQUIRE(pair.residual.components.size() == 1);
  CHECK(pair.residual.components[0].kind == ConditionKind::Reduced);
  CHECK(pair.residual.components[0].location == LocationKind::GeneralOnDivisor);
  REQUIRE(pair.trace.components.size() == 1);
  CHECK(pair.trace.components[0].kind == ConditionKind::DoubleAmbient);
}

TEST_CASE("residual split: schemes inside the divisor have empty residual") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralOnDivisor, 2);
  s.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 3);
  const auto pair = residual_split(s, kP13, kBdl, d, f);
  CHECK(pair.residual.empty());
  CHECK(degree(pair.trace, pair.trace_format) == degree(s, kP13));
}

TEST_CASE("residual split: degree additivity over every component kind") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  SplitMix64 rng(40);

  // all kind/location pairs, including fixed points on and off the divisor
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, 2);
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralOnDivisor, 1);
  s.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralOnDivisor, 2);
  s.add(ConditionKind::Reduced, LocationKind::GeneralAmbient, 3);
  s.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 1);
  s.add_fixed(ConditionKind::DoubleAmbient, sample_point(kP13, f, rng));
  s.add_fixed(ConditionKind::DoubleAmbient,
              on_divisor(sample_point(kP13, f, rng), d));
  s.add_fixed(ConditionKind::Reduced, sample_point(kP13, f, rng));

  const auto pair = residual_split(s, kP13, kBdl, d, f);
  CHECK(degree(s, kP13) ==
        degree(pair.residual, pair.residual_format) +
            degree(pair.trace, pair.trace_format));
}

TEST_CASE("residual split distributes over disjoint unions") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  SchemeDescriptor a;
  a.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, 2);
  SchemeDescriptor b;
  b.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 3);

  SchemeDescriptor both = a;
  for (const auto& c : b.components) both.components.push_back(c);

  const auto pa = residual_split(a, kP13, kBdl, d, f);
  const auto pb = residual_split(b, kP13, kBdl, d, f);
  const auto pboth = residual_split(both, kP13, kBdl, d, f);
  CHECK(degree(pboth.residual, kP13) ==
        degree(pa.residual, kP13) + degree(pb.residual, kP13));
  CHECK(degree(pboth.trace, pboth.trace_format) ==
        degree(pa.trace, pa.trace_format) + degree(pb.trace, pb.trace_format));
}

TEST_CASE("residual split refuses to twist a degree-0 divisor factor") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  CHECK_THROWS_AS(residual_split(SchemeDescriptor::double_points(1), kP13,
                                 BundleDegree({3, 3, 0}), d, f),
                  std::invalid_argument);
}

TEST_CASE("realize is reproducible and distinct") {
  PrimeField f;
  const DivisorHandle d(kP13, 2);
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, 3);
  s.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 2);

  SplitMix64 r1(123), r2(123);
  const auto a = realize(s, kP13, f, r1, &d);
  const auto b = realize(s, kP13, f, r2, &d);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point.coords == b[i].point.coords);
    CHECK(a[i].kind == b[i].kind);
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      CHECK_FALSE(projectively_equal(a[i].point, a[j].point, f));
  // the divisor points sit on the divisor
  CHECK(lies_on(a[3].point, d, f));
  CHECK(lies_on(a[4].point, d, f));
}

TEST_CASE("realize passes fixed points through verbatim") {
  PrimeField f;
  SplitMix64 rng(9);
  const MPPoint p = sample_point(kP13, f, rng);
  SchemeDescriptor s;
  s.add_fixed(ConditionKind::DoubleAmbient, p);
  SplitMix64 r(1);
  const auto out = realize(s, kP13, f, r);
  REQUIRE(out.size() == 1);
  CHECK(out[0].point.coords == p.coords);
}

TEST_CASE("descriptor validation catches inconsistent components") {
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleInDivisor, LocationKind::GeneralAmbient, 1);
  CHECK_THROWS_AS(validate(s), std::invalid_argument);

  SchemeDescriptor missing_divisor;
  missing_divisor.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 1);
  PrimeField f;
  SplitMix64 rng(2);
  CHECK_THROWS_AS(realize(missing_divisor, kP13, f, rng, nullptr),
                  std::invalid_argument);
}

TEST_CASE("canonical JSON form is stable") {
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, 2);
  s.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor, 1);
  CHECK(to_canonical_json(s) ==
        "{\"components\":["
        "{\"kind\":\"double_ambient\",\"location\":\"general_ambient\",\"count\":2},"
        "{\"kind\":\"reduced\",\"location\":\"general_on_divisor\",\"count\":1}]}");
}
