#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "secdim/variety.hpp"

using namespace secdim;

TEST_CASE("basis_size on the named formats") {
  CHECK(basis_size(MultiProjectiveFormat({1, 1, 1}), BundleDegree({3, 3, 2})) == 48);
  CHECK(basis_size(MultiProjectiveFormat({2}), BundleDegree({2})) == 6);
  CHECK(basis_size(MultiProjectiveFormat({2, 1}), BundleDegree({3, 2})) == 30);
  CHECK_THROWS_AS(basis_size(MultiProjectiveFormat({1}), BundleDegree({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("basis_size is multiplicative and symmetric under factor permutation") {
  SplitMix64 rng(5);
  for (int it = 0; it < 25; ++it) {
    const std::size_t k = 1 + rng.next() % 4;
    std::vector<int> dims(k), degs(k);
    for (std::size_t i = 0; i < k; ++i) {
      dims[i] = 1 + static_cast<int>(rng.next() % 3);
      degs[i] = static_cast<int>(rng.next() % 5);
    }
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < k; ++i)
      product *= basis_size(MultiProjectiveFormat({dims[i]}), BundleDegree({degs[i]}));
    CHECK(basis_size(MultiProjectiveFormat(dims), BundleDegree(degs)) == product);

    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.next() % i]);
    std::vector<int> pdims(k), pdegs(k);
    for (std::size_t i = 0; i < k; ++i) {
      pdims[i] = dims[perm[i]];
      pdegs[i] = degs[perm[i]];
    }
    CHECK(basis_size(MultiProjectiveFormat(pdims), BundleDegree(pdegs)) == product);
  }
}

TEST_CASE("monomial basis: single P^1 of degree 2 in canonical order") {
  const auto basis = monomial_basis(MultiProjectiveFormat({1}), BundleDegree({2}));
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].exponents == std::vector<std::vector<int>>{{2, 0}});
  CHECK(basis[1].exponents == std::vector<std::vector<int>>{{1, 1}});
  CHECK(basis[2].exponents == std::vector<std::vector<int>>{{0, 2}});
}

TEST_CASE("monomial basis: product cases") {
  CHECK(monomial_basis(MultiProjectiveFormat({1, 1}), BundleDegree({1, 1})).size() == 4);

  const auto basis =
      monomial_basis(MultiProjectiveFormat({1, 1, 1}), BundleDegree({3, 3, 2}));
  REQUIRE(basis.size() == 48);
  // first entry concentrates every exponent on the chart variable
  CHECK(basis[0].exponents ==
        std::vector<std::vector<int>>{{3, 0}, {3, 0}, {2, 0}});
  for (const auto& m : basis) {
    for (std::size_t f = 0; f < 3; ++f) {
      int total = 0;
      for (int e : m.exponents[f]) total += e;
      CHECK(total == (f == 2 ? 2 : 3));
    }
  }
}

TEST_CASE("sample_point is seed-deterministic with nonzero chart coordinates") {
  const MultiProjectiveFormat fmt({2, 1});
  PrimeField f;
  SplitMix64 a(77), b(77), c(78);
  const MPPoint pa = sample_point(fmt, f, a);
  const MPPoint pb = sample_point(fmt, f, b);
  const MPPoint pc = sample_point(fmt, f, c);
  CHECK(pa.coords == pb.coords);
  CHECK(pa.coords != pc.coords);
  for (const auto& v : pa.coords) CHECK(v[0] != 0);
}

TEST_CASE("on_divisor pins the factor and is idempotent") {
  const MultiProjectiveFormat fmt({1, 1, 1});
  const DivisorHandle d(fmt, 2);
  PrimeField f;
  SplitMix64 rng(3);
  const MPPoint p = sample_point(fmt, f, rng);
  const MPPoint q = on_divisor(p, d);
  CHECK(q.coords[2] == d.chart_value);
  CHECK(lies_on(q, d, f));
  CHECK(on_divisor(q, d).coords == q.coords);
  CHECK(q.coords[0] == p.coords[0]);
}

TEST_CASE("divisor handles require a dimension-1 factor") {
  const MultiProjectiveFormat fmt({2, 1});
  CHECK_THROWS_AS(DivisorHandle(fmt, 0), std::invalid_argument);
  CHECK_NOTHROW(DivisorHandle(fmt, 1));
  CHECK_THROWS_AS(DivisorHandle(fmt, 5), std::invalid_argument);
}

TEST_CASE("condition row counts per kind") {
  const MultiProjectiveFormat p13({1, 1, 1});
  const BundleDegree bdl({3, 3, 2});
  const DivisorHandle d(p13, 2);
  PrimeField f;
  SplitMix64 rng(10);

  const MPPoint p = sample_point(p13, f, rng);
  CHECK(condition_rows(p, ConditionKind::Reduced, p13, bdl, f).rows == 1);
  CHECK(condition_rows(p, ConditionKind::DoubleAmbient, p13, bdl, f).rows == 4);

  const MPPoint q = on_divisor(p, d);
  const auto rows = condition_rows(q, ConditionKind::DoubleInDivisor, p13, bdl, f, &d);
  CHECK(rows.rows == 3);
  CHECK(rows.cols == 48);
}

TEST_CASE("DoubleInDivisor requires the point to lie on the divisor") {
  const MultiProjectiveFormat fmt({1, 1});
  const BundleDegree bdl({2, 2});
  const DivisorHandle d(fmt, 1);
  PrimeField f;
  SplitMix64 rng(4);
  const MPPoint p = sample_point(fmt, f, rng);  // generic, off the divisor
  CHECK_THROWS_AS(condition_rows(p, ConditionKind::DoubleInDivisor, fmt, bdl, f, &d),
                  std::invalid_argument);
}

TEST_CASE("degree-0 factors contribute identically-zero derivative rows") {
  const MultiProjectiveFormat fmt({1, 1});
  const BundleDegree bdl({3, 0});
  PrimeField f;
  SplitMix64 rng(8);
  const MPPoint p = sample_point(fmt, f, rng);
  const auto rows = condition_rows(p, ConditionKind::DoubleAmbient, fmt, bdl, f);
  REQUIRE(rows.rows == 3);  // value + one direction per factor
  // the second factor's derivative row (last) must vanish identically
  for (std::size_t j = 0; j < rows.cols; ++j) CHECK(rows.at(2, j) == 0);
  // the value row does not vanish
  bool nonzero = false;
  for (std::size_t j = 0; j < rows.cols; ++j) nonzero = nonzero || rows.at(0, j) != 0;
  CHECK(nonzero);
}

TEST_CASE("a single double point imposes independent conditions") {
  SplitMix64 seed_rng(21);
  PrimeField f;
  for (int it = 0; it < 15; ++it) {
    const std::size_t k = 1 + seed_rng.next() % 3;
    std::vector<int> dims(k), degs(k);
    for (std::size_t i = 0; i < k; ++i) {
      dims[i] = 1 + static_cast<int>(seed_rng.next() % 2);
      degs[i] = 1 + static_cast<int>(seed_rng.next() % 3);
    }
    const MultiProjectiveFormat fmt(dims);
    const BundleDegree bdl(degs);
    SplitMix64 rng(seed_rng.next());
    const MPPoint p = sample_point(fmt, f, rng);
    const auto rows = condition_rows(p, ConditionKind::DoubleAmbient, fmt, bdl, f);
    CHECK(rank_mod_p(rows, f) ==
          static_cast<std::size_t>(fmt.ambient_dim()) + 1);
  }
}

TEST_CASE("a divisor double point has full generic rank") {
  SplitMix64 seed_rng(22);
  PrimeField f;
  for (int it = 0; it < 10; ++it) {
    std::vector<int> dims{1 + static_cast<int>(seed_rng.next() % 2), 1};
    std::vector<int> degs{1 + static_cast<int>(seed_rng.next() % 3),
                          1 + static_cast<int>(seed_rng.next() % 3)};
    const MultiProjectiveFormat fmt(dims);
    const BundleDegree bdl(degs);
    const DivisorHandle d(fmt, 1);
    SplitMix64 rng(seed_rng.next());
    const MPPoint p = on_divisor(sample_point(fmt, f, rng), d);
    const auto rows = condition_rows(p, ConditionKind::DoubleInDivisor, fmt, bdl, f, &d);
    CHECK(rows.rows == static_cast<std::size_t>(fmt.ambient_dim()));
    CHECK(rank_mod_p(rows, f) == rows.rows);
  }
}

TEST_CASE("row generation is pure") {
  const MultiProjectiveFormat fmt({1, 2});
  const BundleDegree bdl({2, 3});
  PrimeField f;
  SplitMix64 rng(31);
  const MPPoint p = sample_point(fmt, f, rng);
  const auto a = condition_rows(p, ConditionKind::DoubleAmbient, fmt, bdl, f);
  const auto b = condition_rows(p, ConditionKind::DoubleAmbient, fmt, bdl, f);
  CHECK(a.entries == b.entries);
}

TEST_CASE("projective equality respects scaling") {
  PrimeField f;
  MPPoint a{{{1, 2}, {3, 4, 5}}};
  MPPoint b{{{2, 4}, {3, 4, 5}}};
  MPPoint c{{{1, 3}, {3, 4, 5}}};
  CHECK(projectively_equal(a, b, f));
  CHECK_FALSE(projectively_equal(a, c, f));
}
