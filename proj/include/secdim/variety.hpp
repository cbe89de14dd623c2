#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secdim/exact_linalg.hpp"
#include "secdim/rng.hpp"

namespace secdim {

// A product of projective spaces P^{n_1} x ... x P^{n_k}.
struct MultiProjectiveFormat {
  std::vector<int> factor_dims;

  MultiProjectiveFormat() = default;
  explicit MultiProjectiveFormat(std::vector<int> dims);

  std::size_t factor_count() const { return factor_dims.size(); }
  int ambient_dim() const;

  // Appends a P^1 factor: the format of X = Y x P^1.
  MultiProjectiveFormat with_line_factor() const;
  // Drops one factor: the format of a divisor Y x {o} inside X.
  MultiProjectiveFormat without_factor(std::size_t factor_index) const;

  bool operator==(const MultiProjectiveFormat&) const = default;
};

// A multidegree (d_1, ..., d_k) selecting the line bundle O(d_1, ..., d_k).
struct BundleDegree {
  std::vector<int> degrees;

  BundleDegree() = default;
  explicit BundleDegree(std::vector<int> degs);

  BundleDegree with_degree(int t) const;               // append a factor degree
  BundleDegree without_factor(std::size_t fi) const;   // restrict to a divisor
  BundleDegree twisted_down(std::size_t fi) const;     // subtract the divisor class

  bool operator==(const BundleDegree&) const = default;
};

// h^0 of the bundle: product of per-factor binomials C(n_i + d_i, n_i).
std::uint64_t basis_size(const MultiProjectiveFormat& format, const BundleDegree& bundle);

// One multihomogeneous monomial: per factor, an exponent vector of length
// n_i + 1 summing to d_i.
struct Monomial {
  std::vector<std::vector<int>> exponents;
};

// Canonical basis order: factors left to right, exponent vectors within a
// factor in lexicographic descending order (so the all-chart-variable
// monomial comes first). Certificates depend on this order being fixed.
std::vector<Monomial> monomial_basis(const MultiProjectiveFormat& format,
                                     const BundleDegree& bundle);

// A point of the product, one coordinate vector per factor. The chart
// coordinate (index 0) of every factor is nonzero so that affine
// dehomogenization at index 0 is always possible.
struct MPPoint {
  std::vector<std::vector<std::uint64_t>> coords;
};

// The divisor H = {factor = o} for a P^1-like factor. Only dimension-1
// factors are accepted: for higher-dimensional factors the locus {o} x rest
// has codimension > 1 and the residual degree bookkeeping breaks down.
struct DivisorHandle {
  std::size_t factor_index = 0;
  std::vector<std::uint64_t> chart_value;  // defaults to (1 : 0)

  DivisorHandle(const MultiProjectiveFormat& format, std::size_t fi);
  DivisorHandle(const MultiProjectiveFormat& format, std::size_t fi,
                std::vector<std::uint64_t> value);
};

enum class ConditionKind { Reduced, DoubleAmbient, DoubleInDivisor };

MPPoint sample_point(const MultiProjectiveFormat& format, const PrimeField& field,
                     SplitMix64& rng);

// Moves p onto the divisor by pinning the handled factor to the chart value.
MPPoint on_divisor(MPPoint p, const DivisorHandle& divisor);

bool lies_on(const MPPoint& p, const DivisorHandle& divisor, const PrimeField& field);

// Projective equality, factor by factor (proportional coordinate vectors).
bool projectively_equal(const MPPoint& a, const MPPoint& b, const PrimeField& field);

std::size_t condition_row_count(ConditionKind kind, const MultiProjectiveFormat& format,
                                const DivisorHandle* divisor);

// The Terracini rows a point imposes on the monomial basis:
//   Reduced          -> the evaluation row;
//   DoubleAmbient    -> evaluation plus one affine directional derivative per
//                       coordinate of every factor (chart index 0 pinned);
//   DoubleInDivisor  -> as above, with the divisor factor's directions
//                       omitted (derivatives tangent to H only).
// Derivative rows of factors with bundle degree 0 are identically zero and
// are kept, so row counts always match scheme degrees.
DenseMatrix condition_rows(const MPPoint& p, ConditionKind kind,
                           const MultiProjectiveFormat& format,
                           const std::vector<Monomial>& basis,
                           const PrimeField& field,
                           const DivisorHandle* divisor = nullptr);

DenseMatrix condition_rows(const MPPoint& p, ConditionKind kind,
                           const MultiProjectiveFormat& format,
                           const BundleDegree& bundle, const PrimeField& field,
                           const DivisorHandle* divisor = nullptr);

}  // namespace secdim
