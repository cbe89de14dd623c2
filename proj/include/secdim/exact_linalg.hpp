#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "secdim/rng.hpp"

namespace secdim {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Arithmetic in Z/p for a prime p < 2^62. The modulus is verified prime at
// construction; a composite modulus is a hard error, never a silent one.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2305843009213693951ULL;  // 2^61 - 1
  static constexpr std::uint64_t kRetryModulus = 2305843009213693921ULL;    // 2^61 - 31

  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0

  std::uint64_t reduce_signed(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  // Uniform over [0, p) by rejection from the smallest covering power of two.
  std::uint64_t sample(SplitMix64& rng) const;
  std::uint64_t sample_nonzero(SplitMix64& rng) const;

 private:
  std::uint64_t p_;
  unsigned bits_;
};

// Row-major dense matrix over a prime field (entries are canonical
// representatives in [0, p)).
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> entries;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  void append_row(const std::vector<std::uint64_t>& row);
};

// Dense matrix with signed integer entries, the lift side of the dual-route
// rank check.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Rank over Z/p by Gaussian elimination, pivoting on the first nonzero entry
// in column order. Pure; the argument is taken by value and eliminated in
// place. Empty matrices have rank 0.
std::size_t rank_mod_p(DenseMatrix m, const PrimeField& field);

// Exact rank over Q by fraction-free (Bareiss) elimination on
// arbitrary-precision integers. Intended as a cross-check oracle, so matrices
// wider than `col_cap` are rejected rather than ground through.
std::size_t rank_rational(const IntMatrix& m, std::size_t col_cap = 512);

// Canonical lift: field representatives in [0, p) taken verbatim as integers.
IntMatrix lift(const DenseMatrix& m);

// Entrywise reduction of an integer matrix into the field.
DenseMatrix reduce_mod(const IntMatrix& m, const PrimeField& field);

}  // namespace secdim
