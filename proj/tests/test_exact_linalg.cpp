#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "secdim/exact_linalg.hpp"

using namespace secdim;

namespace {

DenseMatrix from_rows(std::vector<std::vector<std::uint64_t>> rows) {
  DenseMatrix m(0, rows.empty() ? 0 : rows[0].size());
  for (auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, std::int64_t lo,
                            std::int64_t hi, SplitMix64& rng) {
  IntMatrix m(rows, cols);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto& e : m.entries)
    e = lo + static_cast<std::int64_t>(rng.next() % span);
  return m;
}

}  // namespace

TEST_CASE("primality check is deterministic and correct on known values") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(PrimeField::kDefaultModulus));
  CHECK(is_prime_u64(PrimeField::kRetryModulus));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(PrimeField::kDefaultModulus - 1));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("field construction rejects composite moduli") {
  CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1ULL << 62), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("field arithmetic basics") {
  PrimeField f(101);
  CHECK(f.add(100, 2) == 1);
  CHECK(f.sub(1, 2) == 100);
  CHECK(f.mul(50, 50) == 2500 % 101);
  CHECK(f.mul(7, f.inv(7)) == 1);
  CHECK(f.reduce_signed(-1) == 100);
}

TEST_CASE("rank of identity and proportional rows") {
  PrimeField f;
  CHECK(rank_mod_p(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), f) == 3);
  CHECK(rank_mod_p(from_rows({{1, 2}, {2, 4}}), f) == 1);
  CHECK(rank_mod_p(DenseMatrix(), f) == 0);
  CHECK(rank_mod_p(DenseMatrix(0, 5), f) == 0);
}

TEST_CASE("rational rank: identity and modulus multiples") {
  IntMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(rank_rational(id) == 4);

  const std::int64_t p = static_cast<std::int64_t>(PrimeField::kDefaultModulus);
  IntMatrix pp(2, 2);
  pp.at(0, 0) = p;
  pp.at(1, 1) = p;
  CHECK(rank_rational(pp) == 2);
  PrimeField f;
  CHECK(rank_mod_p(reduce_mod(pp, f), f) == 0);
}

TEST_CASE("rational rank refuses matrices beyond the column cap") {
  IntMatrix wide(1, 513);
  CHECK_THROWS_AS(rank_rational(wide), std::invalid_argument);
  CHECK_NOTHROW(rank_rational(wide, 600));
}

TEST_CASE("random 20x20 small-entry matrix: both routes agree") {
  SplitMix64 rng(2024);
  PrimeField f;
  IntMatrix m = random_int_matrix(20, 20, -10, 10, rng);
  CHECK(rank_rational(m) == rank_mod_p(reduce_mod(m, f), f));
}

TEST_CASE("mod-p rank never exceeds rational rank") {
  SplitMix64 rng(7);
  for (int it = 0; it < 30; ++it) {
    const std::size_t r = 1 + rng.next() % 8;
    const std::size_t c = 1 + rng.next() % 8;
    IntMatrix m = random_int_matrix(r, c, -6, 6, rng);
    // plant proportional rows now and then to exercise deficiency
    if (r >= 2 && it % 3 == 0) {
      for (std::size_t j = 0; j < c; ++j) m.at(r - 1, j) = 3 * m.at(0, j);
    }
    for (std::uint64_t p : std::vector<std::uint64_t>{
             2, 3, 101, PrimeField::kDefaultModulus}) {
      PrimeField f(p);
      CHECK(rank_mod_p(reduce_mod(m, f), f) <= rank_rational(m));
    }
  }
}

TEST_CASE("rank is invariant under row/column permutation and row scaling") {
  SplitMix64 rng(99);
  PrimeField f;
  for (int it = 0; it < 20; ++it) {
    const std::size_t r = 2 + rng.next() % 6;
    const std::size_t c = 2 + rng.next() % 6;
    DenseMatrix m(r, c);
    for (auto& e : m.entries) e = f.sample(rng);
    const std::size_t base = rank_mod_p(m, f);

    DenseMatrix shuffled = m;
    std::vector<std::size_t> rows(r), cols(c);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t i = r; i > 1; --i) std::swap(rows[i - 1], rows[rng.next() % i]);
    for (std::size_t i = c; i > 1; --i) std::swap(cols[i - 1], cols[rng.next() % i]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        shuffled.at(i, j) = m.at(rows[i], cols[j]);
    CHECK(rank_mod_p(shuffled, f) == base);

    DenseMatrix scaled = m;
    const std::uint64_t s = f.sample_nonzero(rng);
    for (std::size_t j = 0; j < c; ++j) scaled.at(0, j) = f.mul(scaled.at(0, j), s);
    CHECK(rank_mod_p(scaled, f) == base);
  }
}

TEST_CASE("stacking bounds: max(rA, rB) <= rank(A;B) <= rA + rB") {
  SplitMix64 rng(11);
  PrimeField f;
  for (int it = 0; it < 20; ++it) {
    const std::size_t c = 2 + rng.next() % 6;
    const std::size_t ra = 1 + rng.next() % 4;
    const std::size_t rb = 1 + rng.next() % 4;
    DenseMatrix a(ra, c), b(rb, c);
    for (auto& e : a.entries) e = rng.next() % 5;
    for (auto& e : b.entries) e = rng.next() % 5;
    DenseMatrix stacked(0, c);
    stacked.entries = a.entries;
    stacked.rows = a.rows;
    stacked.entries.insert(stacked.entries.end(), b.entries.begin(), b.entries.end());
    stacked.rows += b.rows;
    const std::size_t rs = rank_mod_p(stacked, f);
    const std::size_t rka = rank_mod_p(a, f);
    const std::size_t rkb = rank_mod_p(b, f);
    CHECK(rs >= std::max(rka, rkb));
    CHECK(rs <= rka + rkb);
  }
}

TEST_CASE("field sampling is deterministic and in range") {
  PrimeField f;
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = f.sample(a);
    CHECK(x == f.sample(b));
    CHECK(x < f.modulus());
  }
  SplitMix64 c(1);
  for (int i = 0; i < 100; ++i) CHECK(f.sample_nonzero(c) != 0);
}
