#include "secdim/exact_linalg.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace secdim {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (1ULL << 62))
    throw std::invalid_argument("PrimeField: modulus must be below 2^62");
  if (!is_prime_u64(modulus))
    throw std::invalid_argument("PrimeField: modulus is not prime");
  bits_ = std::bit_width(p_);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod_u64(base, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw std::invalid_argument("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::sample(SplitMix64& rng) const {
  const std::uint64_t mask = bits_ >= 64 ? ~0ULL : (1ULL << bits_) - 1;
  for (;;) {
    std::uint64_t v = rng.next() & mask;
    if (v < p_) return v;
  }
}

std::uint64_t PrimeField::sample_nonzero(SplitMix64& rng) const {
  for (;;) {
    std::uint64_t v = sample(rng);
    if (v != 0) return v;
  }
}

void DenseMatrix::append_row(const std::vector<std::uint64_t>& row) {
  if (row.size() != cols) throw std::invalid_argument("append_row: width mismatch");
  entries.insert(entries.end(), row.begin(), row.end());
  ++rows;
}

std::size_t rank_mod_p(DenseMatrix m, const PrimeField& field) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t piv = pivot_row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != pivot_row) {
      for (std::size_t j = col; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(pivot_row, j));
    }
    const std::uint64_t inv = field.inv(m.at(pivot_row, col));
    for (std::size_t i = pivot_row + 1; i < m.rows; ++i) {
      const std::uint64_t f = field.mul(m.at(i, col), inv);
      if (f == 0) continue;
      m.at(i, col) = 0;
      for (std::size_t j = col + 1; j < m.cols; ++j)
        m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(pivot_row, j)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank_rational(const IntMatrix& m, std::size_t col_cap) {
  using boost::multiprecision::cpp_int;
  if (m.cols > col_cap)
    throw std::invalid_argument("rank_rational: matrix exceeds the column cap");
  if (m.rows == 0 || m.cols == 0) return 0;

  std::vector<cpp_int> a(m.entries.begin(), m.entries.end());
  auto at = [&](std::size_t r, std::size_t c) -> cpp_int& { return a[r * m.cols + c]; };

  // Fraction-free elimination: after each round every entry is an exact minor
  // of the input, so the division by the previous pivot never truncates.
  cpp_int prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t piv = pivot_row;
    while (piv < m.rows && at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != pivot_row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(pivot_row, j));
    }
    for (std::size_t i = pivot_row + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        cpp_int num = at(pivot_row, col) * at(i, j) - at(i, col) * at(pivot_row, j);
        assert(num % prev == 0);  // Sylvester identity: the division is exact
        at(i, j) = num / prev;
      }
      at(i, col) = 0;
    }
    prev = at(pivot_row, col);
    ++pivot_row;
  }
  return pivot_row;
}

IntMatrix lift(const DenseMatrix& m) {
  IntMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    out.entries[i] = static_cast<std::int64_t>(m.entries[i]);
  return out;
}

DenseMatrix reduce_mod(const IntMatrix& m, const PrimeField& field) {
  DenseMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    out.entries[i] = field.reduce_signed(m.entries[i]);
  return out;
}

}  // namespace secdim
