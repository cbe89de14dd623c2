#include "secdim/variety.hpp"

#include <numeric>
#include <stdexcept>

namespace secdim {

namespace {

void check_lengths(const MultiProjectiveFormat& format, const BundleDegree& bundle) {
  if (format.factor_dims.size() != bundle.degrees.size())
    throw std::invalid_argument("format/bundle length mismatch");
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  if (r > (static_cast<unsigned __int128>(1) << 62))
    throw std::overflow_error("binomial overflow");
  return static_cast<std::uint64_t>(r);
}

// Exponent vectors of length n+1 summing to d, lexicographically descending.
void enumerate_exponents(int slots, int total, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_exponents(slots - 1, total - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiProjectiveFormat::MultiProjectiveFormat(std::vector<int> dims)
    : factor_dims(std::move(dims)) {
  if (factor_dims.empty())
    throw std::invalid_argument("format needs at least one factor");
  for (int n : factor_dims)
    if (n < 1) throw std::invalid_argument("factor dimensions must be >= 1");
}

int MultiProjectiveFormat::ambient_dim() const {
  return std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
}

MultiProjectiveFormat MultiProjectiveFormat::with_line_factor() const {
  auto dims = factor_dims;
  dims.push_back(1);
  return MultiProjectiveFormat(std::move(dims));
}

MultiProjectiveFormat MultiProjectiveFormat::without_factor(std::size_t fi) const {
  if (fi >= factor_dims.size()) throw std::invalid_argument("factor index out of range");
  if (factor_dims.size() == 1)
    throw std::invalid_argument("cannot drop the only factor");
  auto dims = factor_dims;
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(fi));
  return MultiProjectiveFormat(std::move(dims));
}

BundleDegree::BundleDegree(std::vector<int> degs) : degrees(std::move(degs)) {
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("bundle degrees must be >= 0");
}

BundleDegree BundleDegree::with_degree(int t) const {
  auto d = degrees;
  d.push_back(t);
  return BundleDegree(std::move(d));
}

BundleDegree BundleDegree::without_factor(std::size_t fi) const {
  if (fi >= degrees.size()) throw std::invalid_argument("factor index out of range");
  auto d = degrees;
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(fi));
  return BundleDegree(std::move(d));
}

BundleDegree BundleDegree::twisted_down(std::size_t fi) const {
  if (fi >= degrees.size()) throw std::invalid_argument("factor index out of range");
  if (degrees[fi] == 0)
    throw std::invalid_argument("twist underflow: divisor factor already has degree 0");
  auto d = degrees;
  d[fi] -= 1;
  return BundleDegree(std::move(d));
}

std::uint64_t basis_size(const MultiProjectiveFormat& format, const BundleDegree& bundle) {
  check_lengths(format, bundle);
  unsigned __int128 n = 1;
  for (std::size_t i = 0; i < format.factor_dims.size(); ++i) {
    n *= binomial_u64(format.factor_dims[i] + bundle.degrees[i], format.factor_dims[i]);
    if (n > (static_cast<unsigned __int128>(1) << 62))
      throw std::overflow_error("basis size overflow");
  }
  return static_cast<std::uint64_t>(n);
}

std::vector<Monomial> monomial_basis(const MultiProjectiveFormat& format,
                                     const BundleDegree& bundle) {
  check_lengths(format, bundle);
  std::vector<std::vector<std::vector<int>>> factor_exps;
  for (std::size_t i = 0; i < format.factor_dims.size(); ++i) {
    std::vector<std::vector<int>> exps;
    std::vector<int> prefix;
    enumerate_exponents(format.factor_dims[i] + 1, bundle.degrees[i], prefix, exps);
    factor_exps.push_back(std::move(exps));
  }
  std::vector<Monomial> basis;
  basis.reserve(basis_size(format, bundle));
  Monomial current;
  current.exponents.resize(factor_exps.size());
  // odometer over the per-factor lists, leftmost factor slowest
  std::vector<std::size_t> idx(factor_exps.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < factor_exps.size(); ++i)
      current.exponents[i] = factor_exps[i][idx[i]];
    basis.push_back(current);
    std::size_t i = factor_exps.size();
    while (i > 0) {
      --i;
      if (++idx[i] < factor_exps[i].size()) break;
      idx[i] = 0;
      if (i == 0) return basis;
    }
  }
}

DivisorHandle::DivisorHandle(const MultiProjectiveFormat& format, std::size_t fi)
    : DivisorHandle(format, fi, {1, 0}) {}

DivisorHandle::DivisorHandle(const MultiProjectiveFormat& format, std::size_t fi,
                             std::vector<std::uint64_t> value)
    : factor_index(fi), chart_value(std::move(value)) {
  if (fi >= format.factor_dims.size())
    throw std::invalid_argument("divisor factor index out of range");
  if (format.factor_dims[fi] != 1)
    throw std::invalid_argument("divisor factor must have dimension 1");
  if (chart_value.size() != static_cast<std::size_t>(format.factor_dims[fi]) + 1)
    throw std::invalid_argument("divisor chart value has wrong length");
  if (chart_value[0] == 0)
    throw std::invalid_argument("divisor chart value must have nonzero chart coordinate");
}

MPPoint sample_point(const MultiProjectiveFormat& format, const PrimeField& field,
                     SplitMix64& rng) {
  MPPoint p;
  p.coords.reserve(format.factor_dims.size());
  for (int n : format.factor_dims) {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(n) + 1);
    v[0] = field.sample_nonzero(rng);
    for (std::size_t c = 1; c < v.size(); ++c) v[c] = field.sample(rng);
    p.coords.push_back(std::move(v));
  }
  return p;
}

MPPoint on_divisor(MPPoint p, const DivisorHandle& divisor) {
  p.coords.at(divisor.factor_index) = divisor.chart_value;
  return p;
}

bool lies_on(const MPPoint& p, const DivisorHandle& divisor, const PrimeField& field) {
  const auto& u = divisor.chart_value;
  const auto& v = p.coords.at(divisor.factor_index);
  if (u.size() != v.size()) return false;
  // proportionality: u[i]*v[j] == u[j]*v[i] for all pairs (2x2 minors vanish)
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (field.mul(u[i] % field.modulus(), v[j]) !=
          field.mul(u[j] % field.modulus(), v[i]))
        return false;
  return true;
}

bool projectively_equal(const MPPoint& a, const MPPoint& b, const PrimeField& field) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t f = 0; f < a.coords.size(); ++f) {
    const auto& u = a.coords[f];
    const auto& v = b.coords[f];
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (field.mul(u[i], v[j]) != field.mul(u[j], v[i])) return false;
  }
  return true;
}

std::size_t condition_row_count(ConditionKind kind, const MultiProjectiveFormat& format,
                                const DivisorHandle* divisor) {
  switch (kind) {
    case ConditionKind::Reduced:
      return 1;
    case ConditionKind::DoubleAmbient:
      return 1 + static_cast<std::size_t>(format.ambient_dim());
    case ConditionKind::DoubleInDivisor: {
      if (divisor == nullptr)
        throw std::invalid_argument("DoubleInDivisor rows need a divisor");
      return 1 + static_cast<std::size_t>(format.ambient_dim() -
                                          format.factor_dims[divisor->factor_index]);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Evaluate one monomial at a chart-normalized point, optionally as the
// derivative in direction (fi, ci): multiply by the exponent and lower it.
std::uint64_t eval_monomial(const Monomial& mon, const MPPoint& p,
                            const PrimeField& field, int dfi = -1, int dci = -1) {
  std::uint64_t value = 1;
  for (std::size_t f = 0; f < mon.exponents.size(); ++f) {
    const auto& exps = mon.exponents[f];
    const auto& pt = p.coords[f];
    for (std::size_t c = 0; c < exps.size(); ++c) {
      int e = exps[c];
      if (static_cast<int>(f) == dfi && static_cast<int>(c) == dci) {
        if (e == 0) return 0;
        value = field.mul(value, static_cast<std::uint64_t>(e) % field.modulus());
        e -= 1;
      }
      for (int k = 0; k < e; ++k) value = field.mul(value, pt[c]);
    }
  }
  return value;
}

}  // namespace

DenseMatrix condition_rows(const MPPoint& p, ConditionKind kind,
                           const MultiProjectiveFormat& format,
                           const std::vector<Monomial>& basis,
                           const PrimeField& field, const DivisorHandle* divisor) {
  if (p.coords.size() != format.factor_dims.size())
    throw std::invalid_argument("point/format mismatch");
  if (kind == ConditionKind::DoubleInDivisor) {
    if (divisor == nullptr)
      throw std::invalid_argument("DoubleInDivisor rows need a divisor");
    if (!lies_on(p, *divisor, field))
      throw std::invalid_argument("DoubleInDivisor point does not lie on the divisor");
  }

  // Normalize each factor so the chart coordinate is 1; evaluation and the
  // affine derivatives are then plain exponent arithmetic.
  MPPoint q = p;
  for (auto& v : q.coords) {
    if (v[0] == 0)
      throw std::invalid_argument("chart coordinate is zero; point violates sampling invariant");
    const std::uint64_t s = field.inv(v[0]);
    for (auto& c : v) c = field.mul(c, s);
  }

  const std::size_t n_rows = condition_row_count(kind, format, divisor);
  DenseMatrix out(n_rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    out.at(0, j) = eval_monomial(basis[j], q, field);
  if (kind == ConditionKind::Reduced) return out;

  std::size_t r = 1;
  for (std::size_t f = 0; f < format.factor_dims.size(); ++f) {
    if (kind == ConditionKind::DoubleInDivisor && f == divisor->factor_index) continue;
    for (int c = 1; c <= format.factor_dims[f]; ++c) {
      for (std::size_t j = 0; j < basis.size(); ++j)
        out.at(r, j) = eval_monomial(basis[j], q, field, static_cast<int>(f), c);
      ++r;
    }
  }
  return out;
}

DenseMatrix condition_rows(const MPPoint& p, ConditionKind kind,
                           const MultiProjectiveFormat& format,
                           const BundleDegree& bundle, const PrimeField& field,
                           const DivisorHandle* divisor) {
  return condition_rows(p, kind, format, monomial_basis(format, bundle), field, divisor);
}

}  // namespace secdim
