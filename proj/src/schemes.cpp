#include "secdim/schemes.hpp"

#include <sstream>
#include <stdexcept>

namespace secdim {

SchemeDescriptor SchemeDescriptor::double_points(std::size_t count) {
  SchemeDescriptor s;
  s.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient, count);
  return s;
}

SchemeDescriptor& SchemeDescriptor::add(ConditionKind kind, LocationKind location,
                                        std::size_t count) {
  if (count > 0) components.push_back({kind, location, count, std::nullopt});
  return *this;
}

SchemeDescriptor& SchemeDescriptor::add_fixed(ConditionKind kind, MPPoint p) {
  components.push_back({kind, LocationKind::Fixed, 1, std::move(p)});
  return *this;
}

bool SchemeDescriptor::empty() const {
  for (const auto& c : components)
    if (c.count > 0) return false;
  return true;
}

std::size_t SchemeDescriptor::point_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.count;
  return n;
}

void validate(const SchemeDescriptor& s) {
  for (const auto& c : s.components) {
    if (c.location == LocationKind::Fixed) {
      if (c.count != 1 || !c.point.has_value())
        throw std::invalid_argument("fixed component must carry exactly one point");
    } else if (c.point.has_value()) {
      throw std::invalid_argument("general component must not carry a point");
    }
    if (c.kind == ConditionKind::DoubleInDivisor &&
        c.location == LocationKind::GeneralAmbient)
      throw std::invalid_argument("divisor double points must be located on the divisor");
  }
}

std::uint64_t degree(const SchemeDescriptor& s, const MultiProjectiveFormat& format) {
  const std::uint64_t n = static_cast<std::uint64_t>(format.ambient_dim());
  std::uint64_t deg = 0;
  for (const auto& c : s.components) {
    switch (c.kind) {
      case ConditionKind::Reduced: deg += c.count; break;
      case ConditionKind::DoubleAmbient: deg += c.count * (n + 1); break;
      case ConditionKind::DoubleInDivisor: deg += c.count * n; break;
    }
  }
  return deg;
}

namespace {

// Project a point of X to the divisor's own format by dropping the pinned
// factor.
MPPoint project_off(const MPPoint& p, std::size_t fi) {
  MPPoint q = p;
  q.coords.erase(q.coords.begin() + static_cast<std::ptrdiff_t>(fi));
  return q;
}

}  // namespace

ResidualPair residual_split(const SchemeDescriptor& s,
                            const MultiProjectiveFormat& format,
                            const BundleDegree& bundle, const DivisorHandle& divisor,
                            const PrimeField& field) {
  validate(s);
  ResidualPair out{
      {}, format, bundle.twisted_down(divisor.factor_index),
      {}, format.without_factor(divisor.factor_index),
      bundle.without_factor(divisor.factor_index)};

  for (const auto& c : s.components) {
    const bool fixed = c.location == LocationKind::Fixed;
    const bool on_d = c.location == LocationKind::GeneralOnDivisor ||
                      (fixed && lies_on(*c.point, divisor, field));
    switch (c.kind) {
      case ConditionKind::DoubleAmbient:
        if (!on_d) {
          // disjoint from H: the residual keeps the whole component
          out.residual.components.push_back(c);
        } else {
          // Res_H(2p) = {p}, (2p) meets H in the double point of H at p
          if (fixed) {
            out.residual.add_fixed(ConditionKind::Reduced, *c.point);
            out.trace.add_fixed(ConditionKind::DoubleAmbient,
                                project_off(*c.point, divisor.factor_index));
          } else {
            out.residual.add(ConditionKind::Reduced, LocationKind::GeneralOnDivisor,
                             c.count);
            out.trace.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient,
                          c.count);
          }
        }
        break;
      case ConditionKind::Reduced:
        if (!on_d) {
          out.residual.components.push_back(c);
        } else if (fixed) {
          out.trace.add_fixed(ConditionKind::Reduced,
                              project_off(*c.point, divisor.factor_index));
        } else {
          out.trace.add(ConditionKind::Reduced, LocationKind::GeneralAmbient, c.count);
        }
        break;
      case ConditionKind::DoubleInDivisor:
        // contained in H: empty residual; in the divisor's own format the
        // component is a full double point
        if (fixed) {
          if (!lies_on(*c.point, divisor, field))
            throw std::invalid_argument("divisor double point off the divisor");
          out.trace.add_fixed(ConditionKind::DoubleAmbient,
                              project_off(*c.point, divisor.factor_index));
        } else {
          out.trace.add(ConditionKind::DoubleAmbient, LocationKind::GeneralAmbient,
                        c.count);
        }
        break;
    }
  }
  return out;
}

std::vector<RealizedPoint> realize(const SchemeDescriptor& s,
                                   const MultiProjectiveFormat& format,
                                   const PrimeField& field, SplitMix64& rng,
                                   const DivisorHandle* divisor) {
  validate(s);
  constexpr int kRetryCap = 256;
  std::vector<RealizedPoint> out;
  out.reserve(s.point_count());
  auto is_new = [&](const MPPoint& p) {
    for (const auto& r : out)
      if (projectively_equal(r.point, p, field)) return false;
    return true;
  };
  for (const auto& c : s.components) {
    if (c.location == LocationKind::Fixed) {
      if (!is_new(*c.point))
        throw std::invalid_argument("fixed points of a scheme must be distinct");
      out.push_back({*c.point, c.kind});
      continue;
    }
    const bool want_on_divisor = c.location == LocationKind::GeneralOnDivisor ||
                                 c.kind == ConditionKind::DoubleInDivisor;
    if (want_on_divisor && divisor == nullptr)
      throw std::invalid_argument("scheme has divisor components but no divisor given");
    for (std::size_t i = 0; i < c.count; ++i) {
      int attempts = 0;
      for (;;) {
        MPPoint p = sample_point(format, field, rng);
        if (want_on_divisor) p = on_divisor(std::move(p), *divisor);
        if (is_new(p)) {
          out.push_back({std::move(p), c.kind});
          break;
        }
        if (++attempts > kRetryCap)
          throw std::runtime_error("realize: resampling cap exceeded");
      }
    }
  }
  return out;
}

std::string to_canonical_json(const SchemeDescriptor& s) {
  std::ostringstream os;
  os << "{\"components\":[";
  bool first = true;
  for (const auto& c : s.components) {
    if (!first) os << ",";
    first = false;
    os << "{\"kind\":\"" << kind_name(c.kind) << "\",\"location\":\""
       << location_name(c.location) << "\",\"count\":" << c.count;
    if (c.point.has_value()) {
      os << ",\"point\":[";
      for (std::size_t f = 0; f < c.point->coords.size(); ++f) {
        if (f) os << ",";
        os << "[";
        for (std::size_t i = 0; i < c.point->coords[f].size(); ++i) {
          if (i) os << ",";
          os << c.point->coords[f][i];
        }
        os << "]";
      }
      os << "]";
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

const char* kind_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::Reduced: return "reduced";
    case ConditionKind::DoubleAmbient: return "double_ambient";
    case ConditionKind::DoubleInDivisor: return "double_in_divisor";
  }
  return "?";
}

const char* location_name(LocationKind l) {
  switch (l) {
    case LocationKind::GeneralAmbient: return "general_ambient";
    case LocationKind::GeneralOnDivisor: return "general_on_divisor";
    case LocationKind::Fixed: return "fixed";
  }
  return "?";
}

}  // namespace secdim
