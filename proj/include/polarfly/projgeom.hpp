#ifndef POLARFLY_PROJGEOM_HPP
#define POLARFLY_PROJGEOM_HPP

#include <array>
#include <compare>
#include <vector>

#include "polarfly/gf.hpp"

namespace polarfly {

/// Left-normalized point of PG(2, q): a nonzero triple over GF(q) whose
/// first nonzero coordinate is 1. Carries the field order so mixed-field
/// operations can be rejected.
struct ProjectivePoint {
  std::array<FieldElem, 3> v{0, 0, 0};
  int q = 0;

  auto operator<=>(const ProjectivePoint&) const = default;
};

/// Scales a raw nonzero triple so its first nonzero coordinate is 1.
/// Idempotent; throws ZeroVectorError on the zero triple.
ProjectivePoint normalize(const FieldSpec& spec, const std::array<FieldElem, 3>& raw);

FieldElem dot(const FieldSpec& spec, const ProjectivePoint& u, const ProjectivePoint& v);

bool is_quadric(const FieldSpec& spec, const ProjectivePoint& v);

/// The unique point orthogonal to both s and d, left-normalized.
/// Throws DegenerateInputError when s = d (the cross product vanishes).
ProjectivePoint cross(const FieldSpec& spec, const ProjectivePoint& s,
                      const ProjectivePoint& d);

/// All q^2+q+1 points of PG(2, q) in lexicographic (x, y, z) order of
/// element codes. This ordering defines vertex IDs everywhere else.
std::vector<ProjectivePoint> enumerate_points(const FieldSpec& spec);

}  // namespace polarfly

#endif
