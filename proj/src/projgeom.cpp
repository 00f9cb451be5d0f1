#include "polarfly/projgeom.hpp"

namespace polarfly {

ProjectivePoint normalize(const FieldSpec& spec, const std::array<FieldElem, 3>& raw) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (raw[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) throw ZeroVectorError();
  FieldElem scale = spec.inv(raw[lead]);
  ProjectivePoint p;
  p.q = spec.q();
  for (int i = 0; i < 3; ++i) p.v[i] = spec.mul(raw[i], scale);
  return p;
}

FieldElem dot(const FieldSpec& spec, const ProjectivePoint& u, const ProjectivePoint& v) {
  if (u.q != spec.q() || v.q != spec.q()) throw FieldMismatchError();
  FieldElem acc = 0;
  for (int i = 0; i < 3; ++i) acc = spec.add(acc, spec.mul(u.v[i], v.v[i]));
  return acc;
}

bool is_quadric(const FieldSpec& spec, const ProjectivePoint& v) {
  return dot(spec, v, v) == 0;
}

ProjectivePoint cross(const FieldSpec& spec, const ProjectivePoint& s,
                      const ProjectivePoint& d) {
  if (s.q != spec.q() || d.q != spec.q()) throw FieldMismatchError();
  std::array<FieldElem, 3> raw;
  raw[0] = spec.sub(spec.mul(s.v[1], d.v[2]), spec.mul(s.v[2], d.v[1]));
  raw[1] = spec.sub(spec.mul(s.v[2], d.v[0]), spec.mul(s.v[0], d.v[2]));
  raw[2] = spec.sub(spec.mul(s.v[0], d.v[1]), spec.mul(s.v[1], d.v[0]));
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
    throw DegenerateInputError("cross product of equal projective points is zero");
  return normalize(spec, raw);
}

std::vector<ProjectivePoint> enumerate_points(const FieldSpec& spec) {
  std::vector<ProjectivePoint> pts;
  const int q = spec.q();
  pts.reserve(q * q + q + 1);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        FieldElem lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead != 1) continue;  // keep only the left-normalized representative
        ProjectivePoint p;
        p.q = q;
        p.v = {static_cast<FieldElem>(x), static_cast<FieldElem>(y),
               static_cast<FieldElem>(z)};
        pts.push_back(p);
      }
  return pts;
}

}  // namespace polarfly
