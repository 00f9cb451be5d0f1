#include <doctest.h>

#include <set>
#include <vector>

#include "polarfly/projgeom.hpp"

using namespace polarfly;

namespace {

FieldSpec field_of(int q) {
  int p = 0, m = 0;
  REQUIRE(is_prime_power(q, &p, &m));
  return FieldSpec::make(p, m);
}

bool left_normalized(const ProjectivePoint& pt) {
  for (FieldElem c : pt.v) {
    if (c != 0) return c == 1;
  }
  return false;
}

}  // namespace

TEST_CASE("point enumeration has q^2+q+1 sorted normalized points") {
  for (int q : {2, 3, 4, 5, 7, 9, 13}) {
    FieldSpec f = field_of(q);
    auto pts = enumerate_points(f);
    CHECK(static_cast<int>(pts.size()) == q * q + q + 1);
    std::set<ProjectivePoint> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
    for (size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i] < pts[i + 1]);
    for (const auto& pt : pts) {
      CHECK(left_normalized(pt));
      CHECK(pt.q == q);
    }
  }
}

TEST_CASE("normalize is idempotent and scale-invariant") {
  FieldSpec f = field_of(7);
  for (FieldElem x = 0; x < 7; ++x)
    for (FieldElem y = 0; y < 7; ++y)
      for (FieldElem z = 0; z < 7; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        auto n1 = normalize(f, {x, y, z});
        CHECK(left_normalized(n1));
        CHECK(normalize(f, n1.v) == n1);
        // every nonzero scalar multiple lands on the same representative
        for (FieldElem s = 1; s < 7; ++s)
          CHECK(normalize(f, {f.mul(s, x), f.mul(s, y), f.mul(s, z)}) == n1);
      }
}

TEST_CASE("normalize rejects the zero triple") {
  FieldSpec f = field_of(3);
  CHECK_THROWS_AS(normalize(f, {0, 0, 0}), ZeroVectorError);
}

TEST_CASE("dot is symmetric and detects quadrics") {
  for (int q : {3, 5, 9}) {
    FieldSpec f = field_of(q);
    auto pts = enumerate_points(f);
    for (const auto& u : pts) {
      CHECK(is_quadric(f, u) == (dot(f, u, u) == 0));
      for (const auto& v : pts) CHECK(dot(f, u, v) == dot(f, v, u));
    }
  }
}

TEST_CASE("cross is the unique common orthogonal point") {
  // oracle: scan every point for orthogonality to both inputs
  for (int q : {3, 4, 5, 9}) {
    FieldSpec f = field_of(q);
    auto pts = enumerate_points(f);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); j += (q > 4 ? 3 : 1)) {
        ProjectivePoint c = cross(f, pts[i], pts[j]);
        CHECK(dot(f, pts[i], c) == 0);
        CHECK(dot(f, pts[j], c) == 0);
        int matches = 0;
        for (const auto& w : pts)
          if (dot(f, pts[i], w) == 0 && dot(f, pts[j], w) == 0) {
            ++matches;
            CHECK(w == c);
          }
        CHECK(matches == 1);
      }
  }
}

TEST_CASE("cross of a point with itself is degenerate") {
  FieldSpec f = field_of(5);
  auto pts = enumerate_points(f);
  CHECK_THROWS_AS(cross(f, pts[0], pts[0]), DegenerateInputError);
}
