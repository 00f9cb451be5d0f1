#include <doctest.h>

#include <set>
#include <vector>

#include "polarfly/gf.hpp"

using namespace polarfly;

namespace {

// Exhaustive field axioms. Cubic in q, so keep q small.
void check_axioms(const FieldSpec& f) {
  const int q = f.q();
  for (int a = 0; a < q; ++a) {
    CHECK(f.add(a, f.zero()) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.add(a, f.neg(a)) == f.zero());
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    for (int b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      // no zero divisors
      if (a != 0 && b != 0) CHECK(f.mul(a, b) != f.zero());
      for (int c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

FieldElem pow_p(const FieldSpec& f, FieldElem a, int e) {
  FieldElem r = f.one();
  for (int i = 0; i < e; ++i) r = f.mul(r, a);
  return r;
}

}  // namespace

TEST_CASE("prime and prime power detection") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));

  int p = 0, m = 0;
  CHECK(is_prime_power(9, &p, &m));
  CHECK(p == 3);
  CHECK(m == 2);
  CHECK(is_prime_power(8, &p, &m));
  CHECK(p == 2);
  CHECK(m == 3);
  CHECK(is_prime_power(13, &p, &m));
  CHECK(m == 1);
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {3, 1}, {5, 1}, {13, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    FieldSpec f = FieldSpec::make(p, m);
    CHECK(f.q() == [&] {
      int v = 1;
      for (int i = 0; i < m; ++i) v *= p;
      return v;
    }());
    check_axioms(f);
  }
}

TEST_CASE("construction rejects composite characteristic") {
  CHECK_THROWS_AS(FieldSpec::make(6, 1), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec::make(4, 2), NotPrimeError);
}

TEST_CASE("zero has no inverse") {
  FieldSpec f = FieldSpec::make(7, 1);
  CHECK_THROWS_AS(f.inv(0), ZeroInverseError);
}

TEST_CASE("extension moduli are the lexicographically smallest irreducibles") {
  // GF(9): x^2 + 1 (no root mod 3); everything smaller has a root or is
  // not monic-irreducible
  FieldSpec f9 = FieldSpec::make(3, 2);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
  // GF(8): x^3 + x^2 + 1, constant-first order puts it before x^3 + x + 1
  FieldSpec f8 = FieldSpec::make(2, 3);
  CHECK(f8.modulus() == std::vector<int>{1, 0, 1, 1});
  // GF(25): x^2 + x + 1 (discriminant -3 = 2 is a non-residue mod 5)
  FieldSpec f25 = FieldSpec::make(5, 2);
  CHECK(f25.modulus() == std::vector<int>{1, 1, 1});
  // prime fields carry no modulus
  CHECK(FieldSpec::make(11, 1).modulus().empty());
}

TEST_CASE("modulus is irreducible by brute force") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {2, 3}}) {
    FieldSpec f = FieldSpec::make(p, m);
    // m <= 3: reducible implies a linear factor, i.e. a root in GF(p)
    const auto& mod = f.modulus();
    for (int x = 0; x < p; ++x) {
      long long val = 0, xp = 1;
      for (int c : mod) {
        val = (val + c * xp) % p;
        xp = xp * x % p;
      }
      CHECK(val % p != 0);
    }
  }
}

TEST_CASE("frobenius endomorphism in extension fields") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {5, 2}}) {
    FieldSpec f = FieldSpec::make(p, m);
    for (int a = 0; a < f.q(); ++a)
      for (int b = 0; b < f.q(); ++b)
        CHECK(pow_p(f, f.add(a, b), p) ==
              f.add(pow_p(f, a, p), pow_p(f, b, p)));
  }
}

TEST_CASE("coefficient views round-trip") {
  FieldSpec f = FieldSpec::make(3, 2);
  std::set<FieldElem> seen;
  for (int a = 0; a < f.q(); ++a) {
    auto c = f.coeffs(a);
    CHECK(static_cast<int>(c.size()) == 2);
    CHECK(f.from_coeffs(c) == a);
    seen.insert(f.from_coeffs(c));
  }
  CHECK(static_cast<int>(seen.size()) == 9);
}

TEST_CASE("multiplicative group order divides q-1") {
  FieldSpec f = FieldSpec::make(3, 2);
  for (int a = 1; a < f.q(); ++a) CHECK(pow_p(f, a, f.q() - 1) == f.one());
}
