#ifndef POLARFLY_GF_HPP
#define POLARFLY_GF_HPP

#include <cstdint>
#include <vector>

#include "polarfly/errors.hpp"

namespace polarfly {

/// Element of GF(p^m), stored as its canonical code:
/// code = c0 + c1*p + ... + c_{m-1}*p^{m-1} for polynomial coefficients
/// c0 + c1*x + ... (constant term first). For m = 1 the code is the residue.
using FieldElem = std::uint16_t;

/// Arithmetic in GF(q), q = p^m. Immutable after construction; all
/// operations are pure, so a spec may be shared freely across threads.
class FieldSpec {
 public:
  /// Inert placeholder (q = 0); assign from make() before use.
  FieldSpec() = default;

  /// Builds GF(p^m). For m > 1 the modulus is the lexicographically
  /// smallest (constant term first) monic irreducible degree-m polynomial
  /// over GF(p), so element codes are reproducible across runs.
  static FieldSpec make(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  /// Modulus coefficients, constant term first, size m+1, leading 1.
  /// Empty for prime fields (m = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws ZeroInverseError for a = 0

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }

  std::vector<int> coeffs(FieldElem a) const;       // little-endian, size m
  FieldElem from_coeffs(const std::vector<int>& c) const;

  bool operator==(const FieldSpec& o) const { return p_ == o.p_ && m_ == o.m_; }

 private:
  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
};

bool is_prime(int n);

/// True iff n = p^m for some prime p, m >= 1; outputs the decomposition.
bool is_prime_power(int n, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace polarfly

#endif
