#include "polarfly/gf.hpp"

#include <algorithm>

namespace polarfly {

namespace {

// Dense polynomial over GF(p), little-endian coefficients, no implied
// normalization (trailing zeros allowed until trim()).
using Poly = std::vector<int>;

int pmod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = pmod(v, p);
  }
  trim(r);
  return r;
}

Poly poly_scale(const Poly& a, int c, int p) {
  Poly r(a);
  for (auto& v : r) v = pmod(static_cast<long long>(v) * c, p);
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = pmod(r[i + j] + static_cast<long long>(a[i]) * b[j], p);
  trim(r);
  return r;
}

// Returns remainder of a / b; b must be nonzero. quot_out may be null.
Poly poly_divmod(Poly a, const Poly& b, int p, Poly* quot_out) {
  trim(a);
  Poly q(a.size(), 0);
  int db = degree(b);
  int lead_inv = 1;
  {
    // inverse of b's leading coefficient mod p via Fermat
    int lead = b[db];
    int e = p - 2;
    long long base = lead, acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    lead_inv = static_cast<int>(acc);
  }
  while (degree(a) >= db && !a.empty()) {
    int da = degree(a);
    int c = pmod(static_cast<long long>(a[da]) * lead_inv, p);
    q[da - db] = c;
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = pmod(a[da - db + i] - static_cast<long long>(c) * b[i], p);
    trim(a);
  }
  if (quot_out) {
    trim(q);
    *quot_out = q;
  }
  return a;
}

// Trial division against all monic polynomials of degree <= deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd) {
    // enumerate monic polys of degree dd: dd free coefficients
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(dd + 1, 0);
      long long c = code;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[dd] = 1;
      Poly rem = poly_divmod(f, g, p, nullptr);
      if (rem.empty()) return false;
    }
  }
  return true;
}

Poly decode(FieldElem a, int p, int m) {
  Poly c(m, 0);
  int v = a;
  for (int i = 0; i < m; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

FieldElem encode(const Poly& c, int p, int m) {
  long long v = 0, mult = 1;
  for (int i = 0; i < m; ++i) {
    v += (i < static_cast<int>(c.size()) ? c[i] : 0) * mult;
    mult *= p;
  }
  return static_cast<FieldElem>(v);
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* p_out, int* m_out) {
  if (n < 2) return false;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    // smallest divisor of n is prime
    int m = 0, v = n;
    while (v % p == 0) {
      v /= p;
      ++m;
    }
    if (v == 1) {
      if (p_out) *p_out = p;
      if (m_out) *m_out = m;
      return true;
    }
    return false;
  }
  return false;
}

FieldSpec FieldSpec::make(int p, int m) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  FieldSpec spec;
  spec.p_ = p;
  spec.m_ = m;
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > 0xFFFF) throw std::invalid_argument("field order too large");
  spec.q_ = static_cast<int>(q);
  if (m > 1) {
    // lexicographic scan, constant term first, over monic degree-m polys
    std::vector<int> tail(m, 0);
    bool found = false;
    while (!found) {
      Poly f(tail);
      f.push_back(1);
      if (poly_irreducible(f, p)) {
        spec.modulus_ = f;
        found = true;
        break;
      }
      // lexicographic successor: bump last coordinate first so that
      // earlier (constant-term) coordinates stay minimal as long as possible
      int i = m - 1;
      while (i >= 0 && tail[i] == p - 1) tail[i--] = 0;
      if (i < 0) break;  // exhausted; cannot happen, irreducibles always exist
      ++tail[i];
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }
  return spec;
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
  if (m_ == 1) return static_cast<FieldElem>((a + b) % p_);
  return encode(poly_add(decode(a, p_, m_), decode(b, p_, m_), p_), p_, m_);
}

FieldElem FieldSpec::neg(FieldElem a) const {
  if (m_ == 1) return static_cast<FieldElem>(a == 0 ? 0 : p_ - a);
  return encode(poly_scale(decode(a, p_, m_), p_ - 1, p_), p_, m_);
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
  if (m_ == 1)
    return static_cast<FieldElem>(static_cast<long long>(a) * b % p_);
  Poly prod = poly_mul(decode(a, p_, m_), decode(b, p_, m_), p_);
  Poly rem = poly_divmod(prod, modulus_, p_, nullptr);
  return encode(rem, p_, m_);
}

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a == 0) throw ZeroInverseError();
  if (m_ == 1) {
    // extended Euclid over the integers
    int r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      int qq = r0 / r1;
      int r2 = r0 - qq * r1;
      int t2 = t0 - qq * t1;
      r0 = r1; r1 = r2;
      t0 = t1; t1 = t2;
    }
    return static_cast<FieldElem>(pmod(t0, p_));
  }
  // extended Euclid over GF(p)[x]
  Poly r0 = modulus_, r1 = decode(a, p_, m_);
  trim(r1);
  Poly t0, t1 = {1};
  while (!r1.empty()) {
    Poly quot;
    Poly r2 = poly_divmod(r0, r1, p_, &quot);
    Poly t2 = poly_add(t0, poly_scale(poly_mul(quot, t1, p_), p_ - 1, p_), p_);
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  // r0 is a nonzero constant gcd; scale t0 by its inverse
  int c = r0.at(0);
  int e = p_ - 2;
  long long base = c, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  Poly result = poly_scale(t0, static_cast<int>(acc), p_);
  Poly rem = poly_divmod(result, modulus_, p_, nullptr);
  return encode(rem, p_, m_);
}

std::vector<int> FieldSpec::coeffs(FieldElem a) const { return decode(a, p_, m_); }

FieldElem FieldSpec::from_coeffs(const std::vector<int>& c) const {
  Poly norm(m_, 0);
  for (int i = 0; i < m_ && i < static_cast<int>(c.size()); ++i) norm[i] = pmod(c[i], p_);
  return encode(norm, p_, m_);
}

}  // namespace polarfly
