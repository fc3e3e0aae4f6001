#pragma once

// Exact real-root counting for integer polynomials: primitive pseudo-remainder
// sequences, square-free parts and Sturm chains evaluated at rational points.

#include <cstdlib>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slalom/integer.hpp"

namespace slalom {

using Rational = boost::multiprecision::cpp_rational;

inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, BigInt(abs(c)));
  return g;
}

/// Divides out the content; the leading coefficient is made positive.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v = p.coefficients();
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

/// r with lc(b)^(deg a - deg b + 1) * a = q * b + r.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, int* exponent = nullptr) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const BigInt lb = b.leading();
  int e = std::max(a.degree() - db + 1, 0);
  if (exponent) *exponent = e;
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * b.coeff(i);
    ++steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  for (; steps < e; ++steps)
    for (auto& c : r) c *= lb;
  return IntPolynomial(std::move(r));
}

inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return a;
}

/// a / b for b dividing a over the rationals, returned primitive.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + db)] / Rational(b.leading());
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= f * Rational(b.coeff(i));
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("exact_quotient: divisor does not divide");
  BigInt l = 1;
  for (const auto& x : q) l = lcm(l, BigInt(denominator(x)));
  std::vector<BigInt> out;
  for (const auto& x : q) out.push_back(BigInt(numerator(x)) * (l / BigInt(denominator(x))));
  return primitive_part(IntPolynomial(std::move(out)));
}

inline IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return primitive_part(p);
  return exact_quotient(p, g);
}

/// Sign of p(x), computed exactly.
inline int sign_at(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // Homogenise: sum c_i a^i b^(d-i) has the sign of p(a/b) for b > 0.
  const BigInt a = numerator(x), b = denominator(x);
  BigInt acc = p.leading();
  BigInt bpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + p.coeff(i) * bpow;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

class SturmChain {
 public:
  /// Built on the square-free part, so counts are of distinct real roots.
  explicit SturmChain(const IntPolynomial& p) {
    IntPolynomial f = square_free_part(p);
    chain_.push_back(f);
    if (f.degree() < 1) return;
    chain_.push_back(primitive_part(f.derivative()));
    while (chain_.back().degree() > 0) {
      const auto& a = chain_[chain_.size() - 2];
      const auto& b = chain_.back();
      int e = 0;
      IntPolynomial r = pseudo_remainder(a, b, &e);
      if (r.is_zero()) break;
      // prem = lc(b)^e * rem; keep the sign of -rem.
      const bool flips = b.leading() < 0 && e % 2 == 1;
      r = flips ? r : -r;
      BigInt c = content(r);
      std::vector<BigInt> v = r.coefficients();
      for (auto& x : v) x /= c;
      chain_.emplace_back(std::move(v));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

  const IntPolynomial& square_free() const { return chain_.front(); }
  const std::vector<IntPolynomial>& polynomials() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// 1 + max |c_i / c_d|, rounded up: every real root is below it.
inline BigInt cauchy_bound(const IntPolynomial& p) {
  BigInt m = 0;
  const BigInt lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    BigInt c = abs(p.coeff(i));
    BigInt q = (c + lead - 1) / lead;
    if (q > m) m = q;
  }
  return m + 1;
}

}  // namespace slalom
