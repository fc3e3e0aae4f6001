#pragma once

// Dominating eigenvalue of a Coxeter element by exact root isolation.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "slalom/coxeter.hpp"
#include "slalom/shape.hpp"
#include "slalom/sturm.hpp"

namespace slalom {

struct Enclosure {
  Rational lo;
  Rational hi;

  double lower() const { return static_cast<double>(lo); }
  double upper() const { return static_cast<double>(hi); }
  double midpoint() const { return static_cast<double>((lo + hi) / 2); }
  Rational width() const { return hi - lo; }

  /// lo rounded down / hi rounded up to `digits` decimals, so the printed
  /// bracket still contains the root.
  std::string lower_decimal(int digits) const { return decimal(lo, digits, false); }
  std::string upper_decimal(int digits) const { return decimal(hi, digits, true); }

  static std::string decimal(const Rational& x, int digits, bool round_up) {
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
    Rational scaled = x * Rational(scale);
    BigInt q = numerator(scaled) / denominator(scaled);  // truncates toward zero
    Rational back(q);
    if (round_up && back < scaled) q += 1;
    if (!round_up && back > scaled) q -= 1;
    bool neg = q < 0;
    std::string s = (neg ? BigInt(-q) : q).str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg ? "-" : "") + s;
  }
};

struct SpectralReport {
  std::optional<Enclosure> lambda_max;  // empty: spectral radius 1
  double homological_entropy = 0.0;     // log(lambda_max), 0 without one
  bool simple = true;                   // lambda_max is a simple root

  bool has_lambda() const { return lambda_max.has_value(); }
};

inline int decimal_digits_for(double tolerance) {
  return std::max(3, static_cast<int>(std::ceil(-std::log10(tolerance))) + 3);
}

/// Largest real root above 1, enclosed in [lo, hi] with hi - lo <= tolerance.
inline SpectralReport dominant_eigenvalue(const IntPolynomial& p, double tolerance = 1e-9) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  SpectralReport report;
  if (p.degree() < 1) return report;
  SturmChain sturm(p);
  Rational lo(1), hi(cauchy_bound(p));
  if (hi <= lo) return report;
  if (sturm.count(lo, hi) == 0) return report;

  const Rational tol(tolerance);
  // Invariant: the largest root lies in (lo, hi].
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, hi) > 0)
      lo = mid;
    else
      hi = mid;
  }
  Enclosure enc{lo, hi};

  IntPolynomial g = poly_gcd(p, p.derivative());
  bool repeated = g.degree() >= 1 && SturmChain(g).count(lo, hi) > 0;
  report.simple = !repeated && sign_at(p, lo) * sign_at(p, hi) <= 0;
  report.homological_entropy = std::log(enc.midpoint());
  report.lambda_max = enc;
  return report;
}

struct SpectralVerdict {
  ShapeClass shape;
  SpectralReport lambda;
  HyperbolicityVerdict shape_rule;
  bool consistent = false;  // lambda_max exists  xor  shape is finite or affine

  /// Lower bound for the entropy of the monodromy.
  double entropy_lower_bound() const { return lambda.homological_entropy; }
};

inline SpectralVerdict spectral_verdict(const DynkinTree& delta, double tolerance = 1e-9) {
  SpectralVerdict v;
  v.shape = classify_shape(delta);
  v.lambda = dominant_eigenvalue(char_poly(coxeter_element(delta)), tolerance);
  v.shape_rule = hyperbolicity_verdict(v.shape);
  v.consistent = v.lambda.has_lambda() != (v.shape.is_finite() || v.shape.is_affine());
  return v;
}

}  // namespace slalom
