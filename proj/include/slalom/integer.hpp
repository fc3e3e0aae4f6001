#pragma once

// Dense integer matrices and polynomials with exact arithmetic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slalom {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : r) data_.push_back(T(v));
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  bool operator==(const Matrix&) const = default;

  T trace() const {
    T s(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (int i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (int j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<BigInt>;

/// Coefficients stored constant term first; the zero polynomial is empty.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.push_back(T(v));
    trim();
  }

  /// c * t^k
  static Polynomial monomial(T c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : T(0);
  }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  bool operator==(const Polynomial&) const = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, Polynomial a) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }

  /// p(-t)
  Polynomial negate_variable() const {
    Polynomial p = *this;
    for (std::size_t i = 1; i < p.c_.size(); i += 2) p.c_[i] = -p.c_[i];
    return p;
  }

  Polynomial derivative() const {
    std::vector<T> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * T(static_cast<long long>(i)));
    return Polynomial(std::move(v));
  }

  /// Coefficient sequence reads the same forwards and backwards, up to a global sign.
  bool symmetric_up_to_sign() const {
    if (is_zero()) return true;
    bool pal = true, anti = true;
    const std::size_t n = c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i] != c_[n - 1 - i]) pal = false;
      if (c_[i] != -c_[n - 1 - i]) anti = false;
    }
    return pal || anti;
  }

  std::string to_string(const char* var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      T a = coeff(k);
      if (a == 0) continue;
      bool neg = a < 0;
      T mag = neg ? T(-a) : a;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      if (mag != 1 || k == 0) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;

/// det(tI - M) by Berkowitz's division-free algorithm, O(n^4) ring operations.
template <class T>
Polynomial<T> char_poly(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("char_poly needs a square matrix");
  const int n = m.rows();
  if (n == 0) return Polynomial<T>({T(1)});
  // Coefficients highest degree first while iterating.
  std::vector<T> vec{T(1), T(-m(0, 0))};
  for (int k = 1; k < n; ++k) {
    // Leading k x k block A, row R = m(k, 0..k-1), column S = m(0..k-1, k).
    std::vector<T> c(static_cast<std::size_t>(k) + 2, T(0));
    c[0] = T(1);
    c[1] = -m(k, k);
    std::vector<T> x(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = m(i, k);
    for (int p = 2; p <= k + 1; ++p) {
      T dot(0);
      for (int i = 0; i < k; ++i) dot += m(k, i) * x[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(p)] = -dot;
      if (p == k + 1) break;
      std::vector<T> y(static_cast<std::size_t>(k), T(0));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(i)] += m(i, j) * x[static_cast<std::size_t>(j)];
      x.swap(y);
    }
    std::vector<T> next(static_cast<std::size_t>(k) + 2, T(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < vec.size() && j <= i; ++j) next[i] += c[i - j] * vec[j];
    vec.swap(next);
  }
  std::reverse(vec.begin(), vec.end());
  return Polynomial<T>(std::move(vec));
}

}  // namespace slalom
