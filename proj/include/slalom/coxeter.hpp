#pragma once

// Quadratic and skew forms of a bicolored tree, their reflections and
// transvections, and the Coxeter / skew-Coxeter products.
//
// Indices follow the bicoloring of DynkinTree: vertices 0..m-1 are new,
// m..n-1 are old, and no edge joins two vertices of the same colour. Matrices
// act on column vectors; column j holds the image of basis vector v_j.

#include <stdexcept>

#include "slalom/integer.hpp"
#include "slalom/tree.hpp"

namespace slalom {

enum class FormKind { Quadratic, Skew };

template <class T = BigInt>
struct FormMatrix {
  FormKind kind;
  Matrix<T> matrix;
  int new_count;  // m
};

/// q(v_i, v_i) = -2, q(v_i, v_j) = 1 on edges, 0 elsewhere.
template <class T = BigInt>
FormMatrix<T> quadratic_form(const DynkinTree& delta) {
  const int n = delta.size();
  Matrix<T> q(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = T(-2);
  for (auto [a, b] : delta.edges()) q(a, b) = q(b, a) = T(1);
  return {FormKind::Quadratic, std::move(q), delta.new_count()};
}

/// sq(v_i, v_j) = +1 on an edge when v_i is new, -1 when v_j is new.
template <class T = BigInt>
FormMatrix<T> skew_form(const DynkinTree& delta) {
  const int n = delta.size();
  const int m = delta.new_count();
  Matrix<T> s(n, n);
  for (auto [a, b] : delta.edges()) {
    const int nw = a < m ? a : b;
    const int od = a < m ? b : a;
    s(nw, od) = T(1);
    s(od, nw) = T(-1);
  }
  return {FormKind::Skew, std::move(s), m};
}

namespace detail {

// I + e_i * form.row(i): v_j -> v_j + form(v_i, v_j) v_i
template <class T>
Matrix<T> rank_one_update(const Matrix<T>& form, int i) {
  const int n = form.rows();
  if (i < 0 || i >= n) throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
  Matrix<T> r = Matrix<T>::identity(n);
  for (int j = 0; j < n; ++j) r(i, j) += form(i, j);
  return r;
}

}  // namespace detail

/// R_i(v_j) = v_j + q(v_i, v_j) v_i, so R_i(v_i) = -v_i. `i` is 0-based.
template <class T = BigInt>
Matrix<T> reflection(const DynkinTree& delta, int i) {
  return detail::rank_one_update(quadratic_form<T>(delta).matrix, i);
}

/// T_i(v_j) = v_j + sq(v_i, v_j) v_i. `i` is 0-based.
template <class T = BigInt>
Matrix<T> transvection(const DynkinTree& delta, int i) {
  return detail::rank_one_update(skew_form<T>(delta).matrix, i);
}

/// R_0 R_1 ... R_{n-1}: all new vertices, then all old ones.
template <class T = BigInt>
Matrix<T> coxeter_element(const DynkinTree& delta) {
  const auto q = quadratic_form<T>(delta).matrix;
  Matrix<T> c = Matrix<T>::identity(delta.size());
  for (int i = 0; i < delta.size(); ++i) c = c * detail::rank_one_update(q, i);
  return c;
}

/// T_0 T_1 ... T_{n-1} in the same order; equals -coxeter_element.
template <class T = BigInt>
Matrix<T> skew_coxeter_element(const DynkinTree& delta) {
  const auto s = skew_form<T>(delta).matrix;
  Matrix<T> c = Matrix<T>::identity(delta.size());
  for (int i = 0; i < delta.size(); ++i) c = c * detail::rank_one_update(s, i);
  return c;
}

/// Product of reflections in an arbitrary vertex order (a conjugate of C).
template <class T = BigInt>
Matrix<T> coxeter_product(const DynkinTree& delta, const std::vector<int>& order) {
  const auto q = quadratic_form<T>(delta).matrix;
  Matrix<T> c = Matrix<T>::identity(delta.size());
  for (int i : order) c = c * detail::rank_one_update(q, i);
  return c;
}

/// det(tI - sC), the Alexander polynomial of the slalom knot.
inline IntPolynomial alexander_polynomial(const DynkinTree& delta) {
  return char_poly(skew_coxeter_element(delta));
}

}  // namespace slalom
