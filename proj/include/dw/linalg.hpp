#pragma once

#include <optional>
#include <vector>

#include "dw/scalar.hpp"

namespace dw {

// Row-major dense matrix over a field K.
template <class K>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const K& zero) : rows(r), cols(c), a(r * c, zero) {}
  K& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && adl::iz(m(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    K inv = adl::ol(m(r, c)) / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || adl::iz(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

// Basis of {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, const K& zero) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<K>> out;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<K> v(m.cols, zero);
    v[fc] = adl::ol(zero);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, fc);
    out.push_back(std::move(v));
  }
  return out;
}

// Some solution of m x = b, or nullopt.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b, const K& zero) {
  Matrix<K> aug(m.rows, m.cols + 1, zero);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<K> x(m.cols, zero);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols);
  return x;
}

}  // namespace dw
