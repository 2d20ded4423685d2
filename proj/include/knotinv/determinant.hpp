// Dense matrices over a commutative ring and division-free determinants.
//
// The element type T must provide +, -, unary -, *, is_zero() and
// one_like(); no division is ever used.

#ifndef KNOTINV_DETERMINANT_HPP
#define KNOTINV_DETERMINANT_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotinv/errors.hpp"

namespace knotinv {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Entry (i, j) of the result is entry (row_of[i], col_of[j]) of this matrix.
  Matrix permuted(const std::vector<std::size_t>& row_of, const std::vector<std::size_t>& col_of) const {
    Matrix out(row_of.size(), col_of.size(), zero_);
    for (std::size_t i = 0; i < row_of.size(); ++i) {
      for (std::size_t j = 0; j < col_of.size(); ++j) out(i, j) = (*this)(row_of[i], col_of[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

namespace detail {

template <class T>
void require_square(const Matrix<T>& m) {
  if (!m.square()) {
    throw Error(ErrorCode::non_square, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace detail

/// Berkowitz: characteristic polynomial via products of Toeplitz matrices,
/// O(n^4) ring multiplications.
template <class T>
T det_berkowitz(const Matrix<T>& a) {
  detail::require_square(a);
  const std::size_t n = a.rows();
  const T one = a.zero().one_like();
  if (n == 0) return one;

  // c[k] is the coefficient of x^(r+1-k) in the characteristic polynomial of
  // the leading (r+1) x (r+1) block.
  std::vector<T> c{one, -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> col{one, -a(r, r)};
    std::vector<T> v(r, a.zero());
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = a.zero();
      for (std::size_t i = 0; i < r; ++i) {
        if (!a(r, i).is_zero() && !v[i].is_zero()) dot += a(r, i) * v[i];
      }
      col.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<T> next(r, a.zero());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!a(i, j).is_zero() && !v[j].is_zero()) next[i] += a(i, j) * v[j];
        }
      }
      v = std::move(next);
    }
    std::vector<T> next_c(r + 2, a.zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!col[i - j].is_zero() && !c[j].is_zero()) next_c[i] += col[i - j] * c[j];
      }
    }
    c = std::move(next_c);
  }
  return n % 2 == 0 ? c[n] : -c[n];
}

/// Expansion over column subsets: row i is matched against every column set of
/// size i reachable so far. Fast for the sparse matrices built from diagrams;
/// at most 2^n partial sums. Requires n <= 30.
template <class T>
T det_sparse(const Matrix<T>& a) {
  detail::require_square(a);
  const std::size_t n = a.rows();
  if (n == 0) return a.zero().one_like();
  if (n > 30) return det_berkowitz(a);

  std::unordered_map<std::uint32_t, T> layer{{0U, a.zero().one_like()}};
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::uint32_t, T> next;
    for (const auto& [used, partial] : layer) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t bit = 1U << j;
        if ((used & bit) != 0 || a(i, j).is_zero()) continue;
        // Sign of inserting column j after the columns already used.
        const int above = std::popcount(used >> (j + 1));
        T term = partial * a(i, j);
        if (above % 2 != 0) term = -term;
        auto [it, inserted] = next.try_emplace(used | bit, a.zero());
        it->second += term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    if (next.empty()) return a.zero();
    layer = std::move(next);
  }
  return layer.begin()->second;
}

}  // namespace knotinv

#endif  // KNOTINV_DETERMINANT_HPP
