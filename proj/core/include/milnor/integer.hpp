#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace milnor {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major integer matrix with value semantics.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Integer>& values);

  IntMatrix transpose() const;
  bool symmetric() const;

  // Principal submatrix on the given 0-based indices.
  IntMatrix submatrix(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

// Rank over the rationals, computed by fraction-free elimination.
std::size_t integer_rank(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace milnor
