#include "milnor/integer.hpp"

#include "milnor/errors.hpp"

#include <sstream>
#include <utility>

namespace milnor {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init)
    : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::set_row(std::size_t i, const std::vector<Integer>& values) {
  if (values.size() != cols_) throw DimensionError("row length does not match matrix width");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  IntMatrix s(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) s(a, b) = (*this)(indices[a], indices[b]);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// Fraction-free row echelon form in place. Returns the rank; `swaps` counts
// row exchanges.
std::size_t bareiss(IntMatrix& m, std::size_t& swaps) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  swaps = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      ++swaps;
    }
    const Integer p = m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer f = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) m(i, j) = (p * m(i, j) - f * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  std::size_t swaps = 0;
  const std::size_t rank = bareiss(work, swaps);
  if (rank < m.rows()) return 0;
  Integer d = work(m.rows() - 1, m.cols() - 1);
  return swaps % 2 ? Integer(-d) : d;
}

std::size_t integer_rank(const IntMatrix& m) {
  IntMatrix work = m;
  std::size_t swaps = 0;
  return bareiss(work, swaps);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace milnor
