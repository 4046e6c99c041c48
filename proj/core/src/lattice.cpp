#include "milnor/lattice.hpp"

#include "milnor/errors.hpp"

#include <string>

namespace milnor {

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw DimensionError("unit vector index out of range");
  std::vector<Integer> c(n);
  c[i - 1] = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (o.size() != size()) throw DimensionError("vector lengths differ");
  std::vector<Integer> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (o.size() != size()) throw DimensionError("vector lengths differ");
  std::vector<Integer> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> c(coords_);
  for (auto& x : c) x = -x;
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  std::vector<Integer> c(v.coords_);
  for (auto& x : c) x *= s;
  return LatticeVector(std::move(c));
}

Lattice::Lattice(IntMatrix ref_gram) : gram_(std::move(ref_gram)) {
  if (!gram_.square() || gram_.rows() == 0) throw ShapeError("reference Gram matrix must be square and non-empty");
  if (!gram_.symmetric()) throw ShapeError("reference Gram matrix is not symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) != -2)
      throw ShapeError("reference Gram diagonal entry " + std::to_string(i + 1) + " is not -2");
}

namespace {

Integer row_form(const IntMatrix& g, const IntMatrix& rows, std::size_t a, std::size_t b) {
  const std::size_t n = g.rows();
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& x = rows(a, i);
    if (x == 0) continue;
    Integer inner = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (rows(b, j) != 0) inner += g(i, j) * rows(b, j);
    total += x * inner;
  }
  return total;
}

}  // namespace

Basis::Basis(std::shared_ptr<const Lattice> lattice, IntMatrix rows)
    : lattice_(std::move(lattice)), rows_(std::move(rows)) {
  if (!lattice_) throw ShapeError("basis without lattice");
  const std::size_t mu = lattice_->rank();
  if (rows_.rows() != mu || rows_.cols() != mu)
    throw DimensionError("basis must have " + std::to_string(mu) + " rows of length " + std::to_string(mu));
  const Integer det = determinant(rows_);
  if (det != 1 && det != -1) throw ShapeError("basis rows are not unimodular (det = " + det.str() + ")");
  for (std::size_t i = 0; i < mu; ++i)
    if (row_form(lattice_->ref_gram(), rows_, i, i) != -2)
      throw NotARootError("basis element " + std::to_string(i + 1) + " is not a (-2)-vector");
}

Basis Basis::identity(std::shared_ptr<const Lattice> lattice) {
  const std::size_t mu = lattice->rank();
  return Basis(Unchecked{}, std::move(lattice), IntMatrix::identity(mu));
}

LatticeVector Basis::element(std::size_t i) const {
  if (i < 1 || i > size()) throw DimensionError("basis index " + std::to_string(i) + " out of range");
  return LatticeVector(rows_.row(i - 1));
}

Basis Basis::with_elements(std::size_t i, const LatticeVector& a, std::size_t j, const LatticeVector& b) const {
  IntMatrix rows = rows_;
  rows.set_row(i - 1, a.coords());
  rows.set_row(j - 1, b.coords());
  return Basis(Unchecked{}, lattice_, std::move(rows));
}

Basis Basis::with_element(std::size_t i, const LatticeVector& a) const {
  IntMatrix rows = rows_;
  rows.set_row(i - 1, a.coords());
  return Basis(Unchecked{}, lattice_, std::move(rows));
}

Integer bilinear_value(const Lattice& lat, const LatticeVector& x, const LatticeVector& y) {
  const std::size_t n = lat.rank();
  if (x.size() != n || y.size() != n)
    throw DimensionError("vector length does not match lattice rank " + std::to_string(n));
  const IntMatrix& g = lat.ref_gram();
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Integer inner = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) inner += g(i, j) * y[j];
    total += x[i] * inner;
  }
  return total;
}

LatticeVector reflect(const Lattice& lat, const LatticeVector& delta, const LatticeVector& x) {
  if (bilinear_value(lat, delta, delta) != -2) throw NotARootError("reflection vector is not a (-2)-vector");
  const Integer c = bilinear_value(lat, x, delta);
  if (c == 0) return x;
  return x + c * delta;
}

IntMatrix gram_of_basis(const Basis& b) {
  return b.rows() * b.lattice().ref_gram() * b.rows().transpose();
}

RankInfo rank_and_radical(const IntMatrix& gram) {
  if (!gram.symmetric()) throw ShapeError("rank_and_radical expects a symmetric matrix");
  const std::size_t r = integer_rank(gram);
  return {r, gram.rows() - r};
}

}  // namespace milnor
