#pragma once

#include "milnor/integer.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace milnor {

// Coordinates of a lattice element with respect to the reference basis.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  static LatticeVector zero(std::size_t n) { return LatticeVector(std::vector<Integer>(n)); }
  // 1-based unit vector e_i.
  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

// Z^mu with a symmetric integer form whose reference basis consists of
// (-2)-vectors.
class Lattice {
 public:
  explicit Lattice(IntMatrix ref_gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& ref_gram() const noexcept { return gram_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix gram_;
};

// Ordered basis (delta_1, ..., delta_mu); row i of `rows()` holds delta_{i+1}.
class Basis {
 public:
  // Validates unimodularity and that every row is a (-2)-vector.
  Basis(std::shared_ptr<const Lattice> lattice, IntMatrix rows);

  static Basis identity(std::shared_ptr<const Lattice> lattice);
  static Basis identity(const Lattice& lattice) {
    return identity(std::make_shared<const Lattice>(lattice));
  }

  std::size_t size() const noexcept { return rows_.rows(); }
  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }
  const IntMatrix& rows() const noexcept { return rows_; }

  // 1-based access to delta_i.
  LatticeVector element(std::size_t i) const;

  // Returns a copy with delta_i (1-based) replaced; used by the braid action,
  // which preserves the invariants and therefore skips re-validation.
  Basis with_elements(std::size_t i, const LatticeVector& a, std::size_t j,
                      const LatticeVector& b) const;
  Basis with_element(std::size_t i, const LatticeVector& a) const;

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.lattice() == b.lattice() && a.rows_ == b.rows_;
  }

 private:
  struct Unchecked {};
  Basis(Unchecked, std::shared_ptr<const Lattice> lattice, IntMatrix rows)
      : lattice_(std::move(lattice)), rows_(std::move(rows)) {}

  std::shared_ptr<const Lattice> lattice_;
  IntMatrix rows_;
};

Integer bilinear_value(const Lattice& lat, const LatticeVector& x, const LatticeVector& y);

// s_delta(x) = x + <x, delta> delta.
LatticeVector reflect(const Lattice& lat, const LatticeVector& delta, const LatticeVector& x);

IntMatrix gram_of_basis(const Basis& b);

struct RankInfo {
  std::size_t rank = 0;
  std::size_t radical_rank = 0;
  friend bool operator==(const RankInfo&, const RankInfo&) = default;
};

RankInfo rank_and_radical(const IntMatrix& gram);

}  // namespace milnor
