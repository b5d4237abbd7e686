#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minorforge/multipoly.hpp"
#include "minorforge/rings.hpp"

namespace minorforge {

using Matrix = std::vector<std::vector<RingValue>>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Symmetric n x n matrix; set() writes both (i, j) and (j, i).
class SymMatrix {
 public:
  SymMatrix(RingDescriptor ring, std::size_t n);
  /// Throws InputError if rows is not square and symmetric or mixes rings.
  static SymMatrix from_rows(const RingDescriptor& ring, const Matrix& rows);
  static SymMatrix identity(const RingDescriptor& ring, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const RingValue& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const RingValue& v);
  Matrix rows() const;
  /// Principal submatrix on the rows/columns in `mask` (bit i = index i).
  Matrix principal_submatrix(std::uint64_t mask) const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  RingDescriptor ring_;
  std::size_t n_;
  std::vector<RingValue> entries_;
};

/// 2^n ring values indexed by subsets of [n] encoded as bitmasks. Starts at zero.
class MinorVector {
 public:
  static constexpr std::size_t kMaxN = 16;

  MinorVector(RingDescriptor ring, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const RingValue& at(std::uint64_t mask) const;
  void set(std::uint64_t mask, const RingValue& v);
  std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << n_) - 1; }

  friend bool operator==(const MinorVector& a, const MinorVector& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  RingDescriptor ring_;
  std::size_t n_;
  std::vector<RingValue> entries_;
};

/// Fraction-free (Bareiss) determinant; every division is exact in the ring.
RingValue determinant_bareiss(const RingDescriptor& ring, Matrix m);
/// Laplace expansion along the first row.
RingValue determinant_cofactor(const RingDescriptor& ring, const Matrix& m);
/// Rank by fraction-free elimination.
std::size_t matrix_rank(const RingDescriptor& ring, Matrix m);

/// Determinant of a matrix of polynomials by memoized cofactor expansion.
MultiPoly poly_determinant(const PolyMatrix& m);
/// Adjugate (transpose of the cofactor matrix) by memoized cofactor expansion.
PolyMatrix poly_adjugate(const PolyMatrix& m);

}  // namespace minorforge
