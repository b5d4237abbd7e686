#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minorforge/hyperdet.hpp"
#include "minorforge/matrix.hpp"
#include "minorforge/multipoly.hpp"

namespace minorforge {

/// Size-d subsets of [n] as bitmasks, in lexicographic order of their sorted elements.
std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t d);

/// Projective vector (q_S) over the size-d subsets of [n]; not all zero.
class PluckerSquareVector {
 public:
  PluckerSquareVector(RingDescriptor ring, std::size_t d, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return n_; }
  const std::vector<std::uint64_t>& subsets() const noexcept { return subsets_; }
  const std::vector<RingValue>& values() const noexcept { return values_; }
  const RingValue& at(std::uint64_t subset) const;
  void set(std::uint64_t subset, const RingValue& v);
  bool is_zero() const;

  friend bool operator==(const PluckerSquareVector& a, const PluckerSquareVector& b) {
    return a.ring_ == b.ring_ && a.d_ == b.d_ && a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  std::size_t index_of(std::uint64_t subset) const;

  RingDescriptor ring_;
  std::size_t d_;
  std::size_t n_;
  std::vector<std::uint64_t> subsets_;
  std::vector<RingValue> values_;
};

/// q_S = (det V_S)^2 for a full-rank d x n matrix over a field.
PluckerSquareVector squared_plucker(const RingDescriptor& ring, const Matrix& v);

/// The auxiliary vector over n-1 variables used by gr2_membership.
MinorVector gr2_auxiliary_vector(const PluckerSquareVector& q);

/// Squared-Grassmannian membership. Pair failures carry the subset S in `subset`.
struct Gr2Report {
  HypdetReport report;
  std::vector<std::uint64_t> pair_subsets;  // parallel to report.pair_failures
};
Gr2Report gr2_membership(const PluckerSquareVector& q, kernels::Execution ex = kernels::Execution::parallel);

/// f = lambda det(V diag(x) V^T + W).
struct DetRep {
  RingValue lambda;
  Matrix v;     // m x n
  SymMatrix w;  // m x m
};

/// Representation of size m = deg(f) for a multiaffine f over a field.
DetRep multiaffine_detrep(const MultiPoly& f);

/// lambda det(sum x_i v_i v_i^T + W) expanded and compared with f, plus
/// rank(v_i v_i^T) = deg_i(f) for every i.
bool verify_detrep(const MultiPoly& f, const DetRep& rep);

/// lambda det(sum x_i v_i v_i^T + W) as a polynomial in n variables.
MultiPoly expand_detrep(const DetRep& rep, std::size_t n);

}  // namespace minorforge
