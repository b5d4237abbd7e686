#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "minorforge/kernels.hpp"
#include "minorforge/matrix.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/multipoly.hpp"

namespace minorforge {

/// Cayley's 2x2x2 hyperdeterminant of a minor vector with n = 3.
RingValue hypdet_222(const MinorVector& a);

/// Discr_{x_k} Delta_ij(f_a) evaluated at `point` on the coordinates [n] \ {i,j,k}.
struct OrbitEquationId {
  std::array<std::size_t, 3> triple;  // 0-based i < j < k
  std::vector<P1Point> point;         // ascending over the remaining indices
};

/// {0,1,2,3,4} as affine points, or {(0,1),(1,1),(1,0)} in characteristic 2.
/// Throws UnsupportedRing over F3.
std::vector<P1Point> evaluation_set(const RingDescriptor& ring);

/// C(n,3) * |P|^(n-3).
std::size_t orbit_equation_count(std::size_t n, const RingDescriptor& ring);

/// All ids: triples in lexicographic order, grid points in odometer order.
std::vector<OrbitEquationId> orbit_equation_ids(std::size_t n, const RingDescriptor& ring);

/// b^2 - 4ac of the binary quadratic left in (x_k, y_k), or b in characteristic 2.
/// a_empty is not assumed to be 1.
RingValue evaluate_orbit_equation(const MinorVector& a, const OrbitEquationId& id);

/// Evaluates every orbit equation of one vector; ids are addressed by their
/// position in orbit_equation_ids order.
class OrbitEvaluator {
 public:
  OrbitEvaluator(const MinorVector& a, std::vector<P1Point> points);

  std::size_t count() const noexcept { return count_; }
  OrbitEquationId id(std::size_t index) const;
  RingValue value(std::size_t index) const;
  /// Position of the first nonzero equation, or count() when all vanish.
  std::size_t first_nonzero(kernels::Execution ex) const;

 private:
  struct TripleData {
    std::array<std::size_t, 3> triple;
    std::vector<std::size_t> rest;
    // Parts of the pair-homogenized Delta_ij(f_a) by exponent of x_k, with the
    // pair (x_k, y_k) removed.
    std::array<MultiPoly, 3> parts;
  };

  RingDescriptor ring_;
  std::size_t n_;
  std::vector<P1Point> points_;
  std::size_t per_triple_ = 1;
  std::size_t count_ = 0;
  std::vector<TripleData> triples_;
};

enum class HypdetMode { exact, real_over_rationals };

struct PairFailure {
  std::size_t i;  // 0-based
  std::size_t j;
  RingValue value;
};

struct HypdetReport {
  bool pass = false;
  std::optional<OrbitEquationId> failed_equation;
  std::optional<RingValue> failed_value;
  std::vector<PairFailure> pair_failures;
  std::size_t equations = 0;
  /// Reconstruction attached on an exact-mode pass.
  std::optional<MembershipCertificate> certificate;
};

HypdetReport decide_membership_hypdet(const MinorVector& a, HypdetMode mode,
                                      kernels::Execution ex = kernels::Execution::parallel);

}  // namespace minorforge
