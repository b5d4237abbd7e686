#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/group_action.hpp"
#include "minorforge/matrix.hpp"
#include "minorforge/multipoly.hpp"

namespace minorforge {

/// phi(A): entry S is det A[S, S], with the empty minor equal to 1.
MinorVector principal_minors(const SymMatrix& a);

/// f_a = sum_S a_S prod_{i not in S} x_i.
MultiPoly minor_polynomial(const MinorVector& a);
/// Inverse of minor_polynomial; f must be multiaffine.
MinorVector coefficients_to_vector(const MultiPoly& f);

enum class FailureKind { a_empty_not_one, delta_not_square, hypdet_equation_nonzero, pair_not_square, pair_negative };
std::string to_string(FailureKind kind);

struct MembershipFailure {
  FailureKind kind;
  std::vector<std::size_t> indices;  // 0-based
  std::optional<RingValue> value;
  std::optional<MultiPoly> polynomial;
  std::string detail;
};

struct MembershipCertificate {
  bool in_image = false;
  std::optional<SymMatrix> witness;
  /// Canonical roots of Delta_ij(f_a), keyed by 0-based (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> square_roots;
  std::optional<MembershipFailure> failure;
};

MembershipCertificate decide_membership_delta(const MinorVector& a);

struct Block {
  std::vector<std::size_t> indices;  // 0-based, ascending
  MultiPoly factor;                  // over the n+1 variables of fbar
};

/// Splits fbar = y^n f_a(x/y) into the factors attached to the components of the
/// graph on x_1..x_n with an edge (i, j) whenever Delta_ij(fbar) != 0. Variables
/// past the first n are carried along as parameters.
std::vector<Block> factor_blocks(const MultiPoly& fbar, std::size_t n);

struct ReconstructOptions {
  /// Blocks up to this size read M off the symbolic adjugate of G; larger blocks
  /// read L from the part of G M = p Id that is linear in the parameters.
  std::size_t adjugate_max_block = 4;
};

/// For fbar homogeneous of degree n, multiaffine in x_1..x_n with coefficient 1 on
/// x_1...x_n and all Delta_ij(fbar) squares: a symmetric L whose entries are linear
/// forms in the remaining variables with fbar = det(diag(x_1..x_n) + L).
PolyMatrix determinantal_pencil(const MultiPoly& fbar, std::size_t n, const ReconstructOptions& options = {});

/// A symmetric matrix with principal minors a, in canonical sign form.
SymMatrix reconstruct(const MinorVector& a, const ReconstructOptions& options = {});

/// The +-1 diagonal used by canonicalize_signs.
std::vector<int> canonical_sign_pattern(const SymMatrix& a);
/// D A D for the +-1 diagonal D that makes every BFS tree edge of the off-diagonal
/// support (rooted at the smallest index of each component) a canonical root.
SymMatrix canonicalize_signs(const SymMatrix& a);

/// True when b = D a D for some +-1 diagonal D (exhaustive over 2^(n-1) patterns).
bool equal_up_to_sign_conjugation(const SymMatrix& a, const SymMatrix& b);

struct RescaleResult {
  RingValue lambda;
  MinorVector rescaled;  // over Q
  SymMatrix witness;     // over Q
  bool lambda_witness_integral = true;
};

RescaleResult sl2_rescale_check(const MinorVector& a, const GroupElement& gamma);

}  // namespace minorforge
