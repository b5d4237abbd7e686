#pragma once

#include <cstddef>
#include <optional>

#include "minorforge/multipoly.hpp"

namespace minorforge {

/// Outcome of poly_sqrt. When is_square, root * root equals the input.
struct SquareWitness {
  bool is_square = false;
  std::optional<MultiPoly> root;
  /// Variable whose recursion level rejected the input; empty when a constant failed.
  std::optional<std::size_t> failure_variable;
};

/// df/dx_i * df/dx_j - f * d2f/dx_i dx_j.
MultiPoly rayleigh_delta(const MultiPoly& f, std::size_t i, std::size_t j);

/// Coefficients (a, b, c) of g = a v^2 + b v + c in the affine variable v.
struct QuadraticCoefficients {
  MultiPoly a;
  MultiPoly b;
  MultiPoly c;
};
QuadraticCoefficients quadratic_coefficients(const MultiPoly& g, std::size_t var);

/// Same, for g = a x_k^2 + b x_k y_k + c y_k^2 in a paired form over 2n variables.
QuadraticCoefficients pair_quadratic_coefficients(const MultiPoly& g, std::size_t k);

/// b^2 - 4ac with respect to the pair (x_k, y_k) of a paired form.
MultiPoly discriminant_pair(const MultiPoly& g, std::size_t k);

/// b^2 - 4ac with respect to an affine variable of degree at most 2.
MultiPoly discriminant(const MultiPoly& g, std::size_t var);

SquareWitness poly_sqrt(const MultiPoly& g);

}  // namespace minorforge
