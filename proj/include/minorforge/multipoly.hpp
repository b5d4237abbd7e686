#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minorforge/rings.hpp"

namespace minorforge {

/// Upper bound on the number of variables of a MultiPoly. Paired forms over n
/// variables use 2n of them, so this covers n <= 16.
inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with one byte per variable.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned total_degree() const noexcept { return degree_; }

  /// Exponent-wise sum. Throws InputError when a single exponent exceeds 255.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// Exponent-wise difference; requires divides(other) from the divisor side.
  Monomial quotient(const Monomial& divisor) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Canonical (descending graded lexicographic) order: higher total degree first,
  /// ties broken by the larger exponent at the first differing variable.
  friend bool canonical_before(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
    return a.exps_ > b.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  RingValue coeff;
};

/// Sparse polynomial over a RingDescriptor's ring in a fixed number of variables.
/// Terms are stored in canonical order with no zero coefficients.
class MultiPoly {
 public:
  MultiPoly(RingDescriptor ring, std::size_t nvars);

  static MultiPoly constant(const RingValue& c, std::size_t nvars);
  static MultiPoly variable(const RingDescriptor& ring, std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const RingValue& c, std::size_t nvars, const Monomial& m);
  /// Combines repeated monomials and drops zero coefficients.
  static MultiPoly from_terms(const RingDescriptor& ring, std::size_t nvars, std::vector<Term> terms);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// deg_i(f); 0 for the zero polynomial.
  unsigned degree(std::size_t var) const;
  unsigned total_degree() const noexcept;
  RingValue coefficient(const Monomial& m) const;
  /// Constant term.
  RingValue constant_term() const;
  /// First term in canonical order. Requires a nonzero polynomial.
  const Term& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly scaled(const RingValue& c) const;
  MultiPoly times_monomial(const Monomial& m, const RingValue& c) const;
  MultiPoly pow(unsigned e) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_compatible(const MultiPoly& other) const;
  MultiPoly merged(const MultiPoly& rhs, bool subtract) const;

  RingDescriptor ring_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Formal derivative in variable `var` (0-based).
MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);

/// f^{d-hom}: variables x_0..x_{n-1} followed by y_0..y_{n-1}, homogeneous of degree
/// d[i] in each pair (x_i, y_i).
MultiPoly multi_homogenize(const MultiPoly& f, std::span<const unsigned> degrees);

/// y^d f(x/y) with y appended as variable n.
MultiPoly total_homogenize(const MultiPoly& f, unsigned degree);

RingValue evaluate(const MultiPoly& f, std::span<const RingValue> point);

/// Replaces variable `var` by the constant `value`; the variable count is unchanged.
MultiPoly substitute(const MultiPoly& f, std::size_t var, const RingValue& value);

/// Coefficients of f as a polynomial in `var`: result[t] multiplies var^t.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var);

/// Moves variable i to mapping[i] in a polynomial with new_nvars variables.
MultiPoly remap_variables(const MultiPoly& f, std::size_t new_nvars, std::span<const std::size_t> mapping);

/// Sets y_i = 1 in a paired form over 2n variables and drops the y's.
MultiPoly dehomogenize_pairs(const MultiPoly& g, std::size_t n);

/// Quotient of an exact division, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

bool is_multiaffine(const MultiPoly& f);

/// Point of P^1(R) in normal form: (r, 1) or (1, 0).
struct P1Point {
  RingValue x;
  RingValue y;

  static P1Point affine(const RingValue& r) { return {r, r.ring().one()}; }
  static P1Point infinity(const RingDescriptor& ring) { return {ring.one(), ring.zero()}; }
  bool is_normal_form() const { return y.is_one() || (y.is_zero() && x.is_one()); }
  friend bool operator==(const P1Point& a, const P1Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Every point of P^1(F_p); only defined for prime fields.
std::vector<P1Point> projective_line(const RingDescriptor& ring);

/// Vanishing test of a paired form on the grid P_1 x ... x P_n. Each pointset must
/// hold d[i]+1 distinct normal-form points, except over a finite ring whose
/// projective line is smaller, where the whole line must be supplied. When the
/// grid is large enough the verdict is cross-checked against the term map.
bool grid_is_zero(const MultiPoly& g, std::span<const unsigned> degrees,
                  std::span<const std::vector<P1Point>> pointsets);

}  // namespace minorforge
