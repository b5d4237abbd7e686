#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "minorforge/matrix.hpp"
#include "minorforge/multipoly.hpp"

namespace minorforge {

/// (a b; c d) with ad - bc = 1.
class SL2Element {
 public:
  /// Throws InputError unless ad - bc = 1.
  SL2Element(RingValue a, RingValue b, RingValue c, RingValue d);
  static SL2Element identity(const RingDescriptor& ring);

  const RingDescriptor& ring() const noexcept { return a_.ring(); }
  const RingValue& a() const noexcept { return a_; }
  const RingValue& b() const noexcept { return b_; }
  const RingValue& c() const noexcept { return c_; }
  const RingValue& d() const noexcept { return d_; }

  /// Matrix product this * rhs.
  SL2Element operator*(const SL2Element& rhs) const;
  friend bool operator==(const SL2Element& x, const SL2Element& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  RingValue a_, b_, c_, d_;
};

/// Element (pi, L_1..L_n) of SL2(R)^n x| S_n acting by
/// (gamma . F)(X_1..X_n) = F(L_1 X_pi(1), ..., L_n X_pi(n)) on pair-homogeneous forms.
/// perm is 0-based: perm[i] = pi(i).
class GroupElement {
 public:
  GroupElement(std::vector<std::size_t> perm, std::vector<SL2Element> locals);
  static GroupElement identity(const RingDescriptor& ring, std::size_t n);
  static GroupElement permutation(const RingDescriptor& ring, std::vector<std::size_t> perm);
  /// Identity permutation with `local` in coordinate i and the identity elsewhere.
  static GroupElement single(const RingDescriptor& ring, std::size_t n, std::size_t i, const SL2Element& local);

  std::size_t n() const noexcept { return perm_.size(); }
  const RingDescriptor& ring() const noexcept { return locals_.front().ring(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<SL2Element>& locals() const noexcept { return locals_; }

  /// this o rhs, i.e. acting by rhs first.
  GroupElement compose(const GroupElement& rhs) const;
  GroupElement inverse() const;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.perm_ == y.perm_ && x.locals_ == y.locals_;
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<SL2Element> locals_;
};

/// gamma acting on a paired form over 2n variables, homogeneous of degree d_i in pair i.
MultiPoly act_on_paired(const GroupElement& gamma, const MultiPoly& form, std::span<const unsigned> degrees);

/// gamma . f with respect to the degree bounds d, via the pair-homogeneous route.
MultiPoly act_on_poly(const GroupElement& gamma, const MultiPoly& f, std::span<const unsigned> degrees);

/// Coefficients of gamma . f_a read back as a minor vector.
MinorVector act_on_minor_vector(const GroupElement& gamma, const MinorVector& a);

/// Identity permutation with locals (1 r_i; 0 1).
GroupElement translation_element(std::span<const RingValue> r);

/// (1,0) -> (0 1; -1 0), (r,1) -> (1 r; 0 1).
SL2Element p1_to_sl2(const P1Point& p);

}  // namespace minorforge
