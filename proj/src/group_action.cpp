#include "minorforge/group_action.hpp"

#include <algorithm>
#include <string>

#include "minorforge/errors.hpp"
#include "minorforge/minor_map.hpp"

namespace minorforge {

SL2Element::SL2Element(RingValue a, RingValue b, RingValue c, RingValue d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const auto& r = a_.ring();
  if (!(b_.ring() == r) || !(c_.ring() == r) || !(d_.ring() == r)) {
    throw RingMismatch("SL2 entries over different rings");
  }
  if (!(a_ * d_ - b_ * c_).is_one()) {
    throw InputError("2x2 block (" + a_.to_string() + "," + b_.to_string() + ";" + c_.to_string() + "," +
                     d_.to_string() + ") is not unimodular");
  }
}

SL2Element SL2Element::identity(const RingDescriptor& ring) {
  return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

SL2Element SL2Element::operator*(const SL2Element& rhs) const {
  return {a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_, c_ * rhs.a_ + d_ * rhs.c_,
          c_ * rhs.b_ + d_ * rhs.d_};
}

GroupElement::GroupElement(std::vector<std::size_t> perm, std::vector<SL2Element> locals)
    : perm_(std::move(perm)), locals_(std::move(locals)) {
  if (perm_.empty()) throw InputError("group element needs n >= 1");
  if (perm_.size() != locals_.size()) throw InputError("permutation and SL2 list differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p]) throw InputError("perm is not a permutation of [n]");
    seen[p] = true;
  }
  for (const auto& l : locals_) {
    if (!(l.ring() == locals_.front().ring())) throw RingMismatch("SL2 blocks over different rings");
  }
}

GroupElement GroupElement::identity(const RingDescriptor& ring, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return {perm, std::vector<SL2Element>(n, SL2Element::identity(ring))};
}

GroupElement GroupElement::permutation(const RingDescriptor& ring, std::vector<std::size_t> perm) {
  const std::size_t n = perm.size();
  return {std::move(perm), std::vector<SL2Element>(n, SL2Element::identity(ring))};
}

GroupElement GroupElement::single(const RingDescriptor& ring, std::size_t n, std::size_t i,
                                  const SL2Element& local) {
  GroupElement g = identity(ring, n);
  if (i >= n) throw InputError("coordinate out of range");
  g.locals_[i] = local;
  return g;
}

GroupElement GroupElement::compose(const GroupElement& rhs) const {
  if (rhs.n() != n()) throw InputError("composing group elements of different n");
  if (!(rhs.ring() == ring())) throw RingMismatch("composing group elements over different rings");
  std::vector<std::size_t> perm(n());
  std::vector<SL2Element> locals;
  locals.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) {
    perm[i] = perm_[rhs.perm_[i]];
    locals.push_back(rhs.locals_[i] * locals_[rhs.perm_[i]]);
  }
  return {std::move(perm), std::move(locals)};
}

GroupElement GroupElement::inverse() const {
  std::vector<std::size_t> perm(n());
  for (std::size_t i = 0; i < n(); ++i) perm[perm_[i]] = i;
  std::vector<SL2Element> locals;
  locals.reserve(n());
  for (std::size_t j = 0; j < n(); ++j) {
    const auto& l = locals_[perm[j]];
    locals.emplace_back(l.d(), -l.b(), -l.c(), l.a());
  }
  return {std::move(perm), std::move(locals)};
}

MultiPoly act_on_paired(const GroupElement& gamma, const MultiPoly& form, std::span<const unsigned> degrees) {
  const std::size_t n = gamma.n();
  if (form.nvars() != 2 * n || degrees.size() != n) throw InputError("group element and form disagree on n");
  if (!(form.ring() == gamma.ring())) throw RingMismatch("group element and polynomial over different rings");
  const auto& ring = form.ring();
  // images[i][e] = (a x + b y)^e (c x + d y)^(d_i - e) in the target pair pi(i).
  std::vector<std::vector<MultiPoly>> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = gamma.locals()[i];
    const std::size_t t = gamma.perm()[i];
    const MultiPoly x = MultiPoly::variable(ring, 2 * n, t);
    const MultiPoly y = MultiPoly::variable(ring, 2 * n, n + t);
    const MultiPoly u = x.scaled(l.a()) + y.scaled(l.b());
    const MultiPoly v = x.scaled(l.c()) + y.scaled(l.d());
    for (unsigned e = 0; e <= degrees[i]; ++e) images[i].push_back(u.pow(e) * v.pow(degrees[i] - e));
  }
  MultiPoly out(ring, 2 * n);
  for (const auto& term : form.terms()) {
    MultiPoly acc = MultiPoly::constant(term.coeff, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (term.mono[i] + term.mono[n + i] != degrees[i]) {
        throw InputError("form is not homogeneous of degree " + std::to_string(degrees[i]) + " in pair " +
                         std::to_string(i + 1));
      }
      acc = acc * images[i][term.mono[i]];
    }
    out += acc;
  }
  return out;
}

MultiPoly act_on_poly(const GroupElement& gamma, const MultiPoly& f, std::span<const unsigned> degrees) {
  if (f.nvars() != gamma.n()) throw InputError("group element and polynomial disagree on n");
  return dehomogenize_pairs(act_on_paired(gamma, multi_homogenize(f, degrees), degrees), gamma.n());
}

MinorVector act_on_minor_vector(const GroupElement& gamma, const MinorVector& a) {
  std::vector<unsigned> ones(a.n(), 1);
  return coefficients_to_vector(act_on_poly(gamma, minor_polynomial(a), ones));
}

GroupElement translation_element(std::span<const RingValue> r) {
  if (r.empty()) throw InputError("translation needs n >= 1");
  const auto& ring = r.front().ring();
  std::vector<std::size_t> perm(r.size());
  std::vector<SL2Element> locals;
  for (std::size_t i = 0; i < r.size(); ++i) {
    perm[i] = i;
    locals.emplace_back(ring.one(), r[i], ring.zero(), ring.one());
  }
  return {std::move(perm), std::move(locals)};
}

SL2Element p1_to_sl2(const P1Point& p) {
  if (!p.is_normal_form()) throw InputError("P1 point is not in normal form");
  const auto& ring = p.x.ring();
  if (p.y.is_zero()) return {ring.zero(), ring.one(), -ring.one(), ring.zero()};
  return {ring.one(), p.x, ring.zero(), ring.one()};
}

}  // namespace minorforge
