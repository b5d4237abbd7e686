#include <doctest.h>

#include <random>

#include "minorforge/errors.hpp"
#include "minorforge/group_action.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/squares.hpp"
#include "oracles.hpp"

using namespace minorforge;
using oracle::parse_poly_terms;

namespace {

const auto Z = RingDescriptor::integers();

SL2Element sl2(const RingDescriptor& r, long long a, long long b, long long c, long long d) {
  return SL2Element(r.from_int(a), r.from_int(b), r.from_int(c), r.from_int(d));
}

MinorVector vec(const RingDescriptor& r, std::size_t n, const std::vector<long long>& values) {
  MinorVector a(r, n);
  for (std::size_t s = 0; s < values.size(); ++s) a.set(s, r.from_int(values[s]));
  return a;
}

SL2Element random_sl2(const RingDescriptor& ring, std::mt19937_64& rng) {
  const auto b = oracle::random_value(ring, rng, -3, 3);
  const auto c = oracle::random_value(ring, rng, -3, 3);
  const auto t = oracle::random_value(ring, rng, -2, 2);
  // (1 b; 0 1)(1 0; c 1)(1 t; 0 1)
  return sl2(ring, 1, 0, 0, 1) * SL2Element(ring.one(), b, ring.zero(), ring.one()) *
         SL2Element(ring.one(), ring.zero(), c, ring.one()) * SL2Element(ring.one(), t, ring.zero(), ring.one());
}

GroupElement random_group(const RingDescriptor& ring, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SL2Element> locals;
  for (std::size_t i = 0; i < n; ++i) locals.push_back(random_sl2(ring, rng));
  return GroupElement(perm, locals);
}

}  // namespace

TEST_CASE("SL2 elements must be unimodular") {
  CHECK_THROWS_AS(sl2(Z, 1, 1, 1, 1), InputError);
  CHECK_THROWS_AS(sl2(Z, 2, 0, 0, 1), InputError);
  CHECK_NOTHROW(sl2(Z, 2, -1, 1, 0));
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK_NOTHROW(sl2(f7, 2, 0, 0, 4));
  CHECK_THROWS_AS(SL2Element(Z.one(), Z.zero(), f7.zero(), Z.one()), RingMismatch);
}

TEST_CASE("group elements validate the permutation") {
  const std::vector<SL2Element> two{SL2Element::identity(Z), SL2Element::identity(Z)};
  CHECK_THROWS_AS(GroupElement({0, 0}, two), InputError);
  CHECK_THROWS_AS(GroupElement({0, 2}, two), InputError);
  CHECK_THROWS_AS(GroupElement({0}, two), InputError);
  CHECK_NOTHROW(GroupElement({1, 0}, two));
}

TEST_CASE("the rescaling element acts as in the worked example") {
  const auto f = parse_poly_terms(Z, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 1}});
  const GroupElement gamma({0, 1}, {sl2(Z, 2, -1, 1, 0), SL2Element::identity(Z)});
  const std::vector<unsigned> d{1, 1};
  CHECK(act_on_poly(gamma, f, d) == parse_poly_terms(Z, 2, {{{1, 1}, 4}, {{1, 0}, 3}, {{0, 1}, -1}, {{0, 0}, -1}}));

  const auto b = act_on_minor_vector(gamma, vec(Z, 2, {1, 2, 1, 1}));
  CHECK(b.at(0) == Z.from_int(4));
  CHECK(b.at(1) == Z.from_int(-1));
  CHECK(b.at(2) == Z.from_int(3));
  CHECK(b.at(3) == Z.from_int(-1));
  CHECK(minor_polynomial(b) == act_on_poly(gamma, f, d));
}

TEST_CASE("identity leaves polynomials and vectors unchanged") {
  std::mt19937_64 rng(41);
  const auto f = oracle::random_poly(Z, 3, 2, 6, rng);
  const std::vector<unsigned> d{2, 2, 2};
  CHECK(act_on_poly(GroupElement::identity(Z, 3), f, d) == f);
  const auto a = vec(Z, 3, {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(act_on_minor_vector(GroupElement::identity(Z, 3), a) == a);
}

TEST_CASE("the inversion in the first coordinate relabels subsets") {
  const auto a = vec(Z, 3, {1, 2, 3, 5, 7, 11, 13, 17});
  const auto gamma = GroupElement::single(Z, 3, 0, sl2(Z, 0, -1, 1, 0));
  const auto b = act_on_minor_vector(gamma, a);
  for (std::uint64_t s = 0; s < 8; ++s) {
    if (s & 1U) {
      CHECK(b.at(s) == -a.at(s & ~std::uint64_t{1}));
    } else {
      CHECK(b.at(s) == a.at(s | 1U));
    }
  }
  // F(a) = a2 a3 - a_empty a23 becomes a12 a13 - a1 a123
  const auto F = [](const MinorVector& v) { return v.at(2) * v.at(4) - v.at(0) * v.at(6); };
  CHECK(F(b) == a.at(3) * a.at(5) - a.at(1) * a.at(7));
}

TEST_CASE("translation elements") {
  const std::vector<RingValue> zero{Z.zero(), Z.zero()};
  CHECK(translation_element(zero) == GroupElement::identity(Z, 2));
  const std::vector<RingValue> r{Z.from_int(2), Z.from_int(-3)};
  const std::vector<RingValue> s{Z.from_int(5), Z.from_int(1)};
  const std::vector<RingValue> rs{Z.from_int(7), Z.from_int(-2)};
  const auto f = parse_poly_terms(Z, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 1}});
  const std::vector<unsigned> d{1, 1};
  // f(x1 + 2, x2 - 3)
  const auto x1 = MultiPoly::variable(Z, 2, 0) + MultiPoly::constant(Z.from_int(2), 2);
  const auto x2 = MultiPoly::variable(Z, 2, 1) + MultiPoly::constant(Z.from_int(-3), 2);
  const auto shifted = x1 * x2 + x1 + x2.scaled(Z.from_int(2)) + MultiPoly::constant(Z.one(), 2);
  CHECK(act_on_poly(translation_element(r), f, d) == shifted);
  CHECK(act_on_poly(translation_element(r), act_on_poly(translation_element(s), f, d), d) ==
        act_on_poly(translation_element(rs), f, d));
  CHECK_THROWS_AS(translation_element(std::vector<RingValue>{}), InputError);
}

TEST_CASE("p1_to_sl2") {
  CHECK(p1_to_sl2(P1Point::infinity(Z)) == sl2(Z, 0, 1, -1, 0));
  CHECK(p1_to_sl2(P1Point::affine(Z.from_int(4))) == sl2(Z, 1, 4, 0, 1));
  CHECK(p1_to_sl2(P1Point::affine(Z.zero())) == SL2Element::identity(Z));
  CHECK_THROWS_AS(p1_to_sl2(P1Point{Z.from_int(2), Z.zero()}), InputError);
}

TEST_CASE("act_on_poly errors") {
  const auto f = parse_poly_terms(Z, 2, {{{2, 0}, 1}});
  const std::vector<unsigned> small{1, 1};
  CHECK_THROWS_AS(act_on_poly(GroupElement::identity(Z, 2), f, small), InputError);
  const std::vector<unsigned> d{2, 2};
  CHECK_THROWS_AS(act_on_poly(GroupElement::identity(RingDescriptor::prime_field(5), 2), f, d), RingMismatch);
  CHECK_THROWS_AS(act_on_poly(GroupElement::identity(Z, 3), f, d), InputError);
}

TEST_CASE("property: composition matches sequential action") {
  std::mt19937_64 rng(42);
  for (const auto& ring : {Z, RingDescriptor::prime_field(7)}) {
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 2 + k % 3;
      const auto g1 = random_group(ring, n, rng);
      const auto g2 = random_group(ring, n, rng);
      const auto f = oracle::random_poly(ring, n, 1, 5, rng);
      const std::vector<unsigned> d(n, 1);
      CHECK(act_on_poly(g1, act_on_poly(g2, f, d), d) == act_on_poly(g1.compose(g2), f, d));
      CHECK(act_on_poly(g1.inverse(), act_on_poly(g1, f, d), d) == f);
    }
  }
}

TEST_CASE("property: square Rayleigh differences are preserved") {
  std::mt19937_64 rng(43);
  for (const auto& ring : {Z, RingDescriptor::prime_field(5)}) {
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 3 + k % 2;
      const auto f = minor_polynomial(principal_minors(SymMatrix::from_rows(ring, oracle::random_symmetric(ring, n, rng))));
      const std::vector<unsigned> d(n, 1);
      const auto gf = act_on_poly(random_group(ring, n, rng), f, d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) CHECK(poly_sqrt(rayleigh_delta(gf, i, j)).is_square);
    }
  }
}

TEST_CASE("property: degree bounds are respected") {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 100; ++k) {
    const auto f = oracle::random_poly(Z, 3, 2, 5, rng);
    const std::vector<unsigned> d{2, 3, 2};
    const auto g = act_on_poly(random_group(Z, 3, rng), f, d);
    // A permutation may move degree bounds between coordinates only among equal bounds;
    // check against the largest bound.
    for (std::size_t i = 0; i < 3; ++i) CHECK(g.degree(i) <= 3);
  }
}

TEST_CASE("property: permutations conjugate Rayleigh differences") {
  std::mt19937_64 rng(45);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 4;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto pi = GroupElement::permutation(Z, perm);
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    const auto f = oracle::random_poly(Z, n, 1, 6, rng);
    const std::vector<unsigned> ones(n, 1), twos(n, 2);
    const auto pf = act_on_poly(pi, f, ones);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        CHECK(rayleigh_delta(pf, i, j) == act_on_poly(pi, rayleigh_delta(f, inv[i], inv[j]), twos));
  }
}
