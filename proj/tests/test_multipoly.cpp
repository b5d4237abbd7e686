#include <doctest.h>

#include <random>

#include "minorforge/errors.hpp"
#include "minorforge/multipoly.hpp"
#include "oracles.hpp"

using namespace minorforge;
using oracle::parse_poly_terms;

namespace {

const auto Z = RingDescriptor::integers();

// x1 x2 + x1 + 2 x2 + 1
MultiPoly example_f(const RingDescriptor& r = Z) {
  return parse_poly_terms(r, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 1}});
}

}  // namespace

TEST_CASE("construction drops zeros and merges repeated monomials") {
  const auto f = parse_poly_terms(Z, 2, {{{1, 0}, 3}, {{1, 0}, -3}, {{0, 1}, 2}, {{0, 1}, 1}, {{0, 0}, 0}});
  CHECK(f.size() == 1);
  CHECK(f.coefficient(Monomial::variable(1)) == Z.from_int(3));
  CHECK(MultiPoly(Z, 3).is_zero());
  CHECK(MultiPoly(Z, 3).degree(1) == 0);
  CHECK_THROWS_AS(MultiPoly(Z, 33), InputError);
  CHECK_THROWS_AS(parse_poly_terms(Z, 1, {{{0, 1}, 1}}), InputError);
}

TEST_CASE("canonical order is graded lexicographic, descending") {
  const auto f = example_f();
  const auto t = f.terms();
  REQUIRE(t.size() == 4);
  CHECK(t[0].mono == Monomial::variable(0) * Monomial::variable(1));
  CHECK(t[1].mono == Monomial::variable(0));
  CHECK(t[2].mono == Monomial::variable(1));
  CHECK(t[3].mono == Monomial());
}

TEST_CASE("exponent overflow is reported") {
  const auto x = MultiPoly::variable(Z, 1, 0);
  CHECK_THROWS_AS(x.pow(256), InputError);
  CHECK_NOTHROW(x.pow(255));
}

TEST_CASE("partial_derivative examples") {
  CHECK(partial_derivative(example_f(), 0) == parse_poly_terms(Z, 2, {{{0, 1}, 1}, {{0, 0}, 1}}));
  CHECK(partial_derivative(MultiPoly::constant(Z.from_int(5), 2), 0).is_zero());
  const auto f2 = RingDescriptor::prime_field(2);
  CHECK(partial_derivative(parse_poly_terms(f2, 1, {{{2}, 1}}), 0).is_zero());
  CHECK_THROWS_AS(partial_derivative(example_f(), 2), InputError);
}

TEST_CASE("multi_homogenize examples") {
  const std::vector<unsigned> one{1};
  const auto x1_plus_1 = parse_poly_terms(Z, 1, {{{1}, 1}, {{0}, 1}});
  CHECK(multi_homogenize(x1_plus_1, one) == parse_poly_terms(Z, 2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  const std::vector<unsigned> d{1, 1};
  // x1 x2 + x1 y2 + 2 x2 y1 + y1 y2 in the order x1 x2 y1 y2
  const auto expected =
      parse_poly_terms(Z, 4, {{{1, 1, 0, 0}, 1}, {{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 2}, {{0, 0, 1, 1}, 1}});
  CHECK(multi_homogenize(example_f(), d) == expected);
  CHECK(multi_homogenize(MultiPoly(Z, 2), d).is_zero());
  const std::vector<unsigned> small{0, 1};
  CHECK_THROWS_AS(multi_homogenize(example_f(), small), InputError);
  CHECK_THROWS_AS(multi_homogenize(example_f(), one), InputError);
}

TEST_CASE("total_homogenize examples") {
  const auto expected = parse_poly_terms(Z, 3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 2}, {{0, 0, 2}, 1}});
  CHECK(total_homogenize(example_f(), 2) == expected);
  CHECK(total_homogenize(MultiPoly::constant(Z.one(), 0), 0) == MultiPoly::constant(Z.one(), 1));
  CHECK(total_homogenize(MultiPoly::variable(Z, 1, 0), 3) == parse_poly_terms(Z, 2, {{{1, 2}, 1}}));
  CHECK_THROWS_AS(total_homogenize(example_f(), 1), InputError);
}

TEST_CASE("evaluate examples") {
  const auto f = parse_poly_terms(Z, 2, {{{1, 1}, 1}, {{0, 0}, 1}});
  const std::vector<RingValue> p{Z.from_int(2), Z.from_int(3)};
  CHECK(evaluate(f, p) == Z.from_int(7));
  const std::vector<RingValue> zero{Z.zero(), Z.zero()};
  CHECK(evaluate(example_f(), zero) == example_f().constant_term());
  const std::vector<RingValue> ones{Z.one(), Z.one()};
  CHECK(evaluate(example_f(), ones) == Z.from_int(5));
  const std::vector<RingValue> short_point{Z.one()};
  CHECK_THROWS_AS(evaluate(example_f(), short_point), InputError);
  const auto f7 = RingDescriptor::prime_field(7);
  const std::vector<RingValue> wrong{f7.one(), f7.one()};
  CHECK_THROWS_AS(evaluate(example_f(), wrong), RingMismatch);
}

TEST_CASE("arithmetic rejects mismatched operands") {
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK_THROWS_AS(example_f() + example_f(f7), RingMismatch);
  CHECK_THROWS_AS(example_f() * MultiPoly::variable(Z, 3, 0), InputError);
}

TEST_CASE("substitute, coefficients_in, remap and dehomogenize") {
  const auto f = example_f();
  CHECK(substitute(f, 0, Z.from_int(1)) == parse_poly_terms(Z, 2, {{{0, 1}, 3}, {{0, 0}, 2}}));
  const auto parts = coefficients_in(f, 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[1] == parse_poly_terms(Z, 2, {{{1, 0}, 1}, {{0, 0}, 2}}));
  const std::vector<std::size_t> swap{1, 0};
  CHECK(remap_variables(remap_variables(f, 2, swap), 2, swap) == f);
  const std::vector<unsigned> d{1, 1};
  CHECK(dehomogenize_pairs(multi_homogenize(f, d), 2) == f);
}

TEST_CASE("divide_exact") {
  const auto x = MultiPoly::variable(Z, 2, 0);
  const auto y = MultiPoly::variable(Z, 2, 1);
  const auto one = MultiPoly::constant(Z.one(), 2);
  const auto a = (x + one) * (x - y);
  CHECK(*divide_exact(a, x + one) == x - y);
  CHECK_FALSE(divide_exact(a, x + y).has_value());
  CHECK_FALSE(divide_exact(x, (x + x)).has_value());
  CHECK_THROWS_AS(divide_exact(a, MultiPoly(Z, 2)), InputError);
  const auto q = RingDescriptor::rationals();
  const auto xq = MultiPoly::variable(q, 1, 0);
  CHECK(divide_exact(xq, xq + xq)->constant_term() == q.parse_value("1/2"));
}

TEST_CASE("is_multiaffine") {
  CHECK(is_multiaffine(example_f()));
  CHECK_FALSE(is_multiaffine(parse_poly_terms(Z, 1, {{{2}, 1}})));
}

TEST_CASE("projective line") {
  const auto f3 = RingDescriptor::prime_field(3);
  const auto line = projective_line(f3);
  CHECK(line.size() == 4);
  for (const auto& p : line) CHECK(p.is_normal_form());
  CHECK_THROWS_AS(projective_line(Z), InputError);
}

TEST_CASE("grid_is_zero examples") {
  const std::vector<unsigned> d1{1};
  const std::vector<std::vector<P1Point>> three{{P1Point::affine(Z.zero()), P1Point::affine(Z.one()), P1Point::infinity(Z)}};
  CHECK(grid_is_zero(MultiPoly(Z, 2), d1, three));
  const std::vector<unsigned> d2{2};
  // x1 y1 is nonzero at (1,1)
  CHECK_FALSE(grid_is_zero(parse_poly_terms(Z, 2, {{{1, 1}, 1}}), d2, three));
}

TEST_CASE("grid_is_zero input validation") {
  const std::vector<unsigned> d2{2};
  const auto g = parse_poly_terms(Z, 2, {{{1, 1}, 1}});
  const std::vector<std::vector<P1Point>> two{{P1Point::affine(Z.zero()), P1Point::affine(Z.one())}};
  CHECK_THROWS_AS(grid_is_zero(g, d2, two), InputError);
  const std::vector<std::vector<P1Point>> repeated{
      {P1Point::affine(Z.zero()), P1Point::affine(Z.zero()), P1Point::affine(Z.one())}};
  CHECK_THROWS_AS(grid_is_zero(g, d2, repeated), InputError);
  const std::vector<std::vector<P1Point>> bad{{P1Point{Z.from_int(2), Z.from_int(2)}, P1Point::affine(Z.zero()),
                                               P1Point::affine(Z.one())}};
  CHECK_THROWS_AS(grid_is_zero(g, d2, bad), InputError);
  const std::vector<std::vector<P1Point>> three{
      {P1Point::affine(Z.zero()), P1Point::affine(Z.one()), P1Point::infinity(Z)}};
  const auto inhomogeneous = parse_poly_terms(Z, 2, {{{1, 0}, 1}});
  CHECK_THROWS_AS(grid_is_zero(inhomogeneous, d2, three), InputError);
}

TEST_CASE("small field: whole projective line is accepted and may miss a nonzero form") {
  const auto f2 = RingDescriptor::prime_field(2);
  // x y (x + y) vanishes on all of P^1(F2)
  const auto g = parse_poly_terms(f2, 2, {{{2, 1}, 1}, {{1, 2}, 1}});
  const std::vector<unsigned> d{3};
  const std::vector<std::vector<P1Point>> line{projective_line(f2)};
  CHECK_FALSE(g.is_zero());
  CHECK(grid_is_zero(g, d, line));
}

TEST_CASE("property: homogenize then restrict is the identity") {
  std::mt19937_64 rng(21);
  for (const auto& ring : {Z, RingDescriptor::rationals(), RingDescriptor::prime_field(5)}) {
    for (int k = 0; k < 200; ++k) {
      const auto f = oracle::random_poly(ring, 3, 2, 6, rng);
      const std::vector<unsigned> d{2, 3, 2};
      CHECK(dehomogenize_pairs(multi_homogenize(f, d), 3) == f);
      const auto fbar = total_homogenize(f, 7);
      const std::vector<RingValue> point{ring.from_int(2), ring.from_int(3), ring.from_int(5), ring.one()};
      const std::vector<RingValue> affine{ring.from_int(2), ring.from_int(3), ring.from_int(5)};
      CHECK(evaluate(fbar, point) == evaluate(f, affine));
      CHECK(substitute(fbar, 3, ring.one()).terms().size() == f.size());
    }
  }
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(22);
  for (const auto& ring : {Z, RingDescriptor::rationals(), RingDescriptor::prime_field(7)}) {
    for (int k = 0; k < 1000; ++k) {
      const auto f = oracle::random_poly(ring, 3, 2, 4, rng);
      const auto g = oracle::random_poly(ring, 3, 2, 4, rng);
      const auto h = oracle::random_poly(ring, 3, 2, 4, rng);
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f * g == g * f);
      CHECK((f - f).is_zero());
    }
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    const auto f = oracle::random_poly(Z, 3, 2, 5, rng);
    const auto g = oracle::random_poly(Z, 3, 2, 5, rng);
    std::vector<RingValue> p;
    for (int i = 0; i < 3; ++i) p.push_back(oracle::random_value(Z, rng));
    CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
    CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
  }
}

TEST_CASE("property: grid test is sound when the field is large enough") {
  std::mt19937_64 rng(24);
  for (const auto& ring : {Z, RingDescriptor::prime_field(5), RingDescriptor::prime_field(7)}) {
    for (int k = 0; k < 100; ++k) {
      const auto f = oracle::random_poly(ring, 2, 2, 3, rng);
      const std::vector<unsigned> d{2, 2};
      const auto g = multi_homogenize(f, d);
      std::vector<P1Point> pts{P1Point::affine(ring.zero()), P1Point::affine(ring.one()), P1Point::infinity(ring)};
      const std::vector<std::vector<P1Point>> grid{pts, pts};
      CHECK(grid_is_zero(g, d, grid) == g.is_zero());
    }
  }
}
