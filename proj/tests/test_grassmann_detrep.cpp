#include <doctest.h>

#include <random>
#include <set>

#include "minorforge/errors.hpp"
#include "minorforge/grassmann_detrep.hpp"
#include "minorforge/squares.hpp"
#include "oracles.hpp"

using namespace minorforge;
using oracle::parse_poly_terms;

namespace {

const auto Q = RingDescriptor::rationals();
const auto F5 = RingDescriptor::prime_field(5);
const auto F7 = RingDescriptor::prime_field(7);

Matrix mat(const RingDescriptor& r, const std::vector<std::vector<long long>>& rows) {
  Matrix m;
  for (const auto& row : rows) {
    std::vector<RingValue> out;
    for (auto v : row) out.push_back(r.from_int(v));
    m.push_back(out);
  }
  return m;
}

PluckerSquareVector gr24(const RingDescriptor& r, const std::vector<long long>& q) {
  PluckerSquareVector v(r, 2, 4);
  for (std::size_t i = 0; i < q.size(); ++i) v.set(v.subsets()[i], r.from_int(q[i]));
  return v;
}

DetRep random_rep(const RingDescriptor& ring, std::size_t m, std::size_t n, std::mt19937_64& rng) {
  DetRep rep{ring.zero(), Matrix(m, std::vector<RingValue>(n, ring.zero())), SymMatrix(ring, m)};
  while (rep.lambda.is_zero()) rep.lambda = oracle::random_value(ring, rng, -3, 3);
  for (auto& row : rep.v)
    for (auto& e : row) e = oracle::random_value(ring, rng, -2, 2);
  rep.w = SymMatrix::from_rows(ring, oracle::random_symmetric(ring, m, rng));
  return rep;
}

}  // namespace

TEST_CASE("subsets are enumerated lexicographically") {
  const auto s = subsets_of_size(4, 2);
  CHECK(s == std::vector<std::uint64_t>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK(subsets_of_size(3, 0) == std::vector<std::uint64_t>{0});
  CHECK(subsets_of_size(3, 4).empty());
}

TEST_CASE("PluckerSquareVector contracts") {
  PluckerSquareVector q(Q, 2, 3);
  CHECK(q.is_zero());
  CHECK_THROWS_AS(q.set(0b111, Q.one()), InputError);
  CHECK_THROWS_AS(q.set(0b011, F5.one()), RingMismatch);
  CHECK_THROWS_AS(PluckerSquareVector(Q, 0, 3), InputError);
  CHECK_THROWS_AS(PluckerSquareVector(Q, 4, 3), InputError);
}

TEST_CASE("squared_plucker examples") {
  const auto q = squared_plucker(Q, mat(Q, {{1, 0, 1}, {0, 1, 1}}));
  for (const auto& v : q.values()) CHECK(v.is_one());
  const auto e = squared_plucker(Q, mat(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(e.at(0b0011).is_one());
  for (std::uint64_t s : e.subsets())
    if (s != 0b0011) CHECK(e.at(s).is_zero());
  CHECK_THROWS_AS(squared_plucker(Q, mat(Q, {{1, 2, 3}, {2, 4, 6}})), InputError);
  CHECK_THROWS_AS(squared_plucker(RingDescriptor::integers(), mat(RingDescriptor::integers(), {{1, 0}})), UnsupportedRing);
}

TEST_CASE("squared Pluecker coordinates are the Cauchy-Binet coefficients") {
  std::mt19937_64 rng(71);
  for (const auto& ring : {Q, F7}) {
    for (int k = 0; k < 20; ++k) {
      const std::size_t d = 1 + k % 3, n = d + k % 3;
      Matrix v(d, std::vector<RingValue>(n, ring.zero()));
      for (auto& row : v)
        for (auto& x : row) x = oracle::random_value(ring, rng);
      if (matrix_rank(ring, v) < d) continue;
      const auto q = squared_plucker(ring, v);
      // det(V diag(x) V^T)
      PolyMatrix m(d, std::vector<MultiPoly>(d, MultiPoly(ring, n)));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t i = 0; i < n; ++i) m[r][s] += MultiPoly::variable(ring, n, i).scaled(v[r][i] * v[s][i]);
      MultiPoly expected(ring, n);
      for (std::uint64_t s : q.subsets()) {
        Monomial mono;
        for (std::size_t i = 0; i < n; ++i)
          if (s >> i & 1U) mono.set(i, 1);
        expected += MultiPoly::monomial(q.at(s), n, mono);
      }
      CHECK(poly_determinant(m) == expected);
    }
  }
}

TEST_CASE("gr2 membership examples") {
  const auto ones = gr2_membership(gr24(F5, {1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(ones.report.pass);
  REQUIRE(ones.report.failed_value.has_value());
  CHECK(*ones.report.failed_value == F5.from_int(-3));
  const auto ones_q = gr2_membership(gr24(Q, {1, 1, 1, 1, 1, 1}));
  CHECK(*ones_q.report.failed_value == Q.from_int(-3));

  CHECK(gr2_membership(gr24(Q, {1, 1, 1, 1, 4, 1})).report.pass);
  CHECK(gr2_membership(squared_plucker(Q, mat(Q, {{1, 2, 0, 3}, {0, 1, 5, -1}}))).report.pass);

  CHECK_THROWS_AS(gr2_membership(PluckerSquareVector(Q, 2, 4)), InputError);
  CHECK_THROWS_AS(gr2_membership(gr24(RingDescriptor::prime_field(3), {1, 1, 1, 1, 1, 1})), UnsupportedRing);
}

TEST_CASE("gr2 pair condition reports the subset") {
  // q12 q13 = 2 is not a rational square; every other product is a square.
  const auto r = gr2_membership(gr24(Q, {1, 2, 0, 0, 0, 0}));
  CHECK_FALSE(r.report.pass);
  REQUIRE_FALSE(r.report.pair_failures.empty());
  CHECK(r.pair_subsets.size() == r.report.pair_failures.size());
}

// Scales a nonzero residue vector so its first nonzero entry is 1.
std::vector<std::uint64_t> projective_key(std::vector<std::uint64_t> v, std::uint64_t p) {
  std::uint64_t lead = 0;
  for (auto x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  std::uint64_t inv = 1;
  while (lead * inv % p != 1) ++inv;
  for (auto& x : v) x = x * inv % p;
  return v;
}

TEST_CASE("gr2 membership matches enumeration over F5, d = 2, n = 4") {
  std::set<std::vector<std::uint64_t>> image;
  oracle::for_each_tuple(5, 8, [&](const std::vector<std::uint64_t>& t) {
    Matrix v(2, std::vector<RingValue>(4, F5.zero()));
    for (std::size_t i = 0; i < 8; ++i) v[i / 4][i % 4] = F5.from_residue(t[i]);
    if (matrix_rank(F5, v) < 2) return;
    const auto q = squared_plucker(F5, v);
    std::vector<std::uint64_t> key;
    for (const auto& x : q.values()) key.push_back(x.residue());
    image.insert(projective_key(key, 5));
  });
  std::size_t passed = 0;
  oracle::for_each_tuple(5, 6, [&](const std::vector<std::uint64_t>& t) {
    PluckerSquareVector q(F5, 2, 4);
    bool zero = true;
    for (std::size_t i = 0; i < 6; ++i) {
      q.set(q.subsets()[i], F5.from_residue(t[i]));
      zero = zero && t[i] == 0;
    }
    if (zero) return;
    const bool pass = gr2_membership(q, kernels::Execution::serial).report.pass;
    const auto key = projective_key(t, 5);
    CHECK(pass == (image.count(key) == 1));
    passed += pass && key == t;
  });
  CHECK(passed == image.size());
}

TEST_CASE("multiaffine_detrep examples") {
  const auto sum = parse_poly_terms(Q, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto rep = multiaffine_detrep(sum);
  CHECK(rep.lambda == Q.one());
  REQUIRE(rep.v.size() == 1);
  CHECK(rep.v[0][0] == Q.one());
  CHECK(rep.v[0][1] == Q.one());
  CHECK(rep.w.at(0, 0).is_zero());

  const auto ex = parse_poly_terms(Q, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 1}});
  const auto rep2 = multiaffine_detrep(ex);
  CHECK(rep2.lambda == Q.one());
  CHECK(rep2.v == mat(Q, {{1, 0}, {0, 1}}));
  CHECK(rep2.w == SymMatrix::from_rows(Q, mat(Q, {{2, 1}, {1, 1}})));

  const auto e2 = parse_poly_terms(F7, 3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
  const auto rep3 = multiaffine_detrep(e2);
  CHECK(rep3.v.size() == 2);
  CHECK(verify_detrep(e2, rep3));

  const auto c = multiaffine_detrep(MultiPoly::constant(Q.from_int(5), 2));
  CHECK(c.lambda == Q.from_int(5));
  CHECK(c.v.empty());
}

TEST_CASE("multiaffine_detrep errors") {
  const auto bad = parse_poly_terms(Q, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -1}});
  CHECK(rayleigh_delta(bad, 0, 1) == MultiPoly::constant(Q.from_int(2), 2));
  CHECK_THROWS_AS(multiaffine_detrep(bad), NoRepresentation);
  CHECK_THROWS_AS(multiaffine_detrep(MultiPoly(Q, 2)), InputError);
  CHECK_THROWS_AS(multiaffine_detrep(parse_poly_terms(Q, 1, {{{2}, 1}})), InputError);
  const auto z = RingDescriptor::integers();
  CHECK_THROWS_AS(multiaffine_detrep(parse_poly_terms(z, 1, {{{1}, 1}})), UnsupportedRing);
}

TEST_CASE("verify_detrep rejects perturbed representations") {
  const auto ex = parse_poly_terms(Q, 2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 1}});
  auto rep = multiaffine_detrep(ex);
  CHECK(verify_detrep(ex, rep));
  rep.w.set(0, 0, rep.w.at(0, 0) + Q.one());
  CHECK_FALSE(verify_detrep(ex, rep));
  DetRep broken{Q.one(), mat(Q, {{1, 0}}), SymMatrix(Q, 2)};
  CHECK_THROWS_AS(verify_detrep(ex, broken), InputError);
  DetRep empty{Q.one(), Matrix{}, SymMatrix(Q, 0)};
  CHECK_THROWS_AS(verify_detrep(MultiPoly(Q, 2), empty), InputError);
}

TEST_CASE("property: detrep round trip") {
  std::mt19937_64 rng(72);
  int checked = 0;
  for (const auto& ring : {Q, F7}) {
    for (int k = 0; k < 60; ++k) {
      const std::size_t m = 1 + k % 4, n = 1 + k % 5;
      const auto rep = random_rep(ring, m, n, rng);
      const auto f = expand_detrep(rep, n);
      if (f.is_zero()) continue;
      const auto rebuilt = multiaffine_detrep(f);
      CHECK(verify_detrep(f, rebuilt));
      CHECK(rebuilt.v.size() == f.total_degree());
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: group action preserves representability") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 3;
    const auto rep = random_rep(F7, 2, n, rng);
    const auto f = expand_detrep(rep, n);
    const auto b = oracle::random_value(F7, rng);
    const auto c = oracle::random_value(F7, rng);
    const GroupElement gamma({1, 2, 0}, {SL2Element(F7.one() + b * c, b, c, F7.one()), SL2Element::identity(F7),
                                         SL2Element(F7.zero(), F7.from_int(-1), F7.one(), F7.zero())});
    const std::vector<unsigned> d(n, 1);
    const auto g = act_on_poly(gamma, f, d);
    if (g.is_zero()) continue;
    CHECK(verify_detrep(g, multiaffine_detrep(g)));
  }
}

TEST_CASE("property: the Rayleigh identity used by the Gr2 criterion") {
  std::mt19937_64 rng(74);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 4;
    const auto f = oracle::random_poly(Q, n, 1, 8, rng);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = i + 1; j < n - 1; ++j)
        CHECK(discriminant(rayleigh_delta(f, i, j), n - 1) == discriminant(rayleigh_delta(f, i, n - 1), j));
  }
}
