#include <doctest.h>

#include <random>

#include "minorforge/errors.hpp"
#include "minorforge/rings.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("ring descriptors parse and print") {
  CHECK(RingDescriptor::parse("int") == RingDescriptor::integers());
  CHECK(RingDescriptor::parse("rat") == RingDescriptor::rationals());
  CHECK(RingDescriptor::parse("fp:7") == RingDescriptor::prime_field(7));
  CHECK(RingDescriptor::parse("fp:7").to_string() == "fp:7");
  CHECK(RingDescriptor::prime_field(7).characteristic() == 7);
  CHECK(RingDescriptor::integers().characteristic() == 0);
  CHECK_FALSE(RingDescriptor::integers().is_field());
  CHECK(RingDescriptor::rationals().is_field());
  CHECK(*RingDescriptor::prime_field(5).size() == 5);
  CHECK_FALSE(RingDescriptor::rationals().size().has_value());
}

TEST_CASE("bad ring strings and composite moduli are rejected") {
  CHECK_THROWS_AS(RingDescriptor::parse("fp:4"), InputError);
  CHECK_THROWS_AS(RingDescriptor::parse("fp:1"), InputError);
  CHECK_THROWS_AS(RingDescriptor::parse("fp:"), InputError);
  CHECK_THROWS_AS(RingDescriptor::parse("real"), InputError);
  CHECK_THROWS_AS(RingDescriptor::prime_field(91), InputError);
  CHECK_NOTHROW(RingDescriptor::prime_field(2));
  CHECK_NOTHROW(RingDescriptor::prime_field(4294967291ULL));
}

TEST_CASE("value parsing and printing") {
  const auto q = RingDescriptor::rationals();
  CHECK(q.parse_value("6/4").to_string() == "3/2");
  CHECK(q.parse_value("-2/-4").to_string() == "1/2");
  CHECK(q.parse_value("5").to_string() == "5");
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK(f7.parse_value("-1").to_string() == "6");
  CHECK(f7.parse_value("15").residue() == 1);
  CHECK_THROWS_AS(RingDescriptor::integers().parse_value("1/2"), InputError);
  CHECK_THROWS_AS(RingDescriptor::integers().parse_value("abc"), InputError);
  CHECK_THROWS_AS(q.parse_value("1/0"), InputError);
}

TEST_CASE("ring_sqrt examples") {
  const auto z = RingDescriptor::integers();
  CHECK(*ring_sqrt(z.from_int(9)) == z.from_int(3));
  CHECK_FALSE(ring_sqrt(z.from_int(10)).has_value());
  CHECK_FALSE(ring_sqrt(z.from_int(-4)).has_value());
  CHECK(*ring_sqrt(z.zero()) == z.zero());
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK(*ring_sqrt(f7.from_int(2)) == f7.from_int(3));
  CHECK_FALSE(ring_sqrt(f7.from_int(3)).has_value());
  const auto q = RingDescriptor::rationals();
  CHECK(*ring_sqrt(q.parse_value("4/9")) == q.parse_value("2/3"));
  CHECK_FALSE(ring_sqrt(q.parse_value("2")).has_value());
  CHECK_FALSE(ring_sqrt(q.parse_value("4/3")).has_value());
  const auto f2 = RingDescriptor::prime_field(2);
  CHECK(*ring_sqrt(f2.one()) == f2.one());
}

TEST_CASE("ring_sqrt over large primes uses a verified root") {
  const auto f = RingDescriptor::prime_field(1000000007ULL);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto x = oracle::random_value(f, rng);
    const auto r = ring_sqrt(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
    CHECK(is_canonical_root(*r));
  }
}

TEST_CASE("ring_sqrt agrees with enumeration over small fields") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    const auto f = RingDescriptor::prime_field(p);
    const auto squares = oracle::field_squares(p);
    for (std::uint64_t v = 0; v < p; ++v) {
      const auto r = ring_sqrt(f.from_residue(v));
      CHECK(r.has_value() == (squares.count(v) == 1));
      if (r) {
        CHECK(r->residue() * r->residue() % p == v);
        CHECK(r->residue() <= (p - r->residue()) % p);
      }
    }
  }
}

TEST_CASE("exact_div examples and errors") {
  const auto z = RingDescriptor::integers();
  CHECK(*exact_div(z.from_int(12), z.from_int(4)) == z.from_int(3));
  CHECK_FALSE(exact_div(z.from_int(12), z.from_int(5)).has_value());
  CHECK(*exact_div(z.from_int(-12), z.from_int(4)) == z.from_int(-3));
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK(*exact_div(f7.from_int(3), f7.from_int(5)) == f7.from_int(2));
  const auto q = RingDescriptor::rationals();
  CHECK(*exact_div(q.from_int(1), q.from_int(3)) == q.parse_value("1/3"));
  CHECK_THROWS_AS(exact_div(z.from_int(1), z.zero()), InputError);
  CHECK_THROWS_AS(exact_div(f7.from_int(1), f7.zero()), InputError);
}

TEST_CASE("mixing rings is an error") {
  const auto z = RingDescriptor::integers();
  const auto f7 = RingDescriptor::prime_field(7);
  const auto f5 = RingDescriptor::prime_field(5);
  CHECK_THROWS_AS(z.one() + f7.one(), RingMismatch);
  CHECK_THROWS_AS(f5.one() * f7.one(), RingMismatch);
}

TEST_CASE("field operations") {
  const auto f7 = RingDescriptor::prime_field(7);
  CHECK(f7.from_int(3).inverse() == f7.from_int(5));
  CHECK_THROWS_AS(f7.zero().inverse(), InputError);
  CHECK_THROWS_AS(RingDescriptor::integers().from_int(2).inverse(), InputError);
  CHECK_THROWS_AS(f7.one().sign(), InputError);
  CHECK(f7.from_int(3).pow(6).is_one());
  const auto q = RingDescriptor::rationals();
  CHECK(q.parse_value("-3/4").sign() == -1);
  CHECK(q.parse_value("4/2").is_integral());
  CHECK_FALSE(q.parse_value("1/2").is_integral());
  CHECK(RingDescriptor::integers().from_int(-3).to_rational() == q.from_int(-3));
}

TEST_CASE("property: F_p arithmetic matches integer arithmetic mod p") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 65537ULL}) {
    const auto f = RingDescriptor::prime_field(p);
    const auto mod = [&](long long v) { return static_cast<std::uint64_t>(((v % (long long)p) + (long long)p) % (long long)p); };
    for (int k = 0; k < 1000; ++k) {
      const long long a = d(rng), b = d(rng);
      CHECK((f.from_int(a) + f.from_int(b)).residue() == mod(a + b));
      CHECK((f.from_int(a) - f.from_int(b)).residue() == mod(a - b));
      CHECK((f.from_int(a) * f.from_int(b)).residue() == mod(mod(a) * mod(b) % p));
    }
  }
}

TEST_CASE("property: ring_sqrt of a square returns the canonical root") {
  std::mt19937_64 rng(12);
  for (const auto& ring : {RingDescriptor::integers(), RingDescriptor::rationals(), RingDescriptor::prime_field(7),
                           RingDescriptor::prime_field(2), RingDescriptor::prime_field(101)}) {
    for (int k = 0; k < 1000; ++k) {
      const auto v = oracle::random_value(ring, rng, -50, 50);
      const auto r = ring_sqrt(v * v);
      REQUIRE(r.has_value());
      CHECK(*r * *r == v * v);
      CHECK(is_canonical_root(*r));
      CHECK((*r == v || *r == -v));
    }
  }
}

TEST_CASE("property: exact_div quotient multiplies back") {
  std::mt19937_64 rng(13);
  for (const auto& ring : {RingDescriptor::integers(), RingDescriptor::rationals(), RingDescriptor::prime_field(11)}) {
    for (int k = 0; k < 1000; ++k) {
      const auto a = oracle::random_value(ring, rng, -30, 30);
      const auto b = oracle::random_value(ring, rng, -6, 6);
      if (b.is_zero()) continue;
      const auto q = exact_div(a, b);
      if (ring.is_field()) REQUIRE(q.has_value());
      if (q) CHECK(*q * b == a);
      if (ring.kind() == RingKind::integers) CHECK(q.has_value() == (a.integer() % b.integer() == 0));
    }
  }
}
