#include "minorforge/rings.hpp"

#include <charconv>
#include <string>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class m;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw InputError("malformed integer '" + std::string(text) + "'");
  }
  return out;
}

// Square root of a residue modulo an odd prime p (a is a known QR or zero).
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  if (p == 2) return a;
  std::uint64_t root = 0;
  if (p < (1ULL << 16)) {
    bool found = false;
    for (std::uint64_t r = 1; r <= p / 2; ++r) {
      if (mul_mod(r, r, p) == a) {
        root = r;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  } else {
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    root = tonelli_shanks(a, p);
  }
  return std::min(root, p - root);
}

}  // namespace

bool is_prime_u64(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= p / d; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

RingDescriptor RingDescriptor::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InputError("fp modulus " + std::to_string(p) + " is not prime");
  return RingDescriptor(RingKind::prime_field, p);
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
  if (text == "int") return integers();
  if (text == "rat") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InputError("malformed ring '" + std::string(text) + "'");
    }
    return prime_field(p);
  }
  throw InputError("unknown ring '" + std::string(text) + "' (expected int, rat or fp:<p>)");
}

std::string RingDescriptor::to_string() const {
  switch (kind_) {
    case RingKind::integers:
      return "int";
    case RingKind::rationals:
      return "rat";
    case RingKind::prime_field:
      return "fp:" + std::to_string(p_);
  }
  return "?";
}

RingValue RingDescriptor::zero() const { return from_int(0); }
RingValue RingDescriptor::one() const { return from_int(1); }

RingValue RingDescriptor::from_int(long long v) const {
  switch (kind_) {
    case RingKind::integers:
      return RingValue(*this, mpz_class(static_cast<long>(v)));
    case RingKind::rationals:
      return RingValue(*this, mpq_class(static_cast<long>(v)));
    case RingKind::prime_field: {
      if (p_ > static_cast<std::uint64_t>(INT64_MAX)) return from_integer(mpz_class(static_cast<long>(v)));
      long long m = v % static_cast<long long>(p_);
      if (m < 0) m += static_cast<long long>(p_);
      return RingValue(*this, static_cast<std::uint64_t>(m));
    }
  }
  return {};
}

RingValue RingDescriptor::from_integer(const mpz_class& v) const {
  switch (kind_) {
    case RingKind::integers:
      return RingValue(*this, v);
    case RingKind::rationals:
      return RingValue(*this, mpq_class(v));
    case RingKind::prime_field:
      return RingValue(*this, reduce(v, p_));
  }
  return {};
}

RingValue RingDescriptor::from_residue(std::uint64_t r) const {
  if (kind_ != RingKind::prime_field) return from_integer(mpz_class(std::to_string(r)));
  return RingValue(*this, r % p_);
}

RingValue RingDescriptor::parse_value(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_integer(text));
  if (kind_ != RingKind::rationals) {
    throw InputError("fraction '" + std::string(text) + "' is not an element of " + to_string());
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return RingValue(*this, q);
}

void RingValue::check_same_ring(const RingValue& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
  }
}

bool RingValue::is_zero() const noexcept {
  switch (ring_.kind()) {
    case RingKind::integers:
      return sgn(std::get<mpz_class>(payload_)) == 0;
    case RingKind::rationals:
      return sgn(std::get<mpq_class>(payload_)) == 0;
    case RingKind::prime_field:
      return std::get<std::uint64_t>(payload_) == 0;
  }
  return false;
}

bool RingValue::is_one() const noexcept {
  switch (ring_.kind()) {
    case RingKind::integers:
      return std::get<mpz_class>(payload_) == 1;
    case RingKind::rationals:
      return std::get<mpq_class>(payload_) == 1;
    case RingKind::prime_field:
      return std::get<std::uint64_t>(payload_) == 1;
  }
  return false;
}

int RingValue::sign() const {
  switch (ring_.kind()) {
    case RingKind::integers:
      return sgn(std::get<mpz_class>(payload_));
    case RingKind::rationals:
      return sgn(std::get<mpq_class>(payload_));
    case RingKind::prime_field:
      break;
  }
  throw InputError("sign is undefined over " + ring_.to_string());
}

std::uint64_t RingValue::residue() const {
  if (ring_.kind() != RingKind::prime_field) throw InputError("residue() needs a prime field value");
  return std::get<std::uint64_t>(payload_);
}

const mpz_class& RingValue::integer() const {
  if (ring_.kind() != RingKind::integers) throw InputError("integer() needs an integer value");
  return std::get<mpz_class>(payload_);
}

const mpq_class& RingValue::rational() const {
  if (ring_.kind() != RingKind::rationals) throw InputError("rational() needs a rational value");
  return std::get<mpq_class>(payload_);
}

RingValue RingValue::to_rational() const {
  switch (ring_.kind()) {
    case RingKind::integers:
      return RingValue(RingDescriptor::rationals(), mpq_class(std::get<mpz_class>(payload_)));
    case RingKind::rationals:
      return *this;
    case RingKind::prime_field:
      break;
  }
  throw InputError("cannot view an F_p value as a rational");
}

bool RingValue::is_integral() const {
  switch (ring_.kind()) {
    case RingKind::integers:
      return true;
    case RingKind::rationals:
      return std::get<mpq_class>(payload_).get_den() == 1;
    case RingKind::prime_field:
      break;
  }
  return true;
}

RingValue RingValue::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  switch (ring_.kind()) {
    case RingKind::integers:
      if (is_one()) return *this;
      if (std::get<mpz_class>(payload_) == -1) return *this;
      throw InputError("integer " + to_string() + " is not a unit");
    case RingKind::rationals:
      return RingValue(ring_, mpq_class(1) / std::get<mpq_class>(payload_));
    case RingKind::prime_field: {
      const auto p = ring_.modulus();
      return RingValue(ring_, pow_mod(std::get<std::uint64_t>(payload_), p - 2, p));
    }
  }
  return {};
}

RingValue RingValue::pow(unsigned e) const {
  RingValue r = ring_.one();
  RingValue b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

std::string RingValue::to_string() const {
  switch (ring_.kind()) {
    case RingKind::integers:
      return std::get<mpz_class>(payload_).get_str();
    case RingKind::rationals:
      return std::get<mpq_class>(payload_).get_str();
    case RingKind::prime_field:
      return std::to_string(std::get<std::uint64_t>(payload_));
  }
  return {};
}

RingValue RingValue::operator-() const {
  switch (ring_.kind()) {
    case RingKind::integers:
      return RingValue(ring_, mpz_class(-std::get<mpz_class>(payload_)));
    case RingKind::rationals:
      return RingValue(ring_, mpq_class(-std::get<mpq_class>(payload_)));
    case RingKind::prime_field: {
      auto r = std::get<std::uint64_t>(payload_);
      return RingValue(ring_, r == 0 ? 0 : ring_.modulus() - r);
    }
  }
  return {};
}

RingValue& RingValue::operator+=(const RingValue& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers:
      std::get<mpz_class>(payload_) += std::get<mpz_class>(rhs.payload_);
      break;
    case RingKind::rationals:
      std::get<mpq_class>(payload_) += std::get<mpq_class>(rhs.payload_);
      break;
    case RingKind::prime_field: {
      auto& r = std::get<std::uint64_t>(payload_);
      r = add_mod(r, std::get<std::uint64_t>(rhs.payload_), ring_.modulus());
      break;
    }
  }
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers:
      std::get<mpz_class>(payload_) -= std::get<mpz_class>(rhs.payload_);
      break;
    case RingKind::rationals:
      std::get<mpq_class>(payload_) -= std::get<mpq_class>(rhs.payload_);
      break;
    case RingKind::prime_field: {
      auto& r = std::get<std::uint64_t>(payload_);
      r = sub_mod(r, std::get<std::uint64_t>(rhs.payload_), ring_.modulus());
      break;
    }
  }
  return *this;
}

RingValue& RingValue::operator*=(const RingValue& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers:
      std::get<mpz_class>(payload_) *= std::get<mpz_class>(rhs.payload_);
      break;
    case RingKind::rationals:
      std::get<mpq_class>(payload_) *= std::get<mpq_class>(rhs.payload_);
      break;
    case RingKind::prime_field: {
      auto& r = std::get<std::uint64_t>(payload_);
      r = mul_mod(r, std::get<std::uint64_t>(rhs.payload_), ring_.modulus());
      break;
    }
  }
  return *this;
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return a.payload_ == b.payload_;
}

std::optional<RingValue> ring_sqrt(const RingValue& v) {
  const auto& ring = v.ring();
  switch (ring.kind()) {
    case RingKind::integers: {
      const auto& z = v.integer();
      if (sgn(z) < 0 || mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
      return ring.from_integer(r);
    }
    case RingKind::rationals: {
      const auto& q = v.rational();
      if (sgn(q) < 0) return std::nullopt;
      const mpz_class& num = q.get_num();
      const mpz_class& den = q.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      mpz_class rn;
      mpz_class rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      return ring.parse_value(rn.get_str() + "/" + rd.get_str());
    }
    case RingKind::prime_field: {
      auto r = sqrt_mod(v.residue(), ring.modulus());
      if (!r) return std::nullopt;
      return ring.from_residue(*r);
    }
  }
  return std::nullopt;
}

std::optional<RingValue> exact_div(const RingValue& a, const RingValue& b) {
  if (b.is_zero()) throw InputError("division by zero");
  if (!(a.ring() == b.ring())) throw RingMismatch("exact_div across rings");
  if (a.ring().kind() == RingKind::integers) {
    const auto& n = a.integer();
    const auto& d = b.integer();
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return a.ring().from_integer(q);
  }
  return a * b.inverse();
}

bool is_canonical_root(const RingValue& r) {
  if (r.ring().kind() == RingKind::prime_field) {
    auto v = r.residue();
    return v <= r.ring().modulus() - v || v == 0;
  }
  return r.sign() >= 0;
}

}  // namespace minorforge
