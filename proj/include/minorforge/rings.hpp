#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace minorforge {

enum class RingKind : std::uint8_t { integers, rationals, prime_field };

class RingValue;

/// Identifies one of the supported unique factorization domains: Z, Q or F_p.
class RingDescriptor {
 public:
  RingDescriptor() = default;  // the integers

  static RingDescriptor integers() { return RingDescriptor(RingKind::integers, 0); }
  static RingDescriptor rationals() { return RingDescriptor(RingKind::rationals, 0); }
  /// Throws InputError unless p is prime (checked by trial division).
  static RingDescriptor prime_field(std::uint64_t p);

  /// Accepts "int", "rat" and "fp:<p>".
  static RingDescriptor parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return kind_ == RingKind::prime_field ? p_ : 0; }
  bool is_field() const noexcept { return kind_ != RingKind::integers; }
  /// Number of elements, or nullopt for the infinite rings.
  std::optional<std::uint64_t> size() const noexcept {
    if (kind_ == RingKind::prime_field) return p_;
    return std::nullopt;
  }

  std::string to_string() const;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long long v) const;
  RingValue from_integer(const mpz_class& v) const;
  RingValue from_residue(std::uint64_t r) const;
  /// Decimal for Z and F_p (reduced mod p, negatives allowed), "a/b" or decimal for Q.
  RingValue parse_value(std::string_view text) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  RingDescriptor(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  RingKind kind_ = RingKind::integers;
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t p) noexcept;

/// An exact element of a RingDescriptor's ring. Fractions are kept reduced with a
/// positive denominator; residues are kept in [0, p).
class RingValue {
 public:
  RingValue() : payload_(mpz_class(0)) {}

  const RingDescriptor& ring() const noexcept { return ring_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Sign for Z and Q (-1, 0, 1). Throws InputError over F_p.
  int sign() const;

  /// Residue for F_p values.
  std::uint64_t residue() const;
  /// Integer payload (Z only).
  const mpz_class& integer() const;
  /// Rational payload (Q only).
  const mpq_class& rational() const;

  /// The same number viewed in Q. Only Z and Q values convert.
  RingValue to_rational() const;
  /// True for Z values and for Q values with denominator 1.
  bool is_integral() const;

  /// Multiplicative inverse in a field. Throws InputError on zero or over Z.
  RingValue inverse() const;
  RingValue pow(unsigned e) const;

  std::string to_string() const;

  RingValue operator-() const;
  RingValue& operator+=(const RingValue& rhs);
  RingValue& operator-=(const RingValue& rhs);
  RingValue& operator*=(const RingValue& rhs);

  friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
  friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
  friend RingValue operator*(RingValue a, const RingValue& b) { return a *= b; }
  friend bool operator==(const RingValue& a, const RingValue& b);

 private:
  friend class RingDescriptor;
  using Payload = std::variant<std::uint64_t, mpz_class, mpq_class>;

  RingValue(RingDescriptor ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {}
  void check_same_ring(const RingValue& other) const;

  RingDescriptor ring_;
  Payload payload_;
};

/// Canonical square root: nonnegative over Z and Q, the smaller residue over F_p.
/// nullopt when v is not a square in its ring.
std::optional<RingValue> ring_sqrt(const RingValue& v);

/// q with q*b == a when b divides a; nullopt otherwise. Throws InputError for b == 0.
std::optional<RingValue> exact_div(const RingValue& a, const RingValue& b);

/// True when r is the canonical choice among {r, -r}.
bool is_canonical_root(const RingValue& r);

}  // namespace minorforge
