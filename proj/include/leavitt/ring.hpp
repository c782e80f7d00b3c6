#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leavitt {

enum class RingKind { Integers, IntegersMod, Rationals, PrimeField };

// One of the four exact coefficient rings: Z, Z/n (n >= 2), Q, GF(p).
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  static RingSpec integers_mod(std::uint64_t n);
  static RingSpec prime_field(std::uint64_t p);

  // Accepts "Z", "Q", "Z/<n>", "GF(<p>)" (surrounding blanks ignored).
  static RingSpec parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  // n for Z/n, p for GF(p), 0 otherwise.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  bool is_integral_domain() const noexcept;
  bool is_field() const noexcept;
  bool has_modulus() const noexcept {
    return kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField;
  }

  // Maps an arbitrary rational onto the ring's canonical representative.
  // Throws Argument if the value has no image (1/2 in Z, 1/2 in Z/6).
  mpq_class canonical(const mpq_class& value) const;
  bool contains_canonical(const mpq_class& value) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

class RingElement {
 public:
  explicit RingElement(RingSpec ring) : ring_(ring) {}
  RingElement(RingSpec ring, const mpq_class& value)
      : ring_(ring), value_(ring.canonical(value)) {}
  RingElement(RingSpec ring, long value) : RingElement(ring, mpq_class(value)) {}

  static RingElement zero(RingSpec ring) { return RingElement(ring); }
  static RingElement one(RingSpec ring) { return RingElement(ring, 1L); }

  const RingSpec& ring() const noexcept { return ring_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
  RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

  friend bool operator==(const RingElement& a, const RingElement& b);

  // "5", "-3", "5/6"; residues print as their representative in [0, n).
  std::string to_string() const;

 private:
  struct Raw {};
  RingElement(RingSpec ring, mpq_class value, Raw) : ring_(ring), value_(std::move(value)) {}
  static void require_same_ring(const RingElement& a, const RingElement& b);

  RingSpec ring_;
  mpq_class value_;
};

}  // namespace leavitt
