#include "leavitt/ring.hpp"

#include <cctype>
#include <charconv>

#include "leavitt/error.hpp"

namespace leavitt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  // Deterministic for every 64-bit input at this repetition count.
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

RingSpec RingSpec::integers_mod(std::uint64_t n) {
  if (n < 2) throw_argument("Z/n requires n >= 2, got " + std::to_string(n));
  return RingSpec(RingKind::IntegersMod, n);
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw_argument("GF(p) requires prime p, got " + std::to_string(p));
  return RingSpec(RingKind::PrimeField, p);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::Parse, "invalid ring '" + std::string(whole) +
                                      "': expected Z, Q, Z/<n> or GF(<p>)");
  return n;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  const auto s = trim(text);
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.starts_with("Z/")) return integers_mod(parse_modulus(s.substr(2), s));
  if (s.starts_with("GF(") && s.ends_with(")"))
    return prime_field(parse_modulus(s.substr(3, s.size() - 4), s));
  throw Error(ErrorKind::Parse,
              "invalid ring '" + std::string(s) + "': expected Z, Q, Z/<n> or GF(<p>)");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + std::to_string(modulus_);
    case RingKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

bool RingSpec::is_integral_domain() const noexcept {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField: return true;
    case RingKind::IntegersMod: return is_prime(modulus_);
  }
  return false;
}

bool RingSpec::is_field() const noexcept {
  switch (kind_) {
    case RingKind::Integers: return false;
    case RingKind::Rationals:
    case RingKind::PrimeField: return true;
    case RingKind::IntegersMod: return is_prime(modulus_);
  }
  return false;
}

mpq_class RingSpec::canonical(const mpq_class& input) const {
  mpq_class value = input;
  value.canonicalize();
  switch (kind_) {
    case RingKind::Rationals: return value;
    case RingKind::Integers:
      if (value.get_den() != 1)
        throw_argument("value " + value.get_str() + " is not an integer");
      return value;
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      const mpz_class n(static_cast<unsigned long>(modulus_));
      mpz_class num = value.get_num() % n;
      if (num < 0) num += n;
      if (value.get_den() == 1) return mpq_class(num);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), value.get_den().get_mpz_t(), n.get_mpz_t()) == 0)
        throw_argument("denominator of " + value.get_str() + " is not invertible in " +
                       to_string());
      mpz_class r = (num * inv) % n;
      return mpq_class(r);
    }
  }
  return value;
}

bool RingSpec::contains_canonical(const mpq_class& value) const {
  switch (kind_) {
    case RingKind::Rationals: return true;
    case RingKind::Integers: return value.get_den() == 1;
    default:
      return value.get_den() == 1 && value >= 0 && value < mpq_class(static_cast<unsigned long>(modulus_));
  }
}

void RingElement::require_same_ring(const RingElement& a, const RingElement& b) {
  if (!(a.ring_ == b.ring_))
    throw_argument("mixed-ring operands: " + a.ring_.to_string() + " and " + b.ring_.to_string());
}

RingElement RingElement::operator-() const {
  return RingElement(ring_, ring_.canonical(-value_), Raw{});
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement::require_same_ring(a, b);
  return RingElement(a.ring_, a.ring_.canonical(a.value_ + b.value_), RingElement::Raw{});
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  RingElement::require_same_ring(a, b);
  return RingElement(a.ring_, a.ring_.canonical(a.value_ - b.value_), RingElement::Raw{});
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement::require_same_ring(a, b);
  return RingElement(a.ring_, a.ring_.canonical(a.value_ * b.value_), RingElement::Raw{});
}

bool operator==(const RingElement& a, const RingElement& b) {
  RingElement::require_same_ring(a, b);
  return a.value_ == b.value_;
}

std::string RingElement::to_string() const { return value_.get_str(); }

}  // namespace leavitt
