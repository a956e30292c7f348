#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace chevdv {

using Int = std::int64_t;

/// A concrete commutative ring with unit: Z, Z/n or F_p.
///
/// Elements are plain `Int`s in canonical form (the residue in [0, n) for the
/// finite kinds). The ring also carries the stability bounds the rest of the
/// library trusts when it decides whether a constructive lemma applies.
class Ring {
 public:
  enum class Kind { Integers, IntegersMod, PrimeField };

  static Ring integers();
  static Ring integers_mod(Int n);
  static Ring prime_field(Int p);
  /// Grammar: "Z", "Z/<n>" (n >= 2), "F<p>" (p prime).
  static Ring parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  /// 0 for Z.
  Int modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ != Kind::Integers; }
  bool is_field() const noexcept { return kind_ == Kind::PrimeField; }

  /// Declared stable rank; nullopt means unbounded.
  std::optional<int> declared_sr() const noexcept;
  std::optional<int> declared_asr() const noexcept;

  std::string name() const;

  Int reduce(Int x) const noexcept;
  Int add(Int a, Int b) const;
  Int sub(Int a, Int b) const;
  Int mul(Int a, Int b) const;
  Int neg(Int a) const;
  bool is_unit(Int a) const;
  /// Throws NotInvertible for non-units.
  Int inverse(Int a) const;
  /// Symmetric lift of a residue to (-n/2, n/2]; identity on Z.
  Int lift(Int a) const noexcept;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, Int modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  Int modulus_;
};

/// An element together with the ring it lives in.
class RingValue {
 public:
  RingValue(const Ring& ring, Int value) : ring_(ring), value_(ring.reduce(value)) {}

  const Ring& ring() const noexcept { return ring_; }
  Int value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const { return ring_.is_unit(value_); }
  RingValue inverse() const { return {ring_, ring_.inverse(value_)}; }

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a) { return {a.ring_, a.ring_.neg(a.value_)}; }
  friend bool operator==(const RingValue& a, const RingValue& b) noexcept {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  Ring ring_;
  Int value_;
};

// Number theory on machine integers. Everything is overflow-checked.
namespace nt {

Int gcd(Int a, Int b);
/// Returns g >= 0 and x, y with a*x + b*y = g. When b != 0 the coefficient x
/// is normalized into [1, |b|/g].
struct Bezout {
  Int g, x, y;
};
Bezout egcd(Int a, Int b);
/// Product of the distinct primes dividing |n|; radical(0) = 0.
Int radical(Int n);
bool is_prime(Int n);
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace nt

}  // namespace chevdv
