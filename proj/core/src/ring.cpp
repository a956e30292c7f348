#include "chevdv/ring.hpp"

#include <charconv>
#include <cstdlib>

#include "chevdv/errors.hpp"

namespace chevdv {

__extension__ using Wide = __int128;

namespace nt {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Bezout egcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int nr = old_r - q * r;
    old_r = r;
    r = nr;
    Int ns = checked_add(old_s, -checked_mul(q, s));
    old_s = s;
    s = ns;
    Int nt_ = checked_add(old_t, -checked_mul(q, t));
    old_t = t;
    t = nt_;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  Bezout out{old_r, old_s, old_t};
  if (b != 0 && out.g != 0) {
    Int period = (b < 0 ? -b : b) / out.g;
    Int x = out.x % period;
    if (x <= 0) x += period;
    // a*x + b*y = g  =>  y = (g - a*x) / b
    out.y = checked_add(out.g, -checked_mul(a, x)) / b;
    out.x = x;
  }
  return out;
}

Int radical(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return 0;
  Int rad = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      rad *= p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) rad *= n;
  return rad;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace nt

Ring Ring::integers() { return Ring(Kind::Integers, 0); }

Ring Ring::integers_mod(Int n) {
  if (n < 2) throw Error(ErrorCode::Parse, "Z/n requires n >= 2, got " + std::to_string(n));
  return Ring(Kind::IntegersMod, n);
}

Ring Ring::prime_field(Int p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::Parse, "F_p requires p prime, got " + std::to_string(p));
  return Ring(Kind::PrimeField, p);
}

namespace {

Int parse_positive(std::string_view digits, std::string_view whole) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorCode::Parse, "bad ring spec '" + std::string(whole) +
                                      "'; expected one of: Z, Z/<n>, F<p>");
  return value;
}

}  // namespace

Ring Ring::parse(std::string_view spec) {
  if (spec == "Z") return integers();
  if (spec.size() > 2 && spec.substr(0, 2) == "Z/") return integers_mod(parse_positive(spec.substr(2), spec));
  if (spec.size() > 1 && spec[0] == 'F') return prime_field(parse_positive(spec.substr(1), spec));
  throw Error(ErrorCode::Parse, "bad ring spec '" + std::string(spec) + "'; expected one of: Z, Z/<n>, F<p>");
}

std::optional<int> Ring::declared_sr() const noexcept { return kind_ == Kind::Integers ? 2 : 1; }

std::optional<int> Ring::declared_asr() const noexcept { return kind_ == Kind::Integers ? 2 : 1; }

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::IntegersMod: return "Z/" + std::to_string(modulus_);
    case Kind::PrimeField: return "F" + std::to_string(modulus_);
  }
  return "?";
}

Int Ring::reduce(Int x) const noexcept {
  if (modulus_ == 0) return x;
  Int r = x % modulus_;
  return r < 0 ? r + modulus_ : r;
}

Int Ring::add(Int a, Int b) const {
  if (modulus_ == 0) return nt::checked_add(a, b);
  return reduce(a + b);  // canonical residues never overflow here
}

Int Ring::sub(Int a, Int b) const {
  if (modulus_ == 0) return nt::checked_add(a, -b);
  return reduce(a - b);
}

Int Ring::mul(Int a, Int b) const {
  if (modulus_ == 0) return nt::checked_mul(a, b);
  return static_cast<Int>((static_cast<Wide>(a) * b) % modulus_);
}

Int Ring::neg(Int a) const { return modulus_ == 0 ? nt::checked_mul(a, -1) : reduce(-a); }

bool Ring::is_unit(Int a) const {
  if (modulus_ == 0) return a == 1 || a == -1;
  return nt::gcd(a, modulus_) == 1;
}

Int Ring::inverse(Int a) const {
  if (modulus_ == 0) {
    if (a == 1 || a == -1) return a;
    throw Error(ErrorCode::NotInvertible, std::to_string(a) + " is not a unit in Z");
  }
  auto b = nt::egcd(reduce(a), modulus_);
  if (b.g != 1)
    throw Error(ErrorCode::NotInvertible, std::to_string(a) + " is not a unit in " + name());
  return reduce(b.x);
}

Int Ring::lift(Int a) const noexcept {
  if (modulus_ == 0) return a;
  Int r = reduce(a);
  return r > modulus_ / 2 ? r - modulus_ : r;
}

namespace {

void require_same(const RingValue& a, const RingValue& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.add(a.value_, b.value_)};
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.sub(a.value_, b.value_)};
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.mul(a.value_, b.value_)};
}

}  // namespace chevdv
