#include "chevdv/unimodular.hpp"

#include <cstdlib>
#include <vector>

#include "chevdv/errors.hpp"

namespace chevdv {

namespace {

// gcd of the lifted entries, together with the modulus for Z/n.
Int content(const Vec& v) {
  Int g = v.ring().modulus();
  for (Int x : v.values()) g = nt::gcd(g, x);
  return g;
}

}  // namespace

bool is_unimodular(const Vec& v) {
  if (v.size() == 0) throw Error(ErrorCode::PreconditionViolated, "empty column");
  return content(v) == 1;
}

Vec unimodular_certificate(const Vec& v) {
  if (!is_unimodular(v)) throw Error(ErrorCode::NotUnimodular, v.to_string());
  const Ring& R = v.ring();
  std::vector<Int> c{1};
  Int g = v[0];
  for (std::size_t k = 1; k < v.size(); ++k) {
    auto b = nt::egcd(g, v[k]);
    for (auto& ci : c) ci = R.reduce(nt::checked_mul(ci, b.x));
    c.push_back(R.reduce(b.y));
    g = b.g;
  }
  if (R.is_finite()) {
    auto b = nt::egcd(g, R.modulus());
    for (auto& ci : c) ci = R.reduce(nt::checked_mul(ci, b.x));
  } else if (g == -1) {
    for (auto& ci : c) ci = -ci;
  }
  Vec cert(R, std::move(c));
  if (dot(cert, v) != 1) throw Error(ErrorCode::NotUnimodular, "certificate check failed for " + v.to_string());
  return cert;
}

Vec stabilize_column(const Vec& v, StabilizeOptions opts) {
  if (v.size() < 2) throw Error(ErrorCode::PreconditionViolated, "stabilize_column needs height >= 2");
  if (!is_unimodular(v)) throw Error(ErrorCode::NotUnimodular, v.to_string());
  const Ring& R = v.ring();
  const std::size_t n = v.size() - 1;
  const Int last = v[n];
  std::size_t tried = 0;

  Vec b(R, n);
  auto works = [&](const Vec& cand) {
    ++tried;
    Int g = R.modulus();
    for (std::size_t k = 0; k < n; ++k) g = nt::gcd(g, R.add(v[k], R.mul(cand[k], last)));
    return g == 1;
  };
  if (works(b)) return b;

  // Spiral magnitudes; for finite rings |t| <= n/2 already covers every residue.
  const Int max_mag = R.is_finite() ? R.modulus() / 2 : static_cast<Int>(opts.budget);
  for (Int m = 1; m <= max_mag && tried < opts.budget; ++m) {
    for (Int t : {m, -m}) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec cand(R, n);
        cand.set(k, t);
        if (works(cand)) return cand;
      }
      if (R.is_finite() && R.reduce(m) == R.reduce(-m)) break;
    }
    for (std::size_t k1 = 0; k1 < n && tried < opts.budget; ++k1)
      for (std::size_t k2 = k1 + 1; k2 < n; ++k2)
        for (Int t1 = -m; t1 <= m; ++t1)
          for (Int t2 = -m; t2 <= m; ++t2) {
            if (std::max(std::llabs(t1), std::llabs(t2)) != m || t1 == 0 || t2 == 0) continue;
            Vec cand(R, n);
            cand.set(k1, t1);
            cand.set(k2, t2);
            if (works(cand)) return cand;
          }
  }
  throw Error(ErrorCode::StabilizationFailed,
              "no stabilizing b found for " + v.to_string() + " over " + R.name() + " within budget");
}

bool IdealDescriptor::is_zero() const noexcept {
  if (ring.is_finite()) return generator % ring.modulus() == 0;
  return generator == 0;
}

std::string IdealDescriptor::to_string() const { return "(" + std::to_string(generator) + ")"; }

IdealDescriptor ell_ideal(const Vec& v) {
  const Ring& R = v.ring();
  Int g = content(v);
  switch (R.kind()) {
    case Ring::Kind::Integers: return {R, nt::radical(g)};
    case Ring::Kind::IntegersMod: return {R, nt::radical(g)};
    case Ring::Kind::PrimeField: return {R, g == 1 ? 1 : 0};
  }
  throw Error(ErrorCode::UnsupportedRing, R.name());
}

}  // namespace chevdv
