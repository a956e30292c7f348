#include "chevdv/random.hpp"

#include "chevdv/errors.hpp"
#include "chevdv/stability.hpp"

namespace chevdv {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

Int Rng::range(Int lo, Int hi) { return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

Rng Rng::split(std::uint64_t tag) const {
  // splitmix64 finalizer over (seed, tag)
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

Int random_element(Rng& rng, const Ring& ring, Int bound) {
  if (ring.is_finite()) return static_cast<Int>(rng.below(static_cast<std::uint64_t>(ring.modulus())));
  return rng.range(-bound, bound);
}

Int random_nonzero(Rng& rng, const Ring& ring, Int bound) {
  Int x;
  do x = ring.reduce(random_element(rng, ring, bound));
  while (x == 0);
  return x;
}

Vec random_unimodular(Rng& rng, const Ring& ring, std::size_t n, Int bound) {
  Vec v(ring, n);
  do
    for (std::size_t k = 0; k < n; ++k) v.set(k, random_element(rng, ring, bound));
  while (!is_unimodular(v));
  return v;
}

Vec random_isotropic(Rng& rng, const Ring& ring, std::size_t l, int rounds) {
  Vec v = Vec::basis(ring, 2 * l, 0);
  const Int bound = 3;
  for (int r = 0; r < rounds; ++r) {
    // [[e,a],[0,e]] or [[e,0],[a,e]] with p a alternating, then H(g) for an
    // elementary g.
    Mat a(ring, l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) {
        Int c = random_element(rng, ring, bound);
        a.set(l - 1 - i, j, c);
        a.set(l - 1 - j, i, ring.neg(ring.reduce(c)));
      }
    Mat x = Mat::identity(ring, 2 * l);
    if (rng.below(2))
      x.set_block(0, l, a);
    else
      x.set_block(l, 0, a);
    v = x * v;
    ElementaryFactorization g{ring, l, {}};
    for (int k = 0; k < 2 * static_cast<int>(l); ++k) {
      std::size_t i = rng.below(l), j = rng.below(l);
      if (i != j) g.steps.push_back({i, j, ring.reduce(random_element(rng, ring, bound))});
    }
    v = hyperbolic_embed(g.matrix(), g.inverse_matrix()) * v;
  }
  return v;
}

SteinbergWord random_word(Rng& rng, SystemPtr sys, const Ring& ring, std::size_t len,
                          const std::function<bool(RootId)>& allowed) {
  const RootSystem& rs = sys->roots();
  std::vector<RootId> pool;
  for (RootId a = 0; a < static_cast<RootId>(rs.size()); ++a)
    if (!allowed || allowed(a)) pool.push_back(a);
  if (pool.empty()) throw Error(ErrorCode::PreconditionViolated, "no roots to draw from");
  std::vector<Generator> gens;
  while (gens.size() < len) {
    RootId a = pool[rng.below(pool.size())];
    if (!gens.empty() && gens.back().root == a) continue;
    gens.push_back({a, random_nonzero(rng, ring)});
  }
  return SteinbergWord(std::move(sys), ring, gens);
}

SteinbergWord random_relator(Rng& rng, SystemPtr sys, const Ring& ring, std::size_t conj_len) {
  const RootSystem& rs = sys->roots();
  const auto n = static_cast<std::uint64_t>(rs.size());
  RootId a = 0, b = 0;
  do {
    a = static_cast<RootId>(rng.below(n));
    b = static_cast<RootId>(rng.below(n));
  } while (a == b || rs.negate(a) == b);
  Int s = random_nonzero(rng, ring), t = random_nonzero(rng, ring);
  SteinbergWord xa = SteinbergWord::single(sys, ring, a, s);
  SteinbergWord xb = SteinbergWord::single(sys, ring, b, t);
  SteinbergWord rhs(sys, ring);
  for (const auto& term : sys->constants().terms(a, b)) {
    Int v = ring.reduce(term.coeff);
    for (int k = 0; k < term.p; ++k) v = ring.mul(v, s);
    for (int k = 0; k < term.q; ++k) v = ring.mul(v, t);
    rhs.append(term.root, v);
  }
  SteinbergWord r = random_word(rng, sys, ring, conj_len);
  SteinbergWord c = xa * xb * invert(xa) * invert(xb) * invert(rhs);
  return r * c * invert(r);
}

}  // namespace chevdv
