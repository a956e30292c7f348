#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "chevdv/matrix.hpp"
#include "chevdv/steinberg.hpp"

namespace chevdv {

/// Seeded generator with portable bounded draws (no std distributions, whose
/// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  Int range(Int lo, Int hi);
  /// An independent stream determined by this generator's seed and a tag.
  Rng split(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Uniform over a finite ring, [-bound, bound] over Z.
Int random_element(Rng& rng, const Ring& ring, Int bound = 9);
Int random_nonzero(Rng& rng, const Ring& ring, Int bound = 9);

Vec random_unimodular(Rng& rng, const Ring& ring, std::size_t n, Int bound = 9);
/// A unimodular column of height 2l with q(v) = 0, as a random orthogonal
/// image of e_1.
Vec random_isotropic(Rng& rng, const Ring& ring, std::size_t l, int rounds = 3);

/// Generators on roots drawn uniformly from those satisfying `allowed`.
SteinbergWord random_word(Rng& rng, SystemPtr sys, const Ring& ring, std::size_t len,
                          const std::function<bool(RootId)>& allowed = nullptr);

/// r c r^-1 for a random word r of length `conj_len` and a commutator
/// relator c = [x_a(s), x_b(t)] (prod of its terms)^-1 with a != -b; trivial in G.
SteinbergWord random_relator(Rng& rng, SystemPtr sys, const Ring& ring, std::size_t conj_len = 4);

}  // namespace chevdv
