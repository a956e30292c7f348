#include "chevdv/stability.hpp"

#include <algorithm>
#include <cstdlib>

#include "chevdv/errors.hpp"

namespace chevdv {

namespace {

void require_unimodular(const Vec& v) {
  if (!is_unimodular(v)) throw Error(ErrorCode::NotUnimodular, v.to_string());
}

// Prime powers q^e exactly dividing n.
std::vector<std::pair<Int, Int>> prime_powers(Int n) {
  std::vector<std::pair<Int, Int>> out;
  for (Int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    Int pe = 1;
    while (n % q == 0) {
      n /= q;
      pe *= q;
    }
    out.push_back({q, pe});
  }
  if (n > 1) out.push_back({n, n});
  return out;
}

// p A with A = E_rs - E_sr (0-based).
Mat p_alternating_unit(const Ring& R, std::size_t l, std::size_t r, std::size_t s, Int c) {
  Mat a(R, l, l);
  a.set(l - 1 - r, s, c);
  a.set(l - 1 - s, r, R.neg(R.reduce(c)));
  return a;
}

Vec shifted(const Vec& up, const Mat& a, const Vec& um) {
  Vec w = a * um;
  Vec out(up.ring(), up.size());
  for (std::size_t k = 0; k < up.size(); ++k) out.set(k, up.ring().add(up[k], w[k]));
  return out;
}

}  // namespace

UnipotentPair simple_lemma_reduce(const Vec& v, StabilizeOptions opts) {
  const Ring& R = v.ring();
  const std::size_t l = v.size();
  require_unimodular(v);
  if (auto sr = R.declared_sr(); sr && static_cast<std::size_t>(*sr) > l - 1)
    throw Error(ErrorCode::PreconditionViolated, "height " + std::to_string(l) + " is within the stable rank of " + R.name());
  Vec b = stabilize_column(v, opts);
  Mat x = Mat::identity(R, l);
  for (std::size_t k = 0; k + 1 < l; ++k) x.set(k, l - 1, b[k]);
  Vec w = x * v;
  Vec c = unimodular_certificate(w.slice(0, l - 1));
  Mat y = Mat::identity(R, l);
  for (std::size_t k = 0; k + 1 < l; ++k) y.set(l - 1, k, R.neg(R.mul(v[l - 1], c[k])));
  if ((y * w)[l - 1] != 0) throw Error(ErrorCode::PreconditionViolated, "simple lemma reduction failed");
  return {x, y, PairShape::GLCorner};
}

Mat hyperbolic_embed(const Mat& g) { return hyperbolic_embed(g, inverse(g)); }

Mat hyperbolic_embed(const Mat& g, const Mat& g_inverse) {
  const std::size_t l = g.rows();
  const Ring& R = g.ring();
  if (!(g * g_inverse).is_identity()) throw Error(ErrorCode::NotInvertible, "supplied inverse is wrong");
  Mat p = flip_matrix(R, l);
  Mat lower = p * g_inverse.transpose() * p;
  Mat h(R, 2 * l, 2 * l);
  h.set_block(0, 0, g);
  h.set_block(l, l, lower);
  return h;
}

Int split_quadratic(const Vec& v) {
  const Ring& R = v.ring();
  const std::size_t l = v.size() / 2;
  Int q = 0;
  for (std::size_t k = 0; k < l; ++k) q = R.add(q, R.mul(v[k], v[2 * l - 1 - k]));
  return q;
}

Mat split_gram(const Ring& ring, std::size_t l) {
  Mat b(ring, 2 * l, 2 * l);
  for (std::size_t k = 0; k < 2 * l; ++k) b.set(k, 2 * l - 1 - k, 1);
  return b;
}

bool preserves_split_form(const Mat& g) {
  const Ring& R = g.ring();
  const std::size_t n = g.rows();
  if (n % 2 || !g.is_square()) return false;
  Mat b = split_gram(R, n / 2);
  if (!(g.transpose() * b * g == b)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec w = Vec::basis(R, n, i);
      if (j != i) w.set(j, 1);
      if (split_quadratic(g * w) != split_quadratic(w)) return false;
    }
  return true;
}

bool is_p_alternating(const Mat& a) {
  Mat pa = flip_matrix(a.ring(), a.rows()) * a;
  const Ring& R = a.ring();
  for (std::size_t i = 0; i < pa.rows(); ++i) {
    if (pa(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < pa.cols(); ++j)
      if (R.add(pa(i, j), pa(j, i)) != 0) return false;
  }
  return true;
}

Mat antipersymmetric_complete(const Vec& u_plus, const Vec& u_minus, CompletionOptions opts) {
  const Ring& R = u_plus.ring();
  const std::size_t l = u_plus.size();
  if (u_minus.size() != l) throw Error(ErrorCode::PreconditionViolated, "u+ and u- differ in height");
  {
    std::vector<Int> all(u_plus.values().begin(), u_plus.values().end());
    all.insert(all.end(), u_minus.values().begin(), u_minus.values().end());
    require_unimodular(Vec(R, all));
  }
  Mat zero(R, l, l);
  if (is_unimodular(u_plus)) return zero;
  if (l < 2) throw Error(ErrorCode::CompletionFailed, "height 1 admits no alternating completion");

  if (R.is_finite()) {
    // Prime by prime: if u+ vanishes mod q, pair a coordinate with u-_s != 0
    // against s; glue the local choices with CRT idempotents.
    const Int n = R.modulus();
    Mat a = zero;
    for (auto [q, pe] : prime_powers(n)) {
      bool vanishes = std::all_of(u_plus.values().begin(), u_plus.values().end(), [&](Int x) { return x % q == 0; });
      if (!vanishes) continue;
      std::size_t s = 0;
      while (s < l && u_minus[s] % q == 0) ++s;
      std::size_t r = s == 0 ? 1 : 0;
      // idempotent: 1 mod pe, 0 mod n/pe
      Int rest = n / pe;
      Int idem = R.mul(rest, nt::egcd(rest % pe, pe).x);
      a = a + p_alternating_unit(R, l, r, s, idem);
    }
    if (!is_unimodular(shifted(u_plus, a, u_minus)) || !is_p_alternating(a))
      throw Error(ErrorCode::CompletionFailed, "local completion failed");
    return a;
  }

  // Z: single pairs c (E_rs - E_sr), then sums of two such pairs.
  std::size_t tried = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t s = r + 1; s < l; ++s) pairs.push_back({r, s});
  for (Int m = 1; tried < opts.budget && m <= 64; ++m) {
    for (Int c : {m, -m})
      for (auto [r, s] : pairs) {
        ++tried;
        Mat a = p_alternating_unit(R, l, r, s, c);
        if (is_unimodular(shifted(u_plus, a, u_minus))) return a;
      }
    for (std::size_t i = 0; i < pairs.size() && tried < opts.budget; ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        for (Int c1 = -m; c1 <= m; ++c1)
          for (Int c2 = -m; c2 <= m; ++c2) {
            if (std::max(std::llabs(c1), std::llabs(c2)) != m || c1 == 0 || c2 == 0) continue;
            ++tried;
            Mat a = p_alternating_unit(R, l, pairs[i].first, pairs[i].second, c1) +
                    p_alternating_unit(R, l, pairs[j].first, pairs[j].second, c2);
            if (is_unimodular(shifted(u_plus, a, u_minus))) return a;
          }
  }
  throw Error(ErrorCode::CompletionFailed, "no alternating completion found within budget");
}

Mat ElementaryFactorization::matrix() const {
  Mat g = Mat::identity(ring, n);
  for (const auto& t : steps) g = transvection(ring, n, t.row, t.col, t.c) * g;
  return g;
}

Mat ElementaryFactorization::inverse_matrix() const {
  Mat g = Mat::identity(ring, n);
  for (const auto& t : steps) g = g * transvection(ring, n, t.row, t.col, ring.neg(t.c));
  return g;
}

ElementaryFactorization column_to_e1(const Vec& v) {
  const Ring& R = v.ring();
  const std::size_t n = v.size();
  require_unimodular(v);
  ElementaryFactorization f{R, n, {}};
  if (v == Vec::basis(R, n, 0)) return f;
  if (n < 2) {
    // a unit scalar is not elementary in E(1, R)
    throw Error(ErrorCode::PreconditionViolated, "column_to_e1 needs height >= 2");
  }

  // Integer lifts whose gcd is 1.
  std::vector<Int> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = R.lift(v[k]);
  if (R.is_finite()) {
    const Int m = R.modulus();
    Int h = 0;
    for (std::size_t k = 1; k < n; ++k) h = nt::gcd(h, w[k]);
    if (h == 0) {
      w[1] = nt::checked_add(w[1], m);
      h = std::llabs(w[1]);
    }
    Int k = 0;
    while (nt::gcd(nt::checked_add(w[0], nt::checked_mul(k, m)), h) != 1) {
      k = k > 0 ? -k : 1 - k;
      if (std::llabs(k) > 10000) throw Error(ErrorCode::PreconditionViolated, "no coprime lift");
    }
    w[0] = nt::checked_add(w[0], nt::checked_mul(k, m));
  }

  // Exact integer updates keep gcd(w) = 1; recorded coefficients are reduced.
  auto op = [&](std::size_t row, std::size_t col, Int c) {
    if (c == 0) return;
    if (R.reduce(c) != 0) f.steps.push_back({row, col, R.reduce(c)});
    w[row] = nt::checked_add(w[row], nt::checked_mul(c, w[col]));
  };
  auto unit_at = [&]() -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < n; ++k)
      if (R.is_unit(R.reduce(w[k]))) return k;
    return std::nullopt;
  };

  // Euclid with the smallest entry as pivot, until a unit shows up.
  std::optional<std::size_t> u = unit_at();
  while (!u) {
    std::size_t piv = n;
    for (std::size_t k = 0; k < n; ++k)
      if (w[k] != 0 && (piv == n || std::llabs(w[k]) < std::llabs(w[piv]))) piv = k;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n; ++k)
      if (k != piv && w[k] != 0) others.push_back(k);
    std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) { return std::llabs(w[a]) < std::llabs(w[b]); });
    if (others.empty()) throw Error(ErrorCode::NotUnimodular, "elimination stalled");
    for (std::size_t j : others) {
      Int q = w[j] / w[piv];
      Int r = w[j] - q * w[piv];
      if (2 * std::llabs(r) > std::llabs(w[piv])) q += ((r > 0) == (w[piv] > 0)) ? 1 : -1;
      op(j, piv, -q);
      if ((u = unit_at())) break;
    }
  }

  // Make coordinate 1 equal to 1, then clear the rest.
  if (*u != 0) {
    for (std::size_t j = 1; j < n; ++j)
      if (j != *u) op(j, *u, R.neg(R.mul(R.reduce(w[j]), R.inverse(R.reduce(w[*u])))));
    op(0, *u, R.mul(R.sub(1, R.reduce(w[0])), R.inverse(R.reduce(w[*u]))));
    op(*u, 0, R.neg(R.reduce(w[*u])));
  } else {
    if (R.reduce(w[0]) != 1) {
      op(1, 0, R.mul(R.sub(1, R.reduce(w[1])), R.inverse(R.reduce(w[0]))));
      op(0, 1, R.sub(1, R.reduce(w[0])));
    }
    for (std::size_t j = 1; j < n; ++j) op(j, 0, R.neg(R.reduce(w[j])));
  }
  if (!(f.matrix() * v == Vec::basis(R, n, 0))) throw Error(ErrorCode::PreconditionViolated, "column_to_e1 failed");
  return f;
}

UnipotentPair asr_reduce(const Vec& v, CompletionOptions opts) {
  const Ring& R = v.ring();
  if (v.size() % 2 || v.size() < 2) throw Error(ErrorCode::PreconditionViolated, "asr_reduce needs even height");
  const std::size_t l = v.size() / 2;
  require_unimodular(v);
  if (auto asr = R.declared_asr(); asr && static_cast<std::size_t>(*asr) > l - 1)
    throw Error(ErrorCode::PreconditionViolated, "l = " + std::to_string(l) + " is within the absolute stable rank of " + R.name());
  if (split_quadratic(v) != 0) throw Error(ErrorCode::PreconditionViolated, "asr_reduce needs an isotropic column");

  Vec up = v.slice(0, l), um = v.slice(l, l);
  Mat a = antipersymmetric_complete(up, um, opts);
  Mat x = Mat::identity(R, 2 * l);
  x.set_block(0, l, a);
  Vec xv = x * v;

  ElementaryFactorization fg = column_to_e1(xv.slice(0, l));
  Mat g = fg.matrix(), g_inv = fg.inverse_matrix();
  Mat h = hyperbolic_embed(g, g_inv), h_inv = hyperbolic_embed(g_inv, g);
  Vec z = (h * xv).slice(l, l);
  if (z[l - 1] != 0) throw Error(ErrorCode::PreconditionViolated, "isotropy lost");

  // y' = [[e,0],[pA,e]] with A = c e1^T - e1 c^T, c = -p z.
  Mat p = flip_matrix(R, l);
  Vec c = p * z;
  Mat A(R, l, l);
  for (std::size_t k = 1; k < l; ++k) {
    A.set(k, 0, R.neg(c[k]));
    A.set(0, k, c[k]);
  }
  Mat yp = Mat::identity(R, 2 * l);
  yp.set_block(l, 0, p * A);
  Mat y = h_inv * yp * h;

  Vec out = y * xv;
  for (std::size_t k = l; k < 2 * l; ++k)
    if (out[k] != 0) throw Error(ErrorCode::PreconditionViolated, "asr reduction left a nonzero coordinate");
  if (!preserves_split_form(x) || !preserves_split_form(y))
    throw Error(ErrorCode::PreconditionViolated, "asr reduction left the orthogonal group");
  return {x, y, PairShape::OrthogonalHyperbolic};
}

}  // namespace chevdv
