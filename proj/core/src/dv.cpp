#include "chevdv/dv.hpp"

#include <map>
#include <optional>

#include "chevdv/errors.hpp"
#include "chevdv/stability.hpp"

namespace chevdv {

ParabolicPair parabolic_pair(const RootSystem& rs) {
  auto i = rs.i_index(), j = rs.j_index();
  if (!i || !j) throw Error(ErrorCode::Unsupported, "no distinguished parabolic pair for " + rs.name());
  if (rs.family() == Family::E && rs.rank() == 8) throw Error(ErrorCode::Unsupported, "E8 has no basic representation here");
  return {*i, *j};
}

bool within_hypotheses(const RootSystem& rs, const Ring& ring) {
  const int l = rs.rank();
  if (rs.family() == Family::B || rs.family() == Family::C) {
    auto sr = ring.declared_sr();
    return sr && std::max(*sr, 2) <= l - 1;
  }
  if (rs.family() == Family::E) {
    auto asr = ring.declared_asr();
    return asr && *asr <= l - 2;
  }
  return false;
}

namespace {

bool roots_satisfy(const SteinbergWord& w, const std::function<bool(const Root&)>& pred) {
  for (const auto& g : w.gens())
    if (!pred(w.roots().root(g.root))) return false;
  return true;
}

struct Context {
  SystemPtr sys;
  Ring R;
  const RootSystem& rs;
  const Representation& rep;
  int i, j;
  CollectOrder pos, neg;
  CollectOrder u_split, v_split;             // U_i (resp. U_i^-) first, then the L_i part
  CollectOrder u_alpha_last, v_alpha_last;   // alpha_i (resp. -alpha_i) last
  CollectOrder uj_split;                     // U_j first, then U and L_j
  CollectOrder levi_pos, levi_neg;           // L_i and U, L_i and U^-
  RootId alpha_i, minus_alpha_i;
  std::vector<std::size_t> block;            // Levi coordinates in lemma order
  std::vector<std::size_t> zero_labels_idx;  // coordinates that vanish on S~
  std::vector<int> zero_labels;
  std::vector<Int> signs;                    // E: diagonal change to the standard split form

  Context(SystemPtr s, const Ring& ring)
      : sys(std::move(s)),
        R(ring),
        rs(sys->roots()),
        rep(sys->rep()),
        i(parabolic_pair(rs).i),
        j(parabolic_pair(rs).j),
        pos(CollectOrder::positive(rs)),
        neg(CollectOrder::negative(rs)),
        u_split(rs, [&](RootId a) { return rs.is_positive(a); }, [&](RootId a) { return rs.coeff(a, i) > 0 ? 0 : 1; }),
        v_split(rs, [&](RootId a) { return !rs.is_positive(a); }, [&](RootId a) { return rs.coeff(a, i) < 0 ? 0 : 1; }),
        u_alpha_last(rs, [&](RootId a) { return rs.is_positive(a); }, [&](RootId a) { return a == rs.simple(i) ? 1 : 0; }),
        v_alpha_last(rs, [&](RootId a) { return !rs.is_positive(a); },
                     [&](RootId a) { return a == rs.negate(rs.simple(i)) ? 1 : 0; }),
        uj_split(rs, [&](RootId a) { return rs.is_positive(a); }, [&](RootId a) { return rs.coeff(a, j) > 0 ? 0 : 1; }),
        levi_pos(rs, [&](RootId a) { return rs.is_positive(a) && rs.coeff(a, i) == 0; }),
        levi_neg(rs, [&](RootId a) { return !rs.is_positive(a) && rs.coeff(a, i) == 0; }),
        alpha_i(rs.simple(i)),
        minus_alpha_i(rs.negate(rs.simple(i))) {
    const int l = rs.rank();
    auto idx = [&](int label) {
      auto k = rep.index_of_label(label);
      if (!k) throw Error(ErrorCode::PreconditionViolated, "missing weight label " + std::to_string(label));
      return *k;
    };
    if (rs.family() == Family::E) {
      for (int k = 1; k <= l - 1; ++k) block.push_back(idx(k));
      for (int k = l - 1; k >= 1; --k) block.push_back(idx(-k));
      for (int k = 1; k <= l - 1; ++k) {
        zero_labels.push_back(-k);
        zero_labels_idx.push_back(idx(-k));
      }
      find_signs();
    } else {
      for (int k = 1; k <= l; ++k) block.push_back(idx(k));
      zero_labels = {l};
      zero_labels_idx = {idx(l)};
    }
  }

  // The Levi acts on the block preserving sum s_k x_k x_{-k}; find s with s_1 = 1.
  void find_signs() {
    const std::size_t h = block.size() / 2;
    std::vector<int> posn(rep.dim(), -1);
    for (std::size_t k = 0; k < block.size(); ++k) posn[block[k]] = static_cast<int>(k);
    for (std::uint64_t mask = 0; mask < (1ULL << (h - 1)); ++mask) {
      std::vector<Int> s(h, 1);
      for (std::size_t k = 1; k < h; ++k)
        if (mask >> (k - 1) & 1) s[k] = -1;
      // B(x, y) = sum s_k (x_k y_-k + x_-k y_k); invariance: B(e x, y) + B(x, e y) = 0.
      auto form = [&](std::size_t a, std::size_t b) -> Int {
        if (a + b != 2 * h - 1) return 0;
        return s[std::min(a, b)];
      };
      bool ok = true;
      for (RootId a = 0; a < static_cast<RootId>(rs.size()) && ok; ++a) {
        if (rs.coeff(a, i) != 0) continue;
        std::map<std::pair<std::size_t, std::size_t>, Int> e;
        for (const auto& [r, c, v] : rep.nilpotent(a))
          if (posn[static_cast<std::size_t>(r)] >= 0 && posn[static_cast<std::size_t>(c)] >= 0)
            e[{static_cast<std::size_t>(posn[static_cast<std::size_t>(r)]), static_cast<std::size_t>(posn[static_cast<std::size_t>(c)])}] += v;
        for (std::size_t x = 0; x < 2 * h && ok; ++x)
          for (std::size_t y = 0; y < 2 * h && ok; ++y) {
            Int total = 0;
            for (const auto& [rc, v] : e) {
              if (rc.second == x) total += v * form(rc.first, y);
              if (rc.second == y) total += v * form(x, rc.first);
            }
            ok = total == 0;
          }
      }
      if (ok) {
        signs = s;
        return;
      }
    }
    throw Error(ErrorCode::PreconditionViolated, "no invariant split form on the Levi block");
  }

  Mat phi(const SteinbergWord& w) const { return evaluate(w); }
  SteinbergWord empty() const { return SteinbergWord(sys, R); }
  SteinbergWord gen(RootId a, Int t) const { return SteinbergWord::single(sys, R, a, t); }
  SteinbergWord lift(const Mat& m, const CollectOrder& order) const { return lift_unipotent(sys, m, order); }
  /// g w g^-1 read back as an ordered product over `order`.
  SteinbergWord conj(const Mat& g, const Mat& g_inv, const SteinbergWord& w, const CollectOrder& order) const {
    if (w.empty()) return w;
    return lift(g * phi(w) * g_inv, order);
  }
  std::pair<SteinbergWord, SteinbergWord> split(const SteinbergWord& w, const CollectOrder& order,
                                                const std::function<bool(RootId)>& first) const {
    SteinbergWord c = collect(w, order);
    SteinbergWord a = empty(), b = empty();
    for (const auto& g : c.gens()) (first(g.root) && b.empty() ? a : b).append(g.root, g.param);
    return {a, b};
  }

  bool s_tilde(const Mat& A) const {
    for (std::size_t k : zero_labels_idx)
      if (A(k, 0) != 0) return false;
    return true;
  }

  /// x, y words with phi(y x) phi(a) v+ in S~, given A = phi(a).
  std::pair<SteinbergWord, SteinbergWord> levi_reduction(const Mat& A) const {
    if (s_tilde(A)) return {empty(), empty()};
    Vec vb(R, block.size());
    for (std::size_t k = 0; k < block.size(); ++k) vb.set(k, A(block[k], 0));
    Mat xb(R, 0, 0), yb(R, 0, 0);
    if (rs.family() == Family::E) {
      Mat d = Mat::identity(R, block.size());
      for (std::size_t k = 0; k < signs.size(); ++k) d.set(k, k, signs[k]);
      UnipotentPair pr = asr_reduce(d * vb);
      xb = d * pr.x * d;
      yb = d * pr.y * d;
    } else {
      UnipotentPair pr = simple_lemma_reduce(vb);
      xb = pr.x;
      yb = pr.y;
    }
    SteinbergWord x = lift_unipotent(sys, xb, levi_pos, block);
    SteinbergWord y = lift_unipotent(sys, yb, levi_neg, block);
    Vec out = apply(y * x, A.column(0));
    for (std::size_t k : zero_labels_idx)
      if (out[k] != 0) throw Error(ErrorCode::PreconditionViolated, "Levi reduction did not reach S~");
    return {x, y};
  }
};

struct State {
  SteinbergWord u, v, a, pU, pL;
  Mat A, A_inv;  // phi(a), phi(a)^-1

  void left_multiply_a(const Context& cx, const SteinbergWord& m) {
    if (m.empty()) return;
    a = m * a;
    A = cx.phi(m) * A;
    A_inv = A_inv * cx.phi(invert(m));
  }
};

State initial_state(const Context& cx) {
  Mat I = Mat::identity(cx.R, cx.rep.dim());
  return {cx.empty(), cx.empty(), cx.empty(), cx.empty(), cx.empty(), I, I};
}

// lambda u v a = u_i' (m v_i m^-1) (m v_L a) with m = lambda u_L.
void levi_step(const Context& cx, State& st, const SteinbergWord& lambda) {
  auto [ui, uL] = cx.split(st.u, cx.u_split, [&](RootId r) { return cx.rs.coeff(r, cx.i) > 0; });
  auto [vi, vL] = cx.split(st.v, cx.v_split, [&](RootId r) { return cx.rs.coeff(r, cx.i) < 0; });
  if (!lambda.empty()) ui = cx.conj(cx.phi(lambda), cx.phi(invert(lambda)), ui, cx.pos);
  SteinbergWord m = lambda * uL;
  vi = cx.conj(cx.phi(m), cx.phi(invert(m)), vi, cx.neg);
  if (!classify(ui).U_r(cx.i) || !classify(vi).Uminus_r(cx.i))
    throw Error(ErrorCode::PreconditionViolated, "Levi decomposition left the unipotent radicals");
  st.u = ui;
  st.v = vi;
  st.left_multiply_a(cx, m * vL);
}

void reduce(const Context& cx, State& st) {
  if (cx.s_tilde(st.A)) return;
  levi_step(cx, st, cx.empty());
  if (cx.s_tilde(st.A)) return;
  auto [x, y] = cx.levi_reduction(st.A);
  // u v a p = u x^-1 . (x v x^-1) y^-1 . (y x a) . p
  st.u = collect(st.u * invert(x), cx.pos);
  st.v = collect(cx.conj(cx.phi(x), cx.phi(invert(x)), st.v, cx.neg) * invert(y), cx.neg);
  st.left_multiply_a(cx, y * x);
  if (!cx.s_tilde(st.A)) throw Error(ErrorCode::PreconditionViolated, "reduction failed");
}

// x_{-alpha_i}(eta) u v a p for a in S~.
void negative_simple_step(const Context& cx, State& st, Int eta) {
  SteinbergWord lambda = cx.gen(cx.minus_alpha_i, eta);
  // u = u' x_{alpha_i}(zeta), lambda u' lambda^-1 in U
  SteinbergWord u = collect(st.u, cx.u_alpha_last);
  Int zeta = 0;
  std::vector<Generator> rest = u.gens();
  if (!rest.empty() && rest.back().root == cx.alpha_i) {
    zeta = rest.back().param;
    rest.pop_back();
  }
  SteinbergWord u2 = cx.conj(cx.phi(lambda), cx.phi(invert(lambda)), SteinbergWord(cx.sys, cx.R, rest), cx.pos);
  // v = v' x_{-alpha_i}(zeta'), x_{alpha_i}(zeta) v' x_{alpha_i}(-zeta) in U^-
  SteinbergWord v = collect(st.v, cx.v_alpha_last);
  Int zeta_m = 0;
  std::vector<Generator> vrest = v.gens();
  if (!vrest.empty() && vrest.back().root == cx.minus_alpha_i) {
    zeta_m = vrest.back().param;
    vrest.pop_back();
  }
  SteinbergWord xz = cx.gen(cx.alpha_i, zeta);
  SteinbergWord v2 = cx.conj(cx.phi(xz), cx.phi(invert(xz)), SteinbergWord(cx.sys, cx.R, vrest), cx.neg);
  SteinbergWord v_new = collect(lambda * v2, cx.neg);

  // x_{alpha_i}(zeta) x_{-alpha_i}(zeta') a = a . x_{alpha_i}(zeta)^a . x_{-alpha_i}(zeta')^a
  SteinbergWord z = cx.lift(st.A_inv * cx.phi(cx.gen(cx.minus_alpha_i, zeta_m)) * st.A, cx.neg);
  if (!roots_satisfy(z, [&](const Root& r) { return r.coeff(cx.i) < 0 && r.coeff(cx.j) == 0; }))
    throw Error(ErrorCode::AbsorptionFailed, "x_{-alpha_i}^a leaves StL_j");
  SteinbergWord yp = cx.lift(st.A_inv * cx.phi(xz) * st.A, cx.pos);

  // p = pU pL; yp z pU pL = yUj (l pU l^-1) l pL with l = yLj z in L_j.
  auto [yUj, yLj] = cx.split(yp, cx.uj_split, [&](RootId r) { return cx.rs.coeff(r, cx.j) > 0; });
  SteinbergWord ell = yLj * z;
  SteinbergWord pU = cx.conj(cx.phi(ell), cx.phi(invert(ell)), st.pU, cx.pos);
  if (!classify(pU).U_r(cx.j)) throw Error(ErrorCode::AbsorptionFailed, "conjugated U_j part left U_j");
  st.pU = collect(yUj * pU, cx.pos);
  st.pL = ell * st.pL;
  st.u = u2;
  st.v = v_new;
}

void absorb(const Context& cx, State& st, const Generator& g) {
  const RootSystem& rs = cx.rs;
  if (rs.is_positive(g.root)) {
    st.u = collect(cx.gen(g.root, g.param) * st.u, cx.pos);
  } else if (rs.coeff(g.root, cx.i) == 0) {
    levi_step(cx, st, cx.gen(g.root, g.param));
  } else if (g.root == cx.minus_alpha_i) {
    reduce(cx, st);
    negative_simple_step(cx, st, g.param);
  } else {
    SteinbergWord e = expand_to_simple(cx.sys, cx.R, g.root, g.param);
    for (auto it = e.gens().rbegin(); it != e.gens().rend(); ++it) absorb(cx, st, *it);
  }
}

State run(const Context& cx, const SteinbergWord& w) {
  State st = initial_state(cx);
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) absorb(cx, st, *it);
  reduce(cx, st);
  return st;
}

DVDecomposition to_decomposition(const Context& cx, const State& st) {
  return {st.u, st.v, st.a, st.pU * st.pL, cx.s_tilde(st.A), within_hypotheses(cx.rs, cx.R)};
}

}  // namespace

STildeWitness is_in_S_tilde(const SteinbergWord& a) {
  Context cx(a.system_ptr(), a.ring());
  if (!classify(a).L(cx.i)) throw Error(ErrorCode::NotInLevi, "word is not in StL_" + std::to_string(cx.i));
  Vec image = apply(a, cx.rep.highest_weight_vector(a.ring()));
  bool ok = true;
  for (std::size_t k : cx.zero_labels_idx) ok = ok && image[k] == 0;
  return {image, cx.zero_labels, ok};
}

bool certify(const DVDecomposition& d, const SteinbergWord& w, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  ParabolicPair pp = parabolic_pair(w.roots());
  if (!classify(d.u).in_U) return fail("u is not in StU");
  if (!classify(d.v).in_Uminus) return fail("v is not in StU^-");
  if (!classify(d.a).L(pp.i)) return fail("a is not in StL_i");
  if (!classify(d.p).P(pp.j)) return fail("p is not in StP_j");
  if (!(evaluate(d.u) * evaluate(d.v) * evaluate(d.a) * evaluate(d.p) == evaluate(w))) return fail("matrix round trip differs");
  if (d.reduced && !is_in_S_tilde(d.a).in_S_tilde) return fail("a is not in S~");
  return true;
}

LeviReduction reduce_levi_part(const SteinbergWord& a) {
  Context cx(a.system_ptr(), a.ring());
  if (!classify(a).L(cx.i)) throw Error(ErrorCode::NotInLevi, "word is not in StL_" + std::to_string(cx.i));
  auto [x, y] = cx.levi_reduction(evaluate(a));
  return {x, y, y * x * a};
}

DVDecomposition absorb_negative_simple(Int xi, const DVDecomposition& d) {
  Context cx(d.a.system_ptr(), d.a.ring());
  if (!d.reduced) throw Error(ErrorCode::PreconditionViolated, "decomposition is not reduced");
  State st{d.u, d.v, d.a, cx.empty(), d.p, evaluate(d.a), evaluate(invert(d.a))};
  if (!cx.s_tilde(st.A)) throw Error(ErrorCode::PreconditionViolated, "a is not in S~");
  if (cx.R.reduce(xi) != 0) negative_simple_step(cx, st, xi);
  DVDecomposition out = to_decomposition(cx, st);
  out.within_hypotheses = d.within_hypotheses;
  return out;
}

DVDecomposition factorize_dv(const SteinbergWord& w) {
  Context cx(w.system_ptr(), w.ring());
  return to_decomposition(cx, run(cx, w));
}

bool in_levi_image(const SteinbergWord& w, const Mat& m) {
  const ParabolicPair pp = parabolic_pair(w.roots());
  const Representation& rep = w.system().rep();
  const std::size_t n = rep.dim();
  for (std::size_t r = 0; r < n; ++r) {
    if (m(r, 0) != (r == 0 ? 1 : 0)) return false;
    for (std::size_t c = 0; c < n; ++c)
      if (rep.level(r, pp.j) != rep.level(c, pp.j) && m(r, c) != 0) return false;
  }
  return true;
}

bool in_intersection_image(const SteinbergWord& w, const Mat& m) {
  if (!in_levi_image(w, m)) return false;
  const ParabolicPair pp = parabolic_pair(w.roots());
  const Representation& rep = w.system().rep();
  const std::size_t n = rep.dim();
  std::map<std::pair<int, int>, int> count;
  auto key = [&](std::size_t k) { return std::pair{rep.level(k, pp.i), rep.level(k, pp.j)}; };
  for (std::size_t k = 0; k < n; ++k) ++count[key(k)];
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (key(r) != key(c) && m(r, c) != 0) return false;
    if (count[key(r)] == 1 && m(r, r) != 1) return false;
  }
  return true;
}

KernelSplit dv_reduce(const SteinbergWord& w) {
  Context cx(w.system_ptr(), w.ring());
  const Mat W = evaluate(w);
  if (!in_levi_image(w, W)) throw Error(ErrorCode::PreconditionViolated, "phi(w) is not in G(Delta_j, R)");
  if (classify(w).L(cx.j)) return {cx.empty(), w};

  State st = run(cx, w);
  levi_step(cx, st, cx.empty());  // u in U_i, v in U_i^-
  const Vec vplus = cx.rep.highest_weight_vector(cx.R);

  // g = u1 l1 v2 u2 l2 with l1 = a, v2 = a^-1 v a, u2 = pU, l2 = pL.
  SteinbergWord v2 = cx.conj(st.A_inv, st.A, st.v, cx.neg);
  if (!(apply(v2, vplus) == vplus) || !classify(v2).L(cx.j) || !classify(v2).Uminus_r(cx.i))
    throw Error(ErrorCode::PreconditionViolated, "v2 is not in StU^-_i and StL_j");
  // v2 u2 = (v2 u2 v2^-1) v2 with v2 in L_j normalizing U_j.
  SteinbergWord u2 = cx.conj(cx.phi(v2), cx.phi(invert(v2)), st.pU, cx.pos);
  SteinbergWord l2 = v2 * st.pL;
  // u1 l1 = l1 (l1^-1 u1 l1)
  SteinbergWord u1 = cx.conj(st.A_inv, st.A, st.u, cx.pos);
  SteinbergWord u3 = collect(u1 * u2, cx.pos);
  auto [u3i, u3L] = cx.split(u3, cx.u_split, [&](RootId r) { return cx.rs.coeff(r, cx.i) > 0; });
  // l1 u3i u3L = (l1 u3L) (u3L^-1 u3i u3L)
  SteinbergWord u4 = cx.conj(cx.phi(invert(u3L)), cx.phi(u3L), u3i, cx.pos);
  SteinbergWord a = st.a * u3L;

  // sigma(g) = sigma(a) sigma(u4) sigma(l2); sigma(u4) must fix v+ and lie in L_j.
  SteinbergWord s4 = collect(sigma(u4), cx.neg);
  if (!(apply(s4, vplus) == vplus) || !classify(s4).L(cx.j))
    throw Error(ErrorCode::PreconditionViolated, "sigma(u4) is not in StL_j");
  if (!classify(u4).L(cx.j)) throw Error(ErrorCode::PreconditionViolated, "u4 is not in StL_j");
  SteinbergWord b = u4 * l2;

  Mat Aout = evaluate(a);
  if (!classify(a).L(cx.i) || !classify(b).L(cx.j) || !(Aout * evaluate(b) == W) || !in_levi_image(w, Aout))
    throw Error(ErrorCode::PreconditionViolated, "kernel split failed certification");
  return {a, b};
}

KernelSplit stab_kernel_express(const SteinbergWord& w) {
  KernelSplit ks = dv_reduce(w);
  if (!in_intersection_image(w, evaluate(ks.a)))
    throw Error(ErrorCode::PreconditionViolated, "phi(a) is not in G(Delta_i and Delta_j, R)");
  return ks;
}

bool TildeGenerator::verify() const {
  const std::size_t n = A.rows();
  Mat d(A.ring(), 2 * n, 2 * n);
  d.set_block(0, 0, A);
  d.set_block(n, n, B_inv);
  Mat prod = factors[0] * factors[1] * factors[2] * factors[3];
  return prod == d && g == A * B_inv;
}

TildeGenerator tilde_E_generator(const Mat& x, const RingValue& xi) {
  const Ring& R = x.ring();
  if (!(xi.ring() == R)) throw Error(ErrorCode::RingMismatch, "xi and x over different rings");
  const std::size_t n = x.rows();
  if (!x.is_square() || n == 0) throw Error(ErrorCode::PreconditionViolated, "x must be square");
  Mat y = Mat::identity(R, n);
  y.set(0, 0, xi.value());
  Mat e = Mat::identity(R, n);
  Mat A = e + x * y;
  if (!R.is_unit(determinant(A))) throw Error(ErrorCode::NotInvertible, "e + x y is not invertible");
  Mat A_inv = inverse(A);
  Mat B_inv = e - y * A_inv * x;
  if (!(B_inv * (e + y * x)).is_identity()) throw Error(ErrorCode::NotInvertible, "e + y x is not invertible");

  auto block = [&](const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br) {
    Mat m(R, 2 * n, 2 * n);
    m.set_block(0, 0, tl);
    m.set_block(0, n, tr);
    m.set_block(n, 0, bl);
    m.set_block(n, n, br);
    return m;
  };
  Mat zero(R, n, n);
  TildeGenerator out{A * B_inv, A, B_inv,
                     {block(e, zero, (y * A_inv).scaled(-1), e), block(e, x, zero, e), block(e, zero, y, e),
                      block(e, (A_inv * x).scaled(-1), zero, e)}};
  if (!out.verify()) throw Error(ErrorCode::PreconditionViolated, "Whitehead factorization failed");
  return out;
}

}  // namespace chevdv
