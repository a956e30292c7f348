#include "chevdv/steinberg.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chevdv/errors.hpp"

namespace chevdv {

SteinbergWord::SteinbergWord(SystemPtr sys, const Ring& ring) : sys_(std::move(sys)), ring_(ring) {}

SteinbergWord::SteinbergWord(SystemPtr sys, const Ring& ring, const std::vector<Generator>& gens)
    : SteinbergWord(std::move(sys), ring) {
  for (const auto& g : gens) append(g.root, g.param);
}

SteinbergWord SteinbergWord::single(SystemPtr sys, const Ring& ring, RootId root, Int param) {
  SteinbergWord w(std::move(sys), ring);
  w.append(root, param);
  return w;
}

void SteinbergWord::append(RootId root, Int param) {
  if (root < 0 || static_cast<std::size_t>(root) >= sys_->roots().size())
    throw Error(ErrorCode::PreconditionViolated, "root index out of range");
  param = ring_.reduce(param);
  if (param == 0) return;
  if (!gens_.empty() && gens_.back().root == root) {
    Int sum = ring_.add(gens_.back().param, param);
    if (sum == 0)
      gens_.pop_back();
    else
      gens_.back().param = sum;
    return;
  }
  gens_.push_back({root, param});
}

void SteinbergWord::append(const SteinbergWord& w) {
  if (!same_group(w)) throw Error(ErrorCode::RingMismatch, "words over different groups");
  for (const auto& g : w.gens_) append(g.root, g.param);
}

bool SteinbergWord::same_group(const SteinbergWord& other) const noexcept {
  return ring_ == other.ring_ && (sys_ == other.sys_ || sys_->roots().name() == other.sys_->roots().name());
}

SteinbergWord multiply_reduce(const SteinbergWord& a, const SteinbergWord& b) {
  SteinbergWord out = a;
  out.append(b);
  return out;
}

SteinbergWord invert(const SteinbergWord& w) {
  SteinbergWord out(w.system_ptr(), w.ring());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) out.append(it->root, w.ring().neg(it->param));
  return out;
}

SteinbergWord sigma(const SteinbergWord& w) {
  SteinbergWord out(w.system_ptr(), w.ring());
  for (const auto& g : w.gens()) out.append(w.roots().negate(g.root), w.ring().neg(g.param));
  return out;
}

SteinbergWord conjugate(const SteinbergWord& h, const SteinbergWord& w) { return h * w * invert(h); }

SteinbergWord commutator(const SteinbergWord& a, const SteinbergWord& b) { return a * b * invert(a) * invert(b); }

SubgroupMask classify(const SteinbergWord& w) {
  const RootSystem& rs = w.roots();
  const auto l = static_cast<std::size_t>(rs.rank());
  SubgroupMask m;
  m.in_L.assign(l, true);
  m.in_P.assign(l, true);
  m.in_U_r.assign(l, true);
  m.in_Uminus_r.assign(l, true);
  for (const auto& g : w.gens()) {
    const Root& a = rs.root(g.root);
    if (!a.is_positive()) m.in_U = false;
    if (a.is_positive()) m.in_Uminus = false;
    for (std::size_t r = 0; r < l; ++r) {
      int c = a.coeffs[r];
      if (c != 0) m.in_L[r] = false;
      if (c < 0) m.in_P[r] = false;
      if (c <= 0) m.in_U_r[r] = false;
      if (c >= 0) m.in_Uminus_r[r] = false;
    }
  }
  return m;
}

CollectOrder::CollectOrder(const RootSystem& rs, const std::function<bool(RootId)>& member,
                           const std::function<int(RootId)>& key)
    : rank_(rs.size(), -1) {
  for (RootId a = 0; a < static_cast<RootId>(rs.size()); ++a)
    if (member(a)) members_.push_back(a);
  std::stable_sort(members_.begin(), members_.end(), [&](RootId a, RootId b) {
    int ka = key ? key(a) : 0, kb = key ? key(b) : 0;
    if (ka != kb) return ka < kb;
    return rs.order_rank(a) < rs.order_rank(b);
  });
  for (std::size_t k = 0; k < members_.size(); ++k) rank_[static_cast<std::size_t>(members_[k])] = static_cast<int>(k);
}

CollectOrder CollectOrder::positive(const RootSystem& rs) {
  return CollectOrder(rs, [&](RootId a) { return rs.is_positive(a); });
}

CollectOrder CollectOrder::negative(const RootSystem& rs) {
  return CollectOrder(rs, [&](RootId a) { return !rs.is_positive(a); });
}

namespace {

Int power(const Ring& R, Int x, int e) {
  Int out = R.reduce(1);
  for (int k = 0; k < e; ++k) out = R.mul(out, x);
  return out;
}

class Collector {
 public:
  Collector(const ChevalleySystem& sys, const Ring& ring, const CollectOrder& order)
      : sys_(sys), ring_(ring), order_(order) {}

  void insert(Generator g, int depth = 0) {
    if (depth > 100000) throw Error(ErrorCode::NotInClosedSet, "collection does not terminate for this order");
    g.param = ring_.reduce(g.param);
    if (g.param == 0) return;
    if (!order_.contains(g.root))
      throw Error(ErrorCode::NotInClosedSet, "root " + to_string(sys_.roots().root(g.root)) + " outside the set");
    if (out_.empty() || order_.rank(out_.back().root) < order_.rank(g.root)) {
      out_.push_back(g);
      return;
    }
    if (out_.back().root == g.root) {
      Int sum = ring_.add(out_.back().param, g.param);
      if (sum == 0)
        out_.pop_back();
      else
        out_.back().param = sum;
      return;
    }
    // x_a(s) x_b(t) = x_b(t) x_a(s) [x_a(-s), x_b(-t)]
    Generator last = out_.back();
    out_.pop_back();
    insert(g, depth + 1);
    insert(last, depth + 1);
    Int s = ring_.neg(last.param), t = ring_.neg(g.param);
    for (const auto& term : sys_.constants().terms(last.root, g.root)) {
      Int c = ring_.mul(ring_.reduce(term.coeff), ring_.mul(power(ring_, s, term.p), power(ring_, t, term.q)));
      insert({term.root, c}, depth + 1);
    }
  }

  std::vector<Generator>& result() { return out_; }

 private:
  const ChevalleySystem& sys_;
  const Ring& ring_;
  const CollectOrder& order_;
  std::vector<Generator> out_;
};

}  // namespace

SteinbergWord collect(const SteinbergWord& w, const CollectOrder& order) {
  Collector c(w.system(), w.ring(), order);
  for (const auto& g : w.gens()) c.insert(g);
  return SteinbergWord(w.system_ptr(), w.ring(), c.result());
}

SteinbergWord collect_unipotent(const SteinbergWord& w) {
  if (w.empty()) return w;
  bool pos = w.roots().is_positive(w.gens().front().root);
  return collect(w, pos ? CollectOrder::positive(w.roots()) : CollectOrder::negative(w.roots()));
}

SteinbergWord conjugate_collect(const SteinbergWord& z, const SteinbergWord& a, const CollectOrder& order) {
  const Ring& R = z.ring();
  const ConstantTable& N = z.system().constants();
  SteinbergWord cur = collect(z, order);
  for (const auto& g : a.gens()) {
    // g^-1 x_b(c) g = x_b(c) [x_b(-c), x_g(-s)]
    Int s = R.neg(g.param);
    SteinbergWord next(z.system_ptr(), R);
    for (const auto& f : cur.gens()) {
      if (f.root == z.roots().negate(g.root)) throw Error(ErrorCode::NotInClosedSet, "opposite roots in conjugation");
      next.append(f.root, f.param);
      Int c = R.neg(f.param);
      for (const auto& t : N.terms(f.root, g.root))
        next.append(t.root, R.mul(R.reduce(t.coeff), R.mul(power(R, c, t.p), power(R, s, t.q))));
    }
    cur = collect(next, order);
  }
  return cur;
}

Mat evaluate(const SteinbergWord& w) {
  const Representation& rep = w.system().rep();
  Mat m = Mat::identity(w.ring(), rep.dim());
  for (const auto& g : w.gens()) rep.right_multiply(m, g.root, g.param);
  return m;
}

Vec apply(const SteinbergWord& w, Vec v) {
  const Representation& rep = w.system().rep();
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) rep.apply(it->root, it->param, v);
  return v;
}

namespace {

// e_a and e_a^2/2 restricted to a set of coordinates (re-indexed).
struct Restricted {
  SparseMat e, e2;
};

Restricted restrict(const Representation& rep, RootId a, const std::vector<int>& pos) {
  Restricted out;
  auto keep = [&](const SparseMat& s, SparseMat& dst) {
    for (const auto& [r, c, v] : s)
      if (pos[static_cast<std::size_t>(r)] >= 0 && pos[static_cast<std::size_t>(c)] >= 0)
        dst.push_back({pos[static_cast<std::size_t>(r)], pos[static_cast<std::size_t>(c)], v});
  };
  keep(rep.nilpotent(a), out.e);
  keep(rep.divided_square(a), out.e2);
  return out;
}

void left_multiply(const Restricted& x, Int t, Mat& m) {
  const Ring& R = m.ring();
  Mat out = m;
  Int t2 = R.mul(t, t);
  auto acc = [&](const SparseMat& s, Int scale) {
    for (const auto& [r, c, v] : s) {
      Int f = R.mul(scale, R.reduce(v));
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(static_cast<std::size_t>(c), j) != 0)
          out.add_to(static_cast<std::size_t>(r), j, R.mul(f, m(static_cast<std::size_t>(c), j)));
    }
  };
  acc(x.e, t);
  acc(x.e2, t2);
  m = std::move(out);
}

}  // namespace

SteinbergWord lift_unipotent(SystemPtr sys, const Mat& m, const CollectOrder& order,
                             const std::vector<std::size_t>& block) {
  const Representation& rep = sys->rep();
  const Ring& R = m.ring();
  std::vector<int> pos(rep.dim(), -1);
  if (block.empty()) {
    std::iota(pos.begin(), pos.end(), 0);
  } else {
    for (std::size_t k = 0; k < block.size(); ++k) pos.at(block[k]) = static_cast<int>(k);
  }
  Mat rest = m;
  std::vector<Generator> gens;
  for (RootId g : order.members()) {
    Restricted x = restrict(rep, g, pos);
    if (x.e.empty()) continue;
    auto probe = std::find_if(x.e.begin(), x.e.end(), [](const SparseEntry& s) { return s.value == 1 || s.value == -1; });
    if (probe == x.e.end()) throw Error(ErrorCode::PreconditionViolated, "no unit entry to read a root coefficient");
    Int c = R.mul(rest(static_cast<std::size_t>(probe->row), static_cast<std::size_t>(probe->col)), R.reduce(probe->value));
    if (c == 0) continue;
    gens.push_back({g, c});
    left_multiply(x, R.neg(c), rest);
  }
  if (!rest.is_identity()) throw Error(ErrorCode::PreconditionViolated, "matrix is not in the unipotent image");
  return SteinbergWord(std::move(sys), R, gens);
}

SteinbergWord expand_to_simple(SystemPtr sys, const Ring& ring, RootId a, Int xi) {
  const RootSystem& rs = sys->roots();
  const int l = rs.rank();
  auto weyl = [&](const Ring& R, int k, bool inverse) {
    Int s = inverse ? -1 : 1;
    return SteinbergWord(sys, R, {{rs.simple(k), s}, {rs.negate(rs.simple(k)), -s}, {rs.simple(k), s}});
  };
  // Reflect towards a simple root: s_k(a) = a - <a, alpha_k^vee> alpha_k.
  std::vector<int> path;
  RootId cur = a;
  while (std::abs(rs.height(cur)) > 1) {
    bool pos = rs.is_positive(cur);
    int chosen = 0;
    for (int k = 1; k <= l && !chosen; ++k) {
      int c = rs.pairing(cur, rs.simple(k));
      if ((pos && c > 0) || (!pos && c < 0)) chosen = k;
    }
    if (!chosen) throw Error(ErrorCode::PreconditionViolated, "no height-reducing reflection");
    int c = rs.pairing(cur, rs.simple(chosen));
    cur = rs.combine(1, cur, -c, rs.simple(chosen));
    path.push_back(chosen);
  }
  if (path.empty()) return SteinbergWord::single(sys, ring, a, xi);

  // x_a(xi) = W^-1 x_cur(eps xi) W with W = w_{k_r} ... w_{k_1}.
  auto build = [&](const Ring& R, bool inverse) {
    SteinbergWord out(sys, R);
    if (inverse)
      for (int k : path) out.append(weyl(R, k, true));
    else
      for (auto it = path.rbegin(); it != path.rend(); ++it) out.append(weyl(R, *it, false));
    return out;
  };
  SteinbergWord W = build(ring, false), Winv = build(ring, true);

  // The sign is read off over Z, where parameters are not reduced.
  const Ring Z = Ring::integers();
  SteinbergWord Wz = build(Z, false), Wiz = build(Z, true);
  Mat target = evaluate(SteinbergWord::single(sys, Z, a, 1));
  Int eps = 0;
  for (Int e : {1, -1})
    if (evaluate(Wiz * SteinbergWord::single(sys, Z, cur, e) * Wz) == target) eps = e;
  if (eps == 0) throw Error(ErrorCode::PreconditionViolated, "Weyl conjugation sign not found");
  return Winv * SteinbergWord::single(sys, ring, cur, ring.mul(ring.reduce(eps), ring.reduce(xi))) * W;
}

SubsystemEmbedding embed_subsystem(const RootSystem& rs, int r) {
  const int l = rs.rank();
  std::vector<int> rest;
  for (int k = 1; k <= l; ++k)
    if (k != r) rest.push_back(k);
  std::string type = rs.dynkin_type(rest);
  if (type.empty() || type.find('+') != std::string::npos)
    throw Error(ErrorCode::Unsupported, "Delta_" + std::to_string(r) + " of " + rs.name() + " is not irreducible");
  SystemPtr sub = ChevalleySystem::parse(type);
  const RootSystem& S = sub->roots();
  const int m = S.rank();

  // Match Cartan matrices by backtracking.
  std::vector<int> perm(static_cast<std::size_t>(m), 0);
  std::vector<bool> used(rest.size(), false);
  std::function<bool(int)> search = [&](int k) {
    if (k == m) return true;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j <= k && ok; ++j) {
        int pj = j == k ? rest[c] : perm[static_cast<std::size_t>(j)];
        ok = rs.pairing(rs.simple(rest[c]), rs.simple(pj)) == S.pairing(S.simple(k + 1), S.simple(j + 1)) &&
             rs.pairing(rs.simple(pj), rs.simple(rest[c])) == S.pairing(S.simple(j + 1), S.simple(k + 1));
      }
      if (!ok) continue;
      used[c] = true;
      perm[static_cast<std::size_t>(k)] = rest[c];
      if (search(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) throw Error(ErrorCode::PreconditionViolated, "subsystem numbering not found");

  SubsystemEmbedding emb{sub, std::vector<RootId>(S.size(), kNoRoot), {}};
  for (RootId a = 0; a < static_cast<RootId>(S.size()); ++a) {
    std::vector<int> c(static_cast<std::size_t>(l), 0);
    for (int k = 0; k < m; ++k) c[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] - 1)] = S.root(a).coeffs[static_cast<std::size_t>(k)];
    emb.root_map[static_cast<std::size_t>(a)] = rs.find(c);
  }

  // Signs with N_{pa,pb} e_a e_b = e_{a+b} N^sub_{a,b}, propagated from the
  // simple roots and then checked on every commutator term.
  const auto N = S.size();
  const ConstantTable big = ConstantTable(rs, Representation::build(rs));
  std::vector<int> eps(N, 0);
  for (int k = 1; k <= m; ++k) eps[static_cast<std::size_t>(S.simple(k))] = 1;
  auto sgn = [](Int x) { return x > 0 ? 1 : -1; };
  for (bool changed = true; changed;) {
    changed = false;
    for (RootId a = 0; a < static_cast<RootId>(N); ++a)
      for (RootId b = 0; b < static_cast<RootId>(N); ++b) {
        RootId g = S.add(a, b);
        if (g == kNoRoot) continue;
        int rel = sgn(big.lie_constant(emb.root_map[a], emb.root_map[b])) * sgn(sub->constants().lie_constant(a, b));
        int& ea = eps[static_cast<std::size_t>(a)];
        int& eb = eps[static_cast<std::size_t>(b)];
        int& eg = eps[static_cast<std::size_t>(g)];
        int known = (ea != 0) + (eb != 0) + (eg != 0);
        if (known != 2) continue;
        if (!eg) eg = rel * ea * eb;
        else if (!ea) ea = rel * eg * eb;
        else eb = rel * eg * ea;
        changed = true;
      }
    if (!changed)
      for (auto& e : eps)
        if (e == 0) {
          e = 1;
          changed = true;
          break;
        }
  }
  for (RootId a = 0; a < static_cast<RootId>(N); ++a)
    for (RootId b = 0; b < static_cast<RootId>(N); ++b)
      for (const auto& t : sub->constants().terms(a, b)) {
        Int lhs = big.lie_constant(emb.root_map[a], emb.root_map[b]);
        for (const auto& tb : big.terms(emb.root_map[a], emb.root_map[b]))
          if (tb.p == t.p && tb.q == t.q) lhs = tb.coeff;
        int ea = eps[static_cast<std::size_t>(a)], eb = eps[static_cast<std::size_t>(b)];
        Int twisted = lhs * (t.p % 2 ? ea : 1) * (t.q % 2 ? eb : 1);
        if (twisted != eps[static_cast<std::size_t>(t.root)] * t.coeff)
          throw Error(ErrorCode::PreconditionViolated, "inconsistent subsystem signs");
      }
  emb.signs = std::move(eps);
  return emb;
}

SteinbergWord theta_embed(const SteinbergWord& w, const SubsystemEmbedding& emb, SystemPtr target) {
  if (w.roots().name() != emb.sub->roots().name())
    throw Error(ErrorCode::RootNotInSubsystem, "word is not over " + emb.sub->roots().name());
  SteinbergWord out(std::move(target), w.ring());
  for (const auto& g : w.gens()) {
    RootId a = emb.root_map.at(static_cast<std::size_t>(g.root));
    if (a == kNoRoot) throw Error(ErrorCode::RootNotInSubsystem, "unmapped root");
    out.append(a, g.param * emb.signs.at(static_cast<std::size_t>(g.root)));
  }
  return out;
}

SteinbergWord parse_word(SystemPtr sys, const Ring& ring, std::string_view text) {
  const RootSystem& rs = sys->roots();
  SteinbergWord w(sys, ring);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto parse_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad integer '" + std::string(s) + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#' || sv == "\r") continue;
    auto semi = sv.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'coeffs;param'");
    std::vector<int> coeffs;
    std::string_view cs = sv.substr(0, semi);
    while (true) {
      auto comma = cs.find(',');
      coeffs.push_back(static_cast<int>(parse_int(cs.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      cs.remove_prefix(comma + 1);
    }
    if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(rs.rank()) + " coefficients");
    RootId a = rs.find(coeffs);
    if (a == kNoRoot) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": not a root of " + rs.name());
    w.append(a, parse_int(sv.substr(semi + 1)));
  }
  return w;
}

std::string serialize_word(const SteinbergWord& w) {
  std::string out;
  for (const auto& g : w.gens()) {
    const auto& c = w.roots().root(g.root).coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ';' + std::to_string(g.param) + '\n';
  }
  return out;
}

std::optional<CommutatorFailure> verify_commutator_formula(const SystemPtr& sys, const Ring& ring,
                                                           const std::vector<Int>& params, std::size_t* checked) {
  const RootSystem& rs = sys->roots();
  const Representation& rep = sys->rep();
  const Mat I = Mat::identity(ring, rep.dim());
  std::size_t count = 0;
  const auto n = static_cast<RootId>(rs.size());
  for (RootId a = 0; a < n; ++a)
    for (RootId b = 0; b < n; ++b) {
      if (a == b || rs.negate(a) == b) continue;
      const auto& terms = sys->constants().terms(a, b);
      for (Int s : params)
        for (Int t : params) {
          ++count;
          Mat lhs = I;
          rep.left_multiply(b, -t, lhs);
          rep.left_multiply(a, -s, lhs);
          rep.left_multiply(b, t, lhs);
          rep.left_multiply(a, s, lhs);
          Mat rhs = I;
          for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            Int v = ring.reduce(it->coeff);
            for (int k = 0; k < it->p; ++k) v = ring.mul(v, ring.reduce(s));
            for (int k = 0; k < it->q; ++k) v = ring.mul(v, ring.reduce(t));
            rep.left_multiply(it->root, v, rhs);
          }
          if (!(lhs == rhs)) {
            if (checked) *checked = count;
            return CommutatorFailure{a, b, s, t};
          }
        }
    }
  if (checked) *checked = count;
  return std::nullopt;
}

}  // namespace chevdv
