#include "chevdv/representation.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "chevdv/errors.hpp"

namespace chevdv {

namespace {

// Dense integer matrices used only while building the tables.
struct IMat {
  int n = 0;
  std::vector<Int> a;

  explicit IMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}
  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  Int at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

IMat operator*(const IMat& x, const IMat& y) {
  IMat out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

IMat bracket(const IMat& x, const IMat& y) {
  IMat xy = x * y, yx = y * x;
  for (std::size_t k = 0; k < xy.a.size(); ++k) xy.a[k] -= yx.a[k];
  return xy;
}

IMat exact_div(IMat m, Int d, const char* what) {
  for (auto& v : m.a) {
    if (v % d != 0) throw Error(ErrorCode::PreconditionViolated, std::string("non-integral ") + what);
    v /= d;
  }
  return m;
}

SparseMat to_sparse(const IMat& m) {
  SparseMat s;
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c)
      if (m.at(r, c) != 0) s.push_back({r, c, m.at(r, c)});
  return s;
}

struct SimpleGenerators {
  std::vector<IMat> e, f;                // indexed by simple root 0..l-1
  std::vector<std::optional<int>> labels;  // per basis vector
  int fundamental = 1;                    // highest weight varpi_fundamental
};

// Vector representations with the classical coordinate numbering.
SimpleGenerators classical(Family family, int l) {
  SimpleGenerators g;
  int n = 0;
  std::map<int, int> idx;  // label -> basis index
  switch (family) {
    case Family::A:
      n = l + 1;
      for (int k = 1; k <= l + 1; ++k) idx[k] = k - 1;
      break;
    case Family::B:
      n = 2 * l + 1;
      for (int k = 1; k <= l; ++k) {
        idx[k] = k - 1;
        idx[-k] = 2 * l + 1 - k;
      }
      idx[0] = l;
      break;
    case Family::C:
    case Family::D:
      n = 2 * l;
      for (int k = 1; k <= l; ++k) {
        idx[k] = k - 1;
        idx[-k] = 2 * l - k;
      }
      break;
    case Family::E: break;
  }
  g.labels.assign(n, std::nullopt);
  for (auto [label, i] : idx) g.labels[i] = label;
  for (int k = 0; k < l; ++k) {
    g.e.emplace_back(n);
    g.f.emplace_back(n);
  }
  auto E = [&](IMat& m, int row_label, int col_label, Int v) { m.at(idx.at(row_label), idx.at(col_label)) += v; };

  if (family == Family::A) {
    for (int k = 1; k <= l; ++k) {
      E(g.e[k - 1], k, k + 1, 1);
      E(g.f[k - 1], k + 1, k, 1);
    }
    return g;
  }
  for (int k = 1; k < l; ++k) {
    E(g.e[k - 1], k, k + 1, 1);
    E(g.e[k - 1], -(k + 1), -k, -1);
    E(g.f[k - 1], k + 1, k, 1);
    E(g.f[k - 1], -k, -(k + 1), -1);
  }
  IMat& el = g.e[l - 1];
  IMat& fl = g.f[l - 1];
  switch (family) {
    case Family::B:
      E(el, l, 0, 2);
      E(el, 0, -l, -1);
      E(fl, 0, l, 1);
      E(fl, -l, 0, -2);
      break;
    case Family::C:
      E(el, l, -l, 1);
      E(fl, -l, l, 1);
      break;
    case Family::D:
      E(el, l - 1, -l, 1);
      E(el, l, -(l - 1), -1);
      E(fl, -l, l - 1, 1);
      E(fl, -(l - 1), l, -1);
      break;
    default: break;
  }
  return g;
}

// Minuscule representation of E6/E7 with highest weight varpi_l. Weight
// vectors are permuted by e_i, f_i with all coefficients 1.
SimpleGenerators exceptional(const RootSystem& rs) {
  const int l = rs.rank();
  const auto& cartan = rs.gram();  // simply laced: Gram matrix = Cartan matrix
  std::vector<int> top(l, 0);
  top[l - 1] = 1;
  // Dynkin labels -> depth vector
  std::map<std::vector<int>, std::vector<int>> found{{top, std::vector<int>(l, 0)}};
  std::queue<std::vector<int>> todo;
  todo.push(top);
  while (!todo.empty()) {
    auto mu = todo.front();
    todo.pop();
    for (int i = 0; i < l; ++i) {
      if (mu[i] <= 0) continue;
      auto nu = mu;
      for (int k = 0; k < l; ++k) nu[k] -= cartan[i][k];
      if (found.count(nu)) continue;
      auto depth = found.at(mu);
      depth[i] += 1;
      found[nu] = depth;
      todo.push(nu);
    }
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> weights(found.begin(), found.end());
  std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a.second) ha += x;
    for (int x : b.second) hb += x;
    if (ha != hb) return ha < hb;
    return a.second > b.second;
  });
  const int n = static_cast<int>(weights.size());
  std::map<std::vector<int>, int> by_depth;
  for (int k = 0; k < n; ++k) by_depth[weights[k].second] = k;

  SimpleGenerators g;
  g.fundamental = l;
  for (int i = 0; i < l; ++i) {
    g.e.emplace_back(n);
    g.f.emplace_back(n);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < l; ++i) {
      auto lower = weights[k].second;
      lower[i] += 1;
      auto it = by_depth.find(lower);
      if (it == by_depth.end()) continue;
      g.f[i].at(it->second, k) = 1;
      g.e[i].at(k, it->second) = 1;
    }
  }

  // Partial numbering along the D_{l-1} subrepresentation through v+.
  g.labels.assign(n, std::nullopt);
  std::map<int, std::vector<int>> at;
  auto step = [&](int from_label, int simple, int to_label) {
    auto d = at.at(from_label);
    d[simple - 1] += 1;
    if (!by_depth.count(d)) throw Error(ErrorCode::PreconditionViolated, "weight numbering failed");
    at[to_label] = d;
  };
  at[1] = std::vector<int>(l, 0);
  for (int k = 1; k <= l - 3; ++k) step(k, l + 1 - k, k + 1);
  step(l - 2, 2, l - 1);
  step(l - 2, 3, -(l - 1));
  step(-(l - 1), 2, -(l - 2));
  for (int k = l - 3; k >= 1; --k) step(-(k + 1), l + 1 - k, -k);
  for (const auto& [label, d] : at) g.labels[by_depth.at(d)] = label;
  return g;
}

}  // namespace

std::string WeightDiagram::display_label(int index) const {
  const auto& node = nodes.at(static_cast<std::size_t>(index));
  return node.label ? std::to_string(*node.label) : "w" + std::to_string(index);
}

Representation Representation::build(const RootSystem& rs) {
  if (rs.family() == Family::E && rs.rank() == 8)
    throw Error(ErrorCode::Unsupported, "the 248-dimensional representation of E8 is not supported");
  SimpleGenerators gens = rs.family() == Family::E ? exceptional(rs) : classical(rs.family(), rs.rank());
  const int l = rs.rank();
  const int n = static_cast<int>(gens.labels.size());

  Representation rep;
  rep.highest_ = 0;

  // Depths and edges from the lowering operators.
  std::vector<std::optional<std::vector<int>>> depth(n);
  depth[0] = std::vector<int>(l, 0);
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int k = todo.front();
    todo.pop();
    for (int i = 0; i < l; ++i)
      for (int t = 0; t < n; ++t) {
        if (gens.f[i].at(t, k) == 0 || depth[t]) continue;
        auto d = *depth[k];
        d[i] += 1;
        depth[t] = d;
        todo.push(t);
      }
  }
  for (int k = 0; k < n; ++k) {
    if (!depth[k]) throw Error(ErrorCode::PreconditionViolated, "representation is not cyclic on v+");
    rep.diagram_.nodes.push_back({k, gens.labels[k], *depth[k]});
  }
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < n; ++k)
      for (int t = 0; t < n; ++t)
        if (gens.f[i].at(t, k) != 0) rep.diagram_.edges.push_back({k, t, i + 1});
  std::sort(rep.diagram_.edges.begin(), rep.diagram_.edges.end(), [](const WeightEdge& a, const WeightEdge& b) {
    return std::tie(a.from, a.to, a.simple) < std::tie(b.from, b.to, b.simple);
  });

  // Chevalley basis: e_gamma = [e_a, e_b] / (p+1) along the extraspecial pair
  // (a = alpha_i with minimal i), and e_{-gamma} = -[e_{-a}, e_{-b}] / (p+1).
  const std::size_t N = rs.size();
  std::vector<std::optional<IMat>> mats(N);
  for (int i = 1; i <= l; ++i) {
    mats[rs.simple(i)] = gens.e[i - 1];
    mats[rs.negate(rs.simple(i))] = gens.f[i - 1];
  }
  for (RootId g : rs.positive_roots()) {
    if (mats[g]) continue;
    for (int i = 1; i <= l; ++i) {
      RootId a = rs.simple(i);
      RootId b = rs.combine(1, g, -1, a);
      if (b == kNoRoot || !rs.is_positive(b)) continue;
      Int p1 = rs.root_string(a, b).p_max + 1;
      mats[g] = exact_div(bracket(*mats[a], *mats[b]), p1, "root element");
      IMat neg = exact_div(bracket(*mats[rs.negate(a)], *mats[rs.negate(b)]), p1, "root element");
      for (auto& v : neg.a) v = -v;
      mats[rs.negate(g)] = neg;
      break;
    }
  }
  rep.e_.resize(N);
  rep.e2_.resize(N);
  for (std::size_t a = 0; a < N; ++a) {
    rep.e_[a] = to_sparse(*mats[a]);
    rep.e2_[a] = to_sparse(exact_div((*mats[a]) * (*mats[a]), 2, "divided power"));
  }

  // <mu, a^vee> with mu = varpi_w - sum depth_m alpha_m.
  rep.num_roots_ = N;
  rep.pairing_.assign(static_cast<std::size_t>(n) * N, 0);
  const auto& G = rs.gram();
  const int w = gens.fundamental;
  for (std::size_t a = 0; a < N; ++a) {
    const auto& c = rs.root(static_cast<RootId>(a)).coeffs;
    int norm = rs.inner(static_cast<RootId>(a), static_cast<RootId>(a));
    std::vector<int> with_simple(l, 0);
    for (int m = 0; m < l; ++m)
      for (int k = 0; k < l; ++k) with_simple[m] += G[m][k] * c[k];
    for (int k = 0; k < n; ++k) {
      int num = c[w - 1] * G[w - 1][w - 1];
      for (int m = 0; m < l; ++m) num -= 2 * rep.diagram_.nodes[k].depth[m] * with_simple[m];
      if (num % norm != 0) throw Error(ErrorCode::PreconditionViolated, "non-integral weight pairing");
      rep.pairing_[static_cast<std::size_t>(k) * N + a] = num / norm;
    }
  }
  return rep;
}

std::optional<std::size_t> Representation::index_of_label(int label) const {
  for (const auto& node : diagram_.nodes)
    if (node.label && *node.label == label) return static_cast<std::size_t>(node.index);
  return std::nullopt;
}

int Representation::weight_pairing(std::size_t k, RootId a) const {
  return pairing_.at(k * num_roots_ + static_cast<std::size_t>(a));
}

Mat Representation::unipotent_action(RootId a, const RingValue& xi) const {
  const Ring& R = xi.ring();
  Mat m = Mat::identity(R, dim());
  left_multiply(a, xi.value(), m);
  return m;
}

void Representation::apply(RootId a, Int xi, Vec& v) const {
  const Ring& R = v.ring();
  xi = R.reduce(xi);
  if (xi == 0) return;
  Int xi2 = R.mul(xi, xi);
  Vec out = v;
  for (const auto& [r, c, val] : e_[a])
    if (v[c] != 0) out.set(r, R.add(out[r], R.mul(R.mul(xi, R.reduce(val)), v[c])));
  for (const auto& [r, c, val] : e2_[a])
    if (v[c] != 0) out.set(r, R.add(out[r], R.mul(R.mul(xi2, R.reduce(val)), v[c])));
  v = std::move(out);
}

void Representation::left_multiply(RootId a, Int xi, Mat& m) const {
  const Ring& R = m.ring();
  xi = R.reduce(xi);
  if (xi == 0) return;
  Int xi2 = R.mul(xi, xi);
  Mat out = m;
  auto accumulate = [&](const SparseMat& s, Int scale) {
    for (const auto& [r, c, val] : s) {
      Int f = R.mul(scale, R.reduce(val));
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(c, j) != 0) out.add_to(r, j, R.mul(f, m(c, j)));
    }
  };
  accumulate(e_[a], xi);
  accumulate(e2_[a], xi2);
  m = std::move(out);
}

void Representation::right_multiply(Mat& m, RootId a, Int xi) const {
  const Ring& R = m.ring();
  xi = R.reduce(xi);
  if (xi == 0) return;
  Int xi2 = R.mul(xi, xi);
  Mat out = m;
  auto accumulate = [&](const SparseMat& s, Int scale) {
    for (const auto& [r, c, val] : s) {
      Int f = R.mul(scale, R.reduce(val));
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, r) != 0) out.add_to(i, c, R.mul(m(i, r), f));
    }
  };
  accumulate(e_[a], xi);
  accumulate(e2_[a], xi2);
  m = std::move(out);
}

Vec Representation::highest_weight_vector(const Ring& ring) const {
  return Vec::basis(ring, dim(), static_cast<std::size_t>(highest_));
}

}  // namespace chevdv
