#include "chevdv/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "chevdv/errors.hpp"

namespace chevdv {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  return std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? "," : "") << r.coeffs[i];
  return os.str();
}

namespace {

std::vector<std::vector<int>> gram_matrix(Family family, int l) {
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto link = [&](int a, int b, int v) {  // 1-based
    g[a - 1][b - 1] = v;
    g[b - 1][a - 1] = v;
  };
  switch (family) {
    case Family::A:
    case Family::D:
    case Family::E:
      for (int k = 0; k < l; ++k) g[k][k] = 2;
      break;
    case Family::B:
      for (int k = 0; k < l; ++k) g[k][k] = (k == l - 1) ? 2 : 4;
      break;
    case Family::C:
      for (int k = 0; k < l; ++k) g[k][k] = (k == l - 1) ? 4 : 2;
      break;
  }
  switch (family) {
    case Family::A:
      for (int k = 1; k < l; ++k) link(k, k + 1, -1);
      break;
    case Family::B:
      for (int k = 1; k < l; ++k) link(k, k + 1, -2);
      break;
    case Family::C:
      for (int k = 1; k + 1 < l; ++k) link(k, k + 1, -1);
      link(l - 1, l, -2);
      break;
    case Family::D:
      for (int k = 1; k + 1 < l; ++k) link(k, k + 1, -1);
      link(l - 2, l, -1);
      break;
    case Family::E: {
      const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
      for (auto [a, b] : edges)
        if (a <= l && b <= l) link(a, b, -1);
      break;
    }
  }
  return g;
}

void check_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok || rank > 16)
    throw Error(ErrorCode::InvalidRank,
                std::string(1, family_letter(family)) + std::to_string(rank) + " is not a supported root system");
}

int form(const std::vector<std::vector<int>>& g, const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  check_rank(family, rank);
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(family, rank);
  const auto& g = rs.gram_;
  const int l = rank;

  // Positive roots layer by layer: beta + alpha_i is a root iff q > 0 in the
  // alpha_i-string through beta, where q = p - <beta, alpha_i^vee>.
  std::set<std::vector<int>> positive;
  std::vector<std::vector<int>> layer;
  for (int k = 0; k < l; ++k) {
    std::vector<int> c(l, 0);
    c[k] = 1;
    layer.push_back(c);
    positive.insert(c);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        std::vector<int> ai(l, 0);
        ai[i] = 1;
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!positive.count(down)) break;
          ++p;
        }
        int pair = 2 * form(g, beta, ai) / g[i][i];
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    positive.insert(next.begin(), next.end());
  }

  int max_norm = 0;
  for (int k = 0; k < l; ++k) max_norm = std::max(max_norm, g[k][k]);
  for (const auto& c : positive) {
    Root r{c, form(g, c, c) == max_norm};
    Root n{c, r.is_long};
    for (auto& x : n.coeffs) x = -x;
    rs.roots_.push_back(r);
    rs.roots_.push_back(n);
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs > b.coeffs;
  });
  rs.index();
  return rs;
}

RootSystem RootSystem::parse(const std::string& name) {
  if (name.size() < 2) throw Error(ErrorCode::Parse, "bad root system name '" + name + "'");
  Family f;
  switch (name[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw Error(ErrorCode::Parse, "bad root system name '" + name + "'");
  }
  int rank = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9' || rank > 100)
      throw Error(ErrorCode::Parse, "bad root system name '" + name + "'");
    rank = rank * 10 + (name[k] - '0');
  }
  return build(f, rank);
}

void RootSystem::index() {
  const int n = static_cast<int>(roots_.size());
  for (int id = 0; id < n; ++id) lookup_[roots_[id].coeffs] = id;
  neg_.assign(n, kNoRoot);
  for (int id = 0; id < n; ++id) {
    auto c = roots_[id].coeffs;
    for (auto& x : c) x = -x;
    neg_[id] = lookup_.at(c);
  }
  simple_.clear();
  for (int k = 0; k < rank_; ++k) {
    std::vector<int> c(rank_, 0);
    c[k] = 1;
    simple_.push_back(lookup_.at(c));
  }
  sum_.assign(static_cast<std::size_t>(n) * n, kNoRoot);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(rank_);
      for (int k = 0; k < rank_; ++k) c[k] = roots_[a].coeffs[k] + roots_[b].coeffs[k];
      auto it = lookup_.find(c);
      if (it != lookup_.end()) sum_[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return std::abs(roots_[a].height()) < std::abs(roots_[b].height());
  });
  order_rank_.assign(n, 0);
  for (int k = 0; k < n; ++k) order_rank_[ids[k]] = k;
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

RootId RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = lookup_.find(coeffs);
  return it == lookup_.end() ? kNoRoot : it->second;
}

std::vector<RootId> RootSystem::positive_roots() const {
  std::vector<RootId> out;
  for (RootId a = 0; a < static_cast<RootId>(roots_.size()); ++a)
    if (roots_[a].is_positive()) out.push_back(a);
  return out;
}

RootId RootSystem::add(RootId a, RootId b) const { return sum_.at(static_cast<std::size_t>(a) * roots_.size() + b); }

RootId RootSystem::combine(int p, RootId a, int q, RootId b) const {
  std::vector<int> c(rank_);
  for (int k = 0; k < rank_; ++k) c[k] = p * root(a).coeffs[k] + q * root(b).coeffs[k];
  return find(c);
}

int RootSystem::inner(RootId a, RootId b) const { return form(gram_, root(a).coeffs, root(b).coeffs); }

int RootSystem::pairing(RootId a, RootId b) const { return 2 * inner(a, b) / inner(b, b); }

RootSystem::RootString RootSystem::root_string(RootId alpha, RootId beta) const {
  RootString s{0, 0};
  while (combine(1, beta, -(s.p_max + 1), alpha) != kNoRoot) ++s.p_max;
  while (combine(1, beta, s.q_max + 1, alpha) != kNoRoot) ++s.q_max;
  return s;
}

std::vector<RootId> RootSystem::subsystem(int r) const {
  if (r < 1 || r > rank_) throw Error(ErrorCode::PreconditionViolated, "simple index out of range");
  std::vector<RootId> out;
  for (RootId a = 0; a < static_cast<RootId>(roots_.size()); ++a)
    if (coeff(a, r) == 0) out.push_back(a);
  return out;
}

std::string RootSystem::dynkin_type(const std::vector<int>& simple_indices) const {
  std::vector<int> nodes = simple_indices;
  std::sort(nodes.begin(), nodes.end());
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::string> parts;
  auto adjacent = [&](int a, int b) { return a != b && gram_[a - 1][b - 1] != 0; };
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      comp.push_back(nodes[cur]);
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!seen[t] && adjacent(nodes[cur], nodes[t])) {
          seen[t] = true;
          stack.push_back(t);
        }
    }
    const int n = static_cast<int>(comp.size());
    int max_norm = 0, min_norm = 100, branch = -1;
    for (int a : comp) {
      max_norm = std::max(max_norm, gram_[a - 1][a - 1]);
      min_norm = std::min(min_norm, gram_[a - 1][a - 1]);
      int deg = 0;
      for (int b : comp) deg += adjacent(a, b);
      if (deg == 3) branch = a;
    }
    std::string part;
    if (n == 1) {
      part = "A1";
    } else if (max_norm != min_norm) {
      int shorts = 0;
      for (int a : comp) shorts += gram_[a - 1][a - 1] == min_norm;
      part = (n == 2 || shorts == 1) ? "B" + std::to_string(n) : "C" + std::to_string(n);
    } else if (branch > 0) {
      std::vector<int> arms;
      for (int start : comp) {
        if (!adjacent(branch, start)) continue;
        int len = 1, prev = branch, cur = start;
        while (true) {
          int nxt = -1;
          for (int b : comp)
            if (b != prev && adjacent(cur, b)) nxt = b;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) part = "D" + std::to_string(n);
      else part = "E" + std::to_string(n);
    } else {
      part = "A" + std::to_string(n);
    }
    parts.push_back(part);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

std::optional<int> RootSystem::i_index() const {
  if (family_ == Family::B || family_ == Family::C) return rank_;
  if (family_ == Family::E) return 1;
  return std::nullopt;
}

std::optional<int> RootSystem::j_index() const {
  if (family_ == Family::B || family_ == Family::C) return 1;
  if (family_ == Family::E) return rank_;
  return std::nullopt;
}

}  // namespace chevdv
