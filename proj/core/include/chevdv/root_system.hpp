#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chevdv {

enum class Family { A, B, C, D, E };

char family_letter(Family f);

/// A root, stored as its expansion over the simple roots (Bourbaki numbering).
struct Root {
  std::vector<int> coeffs;
  bool is_long = true;

  int height() const;
  bool is_positive() const;
  /// m_r for 1-based r.
  int coeff(int r) const { return coeffs.at(static_cast<std::size_t>(r - 1)); }

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend auto operator<=>(const Root& a, const Root& b) { return a.coeffs <=> b.coeffs; }
};

std::string to_string(const Root& r);

using RootId = int;
inline constexpr RootId kNoRoot = -1;

/// A reduced irreducible root system generated from its Cartan data.
///
/// Roots are indexed 0..N-1, sorted by height and then by coefficient vector
/// (lexicographically decreasing, so that alpha_1 precedes alpha_2).
class RootSystem {
 public:
  /// Throws InvalidRank outside A_{>=1}, B_{>=2}, C_{>=2}, D_{>=3}, E_{6,7,8}.
  static RootSystem build(Family family, int rank);
  /// Parses names such as "B3" or "E6".
  static RootSystem parse(const std::string& name);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  std::size_t size() const noexcept { return roots_.size(); }
  const Root& root(RootId id) const { return roots_.at(static_cast<std::size_t>(id)); }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  RootId find(const std::vector<int>& coeffs) const;
  RootId simple(int r) const { return simple_.at(static_cast<std::size_t>(r - 1)); }
  RootId negate(RootId a) const { return neg_.at(static_cast<std::size_t>(a)); }
  RootId highest() const { return static_cast<RootId>(roots_.size()) - 1; }
  std::vector<RootId> positive_roots() const;

  int height(RootId a) const { return root(a).height(); }
  int coeff(RootId a, int r) const { return root(a).coeff(r); }
  bool is_positive(RootId a) const { return root(a).is_positive(); }

  /// alpha + beta when it is a root, otherwise kNoRoot.
  RootId add(RootId a, RootId b) const;
  /// p*alpha + q*beta when it is a root, otherwise kNoRoot.
  RootId combine(int p, RootId a, int q, RootId b) const;

  /// Symmetric form (a, b), scaled so that short roots of B/C have square 2.
  int inner(RootId a, RootId b) const;
  /// <a, b^vee> = 2 (a, b) / (b, b).
  int pairing(RootId a, RootId b) const;
  /// Gram matrix of the simple roots.
  const std::vector<std::vector<int>>& gram() const noexcept { return gram_; }

  struct RootString {
    int p_max;  // largest p with beta - p*alpha a root
    int q_max;  // largest q with beta + q*alpha a root
  };
  RootString root_string(RootId alpha, RootId beta) const;

  /// Delta_r = { alpha : m_r(alpha) = 0 } for 1-based r.
  std::vector<RootId> subsystem(int r) const;
  /// Cartan type of the subsystem spanned by the given simple-root indices,
  /// e.g. "A2" or "A1+A1"; "" for the empty set.
  std::string dynkin_type(const std::vector<int>& simple_indices) const;

  /// The distinguished indices (1-based): i = l, j = 1 for B_l, C_l and
  /// i = 1, j = l for E_l. Absent for the other families.
  std::optional<int> i_index() const;
  std::optional<int> j_index() const;

  /// Rank used by unipotent collection: |height| first, then root order.
  int order_rank(RootId a) const { return order_rank_.at(static_cast<std::size_t>(a)); }

 private:
  RootSystem() = default;
  void index();

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, RootId> lookup_;
  std::vector<RootId> simple_;
  std::vector<RootId> neg_;
  std::vector<RootId> sum_;
  std::vector<int> order_rank_;
};

}  // namespace chevdv
