#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chevdv/constants.hpp"
#include "chevdv/matrix.hpp"

namespace chevdv {

struct Generator {
  RootId root;
  Int param;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word x_{a1}(t1) ... x_{ak}(tk) in St(Phi, R).
///
/// Adjacent generators on the same root are merged and zero parameters are
/// dropped whenever generators are appended, so a word never contains x_a(0)
/// or two neighbouring factors on one root.
class SteinbergWord {
 public:
  SteinbergWord(SystemPtr sys, const Ring& ring);
  SteinbergWord(SystemPtr sys, const Ring& ring, const std::vector<Generator>& gens);
  static SteinbergWord single(SystemPtr sys, const Ring& ring, RootId root, Int param);

  const ChevalleySystem& system() const noexcept { return *sys_; }
  const SystemPtr& system_ptr() const noexcept { return sys_; }
  const RootSystem& roots() const noexcept { return sys_->roots(); }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Generator>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void append(RootId root, Int param);
  void append(const SteinbergWord& w);
  bool same_group(const SteinbergWord& other) const noexcept;

  friend bool operator==(const SteinbergWord& a, const SteinbergWord& b) {
    return a.sys_ == b.sys_ && a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  SystemPtr sys_;
  Ring ring_;
  std::vector<Generator> gens_;
};

/// Concatenation with merging at the seam. Throws RingMismatch.
SteinbergWord multiply_reduce(const SteinbergWord& a, const SteinbergWord& b);
inline SteinbergWord operator*(const SteinbergWord& a, const SteinbergWord& b) { return multiply_reduce(a, b); }
SteinbergWord invert(const SteinbergWord& w);
/// x_a(t) -> x_{-a}(-t), generator by generator.
SteinbergWord sigma(const SteinbergWord& w);
/// h w h^-1.
SteinbergWord conjugate(const SteinbergWord& h, const SteinbergWord& w);
/// a b a^-1 b^-1.
SteinbergWord commutator(const SteinbergWord& a, const SteinbergWord& b);

/// Syntactic membership: a flag holds when every generator satisfies it.
struct SubgroupMask {
  bool in_U = true;
  bool in_Uminus = true;
  // Indexed by r - 1.
  std::vector<bool> in_L, in_P, in_U_r, in_Uminus_r;

  bool L(int r) const { return in_L.at(static_cast<std::size_t>(r - 1)); }
  bool P(int r) const { return in_P.at(static_cast<std::size_t>(r - 1)); }
  bool U_r(int r) const { return in_U_r.at(static_cast<std::size_t>(r - 1)); }
  bool Uminus_r(int r) const { return in_Uminus_r.at(static_cast<std::size_t>(r - 1)); }
  /// StU^-_{rs} = StU^-_r and StU^-_s.
  bool Uminus_pair(int r, int s) const { return Uminus_r(r) && Uminus_r(s); }
};

SubgroupMask classify(const SteinbergWord& w);

/// A total order on a subset S of roots; roots outside S have rank -1.
class CollectOrder {
 public:
  CollectOrder(const RootSystem& rs, const std::function<bool(RootId)>& member,
               const std::function<int(RootId)>& key = nullptr);
  /// Phi+ or Phi- in order of |height|.
  static CollectOrder positive(const RootSystem& rs);
  static CollectOrder negative(const RootSystem& rs);

  bool contains(RootId a) const { return rank_.at(static_cast<std::size_t>(a)) >= 0; }
  int rank(RootId a) const { return rank_.at(static_cast<std::size_t>(a)); }
  /// Roots of S in ascending order.
  const std::vector<RootId>& members() const noexcept { return members_; }

 private:
  std::vector<int> rank_;
  std::vector<RootId> members_;
};

/// The ordered product over S equal to w, obtained by commutator exchanges.
/// S must be closed and contained in one half of a unipotent radical; throws
/// NotInClosedSet when a generator or a produced term falls outside S.
SteinbergWord collect(const SteinbergWord& w, const CollectOrder& order);
/// Collection in StU or StU^- (chosen from the first generator).
SteinbergWord collect_unipotent(const SteinbergWord& w);

/// a^-1 z a collected in S, conjugating one generator of a at a time through
/// g^-1 x_b(c) g = x_b(c) [x_b(-c), g^-1]. Every generator of a must normalize
/// the subgroup over S; throws NotInClosedSet otherwise.
SteinbergWord conjugate_collect(const SteinbergWord& z, const SteinbergWord& a, const CollectOrder& order);

/// The image phi(w) in the basic representation.
Mat evaluate(const SteinbergWord& w);
/// phi(w) v.
Vec apply(const SteinbergWord& w, Vec v);

struct CommutatorFailure {
  RootId a, b;
  Int s, t;
};
/// Checks [x_a(s), x_b(t)] = prod_k x_{p a + q b}(N s^p t^q) as matrices for
/// every ordered pair a != -b and s, t in `params`. Returns the first failure;
/// `checked` counts the (a, b, s, t) instances compared.
std::optional<CommutatorFailure> verify_commutator_formula(const SystemPtr& sys, const Ring& ring,
                                                           const std::vector<Int>& params,
                                                           std::size_t* checked = nullptr);

/// Recovers the unique ordered product over S with image m (S must be
/// ordered compatibly with |height|). When `block` is non-empty only those
/// coordinates are used and m is the corresponding square block.
/// Throws PreconditionViolated if m is not in the image.
SteinbergWord lift_unipotent(SystemPtr sys, const Mat& m, const CollectOrder& order,
                             const std::vector<std::size_t>& block = {});

/// A word in the simple root generators x_{+-alpha_k} equal to x_a(xi) in St,
/// obtained by conjugating a simple root subgroup by Weyl elements
/// w_k = x_{alpha_k}(1) x_{-alpha_k}(-1) x_{alpha_k}(1).
SteinbergWord expand_to_simple(SystemPtr sys, const Ring& ring, RootId a, Int xi);

/// Delta_r as a root system in its own Bourbaki numbering, with the map of
/// its roots into Phi. The two constant tables may differ in sign, so a root
/// element x_a(t) goes to x_{root_map[a]}(signs[a] t).
struct SubsystemEmbedding {
  SystemPtr sub;
  std::vector<RootId> root_map;
  std::vector<int> signs;
};
/// Throws Unsupported when Delta_r is reducible or has no representation.
SubsystemEmbedding embed_subsystem(const RootSystem& rs, int r);
/// Reinterprets a word over Delta_r as a word over Phi.
SteinbergWord theta_embed(const SteinbergWord& w, const SubsystemEmbedding& emb, SystemPtr target);

/// One generator per line: "c1,...,cl;param". Blank lines and lines starting
/// with '#' are ignored. Throws Parse.
SteinbergWord parse_word(SystemPtr sys, const Ring& ring, std::string_view text);
std::string serialize_word(const SteinbergWord& w);

}  // namespace chevdv
