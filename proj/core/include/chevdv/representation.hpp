#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevdv/matrix.hpp"
#include "chevdv/root_system.hpp"

namespace chevdv {

/// Sparse integer matrix; used for the nilpotent action of root elements.
struct SparseEntry {
  int row;
  int col;
  Int value;
};
using SparseMat = std::vector<SparseEntry>;

struct WeightNode {
  int index;
  /// Classical numbering (1..l, 0, -l..-1, ...); absent for the anonymous
  /// weights of E6/E7.
  std::optional<int> label;
  /// varpi - mu expanded over the simple roots.
  std::vector<int> depth;
};

/// An edge from -> to labelled r means weight(from) - weight(to) = alpha_r.
struct WeightEdge {
  int from;
  int to;
  int simple;
};

struct WeightDiagram {
  std::vector<WeightNode> nodes;
  std::vector<WeightEdge> edges;

  std::size_t size() const noexcept { return nodes.size(); }
  std::string display_label(int index) const;
};

/// The basic representation with highest weight varpi_1 (classical types) or
/// varpi_l (E6, E7) as integral matrices in a Chevalley basis.
///
/// Basis vector 0 is the highest weight vector. For every root a, the
/// nilpotent e_a and its divided square e_a^2/2 are integral, e_a^3 = 0, and
/// x_a(t) acts as 1 + t e_a + t^2 e_a^2/2.
class Representation {
 public:
  /// Throws Unsupported for E8.
  static Representation build(const RootSystem& rs);

  std::size_t dim() const noexcept { return diagram_.size(); }
  int highest_weight_index() const noexcept { return highest_; }
  const WeightDiagram& diagram() const noexcept { return diagram_; }
  std::optional<std::size_t> index_of_label(int label) const;

  const SparseMat& nilpotent(RootId a) const { return e_.at(static_cast<std::size_t>(a)); }
  const SparseMat& divided_square(RootId a) const { return e2_.at(static_cast<std::size_t>(a)); }
  /// <mu, a^vee> for the weight mu of basis vector k.
  int weight_pairing(std::size_t k, RootId a) const;
  /// m_r-level of basis vector k below the highest weight.
  int level(std::size_t k, int r) const { return diagram_.nodes.at(k).depth.at(static_cast<std::size_t>(r - 1)); }

  /// Dense matrix of x_a(xi).
  Mat unipotent_action(RootId a, const RingValue& xi) const;
  /// v <- x_a(xi) v.
  void apply(RootId a, Int xi, Vec& v) const;
  /// m <- x_a(xi) m.
  void left_multiply(RootId a, Int xi, Mat& m) const;
  /// m <- m x_a(xi).
  void right_multiply(Mat& m, RootId a, Int xi) const;

  Vec highest_weight_vector(const Ring& ring) const;

 private:
  WeightDiagram diagram_;
  int highest_ = 0;
  std::size_t num_roots_ = 0;
  std::vector<int> pairing_;  // dim x num_roots
  std::vector<SparseMat> e_;
  std::vector<SparseMat> e2_;
};

}  // namespace chevdv
