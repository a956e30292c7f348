#pragma once

#include <cstddef>
#include <vector>

#include "chevdv/matrix.hpp"
#include "chevdv/unimodular.hpp"

namespace chevdv {

enum class PairShape { GLCorner, OrthogonalHyperbolic };

/// x upper, y lower block-unipotent.
struct UnipotentPair {
  Mat x;
  Mat y;
  PairShape shape;
};

/// For unimodular v of height l (declared sr <= l-1): x = [[e,b],[0,1]],
/// y = [[e,0],[c,1]] with (y x v)_l = 0 and the first l-1 coordinates of
/// y x v unimodular.
UnipotentPair simple_lemma_reduce(const Vec& v, StabilizeOptions opts = {});

/// H(g) = diag(g, p g^-T p). Throws NotInvertible.
Mat hyperbolic_embed(const Mat& g);
/// Same, with g^-1 supplied by the caller.
Mat hyperbolic_embed(const Mat& g, const Mat& g_inverse);

/// Split form on R^{2l} with coordinates ordered 1..l, -l..-1:
/// q(v) = sum_k v_k v_{-k}, polar Gram matrix [[0,p],[p,0]].
Int split_quadratic(const Vec& v);
Mat split_gram(const Ring& ring, std::size_t l);
/// g^T B g = B and q(g w) = q(w) on basis vectors and their pairwise sums.
bool preserves_split_form(const Mat& g);
/// p a has zero diagonal and is antisymmetric, i.e. [[e,a],[0,e]] is orthogonal.
bool is_p_alternating(const Mat& a);

struct CompletionOptions {
  /// Candidate matrices tried over Z.
  std::size_t budget = 200000;
};

/// a with p a alternating and u+ + a u- unimodular.
/// Throws NotUnimodular, CompletionFailed.
Mat antipersymmetric_complete(const Vec& u_plus, const Vec& u_minus, CompletionOptions opts = {});

/// e + c E_{row,col}.
struct Transvection {
  std::size_t row;
  std::size_t col;
  Int c;

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

/// Transvections listed in the order they are applied: g = T_k ... T_2 T_1.
struct ElementaryFactorization {
  Ring ring;
  std::size_t n;
  std::vector<Transvection> steps;

  Mat matrix() const;
  /// g^-1 from the inverted steps; no determinant is formed.
  Mat inverse_matrix() const;
};

/// g in E(l, R) with g v = e_1. Throws NotUnimodular.
ElementaryFactorization column_to_e1(const Vec& v);

/// For unimodular isotropic v of height 2l (declared asr <= l-1):
/// orthogonal x = [[e,a],[0,e]], y = [[e,0],[b,e]] with (y x v)_k = 0 for
/// k = -l..-1. Throws PreconditionViolated when q(v) != 0.
UnipotentPair asr_reduce(const Vec& v, CompletionOptions opts = {});

}  // namespace chevdv
