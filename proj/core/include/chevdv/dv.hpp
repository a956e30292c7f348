#pragma once

#include <array>
#include <string>
#include <vector>

#include "chevdv/steinberg.hpp"

namespace chevdv {

/// The distinguished pair (i, j) of a system: (l, 1) for B_l and C_l, (1, l)
/// for E_l. Throws Unsupported for the other families.
struct ParabolicPair {
  int i;
  int j;
};
ParabolicPair parabolic_pair(const RootSystem& rs);

/// True when the declared ring bounds meet the factorization hypotheses:
/// max(sr, 2) <= l-1 for B_l, C_l and asr <= l-2 for E_l.
bool within_hypotheses(const RootSystem& rs, const Ring& ring);

struct STildeWitness {
  Vec image;                        // phi(a) v+
  std::vector<int> required_zero;   // labels that must vanish
  bool in_S_tilde;
};

/// Throws NotInLevi unless a is a word in StL_i.
STildeWitness is_in_S_tilde(const SteinbergWord& a);

/// g = u v a p with u in StU, v in StU^-, a in StL_i, p in StP_j.
struct DVDecomposition {
  SteinbergWord u, v, a, p;
  bool reduced = false;
  /// False when the ring bounds are outside the theorem's hypotheses; the
  /// result is still certified but the construction may fail.
  bool within_hypotheses = true;

  SteinbergWord product() const { return u * v * a * p; }
};

/// Certifies phi(u v a p) = phi(w), the four masks and, if claimed, a in S~.
bool certify(const DVDecomposition& d, const SteinbergWord& w, std::string* why = nullptr);

/// x in StL_i and StU, y in StL_i and StU^- with y x a in S~.
struct LeviReduction {
  SteinbergWord x, y, a_prime;
};
LeviReduction reduce_levi_part(const SteinbergWord& a);

/// The decomposition of x_{-alpha_i}(xi) d for reduced d.
/// Throws AbsorptionFailed if x_{-alpha_i}(.)^a leaves StL_j.
DVDecomposition absorb_negative_simple(Int xi, const DVDecomposition& d);

/// A reduced decomposition of w, built by absorbing the generators from the
/// right. Throws Unsupported outside B_l, C_l, E_6, E_7.
DVDecomposition factorize_dv(const SteinbergWord& w);

/// Whether phi(g) lies in G(Delta_j, R): it fixes v+ and preserves the
/// m_j-levels of the weights.
bool in_levi_image(const SteinbergWord& w, const Mat& m);
/// G(Delta_i and Delta_j, R): preserves joint (m_i, m_j) levels, fixes v+ and
/// every weight alone in its joint level.
bool in_intersection_image(const SteinbergWord& w, const Mat& m);

struct KernelSplit {
  SteinbergWord a;  // in StL_i with phi(a) in G(Delta_j, R)
  SteinbergWord b;  // in StL_j
};

/// Throws PreconditionViolated unless phi(w) lies in G(Delta_j, R), or when a
/// membership that the argument guarantees cannot be certified.
KernelSplit dv_reduce(const SteinbergWord& w);
/// dv_reduce, with phi(a) additionally certified to lie in G(Delta_i and Delta_j, R).
KernelSplit stab_kernel_express(const SteinbergWord& w);

/// (e + x y)(e + y x)^-1 for y = diag(xi, 1, ..., 1), together with
/// diag(e + x y, (e + y x)^-1) = L2 U1 L1 U2 as block triangular matrices.
struct TildeGenerator {
  Mat g;
  Mat A;      // e + x y
  Mat B_inv;  // (e + y x)^-1
  std::array<Mat, 4> factors;

  /// The product of the factors equals diag(A, B_inv) and g = A B_inv.
  bool verify() const;
};
/// Throws NotInvertible unless e + x y is invertible.
TildeGenerator tilde_E_generator(const Mat& x, const RingValue& xi);

}  // namespace chevdv
