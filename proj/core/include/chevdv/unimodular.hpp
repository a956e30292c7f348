#pragma once

#include <cstddef>

#include "chevdv/matrix.hpp"

namespace chevdv {

/// True iff the entries of v generate the unit ideal.
bool is_unimodular(const Vec& v);

/// Returns c with sum c_i v_i = 1. Throws NotUnimodular.
Vec unimodular_certificate(const Vec& v);

struct StabilizeOptions {
  /// Maximum number of candidate b vectors tested.
  std::size_t budget = 200000;
};

/// For v of height n+1, returns b of height n such that
/// (v_1 + b_1 v_{n+1}, ..., v_n + b_n v_{n+1}) is unimodular.
///
/// Candidates are tried in a fixed order: b = 0, then b supported on a single
/// coordinate with values 1, -1, 2, -2, ..., then on two coordinates.
Vec stabilize_column(const Vec& v, StabilizeOptions opts = {});

/// The intersection of the maximal ideals containing every entry of v,
/// described by a single generator in the ambient ring.
struct IdealDescriptor {
  Ring ring;
  /// Z: the squarefree radical of gcd (0 for the zero ideal).
  /// Z/n: the radical of gcd(entries, n), as an integer in [1, n].
  /// F_p: 0 or 1.
  Int generator;

  bool is_unit() const noexcept { return generator == 1; }
  bool is_zero() const noexcept;
  std::string to_string() const;
  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
};

IdealDescriptor ell_ideal(const Vec& v);

}  // namespace chevdv
