#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chevdv/representation.hpp"
#include "chevdv/root_system.hpp"

namespace chevdv {

/// One factor x_{p a + q b}(N s^p t^q) of the commutator [x_a(s), x_b(t)].
struct CommutatorTerm {
  RootId root;
  int p;
  int q;
  Int coeff;
};

/// Structure constants of the commutator formula for every ordered pair.
///
/// Signs are read off the Chevalley basis of the basic representation, so the
/// table is consistent with Representation by construction; the commutator
/// convention is [x, y] = x y x^-1 y^-1.
class ConstantTable {
 public:
  ConstantTable(const RootSystem& rs, const Representation& rep);

  /// Terms ordered by p+q, then p. Empty unless a+b is a root.
  const std::vector<CommutatorTerm>& terms(RootId a, RootId b) const;
  /// N_{a,b} = N_{a,b,1,1}; 0 when a+b is not a root.
  Int lie_constant(RootId a, RootId b) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<CommutatorTerm>> table_;
};

/// Roots, representation and constants of one system, built together.
class ChevalleySystem {
 public:
  /// Throws Unsupported for E8 (no basic representation is available).
  static std::shared_ptr<const ChevalleySystem> build(const RootSystem& rs);
  static std::shared_ptr<const ChevalleySystem> parse(const std::string& name);

  const RootSystem& roots() const noexcept { return roots_; }
  const Representation& rep() const noexcept { return rep_; }
  const ConstantTable& constants() const noexcept { return constants_; }

 private:
  explicit ChevalleySystem(const RootSystem& rs);

  RootSystem roots_;
  Representation rep_;
  ConstantTable constants_;
};

using SystemPtr = std::shared_ptr<const ChevalleySystem>;

}  // namespace chevdv
