#include "chevdv/constants.hpp"

#include <algorithm>

#include "chevdv/errors.hpp"

namespace chevdv {

namespace {

const std::vector<CommutatorTerm> kNoTerms;

}  // namespace

ConstantTable::ConstantTable(const RootSystem& rs, const Representation& rep) : n_(rs.size()) {
  const Ring Z = Ring::integers();
  const std::size_t dim = rep.dim();
  table_.resize(n_ * n_);
  for (RootId a = 0; a < static_cast<RootId>(n_); ++a)
    for (RootId b = 0; b < static_cast<RootId>(n_); ++b) {
      if (rs.add(a, b) == kNoRoot) continue;

      // [x_a(1), x_b(1)] in the representation, peeled one root at a time.
      Mat m = Mat::identity(Z, dim);
      rep.left_multiply(b, -1, m);
      rep.left_multiply(a, -1, m);
      rep.left_multiply(b, 1, m);
      rep.left_multiply(a, 1, m);

      std::vector<CommutatorTerm> terms;
      for (int total = 2; total <= 6; ++total)
        for (int p = 1; p < total; ++p) {
          int q = total - p;
          RootId g = rs.combine(p, a, q, b);
          if (g == kNoRoot) continue;
          const auto& e = rep.nilpotent(g);
          const auto& probe = e.front();
          Int entry = m(static_cast<std::size_t>(probe.row), static_cast<std::size_t>(probe.col));
          if (entry % probe.value != 0)
            throw Error(ErrorCode::PreconditionViolated, "commutator coefficient is not integral");
          Int c = entry / probe.value;
          if (c == 0) continue;
          terms.push_back({g, p, q, c});
          rep.left_multiply(g, -c, m);
        }
      if (!m.is_identity())
        throw Error(ErrorCode::PreconditionViolated,
                    "commutator of " + to_string(rs.root(a)) + ", " + to_string(rs.root(b)) + " not resolved");
      table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] = std::move(terms);
    }
}

const std::vector<CommutatorTerm>& ConstantTable::terms(RootId a, RootId b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_) return kNoTerms;
  return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
}

Int ConstantTable::lie_constant(RootId a, RootId b) const {
  for (const auto& t : terms(a, b))
    if (t.p == 1 && t.q == 1) return t.coeff;
  return 0;
}

ChevalleySystem::ChevalleySystem(const RootSystem& rs)
    : roots_(rs), rep_(Representation::build(rs)), constants_(roots_, rep_) {}

std::shared_ptr<const ChevalleySystem> ChevalleySystem::build(const RootSystem& rs) {
  return std::shared_ptr<const ChevalleySystem>(new ChevalleySystem(rs));
}

std::shared_ptr<const ChevalleySystem> ChevalleySystem::parse(const std::string& name) {
  return build(RootSystem::parse(name));
}

}  // namespace chevdv
