#include <doctest.h>

#include <set>

#include "chevdv/constants.hpp"
#include "chevdv/errors.hpp"

using namespace chevdv;

TEST_SUITE("roots") {
  TEST_CASE("root counts") {
    CHECK(RootSystem::parse("A1").size() == 2);
    CHECK(RootSystem::parse("A2").size() == 6);
    CHECK(RootSystem::parse("B2").size() == 8);
    CHECK(RootSystem::parse("B3").size() == 18);
    CHECK(RootSystem::parse("C3").size() == 18);
    CHECK(RootSystem::parse("D4").size() == 24);
    CHECK(RootSystem::parse("E6").size() == 72);
    CHECK(RootSystem::parse("E7").size() == 126);
    CHECK(RootSystem::parse("E8").size() == 240);
    CHECK_THROWS_AS(RootSystem::parse("G2"), Error);
    CHECK_THROWS_AS(RootSystem::parse("B1"), Error);
  }

  TEST_CASE("expansion coefficients") {
    RootSystem b3 = RootSystem::parse("B3");
    const Root& top = b3.root(b3.highest());
    CHECK(top.coeffs == std::vector<int>{1, 2, 2});
    CHECK(top.coeff(2) == 2);
    CHECK(b3.coeff(b3.simple(2), 2) == 1);
    CHECK(b3.coeff(b3.negate(b3.simple(2)), 2) == -1);
    RootSystem e6 = RootSystem::parse("E6");
    CHECK(e6.root(e6.highest()).coeffs == std::vector<int>{1, 2, 2, 3, 2, 1});
  }

  TEST_CASE("subsystems") {
    RootSystem b3 = RootSystem::parse("B3");
    CHECK(b3.subsystem(3).size() == 6);
    CHECK(b3.dynkin_type({1, 2}) == "A2");
    RootSystem e6 = RootSystem::parse("E6");
    CHECK(e6.subsystem(1).size() == 40);
    CHECK(e6.dynkin_type({2, 3, 4, 5, 6}) == "D5");
    CHECK(e6.dynkin_type({1, 2, 3, 4, 5}) == "D5");
    CHECK(RootSystem::parse("A1").subsystem(1).empty());
  }

  TEST_CASE("addition and strings") {
    RootSystem a2 = RootSystem::parse("A2");
    RootId a1 = a2.simple(1), a2r = a2.simple(2);
    CHECK(a2.root(a2.add(a1, a2r)).coeffs == std::vector<int>{1, 1});
    CHECK(a2.add(a1, a1) == kNoRoot);
    CHECK(a2.add(a1, a2.negate(a1)) == kNoRoot);
    CHECK(a2.add(a1, a2r) == a2.add(a2r, a1));
    auto s = a2.root_string(a1, a2r);
    CHECK(s.p_max == 0);
    CHECK(s.q_max == 1);
    RootSystem b2 = RootSystem::parse("B2");
    RootId l = b2.simple(1), sh = b2.simple(2);
    CHECK(b2.add(l, b2.find({1, 2})) == kNoRoot);
    CHECK(b2.root_string(sh, l).q_max == 2);
    CHECK(b2.root_string(l, sh).q_max == 1);
  }

  TEST_CASE("distinguished pair") {
    CHECK(RootSystem::parse("B4").i_index() == 4);
    CHECK(RootSystem::parse("B4").j_index() == 1);
    CHECK(RootSystem::parse("E7").i_index() == 1);
    CHECK(RootSystem::parse("E7").j_index() == 7);
    CHECK(!RootSystem::parse("A3").i_index());
  }
}

TEST_SUITE("constants") {
  TEST_CASE("A2 matches matrix units") {
    auto sys = ChevalleySystem::parse("A2");
    const RootSystem& rs = sys->roots();
    const auto& t = sys->constants().terms(rs.simple(1), rs.simple(2));
    REQUIRE(t.size() == 1);
    CHECK(rs.root(t[0].root).coeffs == std::vector<int>{1, 1});
    CHECK(t[0].coeff == 1);
  }

  TEST_CASE("B2 long-short pair has two terms") {
    auto sys = ChevalleySystem::parse("B2");
    const RootSystem& rs = sys->roots();
    const auto& t = sys->constants().terms(rs.simple(2), rs.simple(1));
    REQUIRE(t.size() == 2);
    CHECK(std::abs(t[0].coeff) == 1);
    CHECK(std::abs(t[1].coeff) == 1);
    CHECK(t[1].p == 2);
    CHECK(sys->constants().terms(rs.simple(1), rs.find({1, 2})).empty());
  }

  TEST_CASE("antisymmetry and |N| = p + 1") {
    for (std::string name : {"A3", "B3", "C3", "D4", "E6"}) {
      auto sys = ChevalleySystem::parse(name);
      const RootSystem& rs = sys->roots();
      const auto n = static_cast<RootId>(rs.size());
      for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b) {
          if (rs.add(a, b) == kNoRoot) continue;
          Int N = sys->constants().lie_constant(a, b);
          CHECK(N == -sys->constants().lie_constant(b, a));
          CHECK(std::abs(N) == rs.root_string(a, b).p_max + 1);
        }
    }
  }

  TEST_CASE("A1 has no commutator terms") {
    auto sys = ChevalleySystem::parse("A1");
    CHECK(sys->constants().terms(0, 0).empty());
  }
}
