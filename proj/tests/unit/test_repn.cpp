#include <doctest.h>

#include <map>

#include "chevdv/constants.hpp"
#include "chevdv/errors.hpp"
#include "chevdv/random.hpp"

using namespace chevdv;

namespace {

std::map<int, int> edge_counts(const Representation& rep) {
  std::map<int, int> out;
  for (const auto& e : rep.diagram().edges) ++out[e.simple];
  return out;
}

}  // namespace

TEST_SUITE("repn") {
  TEST_CASE("dimensions") {
    CHECK(ChevalleySystem::parse("A1")->rep().dim() == 2);
    CHECK(ChevalleySystem::parse("A3")->rep().dim() == 4);
    CHECK(ChevalleySystem::parse("B3")->rep().dim() == 7);
    CHECK(ChevalleySystem::parse("C3")->rep().dim() == 6);
    CHECK(ChevalleySystem::parse("D4")->rep().dim() == 8);
    CHECK(ChevalleySystem::parse("E6")->rep().dim() == 27);
    CHECK(ChevalleySystem::parse("E7")->rep().dim() == 56);
    CHECK_THROWS_AS(ChevalleySystem::parse("E8"), Error);
  }

  TEST_CASE("B3 labels") {
    auto sys = ChevalleySystem::parse("B3");
    const Representation& rep = sys->rep();
    std::vector<int> labels;
    for (const auto& n : rep.diagram().nodes) labels.push_back(*n.label);
    CHECK(labels == std::vector<int>{1, 2, 3, 0, -3, -2, -1});
  }

  TEST_CASE("E6 and E7 diagrams") {
    auto s6 = ChevalleySystem::parse("E6");
    const Representation& e6 = s6->rep();
    CHECK(e6.diagram().size() == 27);
    CHECK(edge_counts(e6) == std::map<int, int>{{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {6, 6}});
    for (int k = 1; k <= 5; ++k) {
      CHECK(e6.index_of_label(k));
      CHECK(e6.index_of_label(-k));
    }
    auto s7 = ChevalleySystem::parse("E7");
    const Representation& e7 = s7->rep();
    CHECK(e7.diagram().size() == 56);
    CHECK(edge_counts(e7) == std::map<int, int>{{1, 12}, {2, 12}, {3, 12}, {4, 12}, {5, 12}, {6, 12}, {7, 12}});
  }

  TEST_CASE("highest weight vector") {
    Ring z = Ring::integers();
    auto b3 = ChevalleySystem::parse("B3");
    CHECK(b3->rep().highest_weight_vector(z) == Vec::basis(z, 7, 0));
    auto e6 = ChevalleySystem::parse("E6");
    CHECK(e6->rep().highest_weight_vector(z) == Vec::basis(z, 27, *e6->rep().index_of_label(1)));
  }

  TEST_CASE("unipotent action") {
    auto a1 = ChevalleySystem::parse("A1");
    Ring f7 = Ring::prime_field(7);
    CHECK(a1->rep().unipotent_action(a1->roots().simple(1), RingValue(f7, 3)) == Mat(f7, {{1, 3}, {0, 1}}));

    // B3: the short simple root moves -3 -> 0 -> 3; the divided square sits on (3, -3).
    auto b3 = ChevalleySystem::parse("B3");
    Ring z = Ring::integers();
    const Representation& rep = b3->rep();
    Mat m = rep.unipotent_action(b3->roots().simple(3), RingValue(z, 5));
    std::size_t i3 = *rep.index_of_label(3), i0 = *rep.index_of_label(0), im3 = *rep.index_of_label(-3);
    CHECK(std::abs(m(i3, i0)) == 10);
    CHECK(std::abs(m(i0, im3)) == 5);
    CHECK(std::abs(m(i3, im3)) == 25);
    CHECK((m * rep.unipotent_action(b3->roots().simple(3), RingValue(z, -5))).is_identity());
  }

  TEST_CASE("e^3 = 0 and x(s) x(t) = x(s + t)") {
    for (std::string name : {"B3", "C3", "D4", "E6"}) {
      auto sys = ChevalleySystem::parse(name);
      const Representation& rep = sys->rep();
      Ring z = Ring::integers();
      for (RootId a = 0; a < static_cast<RootId>(sys->roots().size()); ++a) {
        Mat e(z, rep.dim(), rep.dim());
        for (const auto& [r, c, v] : rep.nilpotent(a)) e.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
        CHECK((e * e * e) == Mat(z, rep.dim(), rep.dim()));
        CHECK(rep.unipotent_action(a, RingValue(z, 2)) * rep.unipotent_action(a, RingValue(z, 3)) ==
              rep.unipotent_action(a, RingValue(z, 5)));
      }
    }
  }

  TEST_CASE("x_{-alpha_1} fixes the D5 block of E6") {
    auto sys = ChevalleySystem::parse("E6");
    const Representation& rep = sys->rep();
    Rng rng(5);
    for (Ring R : {Ring::prime_field(2), Ring::prime_field(5)}) {
      for (int t = 0; t < 20; ++t) {
        Vec v(R, rep.dim());
        for (int k = 1; k <= 5; ++k) v.set(*rep.index_of_label(k), random_element(rng, R));
        RingValue xi(R, random_element(rng, R));
        CHECK(rep.unipotent_action(sys->roots().negate(sys->roots().simple(1)), xi) * v == v);
      }
    }
  }
}
